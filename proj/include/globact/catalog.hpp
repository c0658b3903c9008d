#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "globact/partial_act.hpp"
#include "globact/semigroup.hpp"

namespace globact {

  // Semigroups of order n up to isomorphism, each the lexicographically least
  // table in its isomorphism class, in lexicographic order.
  std::vector<Semigroup> semigroups_of_order(std::size_t n);

  // Every semigroup of order at most n, by increasing order.
  std::vector<std::shared_ptr<Semigroup const>> semigroups_up_to(std::size_t n);

  enum class ActFilter {
    pa,      // every table satisfying (PA)
    strong,  // (PA) and (S)
  };

  // Calls `visit` once for each partial act of S on {0, ..., m-1} passing
  // `filter`. With `up_to_isomorphism` only the least table under relabelling
  // of the carrier is visited.
  void for_each_act(std::shared_ptr<Semigroup const> const&  S,
                    std::size_t                              m,
                    ActFilter                                filter,
                    bool                                     up_to_isomorphism,
                    std::function<void(PartialAct const&)> const& visit);

  // A uniformly shuffled depth-first search for a global act of S on m
  // elements; always succeeds since constant acts exist.
  GlobalAct random_global_act(std::shared_ptr<Semigroup const> const& S,
                              std::size_t                             m,
                              std::mt19937_64&                        rng);

}  // namespace globact
