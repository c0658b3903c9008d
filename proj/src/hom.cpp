#include "globact/hom.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "globact/error.hpp"

namespace globact {

  bool PartialFn::is_zero() const noexcept {
    return std::all_of(
        _values.begin(), _values.end(), [](index_type x) { return x == UNDEFINED; });
  }

  std::vector<index_type> PartialFn::domain() const {
    std::vector<index_type> result;
    for (index_type t = 0; t < _values.size(); ++t) {
      if (defined(t)) {
        result.push_back(t);
      }
    }
    return result;
  }

  std::vector<pair_type> PartialFn::pairs() const {
    std::vector<pair_type> result;
    for (index_type t = 0; t < _values.size(); ++t) {
      if (defined(t)) {
        result.emplace_back(t, _values[t]);
      }
    }
    return result;
  }

  std::size_t PartialFnHash::operator()(PartialFn const& f) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : f.values()) {
      h = (h ^ x) * 0x100000001b3ULL;
    }
    return h;
  }

  bool in_hom_p(PartialFn const& f, PartialAct const& A) {
    auto const& S = A.semigroup();
    if (f.values().size() != S.size()) {
      return false;
    }
    for (index_type s = 0; s < S.size(); ++s) {
      if (f.defined(s) && f(s) >= A.size()) {
        return false;
      }
    }
    for (index_type s = 0; s < S.size(); ++s) {
      if (!f.defined(s)) {
        continue;
      }
      for (index_type t = 0; t < S.size(); ++t) {
        index_type const st = S.product(s, t);
        if (f.defined(st) && A.at(f(s), t) != f(st)) {
          return false;
        }
      }
    }
    return true;
  }

  PartialFn act_on_hom_p(PartialFn const& f, PartialAct const& A, index_type s) {
    if (!in_hom_p(f, A)) {
      throw not_in_hom_p("NotInHomP: partial function does not belong to Hom_p(S, A)");
    }
    auto const&             S = A.semigroup();
    std::vector<index_type> values(S.size());
    for (index_type t = 0; t < S.size(); ++t) {
      values[t] = f(S.product(s, t));
    }
    return PartialFn(std::move(values));
  }

  PartialFn f_as(PartialAct const& A, index_type a, index_type s) {
    auto const&             S = A.semigroup();
    std::vector<index_type> values(S.size());
    for (index_type t = 0; t < S.size(); ++t) {
      values[t] = A.at(a, S.product(s, t));
    }
    return PartialFn(std::move(values));
  }

  PartialFn lambda_of(PartialAct const& A, index_type a) {
    auto r = A.row(a);
    return PartialFn(std::vector<index_type>(r.begin(), r.end()));
  }

  HomAct::HomAct(PartialAct const& A)
      : _base(A),
        _elements(),
        _representatives(),
        _index_of_pair(),
        _action(),
        _lambda(),
        _zero_index(),
        _nonsingular(true),
        _certified(false) {
    if (!A.is_strong()) {
      throw not_strong();
    }
    auto const& S = A.semigroup();
    auto const  n = static_cast<index_type>(S.size());
    auto const  m = static_cast<index_type>(A.size());

    std::unordered_map<PartialFn, index_type, PartialFnHash> index;
    _index_of_pair.resize(std::size_t(m) * n);
    for (index_type a = 0; a < m; ++a) {
      for (index_type s = 0; s < n; ++s) {
        auto f              = f_as(A, a, s);
        auto [it, inserted] = index.try_emplace(f, static_cast<index_type>(_elements.size()));
        if (inserted) {
          _elements.push_back(std::move(f));
          _representatives.emplace_back(a, s);
        }
        _index_of_pair[a * n + s] = it->second;
      }
    }

    // f_{a,s} * t = f_{a,st}, checked on every representative.
    std::vector<index_type> action(_elements.size() * n);
    for (index_type i = 0; i < _elements.size(); ++i) {
      auto const [a, s] = _representatives[i];
      for (index_type t = 0; t < n; ++t) {
        action[i * n + t] = index_of(a, S.product(s, t));
      }
    }
    for (index_type a = 0; a < m; ++a) {
      for (index_type s = 0; s < n; ++s) {
        index_type const i = index_of(a, s);
        for (index_type t = 0; t < n; ++t) {
          if (index_of(a, S.product(s, t)) != action[i * n + t]) {
            throw well_definedness_failure("Hom action is not well defined on element "
                                           + std::to_string(i));
          }
          if (act_on_hom_p(_elements[i], A, t) != _elements[action[i * n + t]]) {
            throw well_definedness_failure("f_{a,s} * t differs from f_{a,st}");
          }
        }
      }
    }
    try {
      _action.emplace(PartialAct(A.semigroup_ptr(), _elements.size(), std::move(action)));
    } catch (pa_violation const& e) {
      throw well_definedness_failure(std::string("Hom action violates the action law: ")
                                     + e.what());
    }

    for (index_type i = 0; i < _elements.size(); ++i) {
      if (_elements[i].is_zero()) {
        _zero_index = i;
      }
    }

    for (index_type a = 0; a < m && _nonsingular; ++a) {
      for (index_type s = 0; s < n && _nonsingular; ++s) {
        index_type const as = A.at(a, s);
        if (as == UNDEFINED) {
          continue;
        }
        for (index_type b = 0; b < m; ++b) {
          for (index_type t = 0; t < n; ++t) {
            if (index_of(b, t) == index_of(a, s) && A.at(b, t) != as) {
              _nonsingular = false;
            }
          }
        }
      }
    }

    if (A.is_unitary()) {
      Morphism lambda;
      for (index_type a = 0; a < m; ++a) {
        index_type const i = index_of(lambda_of(A, a));
        if (i == UNDEFINED) {
          throw well_definedness_failure("lambda_a is not of the form f_{b,s}");
        }
        lambda.map.push_back(i);
      }
      _lambda = std::move(lambda);
      if (_nonsingular) {
        auto const c = is_globalization(A, *_action, *_lambda).certificates;
        if (!c.is_globalization() || !c.a_generated) {
          throw well_definedness_failure("A^S is not an A-generated globalization");
        }
        _certified = true;
      }
    }
  }

  index_type HomAct::index_of(PartialFn const& f) const {
    auto it = std::find(_elements.begin(), _elements.end(), f);
    return it == _elements.end() ? UNDEFINED
                                 : static_cast<index_type>(it - _elements.begin());
  }

  GlobalizationTriple HomAct::triple() const {
    if (!_lambda) {
      throw not_unitary();
    }
    return is_globalization(_base, *_action, *_lambda);
  }

  HomAct build_hom(PartialAct const& A) {
    return HomAct(A);
  }

  bool is_nonsingular(PartialAct const& A) {
    auto const n = static_cast<index_type>(A.semigroup().size());
    auto const m = static_cast<index_type>(A.size());
    std::vector<PartialFn> f;
    f.reserve(std::size_t(m) * n);
    for (index_type a = 0; a < m; ++a) {
      for (index_type s = 0; s < n; ++s) {
        f.push_back(f_as(A, a, s));
      }
    }
    bool result = true;
    for (index_type a = 0; a < m && result; ++a) {
      for (index_type s = 0; s < n && result; ++s) {
        index_type const as = A.at(a, s);
        if (as == UNDEFINED) {
          continue;
        }
        for (index_type p = 0; p < f.size(); ++p) {
          if (f[p] == f[a * n + s] && A.at(p / n, p % n) != as) {
            result = false;
            break;
          }
        }
      }
    }
    if (A.semigroup().is_monoid() && !result) {
      throw well_definedness_failure("act over a monoid is singular");
    }
    return result;
  }

  GlobalizationTriple one_point_globalization(PartialAct const& A) {
    if (!A.is_partially_defined()) {
      throw not_partially_defined();
    }
    auto const              n = A.semigroup().size();
    auto const              c = static_cast<index_type>(A.size());
    std::vector<index_type> flat;
    flat.reserve((A.size() + 1) * n);
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < n; ++s) {
        flat.push_back(A.defined(a, s) ? A.at(a, s) : c);
      }
    }
    flat.insert(flat.end(), n, c);
    GlobalAct B(PartialAct(A.semigroup_ptr(), A.size() + 1, std::move(flat)));
    auto      triple = is_globalization(A, B, identity_morphism(A.size()));
    if (!triple.certificates.is_globalization()) {
      throw well_definedness_failure("one-point act is not a globalization");
    }
    return triple;
  }

  OnePointIsomorphism check_isom1(PartialAct const& A) {
    if (!A.is_unitary()) {
      throw not_unitary();
    }
    if (!A.is_partially_defined()) {
      throw not_partially_defined();
    }
    if (A.is_global()) {
      throw precondition_failed("not_global", "PreconditionFailed: act is global");
    }
    HomAct const H(A);
    if (!H.is_nonsingular()) {
      throw precondition_failed("nonsingular");
    }
    auto const one_point = one_point_globalization(A);
    auto const c         = static_cast<index_type>(A.size());

    OnePointIsomorphism result{true, {}};
    result.iso.map.assign(H.size(), UNDEFINED);
    for (index_type a = 0; a < A.size(); ++a) {
      result.iso.map[(*H.lambda())(a)] = a;
    }
    if (!H.zero_index()) {
      result.holds = false;
    } else {
      result.iso.map[*H.zero_index()] = c;
    }
    // Every element is lambda_a or 0.
    if (std::find(result.iso.map.begin(), result.iso.map.end(), UNDEFINED)
        != result.iso.map.end()) {
      result.holds = false;
      return result;
    }
    result.holds = result.holds && H.size() == one_point.B.size()
                   && is_injective(result.iso, one_point.B.size())
                   && is_morphism(result.iso, H.action().as_partial(), one_point.B.as_partial());
    return result;
  }

  AdjoinedHomComparison compare_with_adjoined_hom(PartialAct const& A) {
    if (!A.is_strong()) {
      throw not_strong();
    }
    HomAct const H(A);
    HomAct const H1(adjoin_identity_act(A));
    auto const   n = static_cast<index_type>(A.semigroup().size());

    AdjoinedHomComparison result{true, false, false, false, H.size(), H1.size(), 0, {}};
    result.map.map.assign(H1.size(), UNDEFINED);
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < n; ++s) {
        index_type const i     = H1.index_of(a, s);
        index_type const image = H.index_of(a, s);
        if (result.map.map[i] == UNDEFINED) {
          result.map.map[i] = image;
        } else if (result.map.map[i] != image) {
          result.well_defined = false;
        }
      }
    }
    Morphism on_c;
    for (auto x : result.map.map) {
      if (x != UNDEFINED) {
        on_c.map.push_back(x);
      }
    }
    result.c_size     = on_c.size();
    result.surjective = is_surjective(on_c, H.size());
    result.injective  = is_injective(on_c, H.size());
    result.total_on_c = on_c.size() == H1.size();
    return result;
  }

  std::vector<PartialFn> enumerate_hom_p(PartialAct const& A, std::size_t bound) {
    auto const   n     = A.semigroup().size();
    auto const   m     = A.size();
    double const space = std::pow(static_cast<double>(m + 1), static_cast<double>(n));
    if (space > static_cast<double>(bound)) {
      throw search_space_too_large("Hom_p enumeration", space, bound);
    }
    // Odometer over digits 0..m, digit m meaning undefined; since UNDEFINED
    // is the largest index this visits value arrays in lexicographic order.
    std::vector<std::size_t> digits(n, 0);
    std::vector<PartialFn>   result;
    while (true) {
      std::vector<index_type> values(n);
      for (std::size_t t = 0; t < n; ++t) {
        values[t] = digits[t] == m ? UNDEFINED : static_cast<index_type>(digits[t]);
      }
      PartialFn f(std::move(values));
      if (in_hom_p(f, A)) {
        result.push_back(std::move(f));
      }
      std::size_t pos = n;
      while (pos > 0 && digits[pos - 1] == m) {
        digits[--pos] = 0;
      }
      if (pos == 0) {
        break;
      }
      ++digits[pos - 1];
    }
    if (A.is_strong()) {
      for (index_type a = 0; a < m; ++a) {
        for (index_type s = 0; s < n; ++s) {
          if (!std::binary_search(result.begin(), result.end(), f_as(A, a, s))) {
            throw well_definedness_failure("f_{a,s} is not in Hom_p(S, A)");
          }
        }
      }
    }
    return result;
  }

}  // namespace globact
