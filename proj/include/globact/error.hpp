#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "globact/types.hpp"

namespace globact {

  class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed or invalid input data (CLI exit code 1).
  class input_error : public error {
   public:
    using error::error;
  };

  class index_out_of_range : public input_error {
   public:
    using input_error::input_error;
  };

  class not_associative : public input_error {
   public:
    not_associative(index_type s, index_type t, index_type u);
    index_type s, t, u;
  };

  class pa_violation : public input_error {
   public:
    pa_violation(index_type a, index_type s, index_type t);
    index_type a, s, t;
  };

  class parse_error : public input_error {
   public:
    parse_error(std::string const& what, std::size_t line, std::size_t column);
    std::size_t line, column;
  };

  // A document is well-formed JSON but does not match the schema; `pointer`
  // locates the offending value.
  class schema_error : public input_error {
   public:
    schema_error(std::string const& pointer, std::string const& what);
    std::string pointer;
  };

  class empty_subset : public input_error {
   public:
    empty_subset();
  };

  class semigroup_mismatch : public input_error {
   public:
    using input_error::input_error;
  };

  class iota_not_injective : public input_error {
   public:
    iota_not_injective(index_type a, index_type b);
  };

  class not_in_hom_p : public input_error {
   public:
    using input_error::input_error;
  };

  // A construction was asked for on an act lacking a required property
  // (CLI exit code 2).
  class precondition_failed : public error {
   public:
    explicit precondition_failed(std::string flag);
    precondition_failed(std::string flag, std::string const& what);
    std::string const& flag() const noexcept {
      return _flag;
    }

   private:
    std::string _flag;
  };

  class not_strong : public precondition_failed {
   public:
    not_strong();
  };

  class not_unitary : public precondition_failed {
   public:
    not_unitary();
  };

  class not_partially_defined : public precondition_failed {
   public:
    not_partially_defined();
  };

  class not_a_globalization : public precondition_failed {
   public:
    not_a_globalization();
  };

  class not_a_generated : public precondition_failed {
   public:
    not_a_generated();
  };

  // An exhaustive search would exceed the configured bound (CLI exit code 3).
  class search_space_too_large : public error {
   public:
    search_space_too_large(std::string const& what, double size, std::size_t bound);
  };

  // Raised when an internal consistency check fails. Reaching this is a bug.
  class well_definedness_failure : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace globact
