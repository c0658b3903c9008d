#include "globact/error.hpp"

#include <string>

namespace globact {

  namespace {
    std::string triple(char const* name, index_type x, index_type y, index_type z) {
      return std::string(name) + "(" + std::to_string(x) + ", " + std::to_string(y)
             + ", " + std::to_string(z) + ")";
    }
  }  // namespace

  not_associative::not_associative(index_type s, index_type t, index_type u)
      : input_error(triple("NotAssociative", s, t, u)), s(s), t(t), u(u) {}

  pa_violation::pa_violation(index_type a, index_type s, index_type t)
      : input_error(triple("PAViolation", a, s, t)), a(a), s(s), t(t) {}

  parse_error::parse_error(std::string const& what, std::size_t line, std::size_t column)
      : input_error("ParseError at line " + std::to_string(line) + ", column "
                    + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}

  schema_error::schema_error(std::string const& pointer, std::string const& what)
      : input_error("SchemaError at " + pointer + ": " + what), pointer(pointer) {}

  empty_subset::empty_subset() : input_error("EmptySubset: restriction to the empty set") {}

  iota_not_injective::iota_not_injective(index_type a, index_type b)
      : input_error("IotaNotInjective: elements " + std::to_string(a) + " and "
                    + std::to_string(b) + " have the same image") {}

  precondition_failed::precondition_failed(std::string flag)
      : error("PreconditionFailed: act is not " + flag), _flag(std::move(flag)) {}

  precondition_failed::precondition_failed(std::string flag, std::string const& what)
      : error(what), _flag(std::move(flag)) {}

  not_strong::not_strong() : precondition_failed("strong", "NotStrong: act is not strong") {}

  not_unitary::not_unitary()
      : precondition_failed("unitary", "NotUnitary: act is not unitary") {}

  not_partially_defined::not_partially_defined()
      : precondition_failed("partially_defined",
                            "NotPartiallyDefined: act is not a partially defined action") {}

  not_a_globalization::not_a_globalization()
      : precondition_failed("globalization",
                            "NotAGlobalization: triple fails (G1) or (G2)") {}

  not_a_generated::not_a_generated()
      : precondition_failed("a_generated",
                            "NotAGenerated: globalization is not A-generated") {}

  search_space_too_large::search_space_too_large(std::string const& what,
                                                 double             size,
                                                 std::size_t        bound)
      : error("SearchSpaceTooLarge: " + what + " has " + std::to_string(size)
              + " candidates, bound is " + std::to_string(bound)) {}

}  // namespace globact
