#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "sclsim/problem.hpp"

namespace sclsim {

struct GenParams {
  unsigned predicates = 2;
  unsigned constants = 2;
  unsigned max_arity = 1;
  unsigned clauses = 5;
  unsigned max_length = 3;
  std::uint64_t seed = 0;
  /// Upper bound on the atom universe; at most kOracleAtomBudget.
  unsigned max_atoms = 20;
  bool allow_tautologies = false;
  /// Chosen at random when unset.
  std::optional<OrderingKind> ordering;
};

class GenError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Deterministic in `params`. Terms are constants only; predicate arities are
/// lowered until the atom universe fits `max_atoms`. May return fewer clauses
/// than requested when the universe is too small for distinct ones.
Problem generate(const GenParams& params);

}  // namespace sclsim
