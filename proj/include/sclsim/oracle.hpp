#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sclsim/semantics.hpp"
#include "sclsim/syntax.hpp"

namespace sclsim {

inline constexpr std::size_t kOracleAtomBudget = 20;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A satisfying Herbrand set, or nullopt if unsatisfiable. Exhaustive.
std::optional<AtomSet> brute_force_sat(const ClauseSet& n);
std::optional<AtomSet> brute_force_sat(const std::vector<Clause>& n);

/// N ⊨ C.
bool entails(const std::vector<Clause>& n, const Clause& c);
bool entails(const ClauseSet& n, const Clause& c);
/// {premise} ⊨ c.
bool entails(const Clause& premise, const Clause& c);

/// N^{⪯C} ⊨ C with N^{⪯C} = {D ∈ N | D ⪯ C}.
bool is_redundant(const Clause& c, const std::vector<Clause>& n);
bool is_redundant(const Clause& c, const ClauseSet& n);

}  // namespace sclsim
