#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "sclsim/problem.hpp"
#include "sclsim/semantics.hpp"
#include "sclsim/syntax.hpp"

namespace sclsim {

class InferenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive superposition Factoring: drops duplicates of the maximal literal
/// while it is positive.
Clause sfac(const Clause& c);

/// One Factoring inference. Throws InferenceError unless the maximal literal
/// is positive and occurs at least twice.
Clause factoring_step(const Clause& c);

/// Superposition Left between `c = C2 ∨ ¬B` (¬B maximal) and `d = C1 ∨ B`
/// (B strictly maximal); returns C1 ∨ C2.
Clause superposition_left(const Clause& c, const Clause& d);

/// The model operator run over a clause set, ascending in the clause order.
struct ModelConstruction {
  struct Entry {
    ClauseId clause;
    std::optional<AtomId> delta;
    /// Number of productive clauses strictly below this one.
    std::size_t productive_before;
  };

  std::vector<Entry> entries;
  /// δ atoms in production order.
  std::vector<AtomId> produced;

  /// N_C for the clause at `position`.
  AtomSet prefix_model(std::size_t position) const;
  /// N_I.
  AtomSet model() const;
  std::optional<std::size_t> position_of(ClauseId id) const;
  /// The unique clause with δ = {a}, if any.
  std::optional<ClauseId> producer_of(AtomId a) const;
};

ModelConstruction construct_model(const ClauseSet& n);

/// N_C for an arbitrary clause c: union of δ_D over D ∈ n with D ≺ c.
AtomSet model_below(const ClauseSet& n, const ModelConstruction& m,
                    const Clause& c);

/// The ≺-smallest C with N_C ∪ δ_C ⊭_H C.
std::optional<ClauseId> minimal_false_clause(const ClauseSet& n,
                                             const ModelConstruction& m);

enum class SupRule { Factoring, SuperpositionLeft };
std::string_view to_string(SupRule r);

struct SupInference {
  SupRule rule;
  /// Factoring: {C}. Superposition Left: {minimal false clause, producer}.
  std::vector<ClauseId> premises;
  Clause conclusion;
};

struct SupSatisfiable {
  AtomSet model;
};
struct SupUnsatisfiable {};
using SupStep = std::variant<SupSatisfiable, SupUnsatisfiable, SupInference>;

/// One SUP-MO decision. Throws std::logic_error if a negative maximal literal
/// has no producer for its complement.
SupStep sup_mo_step(const ClauseSet& n, const ModelConstruction& m);
SupStep sup_mo_step(const ClauseSet& n);

enum class Verdict { Satisfiable, Unsatisfiable, CapExceeded };
std::string_view to_string(Verdict v);

/// N^0 ⇒ N^1 ⇒ ... ⇒ N^k under SUP-MO. Since every step adds exactly one new
/// clause, N^m is the first `initial_size + m` clauses of `clauses`.
struct SupRun {
  ClauseSet clauses;
  std::size_t initial_size = 0;
  std::vector<ModelConstruction> constructions;
  std::vector<std::optional<ClauseId>> minimal_false;
  std::vector<SupInference> inferences;
  Verdict verdict = Verdict::CapExceeded;
  /// N_I of the final state when satisfiable.
  AtomSet model;

  std::size_t state_count() const { return constructions.size(); }
  std::size_t state_size(std::size_t m) const { return initial_size + m; }
  ClauseSet state(std::size_t m) const { return clauses.prefix(state_size(m)); }
  /// The clause id of inference m's conclusion.
  ClauseId conclusion_id(std::size_t m) const { return initial_size + m; }
};

inline constexpr std::size_t kDefaultStepCap = 10000;

SupRun run_sup_mo(const Problem& problem, std::size_t cap = kDefaultStepCap);

}  // namespace sclsim
