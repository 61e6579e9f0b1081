#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sclsim/ordering.hpp"
#include "sclsim/problem.hpp"
#include "sclsim/scl.hpp"
#include "sclsim/superposition.hpp"

namespace sclsim {

/// (i, C, γ): the simulated SUP-MO step, the decision aid (⊥ is the empty
/// clause) and the factorization map.
struct Annotation {
  std::size_t index = 0;
  Clause aid;
  GammaMap gamma;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct AnnotatedState {
  SclState scl;
  Annotation ann;
};

enum class SequenceKind { P1_2a, P1_2b, P1_2c, P2_2a, P2_4a, P2_4b, P2_4c };
std::string_view to_string(SequenceKind k);

struct AtomicSequence {
  SequenceKind kind;
  std::vector<RuleApplication> steps;
  AnnotatedState before;
  AnnotatedState after;
  /// Set by Part 2: the clause learned by Backtrack, or ⊥.
  std::optional<Clause> learned;
};

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (ε; N^0; ∅; β; 0; ⊤) annotated (0, ⊥, γ0) where γ0(C) = sfac(C) whenever
/// sfac(C) ∈ N^0.
AnnotatedState initial_state(const Problem& problem);

/// The ≺_γ-successor of the aid in N^0 ∪ U. γ-ties are broken by the clause
/// order so the successor is unique.
std::optional<Clause> next_decision_aid(const AnnotatedState& s);

/// ¬A for every undefined atom A of N^0 ∪ U with A ≺ l in the literal order,
/// ascending.
std::vector<Literal> pending_negative_decisions(const AnnotatedState& s, Literal l);

bool part1_applicable(const AnnotatedState& s);
/// Empty if the Part 2 preconditions hold, else the first failing one.
std::optional<std::string> part2_precondition_failure(const AnnotatedState& s);

AtomicSequence atomic_part1(const AnnotatedState& s);
AtomicSequence atomic_part2(const AnnotatedState& s);

struct SclSupRun {
  AnnotatedState initial;
  std::vector<AtomicSequence> sequences;
  Verdict verdict = Verdict::CapExceeded;
  /// In learning order; ends with ⊥ on refutation.
  std::vector<Clause> learned;

  const AnnotatedState& final_state() const {
    return sequences.empty() ? initial : sequences.back().after;
  }
  /// All rule applications in execution order.
  std::vector<RuleApplication> rule_applications() const;
};

/// Applies atomic sequences until a final state or `cap` sequences.
SclSupRun run_scl_sup(const Problem& problem, std::size_t cap = kDefaultStepCap);

inline constexpr std::array<std::string_view, 14> kInvariantNames = {
    "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii", "xiv"};

struct InvariantReport {
  std::array<bool, 14> holds{};
  std::array<std::string, 14> witness;

  bool all() const;
  std::vector<std::string> failures() const;
};

/// Evaluates the 14 simulation invariants of `s` against N^i of `sup`.
/// Throws SimulationError if the annotated index is out of range.
InvariantReport check_invariants(const Problem& problem, const AnnotatedState& s,
                                 const SupRun& sup);

/// j > i, or j = i with γ unchanged and the aid strictly ≺_γ-increasing.
bool makes_progress(const Annotation& before, const Annotation& after);

struct SequenceCheck {
  SequenceKind kind;
  InvariantReport invariants;
  bool progress = true;
};

struct VerifyReport {
  Verdict sup_verdict = Verdict::CapExceeded;
  Verdict scl_verdict = Verdict::CapExceeded;
  InvariantReport initial;
  std::vector<SequenceCheck> sequences;
  bool final_state_ok = false;
  bool verdicts_agree = false;
  bool final_index_ok = false;
  std::vector<RegularityViolation> regularity;
  std::vector<std::string> coincidence;
  std::optional<std::string> error;

  std::vector<std::string> failures() const;
  bool clean() const { return failures().empty(); }
};

/// Checks an SCL-SUP run against an independently computed SUP-MO run.
VerifyReport verify_runs(const Problem& problem, const SupRun& sup, const SclSupRun& scl);

struct Lockstep {
  SupRun sup;
  std::optional<SclSupRun> scl;
  VerifyReport report;
};

Lockstep lockstep(const Problem& problem, std::size_t cap = kDefaultStepCap);
VerifyReport lockstep_verify(const Problem& problem, std::size_t cap = kDefaultStepCap);

}  // namespace sclsim
