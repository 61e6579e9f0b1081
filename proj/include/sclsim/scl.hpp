#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sclsim/semantics.hpp"
#include "sclsim/syntax.hpp"

namespace sclsim {

struct Decision {
  unsigned level;
  friend bool operator==(const Decision&, const Decision&) = default;
};

struct Propagation {
  /// The justification (C0 ∨ L) with duplicates of L removed.
  Clause clause;
  friend bool operator==(const Propagation&, const Propagation&) = default;
};

using Justification = std::variant<Decision, Propagation>;

struct TrailEntry {
  Literal literal;
  Justification justification;

  bool is_decision() const { return std::holds_alternative<Decision>(justification); }
  friend bool operator==(const TrailEntry&, const TrailEntry&) = default;
};

/// Γ together with the partial assignment it induces.
class Trail {
 public:
  const std::vector<TrailEntry>& entries() const { return entries_; }
  const PartialAssignment& assignment() const { return assignment_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const TrailEntry& top() const { return entries_.back(); }
  const TrailEntry& operator[](std::size_t i) const { return entries_[i]; }

  TruthValue value(Literal l) const { return assignment_.value(l); }
  bool defined(AtomId a) const { return assignment_.defined(a); }
  TruthValue status(const Clause& c) const {
    return status_under_assignment(assignment_, c);
  }
  bool satisfies(const Clause& c) const { return status(c) == TruthValue::True; }
  bool falsifies(const Clause& c) const { return status(c) == TruthValue::False; }

  /// Position of the entry defining `a`.
  std::optional<std::size_t> position_of(AtomId a) const;
  std::size_t decision_count() const;
  bool only_decisions() const;
  /// Atoms assigned true.
  AtomSet true_atoms() const;

  void push(TrailEntry e);
  void pop();

  friend bool operator==(const Trail& a, const Trail& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<TrailEntry> entries_;
  PartialAssignment assignment_;
};

/// Level of the nearest decision at or left of the entry defining atom(l).
/// Throws std::invalid_argument if l is undefined.
unsigned literal_level(const Trail& trail, Literal l);
/// Maximum literal level; 0 for ⊥.
unsigned clause_level(const Trail& trail, const Clause& c);
/// Level of the topmost literal; 0 for ε.
unsigned trail_level(const Trail& trail);

struct Top {
  friend bool operator==(Top, Top) = default;
};
struct Bottom {
  friend bool operator==(Bottom, Bottom) = default;
};
struct ConflictClause {
  Clause clause;
  friend bool operator==(const ConflictClause&, const ConflictClause&) = default;
};
using Status = std::variant<Top, Bottom, ConflictClause>;

/// (Γ; N; U; β; k; status). N is shared between all states of a run.
struct SclState {
  Trail trail;
  std::shared_ptr<const ClauseSet> n;
  ClauseSet u;
  /// Every atom id below `beta` is admissible.
  AtomId beta = 0;
  unsigned k = 0;
  Status status = Top{};

  static SclState initial(const ClauseSet& n, AtomId beta);

  bool is_top() const { return std::holds_alternative<Top>(status); }
  bool is_bottom() const { return std::holds_alternative<Bottom>(status); }
  bool is_conflict() const { return std::holds_alternative<ConflictClause>(status); }
  /// The conflict clause; ⊥ for Bottom. Precondition: not Top.
  Clause conflict_clause() const;

  bool in_nu(const Clause& c) const { return n->contains(c) || u.contains(c); }
  /// N ∪ U, N first.
  std::vector<Clause> clauses() const;
};

enum class Rule { Propagate, Decide, Conflict, Skip, Factorize, Resolve, Backtrack };
std::string_view to_string(Rule r);

enum class Guard {
  StatusNotTop,
  StatusNotConflict,
  ClauseNotInNU,
  LiteralNotInClause,
  ResidualNotFalse,
  LiteralDefined,
  AtomAboveBeta,
  AtomNotOccurring,
  ClauseNotFalse,
  EmptyTrail,
  ComplementInConflict,
  NoDuplicate,
  TopNotPropagation,
  ComplementMismatch,
  TopNotDecision,
  DecisionNotAtLevelK,
  LevelNotBelow,
  AlreadyLearned,
};
std::string_view to_string(Guard g);

class RuleError : public std::runtime_error {
 public:
  RuleError(Rule rule, Guard guard);
  Rule rule() const { return rule_; }
  Guard guard() const { return guard_; }

 private:
  Rule rule_;
  Guard guard_;
};

SclState propagate(const SclState& s, const Clause& c, Literal l);
SclState decide(const SclState& s, Literal l);
SclState conflict(const SclState& s, const Clause& d);
SclState skip(const SclState& s);
/// Removes one duplicate of `l` from the conflict clause; without `l`, the
/// largest duplicated literal.
SclState factorize(const SclState& s, std::optional<Literal> l = std::nullopt);
SclState resolve(const SclState& s);
SclState backtrack(const SclState& s);

/// Clauses of N ∪ U false under the trail.
std::vector<Clause> false_clauses(const SclState& s);
bool conflict_applicable(const SclState& s);

struct RuleApplication {
  Rule rule;
  SclState before;
  SclState after;
  std::optional<Literal> literal;
  std::optional<Clause> clause;
};

struct RegularityViolation {
  std::size_t step;
  /// 'a': non-Conflict step while Conflict applicable; 'b': Decide enabling Conflict.
  char kind;
  std::string message;
};

/// Empty iff the run is regular.
std::vector<RegularityViolation> audit_regular(const std::vector<RuleApplication>& run);

}  // namespace sclsim
