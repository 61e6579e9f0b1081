#include "sclsim/scl.hpp"

#include <algorithm>

namespace sclsim {

std::optional<std::size_t> Trail::position_of(AtomId a) const {
  if (!defined(a)) return std::nullopt;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].literal.atom == a) return i;
  return std::nullopt;
}

std::size_t Trail::decision_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const TrailEntry& e) { return e.is_decision(); }));
}

bool Trail::only_decisions() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const TrailEntry& e) { return e.is_decision(); });
}

AtomSet Trail::true_atoms() const {
  AtomSet out;
  for (const auto& e : entries_)
    if (e.literal.positive) out.insert(e.literal.atom);
  return out;
}

void Trail::push(TrailEntry e) {
  assignment_.assign(e.literal);
  entries_.push_back(std::move(e));
}

void Trail::pop() {
  assignment_.unassign(entries_.back().literal.atom);
  entries_.pop_back();
}

unsigned literal_level(const Trail& trail, Literal l) {
  auto pos = trail.position_of(l.atom);
  if (!pos) throw std::invalid_argument("literal undefined on trail");
  for (std::size_t i = *pos + 1; i-- > 0;)
    if (const auto* d = std::get_if<Decision>(&trail[i].justification)) return d->level;
  return 0;
}

unsigned clause_level(const Trail& trail, const Clause& c) {
  unsigned level = 0;
  for (Literal l : c) level = std::max(level, literal_level(trail, l));
  return level;
}

unsigned trail_level(const Trail& trail) {
  return trail.empty() ? 0 : literal_level(trail, trail.top().literal);
}

SclState SclState::initial(const ClauseSet& n, AtomId beta) {
  SclState s;
  s.n = std::make_shared<const ClauseSet>(n);
  s.beta = beta;
  return s;
}

Clause SclState::conflict_clause() const {
  if (const auto* c = std::get_if<ConflictClause>(&status)) return c->clause;
  if (is_bottom()) return Clause{};
  throw std::logic_error("state has no conflict clause");
}

std::vector<Clause> SclState::clauses() const {
  std::vector<Clause> out(n->begin(), n->end());
  out.insert(out.end(), u.begin(), u.end());
  return out;
}

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::Propagate: return "Propagate";
    case Rule::Decide: return "Decide";
    case Rule::Conflict: return "Conflict";
    case Rule::Skip: return "Skip";
    case Rule::Factorize: return "Factorize";
    case Rule::Resolve: return "Resolve";
    case Rule::Backtrack: return "Backtrack";
  }
  return "?";
}

std::string_view to_string(Guard g) {
  switch (g) {
    case Guard::StatusNotTop: return "status is not ⊤";
    case Guard::StatusNotConflict: return "status is not a conflict";
    case Guard::ClauseNotInNU: return "clause not in N ∪ U";
    case Guard::LiteralNotInClause: return "literal not in clause";
    case Guard::ResidualNotFalse: return "residual clause not false under the trail";
    case Guard::LiteralDefined: return "literal already defined";
    case Guard::AtomAboveBeta: return "atom not below β";
    case Guard::AtomNotOccurring: return "atom does not occur in N ∪ U";
    case Guard::ClauseNotFalse: return "clause not false under the trail";
    case Guard::EmptyTrail: return "trail is empty";
    case Guard::ComplementInConflict: return "complement of topmost literal occurs in conflict";
    case Guard::NoDuplicate: return "no duplicate literal";
    case Guard::TopNotPropagation: return "topmost entry is not a propagation";
    case Guard::ComplementMismatch: return "conflict does not contain the complement of the topmost literal";
    case Guard::TopNotDecision: return "topmost entry is not a decision";
    case Guard::DecisionNotAtLevelK: return "topmost decision is not of level k";
    case Guard::LevelNotBelow: return "rest of clause is not of level below k";
    case Guard::AlreadyLearned: return "clause already in N ∪ U";
  }
  return "?";
}

RuleError::RuleError(Rule rule, Guard guard)
    : std::runtime_error(std::string(to_string(rule)) + ": " + std::string(to_string(guard))),
      rule_(rule),
      guard_(guard) {}

namespace {

void require(bool ok, Rule r, Guard g) {
  if (!ok) throw RuleError(r, g);
}

bool occurs_in_nu(const SclState& s, AtomId a) {
  auto has = [a](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [a](Literal l) { return l.atom == a; });
  };
  return std::any_of(s.n->begin(), s.n->end(), has) ||
         std::any_of(s.u.begin(), s.u.end(), has);
}

}  // namespace

SclState propagate(const SclState& s, const Clause& c, Literal l) {
  constexpr Rule r = Rule::Propagate;
  require(s.is_top(), r, Guard::StatusNotTop);
  require(s.in_nu(c), r, Guard::ClauseNotInNU);
  require(c.contains(l), r, Guard::LiteralNotInClause);
  require(std::all_of(c.begin(), c.end(), [&](Literal x) { return x.atom < s.beta; }), r,
          Guard::AtomAboveBeta);
  Clause c0 = c.without_all(l);
  require(s.trail.falsifies(c0), r, Guard::ResidualNotFalse);
  require(!s.trail.defined(l.atom), r, Guard::LiteralDefined);
  SclState out = s;
  out.trail.push({l, Propagation{c0.merged(Clause{l})}});
  return out;
}

SclState decide(const SclState& s, Literal l) {
  constexpr Rule r = Rule::Decide;
  require(s.is_top(), r, Guard::StatusNotTop);
  require(l.atom < s.beta, r, Guard::AtomAboveBeta);
  require(occurs_in_nu(s, l.atom), r, Guard::AtomNotOccurring);
  require(!s.trail.defined(l.atom), r, Guard::LiteralDefined);
  SclState out = s;
  out.k = s.k + 1;
  out.trail.push({l, Decision{out.k}});
  return out;
}

SclState conflict(const SclState& s, const Clause& d) {
  constexpr Rule r = Rule::Conflict;
  require(s.is_top(), r, Guard::StatusNotTop);
  require(s.in_nu(d), r, Guard::ClauseNotInNU);
  require(s.trail.falsifies(d), r, Guard::ClauseNotFalse);
  SclState out = s;
  out.status = d.empty() ? Status{Bottom{}} : Status{ConflictClause{d}};
  return out;
}

SclState skip(const SclState& s) {
  constexpr Rule r = Rule::Skip;
  require(!s.is_top(), r, Guard::StatusNotConflict);
  require(!s.trail.empty(), r, Guard::EmptyTrail);
  const TrailEntry& top = s.trail.top();
  require(!s.conflict_clause().contains(top.literal.complement()), r,
          Guard::ComplementInConflict);
  SclState out = s;
  if (top.is_decision()) --out.k;
  out.trail.pop();
  return out;
}

SclState factorize(const SclState& s, std::optional<Literal> l) {
  constexpr Rule r = Rule::Factorize;
  require(s.is_conflict(), r, Guard::StatusNotConflict);
  Clause d = s.conflict_clause();
  if (!l) {
    for (Literal x : d)
      if (d.count(x) >= 2) {
        l = x;
        break;
      }
  }
  require(l && d.count(*l) >= 2, r, Guard::NoDuplicate);
  SclState out = s;
  out.status = ConflictClause{d.without_one(*l)};
  return out;
}

SclState resolve(const SclState& s) {
  constexpr Rule r = Rule::Resolve;
  require(s.is_conflict(), r, Guard::StatusNotConflict);
  require(!s.trail.empty(), r, Guard::EmptyTrail);
  const TrailEntry& top = s.trail.top();
  const auto* just = std::get_if<Propagation>(&top.justification);
  require(just != nullptr, r, Guard::TopNotPropagation);
  Clause d = s.conflict_clause();
  Literal lp = top.literal.complement();
  require(d.contains(lp), r, Guard::ComplementMismatch);
  Clause resolvent = d.without_one(lp).merged(just->clause.without_one(top.literal));
  SclState out = s;
  out.status = resolvent.empty() ? Status{Bottom{}} : Status{ConflictClause{resolvent}};
  return out;
}

SclState backtrack(const SclState& s) {
  constexpr Rule r = Rule::Backtrack;
  require(s.is_conflict(), r, Guard::StatusNotConflict);
  require(!s.trail.empty(), r, Guard::EmptyTrail);
  const TrailEntry& top = s.trail.top();
  const auto* dec = std::get_if<Decision>(&top.justification);
  require(dec != nullptr, r, Guard::TopNotDecision);
  require(dec->level == s.k, r, Guard::DecisionNotAtLevelK);
  Clause learned = s.conflict_clause();
  Literal l = top.literal.complement();
  require(learned.contains(l), r, Guard::ComplementMismatch);
  // Duplicates of L belong to the resolved literal, not to the rest D.
  require(clause_level(s.trail, learned.without_all(l)) < s.k, r, Guard::LevelNotBelow);
  require(!s.in_nu(learned), r, Guard::AlreadyLearned);
  SclState out = s;
  out.trail.pop();
  out.u.insert(learned);
  out.k = trail_level(out.trail);
  out.status = Top{};
  return out;
}

std::vector<Clause> false_clauses(const SclState& s) {
  std::vector<Clause> out;
  for (const auto& c : *s.n)
    if (s.trail.falsifies(c)) out.push_back(c);
  for (const auto& c : s.u)
    if (s.trail.falsifies(c)) out.push_back(c);
  return out;
}

bool conflict_applicable(const SclState& s) {
  if (!s.is_top()) return false;
  auto f = [&](const Clause& c) { return s.trail.falsifies(c); };
  return std::any_of(s.n->begin(), s.n->end(), f) || std::any_of(s.u.begin(), s.u.end(), f);
}

std::vector<RegularityViolation> audit_regular(const std::vector<RuleApplication>& run) {
  std::vector<RegularityViolation> out;
  for (std::size_t i = 0; i < run.size(); ++i) {
    const auto& step = run[i];
    if (step.rule != Rule::Conflict && conflict_applicable(step.before))
      out.push_back({i, 'a',
                     std::string(to_string(step.rule)) + " taken while Conflict was applicable"});
    if (step.rule == Rule::Decide && conflict_applicable(step.after))
      out.push_back({i, 'b', "Decide enabled an immediate Conflict"});
  }
  return out;
}

}  // namespace sclsim
