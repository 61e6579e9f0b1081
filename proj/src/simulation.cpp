#include "sclsim/simulation.hpp"

#include <algorithm>
#include <map>

#include "sclsim/oracle.hpp"

namespace sclsim {

std::string_view to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::P1_2a: return "P1-2a";
    case SequenceKind::P1_2b: return "P1-2b";
    case SequenceKind::P1_2c: return "P1-2c";
    case SequenceKind::P2_2a: return "P2-2a";
    case SequenceKind::P2_4a: return "P2-4a";
    case SequenceKind::P2_4b: return "P2-4b";
    case SequenceKind::P2_4c: return "P2-4c";
  }
  return "?";
}

AnnotatedState initial_state(const Problem& problem) {
  AnnotatedState s{SclState::initial(problem.clauses(), problem.beta()), {}};
  for (const auto& c : problem.clauses())
    if (problem.clauses().contains(sfac(c))) s.ann.gamma.factorize(c);
  return s;
}

namespace {

AtomSet universe(const SclState& s) {
  AtomSet out = atoms_of(*s.n);
  for (const auto& c : s.u)
    for (Literal l : c) out.insert(l.atom);
  return out;
}

/// ≺_γ-smallest clause satisfying `pred`, ties broken by ≺.
template <class Pred>
std::optional<Clause> smallest_gamma(const SclState& s, const GammaMap& gamma, Pred pred) {
  std::optional<Clause> best;
  for (const auto& c : s.clauses())
    if (pred(c) && (!best || compare_clauses_gamma_total(c, *best, gamma) < 0)) best = c;
  return best;
}

/// Builds a sequence step by step, recording every rule application.
class Recorder {
 public:
  explicit Recorder(const AnnotatedState& start) : seq_{SequenceKind::P1_2c, {}, start, start, {}} {
    current_ = start.scl;
  }

  const SclState& state() const { return current_; }

  template <class F>
  void apply(Rule rule, F&& f, std::optional<Literal> lit = {}, std::optional<Clause> cl = {}) {
    SclState next;
    try {
      next = f(current_);
    } catch (const RuleError& e) {
      throw SimulationError(std::string("SCL-SUP rule failed: ") + e.what());
    }
    seq_.steps.push_back({rule, current_, next, lit, std::move(cl)});
    current_ = std::move(next);
  }

  AtomicSequence finish(SequenceKind kind, Annotation ann) {
    seq_.kind = kind;
    seq_.after = {current_, std::move(ann)};
    return std::move(seq_);
  }

  void set_learned(Clause c) { seq_.learned = std::move(c); }

 private:
  AtomicSequence seq_;
  SclState current_;
};

}  // namespace

std::optional<Clause> next_decision_aid(const AnnotatedState& s) {
  const auto& gamma = s.ann.gamma;
  const auto& aid = s.ann.aid;
  return smallest_gamma(s.scl, gamma, [&](const Clause& c) {
    return aid.empty() ? true : compare_clauses_gamma_total(aid, c, gamma) < 0;
  });
}

std::vector<Literal> pending_negative_decisions(const AnnotatedState& s, Literal l) {
  std::vector<Literal> out;
  for (AtomId a : universe(s.scl).elements())
    if (pos(a) < l && !s.scl.trail.defined(a)) out.push_back(neg(a));
  return out;
}

bool part1_applicable(const AnnotatedState& s) {
  return s.scl.is_top() && next_decision_aid(s).has_value();
}

std::optional<std::string> part2_precondition_failure(const AnnotatedState& s) {
  const SclState& st = s.scl;
  if (!st.is_conflict()) return "status is not a conflict clause";
  if (st.trail.empty()) return "trail is empty";
  const TrailEntry& top = st.trail.top();
  const auto* just = std::get_if<Propagation>(&top.justification);
  if (!just || !top.literal.positive) return "topmost entry is not a propagated atom";
  if (s.ann.aid.empty() || just->clause != sfac(s.ann.aid))
    return "topmost justification is not sfac of the decision aid";
  Clause e = st.conflict_clause();
  if (e.max_literal() != top.literal.complement())
    return "maximal literal of the conflict is not the complement of the topmost atom";
  for (std::size_t i = 0; i + 1 < st.trail.size(); ++i)
    if (!st.trail[i].is_decision()) return "trail below the top contains a propagation";
  for (AtomId a : universe(st).elements())
    if (a < top.literal.atom && !st.trail.defined(a))
      return "an atom below the topmost atom is undefined";
  return std::nullopt;
}

AtomicSequence atomic_part1(const AnnotatedState& s) {
  if (!s.scl.is_top()) throw SimulationError("Part 1: status is not ⊤");
  auto next = next_decision_aid(s);
  if (!next) throw SimulationError("Part 1: no next decision aid");
  const Clause d = *next;
  const Literal l = d.max_literal();
  const auto& gamma = s.ann.gamma;

  Recorder rec(s);
  for (Literal a : pending_negative_decisions(s, l))
    rec.apply(Rule::Decide, [&](const SclState& x) { return decide(x, a); }, a);

  if (!l.positive || rec.state().trail.satisfies(d))
    return rec.finish(SequenceKind::P1_2c, {s.ann.index, d, gamma});

  if (rec.state().trail.defined(l.atom))
    throw SimulationError("Part 1: maximal atom of the decision aid already defined");
  std::size_t j0 = gamma(d).count(l) - 1;
  GammaMap gamma2 = gamma;
  gamma2.factorize(d);
  Annotation ann{s.ann.index + j0, d, gamma2};

  SclState tentative = decide(rec.state(), l);
  if (!conflict_applicable(tentative)) {
    rec.apply(Rule::Decide, [&](const SclState& x) { return decide(x, l); }, l);
    return rec.finish(SequenceKind::P1_2a, std::move(ann));
  }
  rec.apply(Rule::Propagate, [&](const SclState& x) { return propagate(x, d, l); }, l, d);
  auto e = smallest_gamma(rec.state(), gamma,
                          [&](const Clause& c) { return rec.state().trail.falsifies(c); });
  if (!e) throw SimulationError("Part 1 (2b): no false clause after propagation");
  rec.apply(Rule::Conflict, [&](const SclState& x) { return conflict(x, *e); }, {}, *e);
  return rec.finish(SequenceKind::P1_2b, std::move(ann));
}

AtomicSequence atomic_part2(const AnnotatedState& s) {
  if (auto why = part2_precondition_failure(s)) throw SimulationError("Part 2: " + *why);
  const auto& gamma = s.ann.gamma;
  const Literal b = s.scl.trail.top().literal;
  const std::size_t j0 = s.scl.conflict_clause().count(b.complement());
  const std::size_t j = s.ann.index + j0;

  Recorder rec(s);
  for (std::size_t r = 0; r < j0; ++r)
    rec.apply(Rule::Resolve, [](const SclState& x) { return resolve(x); });

  if (rec.state().is_bottom()) {
    while (!rec.state().trail.empty())
      rec.apply(Rule::Skip, [](const SclState& x) { return skip(x); });
    rec.set_learned(Clause{});
    return rec.finish(SequenceKind::P2_2a, {j, Clause{}, gamma});
  }

  const Clause e2 = rec.state().conflict_clause();
  const Literal l1 = e2.max_literal();
  while (!rec.state().trail.empty() && rec.state().trail.top().literal != l1.complement())
    rec.apply(Rule::Skip, [](const SclState& x) { return skip(x); });
  rec.apply(Rule::Backtrack, [](const SclState& x) { return backtrack(x); }, {}, e2);
  rec.set_learned(e2);

  if (!l1.positive) {
    const Literal b1 = l1.complement();
    const auto& trail = rec.state().trail;
    auto d = smallest_gamma(rec.state(), gamma, [&](const Clause& c) {
      return c.max_literal() == b1 && !trail.satisfies(c);
    });
    if (!d) throw SimulationError("Part 2 (4a): no clause can propagate the complement");
    rec.apply(Rule::Propagate, [&](const SclState& x) { return propagate(x, *d, b1); }, b1, *d);
    rec.apply(Rule::Conflict, [&](const SclState& x) { return conflict(x, e2); }, {}, e2);
    return rec.finish(SequenceKind::P2_4a, {j, *d, gamma});
  }

  const std::size_t j1 = e2.count(l1) - 1;
  GammaMap gamma2 = gamma;
  gamma2.factorize(e2);
  Annotation ann{j + j1, e2, gamma2};
  SclState tentative = decide(rec.state(), l1);
  if (!conflict_applicable(tentative)) {
    rec.apply(Rule::Decide, [&](const SclState& x) { return decide(x, l1); }, l1);
    return rec.finish(SequenceKind::P2_4b, std::move(ann));
  }
  rec.apply(Rule::Propagate, [&](const SclState& x) { return propagate(x, e2, l1); }, l1, e2);
  auto e3 = smallest_gamma(rec.state(), gamma2,
                           [&](const Clause& c) { return rec.state().trail.falsifies(c); });
  if (!e3) throw SimulationError("Part 2 (4c): no false clause after propagation");
  rec.apply(Rule::Conflict, [&](const SclState& x) { return conflict(x, *e3); }, {}, *e3);
  return rec.finish(SequenceKind::P2_4c, std::move(ann));
}

std::vector<RuleApplication> SclSupRun::rule_applications() const {
  std::vector<RuleApplication> out;
  for (const auto& seq : sequences) out.insert(out.end(), seq.steps.begin(), seq.steps.end());
  return out;
}

SclSupRun run_scl_sup(const Problem& problem, std::size_t cap) {
  SclSupRun run;
  run.initial = initial_state(problem);
  for (;;) {
    const AnnotatedState& s = run.final_state();
    if (s.scl.is_bottom()) {
      run.verdict = Verdict::Unsatisfiable;
      return run;
    }
    bool p1 = part1_applicable(s);
    bool p2 = s.scl.is_conflict();
    if (!p1 && !p2) {
      for (const auto& c : *s.scl.n)
        if (!s.scl.trail.satisfies(c))
          throw SimulationError("no atomic sequence applies but the trail does not satisfy " +
                                problem.str(c));
      run.verdict = Verdict::Satisfiable;
      return run;
    }
    if (run.sequences.size() >= cap) {
      run.verdict = Verdict::CapExceeded;
      return run;
    }
    AtomicSequence seq = p2 ? atomic_part2(s) : atomic_part1(s);
    if (seq.learned) run.learned.push_back(*seq.learned);
    run.sequences.push_back(std::move(seq));
  }
}

bool InvariantReport::all() const {
  return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

std::vector<std::string> InvariantReport::failures() const {
  std::vector<std::string> out;
  for (std::size_t n = 0; n < holds.size(); ++n)
    if (!holds[n]) out.push_back("(" + std::string(kInvariantNames[n]) + ") " + witness[n]);
  return out;
}

namespace {

/// Evaluates one invariant at a time; the first counterexample is the witness.
class InvariantChecker {
 public:
  InvariantChecker(const Problem& p, const AnnotatedState& s, const SupRun& sup)
      : p_(p), s_(s), st_(s.scl), gamma_(s.ann.gamma), d_(s.ann.aid) {
    if (s.ann.index >= sup.state_count())
      throw SimulationError("annotation index " + std::to_string(s.ann.index) +
                            " out of range of the SUP-MO run");
    ni_ = sup.state(s.ann.index);
    m_ = &sup.constructions[s.ann.index];
    nu_ = st_.clauses();
    for (const auto& e : m_->entries) delta_[ni_[e.clause]] = e.delta;
    d1_ = gamma_(d_);
    // L is the maximal literal of D, or the minimal literal when D = ⊥.
    l_ = d_.empty() ? pos(0) : d_.max_literal();
    n_d1_ = model_below(ni_, *m_, d1_);
    n_d1_delta_ = n_d1_;
    if (auto it = delta_.find(d1_); it != delta_.end() && it->second)
      n_d1_delta_.insert(*it->second);
    if (!st_.is_top()) e_ = st_.conflict_clause();
    for (const auto& c : ni_) sfac_ni_.insert(sfac(c));
  }

  InvariantReport run() {
    InvariantReport r;
    auto record = [&](std::size_t n, std::optional<std::string> w) {
      r.holds[n] = !w.has_value();
      if (w) r.witness[n] = *w;
    };
    record(0, inv_i());
    record(1, inv_ii());
    record(2, inv_iii());
    record(3, inv_iv());
    record(4, inv_v());
    record(5, inv_vi());
    record(6, inv_vii());
    record(7, inv_viii());
    record(8, inv_ix());
    record(9, inv_x());
    record(10, inv_xi());
    record(11, inv_xii());
    record(12, inv_xiii());
    record(13, inv_xiv());
    return r;
  }

 private:
  using Witness = std::optional<std::string>;

  std::string str(const Clause& c) const { return p_.str(c); }
  std::string atom(AtomId a) const { return p_.str(pos(a)); }

  std::optional<AtomId> delta(const Clause& c) const {
    auto it = delta_.find(c);
    return it == delta_.end() ? std::nullopt : it->second;
  }

  Witness inv_i() const {
    AtomSet a0 = atoms_of(*st_.n);
    if (!(atoms_of(ni_) == a0)) return "atom(N^i) differs from atom(N^0)";
    for (const auto& c : st_.u)
      if (!atoms_of(c).subset_of(a0)) return "learned clause " + str(c) + " has a new atom";
    for (AtomId a : a0.elements())
      if (a >= st_.beta) return "atom " + atom(a) + " not below β";
    if (!d_.empty() && !st_.in_nu(d_)) return "aid " + str(d_) + " not in N^0 ∪ U";
    return std::nullopt;
  }

  Witness inv_ii() const {
    for (const auto& c : nu_) {
      if (!sfac_ni_.contains(sfac(c))) return "sfac(" + str(c) + ") not in sfac(N^i)";
      const Clause& g = gamma_(c);
      if (!ni_.contains(g)) return "γ(" + str(c) + ") = " + str(g) + " not in N^i";
      if (g != c && g != sfac(c)) return "γ(" + str(c) + ") is neither C nor sfac(C)";
    }
    return std::nullopt;
  }

  std::vector<Clause> nue() const {
    std::vector<Clause> out = nu_;
    if (e_) out.push_back(*e_);
    return out;
  }

  Witness inv_iii() const {
    auto cands = nue();
    for (const auto& c : ni_) {
      if (c.empty() || !c.max_literal().positive) continue;
      Clause f = sfac(c);
      bool found = std::any_of(cands.begin(), cands.end(),
                               [&](const Clause& x) { return sfac(x) == f; });
      if (!found) return "no clause of N^0 ∪ U ∪ {E} matches sfac(" + str(c) + ")";
    }
    return std::nullopt;
  }

  Witness inv_iv() const {
    auto cands = nue();
    for (const auto& c : ni_) {
      // Try the clause itself first; it is the usual witness.
      bool found = std::find(cands.begin(), cands.end(), c) != cands.end() && gamma_(c) <= c;
      for (std::size_t x = 0; !found && x < cands.size(); ++x)
        found = gamma_(cands[x]) <= c && entails(cands[x], c);
      if (!found) return "no clause of N^0 ∪ U ∪ {E} entails " + str(c) + " below it";
    }
    return std::nullopt;
  }

  Witness inv_v() const {
    for (AtomId a : atoms_of(*st_.n).elements()) {
      bool in_model = n_d1_delta_.contains(a);
      bool on_trail = st_.trail.value(pos(a)) == TruthValue::True;
      if (in_model != on_trail)
        return "atom " + atom(a) + (in_model ? " in N_D' ∪ δ_D' but not on Γ"
                                            : " on Γ but not in N_D' ∪ δ_D'");
    }
    return std::nullopt;
  }

  Witness inv_vi() const {
    for (AtomId a : universe(st_).elements()) {
      bool negated = st_.trail.value(neg(a)) == TruthValue::True;
      bool expected = pos(a) < l_ && !n_d1_.contains(a);
      if (negated != expected)
        return "¬" + atom(a) + (negated ? " on Γ but not expected" : " expected on Γ but absent");
    }
    return std::nullopt;
  }

  Witness inv_vii() const {
    const auto& es = st_.trail.entries();
    for (std::size_t n = 1; n < es.size(); ++n)
      if (!(es[n - 1].literal.atom < es[n].literal.atom))
        return "trail atoms not ascending at position " + std::to_string(n);
    return std::nullopt;
  }

  Witness inv_viii() const {
    for (const auto& e : st_.trail.entries()) {
      if (!e.literal.positive) continue;
      AtomId b = e.literal.atom;
      bool found = false;
      for (const auto& c : nu_) {
        Clause f = sfac(c);
        if (gamma_(c) == f && ni_.contains(f) && delta(f) == b) {
          found = true;
          break;
        }
      }
      if (!found) return "no producing clause for trail atom " + atom(b);
    }
    return std::nullopt;
  }

  Witness inv_ix() const {
    for (const auto& c : ni_) {
      auto b = delta(c);
      if (!b || !(c <= d1_)) continue;
      bool found = std::any_of(nu_.begin(), nu_.end(), [&](const Clause& x) {
        return gamma_(x) == c && gamma_(c) <= d1_;
      });
      if (!found) return "productive clause " + str(c) + " has no γ-preimage below the aid";
    }
    return std::nullopt;
  }

  Witness inv_x() const {
    if (st_.is_top() && !st_.trail.only_decisions()) return "status ⊤ with a propagated literal";
    return std::nullopt;
  }

  Witness inv_xi() const {
    bool lhs = st_.is_conflict();
    bool rhs = [&] {
      const auto& trail = st_.trail;
      if (trail.empty() || !e_ || e_->empty()) return false;
      const auto& top = trail.top();
      const auto* just = std::get_if<Propagation>(&top.justification);
      if (!just || !top.literal.positive || d_.empty() || just->clause != sfac(d_)) return false;
      for (std::size_t n = 0; n + 1 < trail.size(); ++n)
        if (!trail[n].is_decision()) return false;
      if (gamma_(*e_) != *e_ || !ni_.contains(*e_)) return false;
      auto minimal = minimal_false_clause(ni_, *m_);
      if (!minimal || ni_[*minimal] != *e_) return false;
      return e_->contains(top.literal.complement());
    }();
    if (lhs != rhs)
      return lhs ? "conflict state without the required trail shape or minimal false clause"
                 : "trail shape of a conflict state without a conflict";
    return std::nullopt;
  }

  Witness inv_xii() const {
    for (const auto& c : nu_)
      if (gamma_(c) <= d1_ && !st_.trail.satisfies(c))
        return "clause " + str(c) + " ⪯_γ aid not satisfied by Γ";
    return std::nullopt;
  }

  Witness inv_xiii() const {
    if (conflict_applicable(st_)) return "Conflict applicable";
    return std::nullopt;
  }

  Witness inv_xiv() const {
    for (const auto& c : nu_)
      if (c.empty()) return "⊥ ∈ N^0 ∪ U";
    bool lhs = st_.is_bottom();
    bool rhs = st_.trail.empty() && ni_.contains(Clause{});
    if (lhs != rhs) return lhs ? "E = ⊥ but Γ ≠ ε or ⊥ ∉ N^i" : "Γ = ε and ⊥ ∈ N^i but E ≠ ⊥";
    return std::nullopt;
  }

  const Problem& p_;
  const AnnotatedState& s_;
  const SclState& st_;
  const GammaMap& gamma_;
  const Clause& d_;
  ClauseSet ni_;
  const ModelConstruction* m_ = nullptr;
  std::vector<Clause> nu_;
  std::map<Clause, std::optional<AtomId>> delta_;
  Clause d1_;
  Literal l_;
  AtomSet n_d1_;
  AtomSet n_d1_delta_;
  std::optional<Clause> e_;
  ClauseSet sfac_ni_;
};

}  // namespace

InvariantReport check_invariants(const Problem& problem, const AnnotatedState& s,
                                 const SupRun& sup) {
  return InvariantChecker(problem, s, sup).run();
}

bool makes_progress(const Annotation& before, const Annotation& after) {
  if (after.index > before.index) return true;
  if (after.index < before.index || !(after.gamma == before.gamma)) return false;
  if (after.aid.empty()) return false;
  if (before.aid.empty()) return true;
  return compare_clauses_gamma_total(before.aid, after.aid, before.gamma) < 0;
}

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> out;
  if (error) out.push_back("error: " + *error);
  for (const auto& f : initial.failures()) out.push_back("initial state: " + f);
  for (std::size_t n = 0; n < sequences.size(); ++n) {
    std::string where = "after sequence " + std::to_string(n) + " (" +
                        std::string(to_string(sequences[n].kind)) + "): ";
    for (const auto& f : sequences[n].invariants.failures()) out.push_back(where + f);
    if (!sequences[n].progress) out.push_back(where + "no progress");
  }
  if (error) return out;
  if (!final_state_ok) out.push_back("final state is neither a refutation nor a model of N^0");
  if (!verdicts_agree)
    out.push_back("verdicts differ: SUP-MO " + std::string(to_string(sup_verdict)) +
                  ", SCL-SUP " + std::string(to_string(scl_verdict)));
  if (!final_index_ok) out.push_back("final annotated index differs from SUP-MO step count");
  for (const auto& v : regularity)
    out.push_back("regularity (" + std::string(1, v.kind) + ") at step " +
                  std::to_string(v.step) + ": " + v.message);
  for (const auto& c : coincidence) out.push_back("coincidence: " + c);
  return out;
}

VerifyReport verify_runs(const Problem& problem, const SupRun& sup, const SclSupRun& scl) {
  VerifyReport r;
  r.sup_verdict = sup.verdict;
  r.scl_verdict = scl.verdict;
  try {
    r.initial = check_invariants(problem, scl.initial, sup);
    for (const auto& seq : scl.sequences)
      r.sequences.push_back({seq.kind, check_invariants(problem, seq.after, sup),
                             makes_progress(seq.before.ann, seq.after.ann)});
  } catch (const SimulationError& e) {
    r.error = e.what();
    return r;
  }

  const AnnotatedState& fin = scl.final_state();
  const ClauseSet final_sup = sup.state(sup.state_count() - 1);
  bool refuted = fin.scl.is_bottom() && fin.scl.trail.empty() && fin.ann.aid.empty() &&
                 sup.state(fin.ann.index).contains(Clause{});
  bool model = fin.scl.is_top() &&
               std::all_of(fin.scl.n->begin(), fin.scl.n->end(),
                           [&](const Clause& c) { return fin.scl.trail.satisfies(c); });
  r.final_state_ok = refuted || model;
  r.verdicts_agree = sup.verdict == scl.verdict && sup.verdict != Verdict::CapExceeded;
  r.final_index_ok = fin.ann.index == sup.inferences.size();
  r.regularity = audit_regular(scl.rule_applications());

  ClauseSet sfac_sup;
  for (const auto& c : final_sup) sfac_sup.insert(sfac(c));
  for (const auto& e2 : scl.learned)
    if (!sfac_sup.contains(sfac(e2)))
      r.coincidence.push_back("sfac of learned " + problem.str(e2) +
                              " not among sfac of SUP-MO clauses");
  bool learned_bottom = std::any_of(scl.learned.begin(), scl.learned.end(),
                                    [](const Clause& c) { return c.empty(); });
  if (learned_bottom != final_sup.contains(Clause{}))
    r.coincidence.push_back(learned_bottom ? "⊥ learned but not derived"
                                           : "⊥ derived but not learned");
  std::vector<Clause> cands = fin.scl.clauses();
  if (!fin.scl.is_top()) cands.push_back(fin.scl.conflict_clause());
  for (const auto& inf : sup.inferences) {
    const Clause& c = inf.conclusion;
    bool found = std::any_of(cands.begin(), cands.end(), [&](const Clause& x) {
      return fin.ann.gamma(x) <= c && entails(x, c);
    });
    if (!found)
      r.coincidence.push_back("SUP-MO conclusion " + problem.str(c) +
                              " not covered by an SCL clause");
  }
  return r;
}

Lockstep lockstep(const Problem& problem, std::size_t cap) {
  Lockstep out{run_sup_mo(problem, cap), std::nullopt, {}};
  try {
    out.scl = run_scl_sup(problem, cap);
  } catch (const SimulationError& e) {
    out.report.sup_verdict = out.sup.verdict;
    out.report.error = e.what();
    return out;
  }
  out.report = verify_runs(problem, out.sup, *out.scl);
  return out;
}

VerifyReport lockstep_verify(const Problem& problem, std::size_t cap) {
  return lockstep(problem, cap).report;
}

}  // namespace sclsim
