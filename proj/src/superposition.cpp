#include "sclsim/superposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace sclsim {

Clause sfac(const Clause& c) {
  Clause out = c;
  while (!out.empty() && out.max_literal().positive &&
         out.count(out.max_literal()) >= 2)
    out = out.without_one(out.max_literal());
  return out;
}

Clause factoring_step(const Clause& c) {
  if (c.empty()) throw InferenceError("factoring: empty clause");
  Literal max = c.max_literal();
  if (!max.positive) throw InferenceError("factoring: maximal literal is negative");
  if (c.count(max) < 2) throw InferenceError("factoring: maximal literal not duplicated");
  return c.without_one(max);
}

Clause superposition_left(const Clause& c, const Clause& d) {
  if (d.empty() || c.empty())
    throw InferenceError("superposition left: empty premise");
  Literal b = d.max_literal();
  if (!b.positive || !d.strictly_maximal(b))
    throw InferenceError("superposition left: no strictly maximal positive literal");
  if (c.max_literal() != b.complement())
    throw InferenceError("superposition left: no complementary maximal pair");
  return c.without_one(b.complement()).merged(d.without_one(b));
}

AtomSet ModelConstruction::prefix_model(std::size_t position) const {
  AtomSet out;
  for (std::size_t i = 0; i < entries[position].productive_before; ++i)
    out.insert(produced[i]);
  return out;
}

AtomSet ModelConstruction::model() const {
  AtomSet out;
  for (AtomId a : produced) out.insert(a);
  return out;
}

std::optional<std::size_t> ModelConstruction::position_of(ClauseId id) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].clause == id) return i;
  return std::nullopt;
}

std::optional<ClauseId> ModelConstruction::producer_of(AtomId a) const {
  std::optional<ClauseId> found;
  for (const auto& e : entries) {
    if (e.delta == a) {
      if (found) throw std::logic_error("atom produced twice");
      found = e.clause;
    }
  }
  return found;
}

ModelConstruction construct_model(const ClauseSet& n) {
  ModelConstruction m;
  AtomSet current;
  for (ClauseId id : n.sorted_ids()) {
    const Clause& c = n[id];
    ModelConstruction::Entry e{id, std::nullopt, m.produced.size()};
    if (!c.empty()) {
      Literal b = c.max_literal();
      if (b.positive && c.strictly_maximal(b) && !eval_herbrand(current, c)) {
        e.delta = b.atom;
        m.produced.push_back(b.atom);
        current.insert(b.atom);
      }
    }
    m.entries.push_back(e);
  }
  return m;
}

AtomSet model_below(const ClauseSet& n, const ModelConstruction& m,
                    const Clause& c) {
  AtomSet out;
  for (const auto& e : m.entries) {
    if (!(n[e.clause] < c)) break;
    if (e.delta) out.insert(*e.delta);
  }
  return out;
}

std::optional<ClauseId> minimal_false_clause(const ClauseSet& n,
                                             const ModelConstruction& m) {
  AtomSet current;
  for (const auto& e : m.entries) {
    if (e.delta) current.insert(*e.delta);
    if (!eval_herbrand(current, n[e.clause])) return e.clause;
  }
  return std::nullopt;
}

std::string_view to_string(SupRule r) {
  return r == SupRule::Factoring ? "Factoring" : "SuperpositionLeft";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Satisfiable: return "sat";
    case Verdict::Unsatisfiable: return "unsat";
    case Verdict::CapExceeded: return "cap-exceeded";
  }
  return "?";
}

SupStep sup_mo_step(const ClauseSet& n, const ModelConstruction& m) {
  auto minimal = minimal_false_clause(n, m);
  if (!minimal) return SupSatisfiable{m.model()};
  const Clause& c = n[*minimal];
  if (c.empty()) return SupUnsatisfiable{};
  Literal l = c.max_literal();
  if (!l.positive) {
    auto producer = m.producer_of(l.atom);
    if (!producer)
      throw std::logic_error("SUP-MO: no producer for the complement of the "
                             "maximal literal of the minimal false clause");
    return SupInference{SupRule::SuperpositionLeft, {*minimal, *producer},
                        superposition_left(c, n[*producer])};
  }
  return SupInference{SupRule::Factoring, {*minimal}, factoring_step(c)};
}

SupStep sup_mo_step(const ClauseSet& n) { return sup_mo_step(n, construct_model(n)); }

SupRun run_sup_mo(const Problem& problem, std::size_t cap) {
  SupRun run;
  run.clauses = problem.clauses();
  run.initial_size = run.clauses.size();
  for (;;) {
    ClauseSet current = run.state(run.inferences.size());
    run.constructions.push_back(construct_model(current));
    const auto& m = run.constructions.back();
    run.minimal_false.push_back(minimal_false_clause(current, m));
    SupStep step = sup_mo_step(current, m);
    if (auto* sat = std::get_if<SupSatisfiable>(&step)) {
      run.verdict = Verdict::Satisfiable;
      run.model = sat->model;
      return run;
    }
    if (std::holds_alternative<SupUnsatisfiable>(step)) {
      run.verdict = Verdict::Unsatisfiable;
      return run;
    }
    if (run.inferences.size() >= cap) {
      run.verdict = Verdict::CapExceeded;
      return run;
    }
    auto& inference = std::get<SupInference>(step);
    if (!run.clauses.insert(inference.conclusion).second)
      throw std::logic_error("SUP-MO derived a clause already present");
    run.inferences.push_back(std::move(inference));
  }
}

}  // namespace sclsim
