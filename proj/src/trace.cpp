#include "sclsim/trace.hpp"

#include <stdexcept>

#include "json.hpp"

namespace sclsim {

using json = nlohmann::ordered_json;

namespace {

json literals(const Problem& p, const Clause& c) { return p.literal_strings(c); }

json atoms(const Problem& p, const AtomSet& set) {
  json out = json::array();
  for (AtomId a : set.elements()) out.push_back(p.str(pos(a)));
  return out;
}

json ordering_json(const OrderingConfig& o) {
  json out;
  out["kind"] = std::string(to_string(o.kind));
  out["precedence"] = o.precedence;
  if (o.kind == OrderingKind::Kbo) {
    out["default_weight"] = o.default_weight;
    out["weights"] = o.weights;
  }
  if (o.kind == OrderingKind::Listed) {
    json list = json::array();
    for (const auto& a : o.listed_atoms) list.push_back(to_string(a));
    out["atoms"] = list;
  }
  return out;
}

json params_json(const GenParams& g) {
  json out;
  out["predicates"] = g.predicates;
  out["constants"] = g.constants;
  out["max_arity"] = g.max_arity;
  out["clauses"] = g.clauses;
  out["max_length"] = g.max_length;
  out["seed"] = g.seed;
  out["max_atoms"] = g.max_atoms;
  out["allow_tautologies"] = g.allow_tautologies;
  out["ordering"] = g.ordering ? json(std::string(to_string(*g.ordering))) : json(nullptr);
  return out;
}

std::string status_string(const Problem& p, const SclState& s) {
  if (s.is_top()) return "⊤";
  if (s.is_bottom()) return "⊥";
  return p.str(s.conflict_clause());
}

json trail_json(const Problem& p, const Trail& t) {
  json out = json::array();
  for (const auto& e : t.entries()) {
    json entry;
    entry["lit"] = p.str(e.literal);
    if (const auto* d = std::get_if<Decision>(&e.justification))
      entry["just"] = d->level;
    else
      entry["just"] = p.str(std::get<Propagation>(e.justification).clause);
    out.push_back(entry);
  }
  return out;
}

json annotation_json(const Problem& p, const Annotation& a) {
  json gamma = json::array();
  for (const auto& [from, to] : a.gamma.entries())
    gamma.push_back(json{{"from", p.str(from)}, {"to", p.str(to)}});
  json out;
  out["i"] = a.index;
  out["aid"] = p.str(a.aid);
  out["gamma"] = gamma;
  return out;
}

json invariants_json(const InvariantReport& r) {
  json out;
  for (std::size_t n = 0; n < kInvariantNames.size(); ++n)
    out[std::string(kInvariantNames[n])] = r.holds[n];
  return out;
}

}  // namespace

TraceSummary summarize(const TraceInput& in) {
  TraceSummary s;
  if (in.sup) {
    s.sup = std::string(to_string(in.sup->verdict));
    s.sup_inferences = in.sup->inferences.size();
  }
  if (in.scl) {
    s.scl = std::string(to_string(in.scl->verdict));
    s.scl_sequences = in.scl->sequences.size();
    for (const auto& c : in.scl->learned) s.learned.push_back(in.problem->str(c));
  }
  if (in.report) s.verified = in.report->clean();
  return s;
}

std::string emit_trace(const TraceInput& in, int indent) {
  if (!in.problem) throw std::invalid_argument("trace needs a problem");
  const Problem& p = *in.problem;
  json doc;

  json problem;
  problem["text"] = print_problem(p);
  json atom_list = json::array();
  for (const auto& a : p.atoms()) atom_list.push_back(to_string(a));
  problem["atoms"] = atom_list;
  json clauses = json::array();
  // Clause ids are shared with the SUP-MO events; N^0 occupies the first ids.
  const ClauseSet& all = in.sup ? in.sup->clauses : p.clauses();
  for (ClauseId id = 0; id < p.clauses().size(); ++id)
    clauses.push_back(json{{"id", id}, {"literals", literals(p, all[id])}});
  problem["clauses"] = clauses;
  if (in.params) problem["generator"] = params_json(*in.params);
  doc["problem"] = problem;
  doc["ordering"] = ordering_json(p.ordering());

  json sup_events = json::array();
  if (in.sup) {
    const SupRun& run = *in.sup;
    for (std::size_t m = 0; m < run.inferences.size(); ++m) {
      const auto& inf = run.inferences[m];
      json ev;
      ev["step"] = m + 1;
      ev["rule"] = std::string(to_string(inf.rule));
      ev["premises"] = inf.premises;
      ev["conclusion"] = json{{"id", run.conclusion_id(m)},
                              {"literals", literals(p, inf.conclusion)}};
      ev["minimal_false"] =
          run.minimal_false[m] ? json(*run.minimal_false[m]) : json(nullptr);
      ev["model"] = atoms(p, run.constructions[m].model());
      sup_events.push_back(ev);
    }
  }
  doc["sup_events"] = sup_events;

  json scl_events = json::array();
  if (in.scl) {
    for (const auto& seq : in.scl->sequences) {
      json ev;
      ev["seq_kind"] = std::string(to_string(seq.kind));
      json rules = json::array();
      for (const auto& step : seq.steps) {
        json r;
        r["rule"] = std::string(to_string(step.rule));
        if (step.literal) r["literal"] = p.str(*step.literal);
        if (step.clause) r["clause"] = p.str(*step.clause);
        rules.push_back(r);
      }
      ev["rules"] = rules;
      ev["trail"] = trail_json(p, seq.after.scl.trail);
      ev["status"] = status_string(p, seq.after.scl);
      ev["k"] = seq.after.scl.k;
      ev["learned"] = seq.learned ? json(p.str(*seq.learned)) : json(nullptr);
      ev["annotation"] = annotation_json(p, seq.after.ann);
      scl_events.push_back(ev);
    }
  }
  doc["scl_events"] = scl_events;

  json verify_events = json::array();
  if (in.report) {
    json init;
    init["after_seq"] = -1;
    init["invariants"] = invariants_json(in.report->initial);
    init["progress"] = true;
    verify_events.push_back(init);
    for (std::size_t n = 0; n < in.report->sequences.size(); ++n) {
      const auto& c = in.report->sequences[n];
      json ev;
      ev["after_seq"] = n;
      ev["invariants"] = invariants_json(c.invariants);
      ev["progress"] = c.progress;
      verify_events.push_back(ev);
    }
  }
  doc["verify_events"] = verify_events;

  TraceSummary s = summarize(in);
  json outcome;
  outcome["sup"] = s.sup;
  outcome["scl"] = s.scl;
  outcome["sup_inferences"] = s.sup_inferences;
  outcome["scl_sequences"] = s.scl_sequences;
  outcome["learned"] = s.learned;
  outcome["verified"] = s.verified ? json(*s.verified) : json(nullptr);
  if (in.sup && in.sup->verdict == Verdict::Satisfiable)
    outcome["model"] = atoms(p, in.sup->model);
  if (in.report) outcome["failures"] = in.report->failures();
  doc["outcome"] = outcome;
  return doc.dump(indent);
}

TraceSummary parse_trace_summary(const std::string& text) {
  try {
    json doc = json::parse(text);
    const json& o = doc.at("outcome");
    TraceSummary s;
    s.sup = o.at("sup").get<std::string>();
    s.scl = o.at("scl").get<std::string>();
    s.sup_inferences = o.at("sup_inferences").get<std::size_t>();
    s.scl_sequences = o.at("scl_sequences").get<std::size_t>();
    s.learned = o.at("learned").get<std::vector<std::string>>();
    if (!o.at("verified").is_null()) s.verified = o.at("verified").get<bool>();
    return s;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed trace: ") + e.what());
  }
}

}  // namespace sclsim
