// Acceptance checks: exact reproduction of the three worked examples and a
// fuzzing campaign for the invariant, redundancy, verdict and coincidence
// properties. Prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sclsim/campaign.hpp"
#include "sclsim/oracle.hpp"
#include "test_support.hpp"

using namespace sclsim;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (pass) detail = what;
    pass = false;
  }
};

std::vector<Rule> rules(const AtomicSequence& seq) {
  std::vector<Rule> out;
  for (const auto& s : seq.steps) out.push_back(s.rule);
  return out;
}

Outcome intro_example() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  Problem p = testing::load_problem("intro.prob");
  Clause C1 = p.clause("P(a) | P(a)"), C2 = p.clause("-P(a) | Q(b)"), C3 = p.clause("-Q(b)");
  Clause C4 = p.clause("P(a)"), C5 = p.clause("-P(a)");
  AtomId Pa = 0, Qb = 1;

  SupRun sup = run_sup_mo(p);
  o.require(sup.verdict == Verdict::Unsatisfiable, "SUP-MO verdict");
  o.require(sup.inferences.size() == 3, "SUP-MO inference count");
  if (sup.inferences.size() == 3) {
    const auto& i0 = sup.inferences[0];
    const auto& i1 = sup.inferences[1];
    const auto& i2 = sup.inferences[2];
    o.require(i0.rule == SupRule::Factoring && i0.conclusion == C4 &&
                  sup.clauses[i0.premises.at(0)] == C1,
              "step 1 is Factoring of C1 to P(a)");
    o.require(i1.rule == SupRule::SuperpositionLeft && i1.conclusion == C5 &&
                  i1.premises.size() == 2 && sup.clauses[i1.premises[0]] == C3 &&
                  sup.clauses[i1.premises[1]] == C2,
              "step 2 is Superposition Left (C3, C2) giving -P(a)");
    o.require(i2.rule == SupRule::SuperpositionLeft && i2.conclusion.empty(),
              "step 3 is Superposition Left giving ⊥");
    o.require(sup.constructions[0].model().empty(), "model before step 1 is empty");
    o.require(sup.constructions[1].model() == AtomSet{Pa, Qb} &&
                  sup.constructions[2].model() == AtomSet{Pa, Qb},
              "model before steps 2 and 3 is {P(a), Q(b)}");
  }

  SclSupRun scl = run_scl_sup(p);
  o.require(scl.learned == std::vector<Clause>{C5, Clause{}}, "SCL-SUP learns [-P(a), ⊥]");
  bool saw_conflict = false;
  for (const auto& step : scl.rule_applications()) {
    if (step.rule != Rule::Conflict) continue;
    const Trail& t = step.before.trail;
    o.require(t.size() == 2 && t[0] == TrailEntry{pos(Pa), Decision{1}} &&
                  t[1] == TrailEntry{pos(Qb), Propagation{C2}} && step.after.conflict_clause() == C3,
              "first conflict is -Q(b) on [P(a)^1, Q(b)^{-P(a)|Q(b)}]");
    saw_conflict = true;
    break;
  }
  o.require(saw_conflict, "SCL-SUP raises a conflict");
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 1.0, "runs in under 1 s");
  if (o.pass) o.detail = "3 inferences, learned [-P(a), ⊥]";
  return o;
}

Outcome worked_example() {
  Outcome o;
  Problem p = testing::load_problem("worked.prob");
  Clause C6 = p.clause("-P(a) | Q(a)"), C7 = p.clause("-P(a) | -P(a)"), C8 = p.clause("-P(a)");

  SupRun sup = run_sup_mo(p);
  std::vector<Clause> derived;
  for (const auto& inf : sup.inferences) derived.push_back(inf.conclusion);
  o.require(derived == std::vector<Clause>{C6, C7, C8, Clause{}},
            "SUP-MO derives [-P(a)|Q(a), -P(a)|-P(a), -P(a), ⊥]");

  SclSupRun scl = run_scl_sup(p);
  o.require(scl.learned == std::vector<Clause>{C7, Clause{}}, "SCL-SUP learns [-P(a)|-P(a), ⊥]");
  std::vector<const AtomicSequence*> part2;
  for (const auto& seq : scl.sequences)
    if (seq.kind == SequenceKind::P2_2a || seq.kind == SequenceKind::P2_4a ||
        seq.kind == SequenceKind::P2_4b || seq.kind == SequenceKind::P2_4c)
      part2.push_back(&seq);
  o.require(part2.size() == 2, "exactly two Part 2 sequences");
  if (part2.size() == 2) {
    o.require(part2[0]->learned == C7, "first Part 2 sequence learns -P(a)|-P(a)");
    o.require(part2[1]->before.ann.index == 2 && part2[1]->after.ann.index == 4,
              "second Part 2 sequence jumps from index 2 to 4");
    o.require(rules(*part2[1]) == std::vector<Rule>{Rule::Resolve, Rule::Resolve, Rule::Skip},
              "second Part 2 sequence resolves twice then skips");
  }
  if (o.pass) o.detail = "learned [-P(a)|-P(a), ⊥], index 2 -> 4";
  return o;
}

// ([P(a)¹, ¬P(b)², Q(a)^{sfac(C3)}]; N; ∅; β; 2; C4) annotated (0, C3, id).
AnnotatedState third_state(const Problem& p) {
  AnnotatedState s{SclState::initial(p.clauses(), p.beta()), {}};
  s.scl = decide(s.scl, pos(0));
  s.scl = decide(s.scl, neg(1));
  s.scl = propagate(s.scl, p.clause("-P(a) | Q(a)"), pos(2));
  s.scl = conflict(s.scl, p.clause("P(b) | -Q(a)"));
  s.ann.aid = p.clause("-P(a) | Q(a)");
  return s;
}

Outcome third_example() {
  Outcome o;
  {
    Problem p = testing::load_problem("third.prob");
    Clause C5 = p.clause("-P(a) | P(b)");
    AtomicSequence seq = atomic_part2(third_state(p));
    const SclState& t = seq.after.scl;
    o.require(seq.kind == SequenceKind::P2_4c, "with -P(b): propagating variant");
    o.require(t.trail.size() == 2 && t.trail[0] == TrailEntry{pos(0), Decision{1}} &&
                  t.trail[1] == TrailEntry{pos(1), Propagation{sfac(C5)}},
              "with -P(b): trail [P(a)^1, P(b)^{sfac(C5)}]");
    o.require(t.u == ClauseSet{C5}, "with -P(b): U = {-P(a)|P(b)}");
    o.require(t.is_conflict() && t.conflict_clause() == p.clause("-P(b)") && t.k == 1,
              "with -P(b): conflict -P(b) at k = 1");
    o.require(seq.after.ann.index == 1 && seq.after.ann.aid == C5,
              "with -P(b): annotation (1, C5)");
  }
  {
    Problem p = testing::load_problem("third_no_c2.prob");
    Clause C5 = p.clause("-P(a) | P(b)");
    AtomicSequence seq = atomic_part2(third_state(p));
    const SclState& t = seq.after.scl;
    o.require(seq.kind == SequenceKind::P2_4b, "without -P(b): deciding variant");
    o.require(t.trail.size() == 2 && t.trail[0] == TrailEntry{pos(0), Decision{1}} &&
                  t.trail[1] == TrailEntry{pos(1), Decision{2}},
              "without -P(b): trail [P(a)^1, P(b)^2]");
    o.require(t.u == ClauseSet{C5}, "without -P(b): U = {-P(a)|P(b)}");
    o.require(t.is_top() && t.k == 2, "without -P(b): no conflict, k = 2");
    o.require(seq.after.ann.index == 1 && seq.after.ann.aid == C5,
              "without -P(b): annotation (1, C5)");
  }
  if (o.pass) o.detail = "both variants match";
  return o;
}

std::string counts(const CampaignSummary& s, std::initializer_list<Check> checks) {
  std::ostringstream out;
  bool first = true;
  for (Check c : checks) {
    out << (first ? "" : ", ") << to_string(c) << ' ' << s.failures[static_cast<std::size_t>(c)];
    first = false;
  }
  return out.str();
}

bool none(const CampaignSummary& s, std::initializer_list<Check> checks) {
  for (Check c : checks)
    if (s.failures[static_cast<std::size_t>(c)] != 0) return false;
  return true;
}

Outcome invariant_suite(const CampaignSummary& s) {
  Outcome o;
  for (const char* name : {"intro.prob", "worked.prob", "third.prob", "third_no_c2.prob"}) {
    auto failures = lockstep_verify(testing::load_problem(name)).failures();
    o.require(failures.empty(), std::string(name) + ": " +
                                    (failures.empty() ? std::string() : failures.front()));
  }
  std::initializer_list<Check> checks{Check::Invariants, Check::Progress, Check::FinalState,
                                      Check::Regularity, Check::SimulationError};
  o.require(s.runs >= 1000, "campaign has at least 1000 runs");
  o.require(s.max_atoms_seen <= 8 && s.max_clauses_seen <= 10, "instances within bounds");
  o.require(none(s, checks), counts(s, checks));
  o.require(s.seconds < 60.0, "campaign under 60 s on one worker");
  if (o.pass) {
    std::ostringstream d;
    d << "golden examples clean; " << s.runs << " runs, 0 failures, " << s.seconds << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome campaign_check(const CampaignSummary& s, std::initializer_list<Check> checks) {
  Outcome o;
  o.require(s.runs >= 1000, "campaign has at least 1000 runs");
  o.require(none(s, checks), counts(s, checks));
  if (o.pass) o.detail = std::to_string(s.runs) + " runs, " + counts(s, checks);
  return o;
}

}  // namespace

int main() {
  CampaignParams params;
  params.runs = 1000;
  params.seed = 1;
  params.workers = 1;
  params.max_atoms = 8;
  params.max_clauses = 10;
  params.max_length = 4;

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
  CampaignSummary summary;
  bool campaign_done = false;
  auto campaign = [&]() -> const CampaignSummary& {
    if (!campaign_done) summary = run_campaign(params);
    campaign_done = true;
    return summary;
  };

  criteria.emplace_back("1 intro example", intro_example);
  criteria.emplace_back("2 worked example", worked_example);
  criteria.emplace_back("3 third example", third_example);
  criteria.emplace_back("4 invariant suite", [&] { return invariant_suite(campaign()); });
  criteria.emplace_back("5 non-redundancy", [&] {
    return campaign_check(campaign(), {Check::SupRedundancy, Check::SclRedundancy});
  });
  criteria.emplace_back("6 verdict agreement",
                        [&] { return campaign_check(campaign(), {Check::Verdict, Check::Model}); });
  criteria.emplace_back("7 coincidence",
                        [&] { return campaign_check(campaign(), {Check::Coincidence}); });

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    failed += !o.pass;
  }
  if (!summary.examples.empty())
    for (const auto& e : summary.examples) std::printf("  %s\n", e.c_str());
  return failed == 0 ? 0 : 1;
}
