#include <gtest/gtest.h>

#include <algorithm>

#include "sclsim/simulation.hpp"
#include "test_support.hpp"

namespace sclsim {
namespace {

std::vector<SequenceKind> kinds(const SclSupRun& run) {
  std::vector<SequenceKind> out;
  for (const auto& s : run.sequences) out.push_back(s.kind);
  return out;
}

std::vector<Rule> rules(const AtomicSequence& seq) {
  std::vector<Rule> out;
  for (const auto& s : seq.steps) out.push_back(s.rule);
  return out;
}

class SimIntro : public ::testing::Test {
 protected:
  Problem p = testing::load_problem("intro.prob");
  Clause C1 = p.clause("P(a) | P(a)");
  Clause C2 = p.clause("-P(a) | Q(b)");
  Clause C3 = p.clause("-Q(b)");
  Clause C5 = p.clause("-P(a)");
};

TEST_F(SimIntro, InitialStateAndAids) {
  AnnotatedState s = initial_state(p);
  EXPECT_TRUE(s.scl.trail.empty());
  EXPECT_EQ(s.ann.index, 0u);
  EXPECT_EQ(s.ann.aid, Clause{});
  // sfac(C1) = P(a) is not in N^0, so γ0 is the identity.
  EXPECT_TRUE(s.ann.gamma.entries().empty());
  EXPECT_EQ(next_decision_aid(s), C1);
  s.ann.aid = C1;
  EXPECT_EQ(next_decision_aid(s), C2);
  s.ann.aid = C3;
  EXPECT_FALSE(next_decision_aid(s));
}

TEST_F(SimIntro, FirstPart1DecidesAndAbsorbsFactoring) {
  AnnotatedState s = initial_state(p);
  ASSERT_TRUE(part1_applicable(s));
  AtomicSequence seq = atomic_part1(s);
  EXPECT_EQ(seq.kind, SequenceKind::P1_2a);
  EXPECT_EQ(rules(seq), (std::vector<Rule>{Rule::Decide}));
  EXPECT_EQ(seq.after.scl.trail.top(), (TrailEntry{pos(0), Decision{1}}));
  EXPECT_EQ(seq.after.ann.index, 1u);
  EXPECT_EQ(seq.after.ann.aid, C1);
  EXPECT_EQ(seq.after.ann.gamma(C1), p.clause("P(a)"));
}

TEST_F(SimIntro, Run) {
  SclSupRun run = run_scl_sup(p);
  EXPECT_EQ(run.verdict, Verdict::Unsatisfiable);
  EXPECT_EQ(run.learned, (std::vector<Clause>{C5, Clause{}}));
  EXPECT_EQ(kinds(run), (std::vector<SequenceKind>{SequenceKind::P1_2a, SequenceKind::P1_2b,
                                                   SequenceKind::P2_4a, SequenceKind::P2_2a}));
  // First conflict: trail [P(a)¹, Q(b)^{¬P(a)∨Q(b)}] against ¬Q(b).
  const auto& first = run.sequences[1].after.scl;
  ASSERT_EQ(first.trail.size(), 2u);
  EXPECT_EQ(first.trail[0], (TrailEntry{pos(0), Decision{1}}));
  EXPECT_EQ(first.trail[1], (TrailEntry{pos(1), Propagation{C2}}));
  EXPECT_EQ(first.conflict_clause(), C3);
  EXPECT_EQ(run.final_state().ann.index, 3u);
  EXPECT_TRUE(run.final_state().scl.u.contains(C5));
  EXPECT_FALSE(run.final_state().scl.u.contains(Clause{}));
}

class SimWorked : public ::testing::Test {
 protected:
  Problem p = testing::load_problem("worked.prob");
  Clause C1 = p.clause("P(a)");
  Clause C2 = p.clause("-P(b) | Q(a)");
  Clause C3 = p.clause("-P(a) | Q(a) | Q(a)");
  Clause C5 = p.clause("-P(a) | -Q(a)");
  Clause C6 = p.clause("-P(a) | Q(a)");
  Clause C7 = p.clause("-P(a) | -P(a)");
};

TEST_F(SimWorked, PendingNegativeDecisions) {
  AnnotatedState s = initial_state(p);
  EXPECT_TRUE(pending_negative_decisions(s, pos(0)).empty());
  s.scl = decide(s.scl, pos(0));
  s.ann.aid = C1;
  EXPECT_EQ(pending_negative_decisions(s, pos(2)), (std::vector<Literal>{neg(1)}));
  s.scl = decide(s.scl, neg(1));
  EXPECT_TRUE(pending_negative_decisions(s, pos(2)).empty());
}

TEST_F(SimWorked, Part1Sequences) {
  SclSupRun run = run_scl_sup(p);
  ASSERT_GE(run.sequences.size(), 3u);
  const auto& s0 = run.sequences[0];
  EXPECT_EQ(s0.kind, SequenceKind::P1_2a);
  EXPECT_EQ(s0.after.ann.aid, C1);

  const auto& s1 = run.sequences[1];
  EXPECT_EQ(s1.kind, SequenceKind::P1_2c);
  EXPECT_EQ(s1.after.ann.aid, C2);
  EXPECT_EQ(rules(s1), (std::vector<Rule>{Rule::Decide}));
  EXPECT_EQ(s1.after.scl.trail.top().literal, neg(1));

  const auto& s2 = run.sequences[2];
  EXPECT_EQ(s2.kind, SequenceKind::P1_2b);
  EXPECT_EQ(rules(s2), (std::vector<Rule>{Rule::Propagate, Rule::Conflict}));
  EXPECT_EQ(s2.after.scl.trail.top(), (TrailEntry{pos(2), Propagation{C6}}));
  EXPECT_EQ(s2.after.scl.conflict_clause(), C5);
  EXPECT_EQ(s2.after.ann.index, 1u);
  EXPECT_EQ(s2.after.ann.aid, C3);
  EXPECT_EQ(s2.after.ann.gamma(C3), C6);
}

TEST_F(SimWorked, Part2Sequences) {
  SclSupRun run = run_scl_sup(p);
  ASSERT_EQ(run.sequences.size(), 5u);
  const auto& a = run.sequences[3];
  EXPECT_EQ(a.kind, SequenceKind::P2_4a);
  EXPECT_EQ(rules(a), (std::vector<Rule>{Rule::Resolve, Rule::Skip, Rule::Skip, Rule::Backtrack,
                                         Rule::Propagate, Rule::Conflict}));
  EXPECT_EQ(a.learned, C7);
  EXPECT_EQ(a.after.scl.trail.size(), 1u);
  EXPECT_EQ(a.after.scl.trail.top(), (TrailEntry{pos(0), Propagation{C1}}));
  EXPECT_EQ(a.after.scl.conflict_clause(), C7);
  EXPECT_EQ(a.after.ann.index, 2u);
  EXPECT_EQ(a.after.ann.aid, C1);

  const auto& b = run.sequences[4];
  EXPECT_EQ(b.kind, SequenceKind::P2_2a);
  EXPECT_EQ(rules(b), (std::vector<Rule>{Rule::Resolve, Rule::Resolve, Rule::Skip}));
  EXPECT_EQ(b.learned, Clause{});
  EXPECT_TRUE(b.after.scl.is_bottom());
  EXPECT_TRUE(b.after.scl.trail.empty());
  EXPECT_EQ(b.after.scl.k, 0u);
  EXPECT_EQ(b.after.ann.index, 4u);
  EXPECT_EQ(b.after.ann.aid, Clause{});

  EXPECT_EQ(run.learned, (std::vector<Clause>{C7, Clause{}}));
}

// ([P(a)¹, ¬P(b)², Q(a)^{C3}]; N; ∅; β; 2; C4) annotated (0, C3, id).
AnnotatedState third_state(const Problem& p) {
  AnnotatedState s{SclState::initial(p.clauses(), p.beta()), {}};
  s.scl = decide(s.scl, pos(0));
  s.scl = decide(s.scl, neg(1));
  s.scl = propagate(s.scl, p.clause("-P(a) | Q(a)"), pos(2));
  s.scl = conflict(s.scl, p.clause("P(b) | -Q(a)"));
  s.ann.aid = p.clause("-P(a) | Q(a)");
  return s;
}

TEST(ThirdExample, WithNegativeUnitEndsInConflict) {
  Problem p = testing::load_problem("third.prob");
  AnnotatedState s = third_state(p);
  ASSERT_FALSE(part2_precondition_failure(s)) << *part2_precondition_failure(s);
  AtomicSequence seq = atomic_part2(s);
  Clause C5 = p.clause("-P(a) | P(b)");
  EXPECT_EQ(seq.kind, SequenceKind::P2_4c);
  EXPECT_EQ(seq.learned, C5);
  const SclState& t = seq.after.scl;
  ASSERT_EQ(t.trail.size(), 2u);
  EXPECT_EQ(t.trail[0], (TrailEntry{pos(0), Decision{1}}));
  EXPECT_EQ(t.trail[1], (TrailEntry{pos(1), Propagation{sfac(C5)}}));
  EXPECT_EQ(t.u, (ClauseSet{C5}));
  EXPECT_EQ(t.k, 1u);
  EXPECT_EQ(t.conflict_clause(), p.clause("-P(b)"));
  EXPECT_EQ(seq.after.ann.index, 1u);
  EXPECT_EQ(seq.after.ann.aid, C5);
}

TEST(ThirdExample, WithoutNegativeUnitDecides) {
  Problem p = testing::load_problem("third_no_c2.prob");
  AnnotatedState s = third_state(p);
  AtomicSequence seq = atomic_part2(s);
  Clause C5 = p.clause("-P(a) | P(b)");
  EXPECT_EQ(seq.kind, SequenceKind::P2_4b);
  EXPECT_EQ(seq.learned, C5);
  const SclState& t = seq.after.scl;
  ASSERT_EQ(t.trail.size(), 2u);
  EXPECT_EQ(t.trail[1], (TrailEntry{pos(1), Decision{2}}));
  EXPECT_EQ(t.k, 2u);
  EXPECT_TRUE(t.is_top());
  EXPECT_EQ(t.u, (ClauseSet{C5}));
  EXPECT_EQ(seq.after.ann.aid, C5);
}

TEST(ThirdExample, FullRuns) {
  SclSupRun with = run_scl_sup(testing::load_problem("third.prob"));
  EXPECT_EQ(with.verdict, Verdict::Unsatisfiable);
  auto k1 = kinds(with);
  EXPECT_NE(std::find(k1.begin(), k1.end(), SequenceKind::P2_4c), k1.end());

  SclSupRun without = run_scl_sup(testing::load_problem("third_no_c2.prob"));
  EXPECT_EQ(without.verdict, Verdict::Satisfiable);
  auto k2 = kinds(without);
  EXPECT_NE(std::find(k2.begin(), k2.end(), SequenceKind::P2_4b), k2.end());
}

TEST(Part2, PreconditionsNamed) {
  Problem p = testing::load_problem("third.prob");
  AnnotatedState s = initial_state(p);
  EXPECT_EQ(part2_precondition_failure(s), "status is not a conflict clause");
  AnnotatedState t = third_state(p);
  t.ann.aid = p.clause("P(a)");
  EXPECT_EQ(part2_precondition_failure(t), "topmost justification is not sfac of the decision aid");
  EXPECT_THROW(atomic_part1(t), SimulationError);
}

TEST(Invariants, InitialStatesHold) {
  for (const char* name : {"intro.prob", "worked.prob", "third.prob", "third_no_c2.prob"}) {
    Problem p = testing::load_problem(name);
    SupRun sup = run_sup_mo(p);
    InvariantReport r = check_invariants(p, initial_state(p), sup);
    EXPECT_TRUE(r.all()) << name << ": " << r.failures().front();
  }
}

TEST(Invariants, HoldAfterEverySequence) {
  for (const char* name : {"intro.prob", "worked.prob", "third.prob", "third_no_c2.prob"}) {
    Problem p = testing::load_problem(name);
    SupRun sup = run_sup_mo(p);
    SclSupRun scl = run_scl_sup(p);
    for (const auto& seq : scl.sequences) {
      InvariantReport r = check_invariants(p, seq.after, sup);
      EXPECT_TRUE(r.all()) << name << " " << to_string(seq.kind) << ": " << r.failures().front();
    }
  }
}

TEST(Invariants, DeletedTrailLiteralIsDetected) {
  Problem p = testing::load_problem("worked.prob");
  SupRun sup = run_sup_mo(p);
  SclSupRun scl = run_scl_sup(p);
  // After P1-2c the trail is [P(a)¹, ¬P(b)²]; drop ¬P(b).
  AnnotatedState s = scl.sequences[1].after;
  ASSERT_TRUE(check_invariants(p, s, sup).all());
  s.scl.trail.pop();
  s.scl.k = 1;
  InvariantReport r = check_invariants(p, s, sup);
  EXPECT_FALSE(r.all());
  EXPECT_TRUE(!r.holds[4] || !r.holds[5]) << r.failures().front();
  std::size_t which = r.holds[4] ? 5 : 4;
  EXPECT_NE(r.witness[which].find("P(b)"), std::string::npos) << r.witness[which];
}

TEST(Invariants, IndexOutOfRangeThrows) {
  Problem p = testing::load_problem("intro.prob");
  SupRun sup = run_sup_mo(p);
  AnnotatedState s = initial_state(p);
  s.ann.index = 99;
  EXPECT_THROW(check_invariants(p, s, sup), SimulationError);
}

TEST(Progress, Order) {
  Annotation a{1, Clause{pos(0)}, {}};
  Annotation b{2, Clause{}, {}};
  EXPECT_TRUE(makes_progress(a, b));
  EXPECT_FALSE(makes_progress(b, a));
  Annotation c{1, Clause{pos(1)}, {}};
  EXPECT_TRUE(makes_progress(a, c));
  EXPECT_FALSE(makes_progress(c, a));
  EXPECT_FALSE(makes_progress(a, a));
}

TEST(Lockstep, GoldenProblemsVerify) {
  struct Expect {
    const char* name;
    Verdict verdict;
    std::size_t sup_inferences;
    std::size_t learned;
  };
  for (auto e : {Expect{"intro.prob", Verdict::Unsatisfiable, 3, 2},
                 Expect{"worked.prob", Verdict::Unsatisfiable, 4, 2},
                 Expect{"third.prob", Verdict::Unsatisfiable, 0, 0},
                 Expect{"third_no_c2.prob", Verdict::Satisfiable, 0, 0}}) {
    Problem p = testing::load_problem(e.name);
    Lockstep ls = lockstep(p);
    auto failures = ls.report.failures();
    EXPECT_TRUE(failures.empty()) << e.name << ": " << failures.front();
    EXPECT_EQ(ls.report.sup_verdict, e.verdict) << e.name;
    EXPECT_EQ(ls.report.scl_verdict, e.verdict) << e.name;
    EXPECT_TRUE(ls.report.regularity.empty());
    if (e.sup_inferences) {
      EXPECT_EQ(ls.sup.inferences.size(), e.sup_inferences) << e.name;
      ASSERT_TRUE(ls.scl);
      EXPECT_EQ(ls.scl->learned.size(), e.learned) << e.name;
    }
  }
}

TEST(Lockstep, SatisfiableUnit) {
  Problem p = parse_problem("order: kbo\nprec: a < P\nclause: P(a)\n");
  SclSupRun run = run_scl_sup(p);
  EXPECT_EQ(run.verdict, Verdict::Satisfiable);
  ASSERT_EQ(run.final_state().scl.trail.size(), 1u);
  EXPECT_EQ(run.final_state().scl.trail[0], (TrailEntry{pos(0), Decision{1}}));
  EXPECT_TRUE(run.learned.empty());
  EXPECT_TRUE(lockstep_verify(p).clean());
}

}  // namespace
}  // namespace sclsim
