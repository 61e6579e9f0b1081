#include <gtest/gtest.h>

#include "sclsim/problem.hpp"
#include "sclsim/semantics.hpp"
#include "test_support.hpp"

namespace sclsim {
namespace {

constexpr const char* kIntro =
    "order: kbo\nprec: a < b < P < Q\n"
    "clause: P(a) | P(a)\nclause: -P(a) | Q(b)\nclause: -Q(b)\n";

TEST(ParseProblem, IntroProblemHasThreeClauses) {
  Problem p = parse_problem(kIntro);
  EXPECT_EQ(p.clauses().size(), 3u);
  ASSERT_EQ(p.atoms().size(), 2u);
  EXPECT_EQ(to_string(p.atoms()[0]), "P(a)");
  EXPECT_EQ(to_string(p.atoms()[1]), "Q(b)");
  EXPECT_TRUE(p.clauses().contains(p.clause("P(a) | P(a)")));
  EXPECT_EQ(p.clause("P(a) | P(a)").size(), 2u);
}

TEST(ParseProblem, SingletonUniverse) {
  Problem p = parse_problem("order: kbo\nprec: a < P\nclause: P(a)\n");
  EXPECT_EQ(p.clauses().size(), 1u);
  ASSERT_EQ(p.atoms().size(), 1u);
  EXPECT_EQ(to_string(p.atoms()[0]), "P(a)");
  EXPECT_EQ(p.beta(), 1u);
}

TEST(ParseProblem, EmptyClauseRejected) {
  try {
    parse_problem("order: kbo\nprec: a < P\nclause:\n");
    FAIL() << "expected ProblemError";
  } catch (const ProblemError& e) {
    EXPECT_EQ(e.kind(), ProblemError::Kind::EmptyClause);
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(ParseProblem, SyntaxErrorCarriesPosition) {
  try {
    parse_problem("order: kbo\nprec: a < P\nclause: P(a |\n");
    FAIL() << "expected ProblemError";
  } catch (const ProblemError& e) {
    EXPECT_EQ(e.kind(), ProblemError::Kind::Syntax);
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
  }
}

TEST(ParseProblem, UnknownOrderingKind) {
  try {
    parse_problem("order: rpo\nclause: P(a)\n");
    FAIL();
  } catch (const ProblemError& e) {
    EXPECT_EQ(e.kind(), ProblemError::Kind::UnknownOrdering);
  }
}

TEST(ParseProblem, PrecedenceMustCoverSymbols) {
  try {
    parse_problem("order: lpo\nprec: a < P\nclause: P(a) | Q(a)\n");
    FAIL();
  } catch (const ProblemError& e) {
    EXPECT_EQ(e.kind(), ProblemError::Kind::MissingPrecedence);
  }
  try {
    parse_problem("order: lpo\nclause: P(a)\n");
    FAIL();
  } catch (const ProblemError& e) {
    EXPECT_EQ(e.kind(), ProblemError::Kind::MissingPrecedence);
  }
}

TEST(ParseProblem, ArityMismatch) {
  try {
    parse_problem("order: lpo\nprec: a < P\nclause: P(a) | P(a,a)\n");
    FAIL();
  } catch (const ProblemError& e) {
    EXPECT_EQ(e.kind(), ProblemError::Kind::ArityMismatch);
  }
}

TEST(ParseProblem, DuplicateClausesMergedAndNegationSpellings) {
  Problem p = parse_problem(
      "# comment\norder: lpo\nprec: a < b < P\n"
      "clause: -P(a) | P(b)\nclause: P(b) | ~P(a)   # same clause\n");
  EXPECT_EQ(p.clauses().size(), 1u);
}

TEST(ParseProblem, ListedOrderFollowsDeclaration) {
  Problem p = parse_problem(
      "order: listed\natoms: Q(b) < P(a)\nclause: P(a) | Q(b)\n");
  EXPECT_EQ(to_string(p.atoms()[0]), "Q(b)");
  EXPECT_EQ(to_string(p.atoms()[1]), "P(a)");
}

TEST(ParseProblem, RoundTripOnGoldenFiles) {
  for (const char* name : {"intro.prob", "worked.prob", "third.prob", "third_no_c2.prob"}) {
    Problem p = testing::load_problem(name);
    EXPECT_EQ(parse_problem(print_problem(p)), p) << name;
  }
  Problem listed = parse_problem(
      "order: listed\natoms: Q(b) < P(a)\nclause: P(a) | -Q(b)\nclause: Q(b)\n");
  EXPECT_EQ(parse_problem(print_problem(listed)), listed);
  Problem weighted = parse_problem(
      "order: kbo\nprec: a < f < P\nweights: default=2 f=3\nclause: P(f(a)) | P(a)\n");
  EXPECT_EQ(parse_problem(print_problem(weighted)), weighted);
}

TEST(Clause, CanonicalFormIgnoresInputOrder) {
  Problem p = parse_problem(kIntro);
  Clause c = p.clause("Q(b) | -P(a)");
  EXPECT_EQ(c, p.clause("-P(a) | Q(b)"));
  EXPECT_EQ(Clause(std::vector<Literal>(c.begin(), c.end())), c);
  EXPECT_EQ(c.max_literal(), p.literal({true, p.atoms()[1]}));
}

TEST(EvalHerbrand, Examples) {
  Problem p = parse_problem(kIntro);
  AtomId pa = 0, qb = 1;
  EXPECT_FALSE(eval_herbrand({}, p.clause("P(a) | P(a)")));
  EXPECT_TRUE(eval_herbrand({}, p.clause("-Q(b)")));
  EXPECT_FALSE(eval_herbrand({pa, qb}, p.clause("-P(a) | -Q(b)")));
  EXPECT_FALSE(eval_herbrand({pa, qb}, Clause{}));
  Problem w = testing::load_problem("worked.prob");
  AtomId wpa = *w.find_atom(Atom{"P", {Term{"a", {}}}});
  AtomId wqa = *w.find_atom(Atom{"Q", {Term{"a", {}}}});
  EXPECT_FALSE(eval_herbrand({wpa, wqa}, w.clause("-P(a) | -Q(a)")));
}

TEST(StatusUnderAssignment, Examples) {
  Problem p = testing::load_problem("worked.prob");
  PartialAssignment a;
  a.assign(pos(*p.find_atom(Atom{"P", {Term{"a", {}}}})));
  EXPECT_EQ(status_under_assignment(a, p.clause("-P(a) | Q(a)")), TruthValue::Undefined);
  EXPECT_EQ(status_under_assignment(a, Clause{}), TruthValue::False);
  Problem intro = parse_problem(kIntro);
  PartialAssignment b;
  b.assign(pos(0));
  b.assign(pos(1));
  EXPECT_EQ(status_under_assignment(b, intro.clause("-Q(b)")), TruthValue::False);
  EXPECT_EQ(status_under_assignment(PartialAssignment{}, Clause{}), TruthValue::False);
}

TEST(PartialAssignment, SingleValuePerAtom) {
  PartialAssignment a;
  a.assign(pos(3));
  EXPECT_THROW(a.assign(neg(3)), std::logic_error);
  a.unassign(3);
  a.assign(neg(3));
  EXPECT_EQ(a.value(pos(3)), TruthValue::False);
}

TEST(AtomsOf, Examples) {
  Problem p = parse_problem(kIntro);
  EXPECT_EQ(atoms_of(p.clause("-P(a) | Q(b)")), (AtomSet{0, 1}));
  EXPECT_EQ(atoms_of(p.clauses()), (AtomSet{0, 1}));
  EXPECT_TRUE(atoms_of(Clause{}).empty());
}

// Exhaustive over all clauses of length ≤ 3 on 4 atoms and all assignments.
TEST(Semantics, HerbrandAgreesWithTotalAssignments) {
  std::vector<Literal> lits;
  for (AtomId a = 0; a < 4; ++a) {
    lits.push_back(pos(a));
    lits.push_back(neg(a));
  }
  std::vector<Clause> clauses{Clause{}};
  for (auto x : lits) {
    clauses.push_back(Clause{x});
    for (auto y : lits) {
      clauses.push_back(Clause{x, y});
      for (auto z : lits) clauses.push_back(Clause{x, y, z});
    }
  }
  for (unsigned mask = 0; mask < 16; ++mask) {
    AtomSet herbrand;
    PartialAssignment total;
    for (AtomId a = 0; a < 4; ++a) {
      bool v = mask & (1u << a);
      if (v) herbrand.insert(a);
      total.assign(v ? pos(a) : neg(a));
    }
    for (const auto& c : clauses) {
      TruthValue expected = eval_herbrand(herbrand, c) ? TruthValue::True : TruthValue::False;
      ASSERT_EQ(status_under_assignment(total, c), expected);
    }
  }
}

}  // namespace
}  // namespace sclsim
