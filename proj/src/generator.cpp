#include "sclsim/generator.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sclsim/oracle.hpp"

namespace sclsim {

namespace {

std::string constant_name(unsigned i) {
  return i < 20 ? std::string(1, static_cast<char>('a' + i)) : "c" + std::to_string(i);
}

std::string predicate_name(unsigned i) {
  static constexpr const char* kNames[] = {"P", "Q", "R", "S", "T", "U", "V", "W"};
  return i < 8 ? kNames[i] : "P" + std::to_string(i);
}

std::size_t power(std::size_t base, unsigned exp) {
  std::size_t out = 1;
  for (unsigned n = 0; n < exp; ++n) out *= base;
  return out;
}

void all_atoms(const std::string& pred, unsigned arity, unsigned constants,
               std::vector<Term>& args, std::vector<Atom>& out) {
  if (args.size() == arity) {
    out.push_back(Atom{pred, args});
    return;
  }
  for (unsigned c = 0; c < constants; ++c) {
    args.push_back(Term{constant_name(c), {}});
    all_atoms(pred, arity, constants, args, out);
    args.pop_back();
  }
}

}  // namespace

Problem generate(const GenParams& p) {
  if (p.predicates == 0 || p.constants == 0 || p.clauses == 0 || p.max_length == 0)
    throw GenError("predicate, constant, clause and length counts must be at least 1");
  if (p.max_atoms == 0 || p.max_atoms > kOracleAtomBudget)
    throw GenError("max_atoms must be between 1 and " + std::to_string(kOracleAtomBudget));
  if (p.predicates > p.max_atoms)
    throw GenError("more predicates than the atom budget allows");

  std::mt19937_64 rng(p.seed);
  auto uniform = [&](unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
  };

  std::vector<unsigned> arity(p.predicates);
  for (auto& a : arity) a = uniform(0, p.max_arity);
  auto universe_size = [&] {
    std::size_t n = 0;
    for (unsigned a : arity) n += power(p.constants, a);
    return n;
  };
  while (universe_size() > p.max_atoms) --*std::max_element(arity.begin(), arity.end());

  std::vector<Atom> atoms;
  for (unsigned i = 0; i < p.predicates; ++i) {
    std::vector<Term> args;
    all_atoms(predicate_name(i), arity[i], p.constants, args, atoms);
  }

  RawProblem raw;
  std::set<std::multiset<std::pair<std::size_t, bool>>> seen;
  std::bernoulli_distribution coin(0.5), duplicate(0.2);
  for (unsigned attempt = 0; raw.clauses.size() < p.clauses && attempt < 50 * p.clauses;
       ++attempt) {
    unsigned len = uniform(1, p.max_length);
    std::vector<std::pair<std::size_t, bool>> lits;
    for (unsigned n = 0; n < len; ++n) {
      if (!lits.empty() && duplicate(rng))
        lits.push_back(lits[uniform(0, static_cast<unsigned>(lits.size() - 1))]);
      else
        lits.emplace_back(uniform(0, static_cast<unsigned>(atoms.size() - 1)), coin(rng));
    }
    bool tautology = std::any_of(lits.begin(), lits.end(), [&](const auto& x) {
      return std::find(lits.begin(), lits.end(), std::pair{x.first, !x.second}) != lits.end();
    });
    if (tautology && !p.allow_tautologies) continue;
    if (!seen.insert({lits.begin(), lits.end()}).second) continue;
    std::vector<RawLiteral> clause;
    for (auto [a, positive] : lits) clause.push_back(RawLiteral{positive, atoms[a]});
    raw.clauses.push_back(std::move(clause));
  }

  auto kind = p.ordering;
  if (!kind) {
    static constexpr OrderingKind kKinds[] = {OrderingKind::Kbo, OrderingKind::Lpo,
                                              OrderingKind::Listed};
    kind = kKinds[uniform(0, 2)];
  }
  raw.ordering.kind = *kind;
  if (*kind == OrderingKind::Listed) {
    raw.ordering.listed_atoms = raw.atom_universe();
    std::shuffle(raw.ordering.listed_atoms.begin(), raw.ordering.listed_atoms.end(), rng);
  } else {
    for (const auto& [sym, ar] : raw.symbols()) raw.ordering.precedence.push_back(sym);
    std::shuffle(raw.ordering.precedence.begin(), raw.ordering.precedence.end(), rng);
  }
  return Problem::from_raw(raw);
}

}  // namespace sclsim
