#include "sclsim/ordering.hpp"

#include <algorithm>
#include <set>

#include "sclsim/problem.hpp"
#include "sclsim/superposition.hpp"

namespace sclsim {

std::string_view to_string(OrderingKind k) {
  switch (k) {
    case OrderingKind::Kbo: return "kbo";
    case OrderingKind::Lpo: return "lpo";
    case OrderingKind::Listed: return "listed";
  }
  return "?";
}

int OrderingConfig::precedence_of(std::string_view symbol) const {
  auto it = std::find(precedence.begin(), precedence.end(), symbol);
  return it == precedence.end() ? -1 : static_cast<int>(it - precedence.begin());
}

unsigned OrderingConfig::weight_of(std::string_view symbol) const {
  auto it = weights.find(std::string(symbol));
  return it == weights.end() ? default_weight : it->second;
}

namespace {

int precedence_or_throw(const OrderingConfig& config, const std::string& sym) {
  int p = config.precedence_of(sym);
  if (p < 0) throw OrderingError("symbol '" + sym + "' missing from precedence");
  return p;
}

unsigned long kbo_weight(const Term& t, const OrderingConfig& config) {
  unsigned long w = config.weight_of(t.symbol);
  for (const auto& a : t.args) w += kbo_weight(a, config);
  return w;
}

std::strong_ordering kbo(const Term& s, const Term& t,
                         const OrderingConfig& config) {
  if (auto c = kbo_weight(s, config) <=> kbo_weight(t, config); c != 0) return c;
  int ps = precedence_or_throw(config, s.symbol);
  int pt = precedence_or_throw(config, t.symbol);
  if (auto c = ps <=> pt; c != 0) return c;
  // Same head, so same arity.
  for (std::size_t i = 0; i < s.args.size() && i < t.args.size(); ++i)
    if (auto c = kbo(s.args[i], t.args[i], config); c != 0) return c;
  return s.args.size() <=> t.args.size();
}

bool lpo_greater(const Term& s, const Term& t, const OrderingConfig& config) {
  for (const auto& si : s.args)
    if (si == t || lpo_greater(si, t, config)) return true;
  auto dominates_args = [&] {
    return std::all_of(t.args.begin(), t.args.end(), [&](const Term& tj) {
      return lpo_greater(s, tj, config);
    });
  };
  int ps = precedence_or_throw(config, s.symbol);
  int pt = precedence_or_throw(config, t.symbol);
  if (ps > pt) return dominates_args();
  if (ps < pt) return false;
  for (std::size_t i = 0; i < s.args.size() && i < t.args.size(); ++i) {
    if (s.args[i] == t.args[i]) continue;
    return lpo_greater(s.args[i], t.args[i], config) && dominates_args();
  }
  return false;
}

}  // namespace

std::strong_ordering compare_terms(const Term& s, const Term& t,
                                   const OrderingConfig& config) {
  switch (config.kind) {
    case OrderingKind::Kbo:
      return kbo(s, t, config);
    case OrderingKind::Lpo:
      if (s == t) {
        precedence_or_throw(config, s.symbol);
        return std::strong_ordering::equal;
      }
      return lpo_greater(s, t, config) ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
    case OrderingKind::Listed:
      break;
  }
  throw OrderingError("listed orderings compare atoms, not terms");
}

std::strong_ordering compare_atoms(const Atom& a, const Atom& b,
                                   const OrderingConfig& config) {
  if (config.kind == OrderingKind::Listed) {
    auto position = [&](const Atom& x) {
      auto it = std::find(config.listed_atoms.begin(),
                          config.listed_atoms.end(), x);
      if (it == config.listed_atoms.end())
        throw OrderingError("atom " + to_string(x) + " not in listed order");
      return it - config.listed_atoms.begin();
    };
    return position(a) <=> position(b);
  }
  return compare_terms(Term{a.predicate, a.args}, Term{b.predicate, b.args},
                       config);
}

const Clause& GammaMap::operator()(const Clause& c) const {
  auto it = entries_.find(c);
  return it == entries_.end() ? c : it->second;
}

void GammaMap::factorize(const Clause& c) {
  Clause f = sfac(c);
  // Identity entries are not stored so that equal maps compare equal.
  if (f == c) entries_.erase(c);
  else entries_[c] = std::move(f);
}

std::vector<std::string> validate_ordering(const RawProblem& problem) {
  std::vector<std::string> violations;
  const auto& config = problem.ordering;
  const auto universe = problem.atom_universe();

  if (config.kind == OrderingKind::Listed) {
    std::set<Atom> listed;
    for (const auto& a : config.listed_atoms)
      if (!listed.insert(a).second)
        violations.push_back("atom " + to_string(a) + " listed twice");
    std::set<Atom> occurring(universe.begin(), universe.end());
    for (const auto& a : universe)
      if (!listed.count(a))
        violations.push_back("listed order misses occurring atom " +
                             to_string(a));
    for (const auto& a : listed)
      if (!occurring.count(a))
        violations.push_back("listed atom " + to_string(a) +
                             " does not occur in any clause");
  } else {
    std::set<std::string> seen;
    for (const auto& s : config.precedence)
      if (!seen.insert(s).second)
        violations.push_back("symbol " + s + " appears twice in precedence");
    for (const auto& [sym, arity] : problem.symbols())
      if (!seen.count(sym))
        violations.push_back("precedence omits symbol " + sym);
    if (config.kind == OrderingKind::Kbo) {
      if (config.default_weight == 0)
        violations.push_back(
            "zero-weight symbol breaks ≺_B finiteness (default weight)");
      for (const auto& [sym, w] : config.weights)
        if (w == 0)
          violations.push_back("zero-weight symbol breaks ≺_B finiteness (" +
                               sym + ")");
    }
  }
  if (!violations.empty()) return violations;

  // Strict and total: after sorting, every pair must compare consistently.
  std::vector<Atom> sorted = universe;
  std::sort(sorted.begin(), sorted.end(), [&](const Atom& x, const Atom& y) {
    return compare_atoms(x, y, config) < 0;
  });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (compare_atoms(sorted[i], sorted[i], config) != 0)
      violations.push_back("order is not irreflexive on " + to_string(sorted[i]));
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (compare_atoms(sorted[i], sorted[j], config) >= 0 ||
          compare_atoms(sorted[j], sorted[i], config) <= 0)
        violations.push_back("atoms " + to_string(sorted[i]) + " and " +
                             to_string(sorted[j]) + " are not strictly ordered");
    }
  }
  return violations;
}

}  // namespace sclsim
