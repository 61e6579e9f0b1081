#include "sclsim/oracle.hpp"

#include <cstdint>
#include <map>

namespace sclsim {

namespace {

/// Clauses over local bit positions, evaluated against a bitmask assignment.
struct Encoded {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
  bool satisfied(std::uint32_t a) const { return (a & pos) != 0 || (~a & neg) != 0; }
};

class Encoder {
 public:
  Encoded encode(const Clause& c) {
    Encoded e;
    for (Literal l : c) {
      std::uint32_t bit = 1u << index(l.atom);
      (l.positive ? e.pos : e.neg) |= bit;
    }
    return e;
  }
  std::size_t atom_count() const { return index_.size(); }
  AtomSet decode(std::uint32_t a) const {
    AtomSet out;
    for (const auto& [atom, i] : index_)
      if (a & (1u << i)) out.insert(atom);
    return out;
  }

 private:
  unsigned index(AtomId a) {
    auto [it, inserted] = index_.emplace(a, static_cast<unsigned>(index_.size()));
    if (index_.size() > kOracleAtomBudget)
      throw BudgetExceeded("oracle atom budget of " + std::to_string(kOracleAtomBudget) +
                           " exceeded");
    return it->second;
  }
  std::map<AtomId, unsigned> index_;
};

/// First assignment satisfying every clause in `sat` and falsifying `falsify`.
std::optional<std::uint32_t> search(const std::vector<Encoded>& sat,
                                    const std::optional<Encoded>& falsify,
                                    std::size_t atoms) {
  const std::uint64_t total = std::uint64_t{1} << atoms;
  for (std::uint64_t a64 = 0; a64 < total; ++a64) {
    auto a = static_cast<std::uint32_t>(a64);
    if (falsify && falsify->satisfied(a)) continue;
    bool ok = true;
    for (const auto& e : sat)
      if (!e.satisfied(a)) {
        ok = false;
        break;
      }
    if (ok) return a;
  }
  return std::nullopt;
}

}  // namespace

std::optional<AtomSet> brute_force_sat(const std::vector<Clause>& n) {
  Encoder enc;
  std::vector<Encoded> clauses;
  for (const auto& c : n) clauses.push_back(enc.encode(c));
  auto a = search(clauses, std::nullopt, enc.atom_count());
  if (!a) return std::nullopt;
  return enc.decode(*a);
}

std::optional<AtomSet> brute_force_sat(const ClauseSet& n) {
  return brute_force_sat(std::vector<Clause>(n.begin(), n.end()));
}

bool entails(const std::vector<Clause>& n, const Clause& c) {
  Encoder enc;
  Encoded target = enc.encode(c);
  std::vector<Encoded> clauses;
  for (const auto& d : n) clauses.push_back(enc.encode(d));
  return !search(clauses, target, enc.atom_count());
}

bool entails(const ClauseSet& n, const Clause& c) {
  return entails(std::vector<Clause>(n.begin(), n.end()), c);
}

bool entails(const Clause& premise, const Clause& c) {
  return entails(std::vector<Clause>{premise}, c);
}

bool is_redundant(const Clause& c, const std::vector<Clause>& n) {
  std::vector<Clause> below;
  for (const auto& d : n)
    if (d <= c) below.push_back(d);
  return entails(below, c);
}

bool is_redundant(const Clause& c, const ClauseSet& n) {
  return is_redundant(c, std::vector<Clause>(n.begin(), n.end()));
}

}  // namespace sclsim
