#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sclsim/syntax.hpp"

namespace sclsim {

enum class OrderingKind { Kbo, Lpo, Listed };

std::string_view to_string(OrderingKind k);

struct OrderingConfig {
  OrderingKind kind = OrderingKind::Kbo;
  /// Ascending; required for KBO and LPO.
  std::vector<std::string> precedence;
  /// KBO only; symbols not listed get `default_weight`.
  unsigned default_weight = 1;
  std::map<std::string, unsigned> weights;
  /// Listed only; ascending.
  std::vector<Atom> listed_atoms;

  /// Position in the precedence, or -1.
  int precedence_of(std::string_view symbol) const;
  unsigned weight_of(std::string_view symbol) const;

  friend bool operator==(const OrderingConfig&, const OrderingConfig&) = default;
};

class OrderingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ground KBO or LPO on terms. Throws OrderingError for a Listed config or for
/// symbols missing from the precedence.
std::strong_ordering compare_terms(const Term& s, const Term& t,
                                   const OrderingConfig& config);

/// KBO/LPO with the predicate as root symbol, or listed position.
std::strong_ordering compare_atoms(const Atom& a, const Atom& b,
                                   const OrderingConfig& config);

/// Interned literals and clauses carry the active order in their atom ids, so
/// these two need no config.
inline std::strong_ordering compare_literals(Literal a, Literal b) {
  return a <=> b;
}
inline std::strong_ordering compare_clauses(const Clause& a, const Clause& b) {
  return a <=> b;
}

/// γ: records clauses that are implicitly factorized. Every entry maps C to
/// sfac(C); absent clauses map to themselves.
class GammaMap {
 public:
  const Clause& operator()(const Clause& c) const;
  /// Sets γ(c) := sfac(c).
  void factorize(const Clause& c);
  bool is_identity_on(const Clause& c) const { return entries_.count(c) == 0; }
  const std::map<Clause, Clause>& entries() const { return entries_; }

  friend bool operator==(const GammaMap&, const GammaMap&) = default;

 private:
  std::map<Clause, Clause> entries_;
};

/// C ≺_γ D iff γ(C) ≺ γ(D).
inline std::strong_ordering compare_clauses_gamma(const Clause& a,
                                                  const Clause& b,
                                                  const GammaMap& gamma) {
  return gamma(a) <=> gamma(b);
}

/// ≺_γ refined by the clause itself on γ-ties, which makes it total on
/// distinct clauses.
inline std::strong_ordering compare_clauses_gamma_total(const Clause& a,
                                                        const Clause& b,
                                                        const GammaMap& gamma) {
  if (auto c = gamma(a) <=> gamma(b); c != 0) return c;
  return a <=> b;
}

struct RawProblem;

/// Empty iff the induced atom order is a strict total order over the atoms
/// occurring in the problem and every KBO weight is at least 1.
std::vector<std::string> validate_ordering(const RawProblem& problem);

}  // namespace sclsim
