#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sclsim {

/// A ground term `f(t1,...,tn)`; constants have no arguments.
struct Term {
  std::string symbol;
  std::vector<Term> args;

  friend bool operator==(const Term&, const Term&) = default;
  /// Structural order for container keys.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
};

/// A ground atom `P(t1,...,tn)`. The structural comparison is only used for
/// container keys; the reduction ordering lives in ordering.hpp.
struct Atom {
  std::string predicate;
  std::vector<Term> args;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
};

/// A literal over a structured atom, as it appears in problem text.
struct RawLiteral {
  bool positive = true;
  Atom atom;

  friend bool operator==(const RawLiteral&, const RawLiteral&) = default;
};

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const RawLiteral& l);

/// Interned atom. Ids are positions in the ascending atom order of the owning
/// Problem, so comparing ids compares atoms.
using AtomId = std::uint32_t;

/// Interned ground literal. On equal atoms the negative literal is the larger
/// one, hence the key `2*atom + negative`.
struct Literal {
  AtomId atom = 0;
  bool positive = true;

  constexpr Literal complement() const { return {atom, !positive}; }
  constexpr std::uint64_t key() const {
    return 2 * static_cast<std::uint64_t>(atom) + (positive ? 0 : 1);
  }

  friend constexpr bool operator==(Literal, Literal) = default;
  friend constexpr std::strong_ordering operator<=>(Literal a, Literal b) {
    return a.key() <=> b.key();
  }
};

constexpr Literal pos(AtomId a) { return {a, true}; }
constexpr Literal neg(AtomId a) { return {a, false}; }

/// A ground clause: a multiset of literals kept sorted in descending literal
/// order. The empty clause is ⊥.
///
/// Because the literal order is total, the multiset extension coincides with
/// the lexicographic comparison of the descending sequences (a proper prefix
/// being smaller), which is what operator<=> implements.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals);

  std::span<const Literal> literals() const { return literals_; }
  bool empty() const { return literals_.empty(); }
  std::size_t size() const { return literals_.size(); }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  /// Precondition: not ⊥.
  Literal max_literal() const { return literals_.front(); }
  std::size_t count(Literal l) const;
  bool contains(Literal l) const { return count(l) > 0; }
  /// The maximal literal occurs once and nothing else is ⪰ it.
  bool strictly_maximal(Literal l) const {
    return !empty() && max_literal() == l && count(l) == 1;
  }

  Clause without_one(Literal l) const;
  Clause without_all(Literal l) const;
  /// Multiset union.
  Clause merged(const Clause& other) const;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);

 private:
  std::vector<Literal> literals_;
};

using ClauseId = std::size_t;

/// Deduplicated clause set; ids are insertion positions and are never reused.
class ClauseSet {
 public:
  ClauseSet() = default;
  ClauseSet(std::initializer_list<Clause> clauses);

  /// Returns the id of the clause and whether it was newly inserted.
  std::pair<ClauseId, bool> insert(Clause c);
  std::optional<ClauseId> find(const Clause& c) const;
  bool contains(const Clause& c) const { return index_.count(c) != 0; }

  const Clause& operator[](ClauseId id) const { return clauses_[id]; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

  /// The set made of the first n inserted clauses (same ids).
  ClauseSet prefix(std::size_t n) const;

  /// Ids sorted ascending in the clause order.
  std::vector<ClauseId> sorted_ids() const;

  /// Set equality; ids are ignored.
  friend bool operator==(const ClauseSet& a, const ClauseSet& b);

 private:
  std::vector<Clause> clauses_;
  std::map<Clause, ClauseId> index_;
};

}  // namespace sclsim
