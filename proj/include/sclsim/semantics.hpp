#pragma once

#include <cstdint>
#include <vector>

#include "sclsim/syntax.hpp"

namespace sclsim {

/// A finite set of atoms; doubles as a Herbrand interpretation.
class AtomSet {
 public:
  AtomSet() = default;
  AtomSet(std::initializer_list<AtomId> atoms);

  bool contains(AtomId a) const { return a < bits_.size() && bits_[a]; }
  void insert(AtomId a);
  void erase(AtomId a);
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  /// Ascending.
  std::vector<AtomId> elements() const;
  bool subset_of(const AtomSet& other) const;

  friend bool operator==(const AtomSet& a, const AtomSet& b);

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

enum class TruthValue : std::uint8_t { Undefined, True, False };

/// Atom -> {true, false, undefined}. Holds one value per atom.
class PartialAssignment {
 public:
  TruthValue value(AtomId a) const {
    return a < values_.size() ? values_[a] : TruthValue::Undefined;
  }
  TruthValue value(Literal l) const;
  bool defined(AtomId a) const { return value(a) != TruthValue::Undefined; }
  /// Makes l true. Throws std::logic_error if atom(l) is already defined.
  void assign(Literal l);
  void unassign(AtomId a);

 private:
  std::vector<TruthValue> values_;
};

/// I ⊨_H C.
bool eval_herbrand(const AtomSet& interpretation, const Clause& c);

/// True iff some literal holds, False iff all are falsified (so ⊥ is False).
TruthValue status_under_assignment(const PartialAssignment& a, const Clause& c);

AtomSet atoms_of(Literal l);
AtomSet atoms_of(const Clause& c);
AtomSet atoms_of(const ClauseSet& n);

}  // namespace sclsim
