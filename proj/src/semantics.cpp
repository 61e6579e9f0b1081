#include "sclsim/semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace sclsim {

AtomSet::AtomSet(std::initializer_list<AtomId> atoms) {
  for (AtomId a : atoms) insert(a);
}

void AtomSet::insert(AtomId a) {
  if (a >= bits_.size()) bits_.resize(a + 1, false);
  if (!bits_[a]) {
    bits_[a] = true;
    ++count_;
  }
}

void AtomSet::erase(AtomId a) {
  if (contains(a)) {
    bits_[a] = false;
    --count_;
  }
}

std::vector<AtomId> AtomSet::elements() const {
  std::vector<AtomId> out;
  out.reserve(count_);
  for (AtomId a = 0; a < bits_.size(); ++a)
    if (bits_[a]) out.push_back(a);
  return out;
}

bool AtomSet::subset_of(const AtomSet& other) const {
  for (AtomId a = 0; a < bits_.size(); ++a)
    if (bits_[a] && !other.contains(a)) return false;
  return true;
}

bool operator==(const AtomSet& a, const AtomSet& b) {
  return a.size() == b.size() && a.subset_of(b);
}

TruthValue PartialAssignment::value(Literal l) const {
  TruthValue v = value(l.atom);
  if (v == TruthValue::Undefined || l.positive) return v;
  return v == TruthValue::True ? TruthValue::False : TruthValue::True;
}

void PartialAssignment::assign(Literal l) {
  if (defined(l.atom))
    throw std::logic_error("atom already assigned");
  if (l.atom >= values_.size()) values_.resize(l.atom + 1, TruthValue::Undefined);
  values_[l.atom] = l.positive ? TruthValue::True : TruthValue::False;
}

void PartialAssignment::unassign(AtomId a) {
  if (a < values_.size()) values_[a] = TruthValue::Undefined;
}

bool eval_herbrand(const AtomSet& interpretation, const Clause& c) {
  return std::any_of(c.begin(), c.end(), [&](Literal l) {
    return interpretation.contains(l.atom) == l.positive;
  });
}

TruthValue status_under_assignment(const PartialAssignment& a, const Clause& c) {
  bool undefined = false;
  for (Literal l : c) {
    switch (a.value(l)) {
      case TruthValue::True: return TruthValue::True;
      case TruthValue::Undefined: undefined = true; break;
      case TruthValue::False: break;
    }
  }
  return undefined ? TruthValue::Undefined : TruthValue::False;
}

AtomSet atoms_of(Literal l) { return AtomSet{l.atom}; }

AtomSet atoms_of(const Clause& c) {
  AtomSet out;
  for (Literal l : c) out.insert(l.atom);
  return out;
}

AtomSet atoms_of(const ClauseSet& n) {
  AtomSet out;
  for (const auto& c : n)
    for (Literal l : c) out.insert(l.atom);
  return out;
}

}  // namespace sclsim
