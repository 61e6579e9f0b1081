#include "sclsim/syntax.hpp"

#include <algorithm>
#include <functional>

namespace sclsim {

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.symbol <=> b.symbol; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(),
                                                b.args.end());
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(),
                                                b.args.end());
}

std::string to_string(const Term& t) {
  std::string out = t.symbol;
  if (!t.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) out += ',';
      out += to_string(t.args[i]);
    }
    out += ')';
  }
  return out;
}

std::string to_string(const Atom& a) {
  return to_string(Term{a.predicate, a.args});
}

std::string to_string(const RawLiteral& l) {
  return (l.positive ? "" : "-") + to_string(l.atom);
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end(), std::greater<>());
}

Clause::Clause(std::initializer_list<Literal> literals)
    : Clause(std::vector<Literal>(literals)) {}

std::size_t Clause::count(Literal l) const {
  auto [lo, hi] =
      std::equal_range(literals_.begin(), literals_.end(), l, std::greater<>());
  return static_cast<std::size_t>(hi - lo);
}

Clause Clause::without_one(Literal l) const {
  Clause out = *this;
  auto it = std::lower_bound(out.literals_.begin(), out.literals_.end(), l,
                             std::greater<>());
  if (it != out.literals_.end() && *it == l) out.literals_.erase(it);
  return out;
}

Clause Clause::without_all(Literal l) const {
  Clause out = *this;
  std::erase(out.literals_, l);
  return out;
}

Clause Clause::merged(const Clause& other) const {
  Clause out;
  out.literals_.reserve(size() + other.size());
  std::merge(literals_.begin(), literals_.end(), other.literals_.begin(),
             other.literals_.end(), std::back_inserter(out.literals_),
             std::greater<>());
  return out;
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
  return std::lexicographical_compare_three_way(
      a.literals_.begin(), a.literals_.end(), b.literals_.begin(),
      b.literals_.end());
}

ClauseSet::ClauseSet(std::initializer_list<Clause> clauses) {
  for (const auto& c : clauses) insert(c);
}

std::pair<ClauseId, bool> ClauseSet::insert(Clause c) {
  auto it = index_.find(c);
  if (it != index_.end()) return {it->second, false};
  ClauseId id = clauses_.size();
  index_.emplace(c, id);
  clauses_.push_back(std::move(c));
  return {id, true};
}

std::optional<ClauseId> ClauseSet::find(const Clause& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ClauseSet ClauseSet::prefix(std::size_t n) const {
  ClauseSet out;
  for (std::size_t i = 0; i < n && i < clauses_.size(); ++i)
    out.insert(clauses_[i]);
  return out;
}

std::vector<ClauseId> ClauseSet::sorted_ids() const {
  std::vector<ClauseId> ids;
  ids.reserve(index_.size());
  for (const auto& [clause, id] : index_) ids.push_back(id);
  return ids;
}

bool operator==(const ClauseSet& a, const ClauseSet& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(),
                     [&](const Clause& c) { return b.contains(c); });
}

}  // namespace sclsim
