#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sclsim/ordering.hpp"
#include "sclsim/syntax.hpp"

namespace sclsim {

/// A problem as written: structured literals, no interning.
struct RawProblem {
  OrderingConfig ordering;
  std::vector<std::vector<RawLiteral>> clauses;

  /// Distinct atoms in order of first occurrence.
  std::vector<Atom> atom_universe() const;
  /// Every symbol (functions, constants, predicates) with its arity.
  std::map<std::string, std::size_t> symbols() const;
};

class ProblemError : public std::runtime_error {
 public:
  enum class Kind {
    Syntax,
    EmptyClause,
    UnknownOrdering,
    MissingPrecedence,
    ArityMismatch,
    InvalidOrdering,
    UnknownAtom,
  };

  ProblemError(Kind kind, std::string message, int line = 0, int column = 0);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

/// Parses the line-oriented problem format. Does not check the ordering.
RawProblem parse_raw(std::string_view text);

/// A validated ground problem. Atoms are interned in ascending order, so an
/// AtomId is the atom's rank and the synthetic bound β is `atoms().size()`.
class Problem {
 public:
  static Problem from_raw(const RawProblem& raw);

  const OrderingConfig& ordering() const { return ordering_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const ClauseSet& clauses() const { return clauses_; }
  AtomId beta() const { return static_cast<AtomId>(atoms_.size()); }

  std::optional<AtomId> find_atom(const Atom& a) const;
  /// Throws ProblemError(UnknownAtom) if the atom does not occur.
  Literal literal(const RawLiteral& l) const;
  /// Parses `P(a) | -Q(b)` over this problem's atoms; `⊥` or blank is ⊥.
  Clause clause(std::string_view text) const;

  std::string str(Literal l) const;
  std::string str(const Clause& c) const;
  std::vector<std::string> literal_strings(const Clause& c) const;

  RawProblem to_raw() const;

  friend bool operator==(const Problem& a, const Problem& b) {
    return a.ordering_ == b.ordering_ && a.atoms_ == b.atoms_ &&
           a.clauses_ == b.clauses_;
  }

 private:
  OrderingConfig ordering_;
  std::vector<Atom> atoms_;
  std::map<Atom, AtomId> atom_index_;
  ClauseSet clauses_;
};

/// parse_raw + validation + interning.
Problem parse_problem(std::string_view text);

/// Inverse of parse_problem up to comments and whitespace.
std::string print_problem(const Problem& p);

}  // namespace sclsim
