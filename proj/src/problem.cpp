#include "sclsim/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace sclsim {

ProblemError::ProblemError(Kind kind, std::string message, int line, int column)
    : std::runtime_error(line > 0 ? std::to_string(line) + ":" +
                                        std::to_string(column) + ": " + message
                                  : message),
      kind_(kind),
      line_(line),
      column_(column) {}

std::vector<Atom> RawProblem::atom_universe() const {
  std::vector<Atom> out;
  std::set<Atom> seen;
  for (const auto& clause : clauses)
    for (const auto& lit : clause)
      if (seen.insert(lit.atom).second) out.push_back(lit.atom);
  return out;
}

namespace {

void collect_symbols(const Term& t, std::map<std::string, std::size_t>& out) {
  out.emplace(t.symbol, t.args.size());
  for (const auto& a : t.args) collect_symbols(a, out);
}

/// Cursor over one line of input.
class LineScanner {
 public:
  LineScanner(std::string_view text, int line, int offset)
      : text_(text), line_(line), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    auto is_start = [](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    auto is_body = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    if (pos_ >= text_.size() || !is_start(text_[pos_])) fail("expected identifier");
    while (pos_ < text_.size() && is_body(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected number");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  Term term() {
    Term t{identifier(), {}};
    if (accept("(")) {
      do {
        t.args.push_back(term());
      } while (accept(","));
      expect(")");
    }
    return t;
  }

  Atom atom() {
    Term t = term();
    return Atom{std::move(t.symbol), std::move(t.args)};
  }

  RawLiteral literal() {
    bool positive = true;
    while (accept("-") || accept("~") || accept("¬")) positive = !positive;
    return RawLiteral{positive, atom()};
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ProblemError(ProblemError::Kind::Syntax, msg, line_,
                       offset_ + static_cast<int>(pos_) + 1);
  }

  int column() const { return offset_ + static_cast<int>(pos_) + 1; }

 private:
  std::string_view text_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void check_arity(const Term& t, std::map<std::string, std::size_t>& arities,
                 int line) {
  auto [it, inserted] = arities.emplace(t.symbol, t.args.size());
  if (!inserted && it->second != t.args.size())
    throw ProblemError(ProblemError::Kind::ArityMismatch,
                       "symbol '" + t.symbol + "' used with arity " +
                           std::to_string(t.args.size()) + " and " +
                           std::to_string(it->second),
                       line, 1);
  for (const auto& a : t.args) check_arity(a, arities, line);
}

}  // namespace

std::map<std::string, std::size_t> RawProblem::symbols() const {
  std::map<std::string, std::size_t> out;
  for (const auto& clause : clauses)
    for (const auto& lit : clause)
      collect_symbols(Term{lit.atom.predicate, lit.atom.args}, out);
  return out;
}

RawProblem parse_raw(std::string_view text) {
  RawProblem out;
  std::map<std::string, std::size_t> arities;
  bool saw_precedence = false;
  int line_no = 0;

  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ProblemError(ProblemError::Kind::Syntax, "expected 'key: value'",
                         line_no, 1);
    std::string_view key = trim(line.substr(0, colon));
    int offset = static_cast<int>(colon) + 1;
    LineScanner in(line.substr(colon + 1), line_no, offset);

    if (key == "order") {
      std::string kind = in.identifier();
      if (kind == "kbo") out.ordering.kind = OrderingKind::Kbo;
      else if (kind == "lpo") out.ordering.kind = OrderingKind::Lpo;
      else if (kind == "listed") out.ordering.kind = OrderingKind::Listed;
      else
        throw ProblemError(ProblemError::Kind::UnknownOrdering,
                           "unknown ordering kind '" + kind + "'", line_no,
                           offset + 1);
    } else if (key == "prec") {
      saw_precedence = true;
      do {
        out.ordering.precedence.push_back(in.identifier());
      } while (in.accept("<"));
    } else if (key == "weights") {
      while (!in.at_end()) {
        std::string sym = in.identifier();
        in.expect("=");
        unsigned w = in.number();
        if (sym == "default") out.ordering.default_weight = w;
        else out.ordering.weights[sym] = w;
      }
    } else if (key == "atoms") {
      do {
        Atom a = in.atom();
        check_arity(Term{a.predicate, a.args}, arities, line_no);
        out.ordering.listed_atoms.push_back(std::move(a));
      } while (in.accept("<"));
    } else if (key == "clause") {
      std::vector<RawLiteral> clause;
      if (in.at_end())
        throw ProblemError(ProblemError::Kind::EmptyClause,
                           "empty clause in input", line_no, in.column());
      do {
        clause.push_back(in.literal());
        check_arity(Term{clause.back().atom.predicate, clause.back().atom.args},
                    arities, line_no);
      } while (in.accept("|"));
      out.clauses.push_back(std::move(clause));
    } else {
      throw ProblemError(ProblemError::Kind::Syntax,
                         "unknown directive '" + std::string(key) + "'",
                         line_no, 1);
    }
    if (!in.at_end()) in.fail("unexpected trailing input");
  }

  if (out.ordering.kind != OrderingKind::Listed && !saw_precedence &&
      !out.clauses.empty())
    throw ProblemError(ProblemError::Kind::MissingPrecedence,
                       "'prec:' is required for kbo and lpo");
  return out;
}

Problem Problem::from_raw(const RawProblem& raw) {
  if (auto violations = validate_ordering(raw); !violations.empty()) {
    bool missing = std::any_of(violations.begin(), violations.end(),
                               [](const std::string& v) {
                                 return v.starts_with("precedence omits");
                               });
    std::string msg;
    for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v;
    throw ProblemError(missing ? ProblemError::Kind::MissingPrecedence
                               : ProblemError::Kind::InvalidOrdering,
                       msg);
  }

  Problem p;
  p.ordering_ = raw.ordering;
  p.atoms_ = raw.atom_universe();
  std::sort(p.atoms_.begin(), p.atoms_.end(), [&](const Atom& a, const Atom& b) {
    return compare_atoms(a, b, p.ordering_) < 0;
  });
  for (std::size_t i = 0; i < p.atoms_.size(); ++i)
    p.atom_index_.emplace(p.atoms_[i], static_cast<AtomId>(i));

  for (const auto& raw_clause : raw.clauses) {
    if (raw_clause.empty())
      throw ProblemError(ProblemError::Kind::EmptyClause, "empty clause in input");
    std::vector<Literal> lits;
    for (const auto& l : raw_clause) lits.push_back(p.literal(l));
    p.clauses_.insert(Clause(std::move(lits)));
  }
  return p;
}

std::optional<AtomId> Problem::find_atom(const Atom& a) const {
  auto it = atom_index_.find(a);
  if (it == atom_index_.end()) return std::nullopt;
  return it->second;
}

Literal Problem::literal(const RawLiteral& l) const {
  auto id = find_atom(l.atom);
  if (!id)
    throw ProblemError(ProblemError::Kind::UnknownAtom,
                       "atom " + to_string(l.atom) + " does not occur");
  return Literal{*id, l.positive};
}

Clause Problem::clause(std::string_view text) const {
  text = trim(text);
  if (text.empty() || text == "⊥") return Clause{};
  LineScanner in(text, 1, 0);
  std::vector<Literal> lits;
  do {
    lits.push_back(literal(in.literal()));
  } while (in.accept("|") || in.accept("∨"));
  if (!in.at_end()) in.fail("unexpected trailing input");
  return Clause(std::move(lits));
}

std::string Problem::str(Literal l) const {
  std::string atom = l.atom < atoms_.size() ? to_string(atoms_[l.atom])
                                            : "β" + std::to_string(l.atom);
  return (l.positive ? "" : "-") + atom;
}

std::string Problem::str(const Clause& c) const {
  if (c.empty()) return "⊥";
  std::string out;
  for (Literal l : c) {
    if (!out.empty()) out += " | ";
    out += str(l);
  }
  return out;
}

std::vector<std::string> Problem::literal_strings(const Clause& c) const {
  std::vector<std::string> out;
  for (Literal l : c) out.push_back(str(l));
  return out;
}

RawProblem Problem::to_raw() const {
  RawProblem raw;
  raw.ordering = ordering_;
  for (const auto& c : clauses_) {
    std::vector<RawLiteral> lits;
    for (Literal l : c) lits.push_back(RawLiteral{l.positive, atoms_[l.atom]});
    raw.clauses.push_back(std::move(lits));
  }
  return raw;
}

Problem parse_problem(std::string_view text) {
  return Problem::from_raw(parse_raw(text));
}

std::string print_problem(const Problem& p) {
  std::ostringstream out;
  const auto& o = p.ordering();
  out << "order: " << to_string(o.kind) << '\n';
  if (!o.precedence.empty()) {
    out << "prec:";
    for (std::size_t i = 0; i < o.precedence.size(); ++i)
      out << (i ? " < " : " ") << o.precedence[i];
    out << '\n';
  }
  if (o.kind == OrderingKind::Kbo || o.default_weight != 1 || !o.weights.empty()) {
    out << "weights: default=" << o.default_weight;
    for (const auto& [sym, w] : o.weights) out << ' ' << sym << '=' << w;
    out << '\n';
  }
  if (!o.listed_atoms.empty()) {
    out << "atoms:";
    for (std::size_t i = 0; i < o.listed_atoms.size(); ++i)
      out << (i ? " < " : " ") << to_string(o.listed_atoms[i]);
    out << '\n';
  }
  for (const auto& c : p.clauses()) {
    // Input order of literals is irrelevant; print the canonical order.
    out << "clause: " << p.str(c) << '\n';
  }
  return out.str();
}

}  // namespace sclsim
