#include "partialsat/formula.hpp"

#include <map>
#include <utility>

#include "partialsat/errors.hpp"

namespace partialsat {

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!valid_name(name_)) {
    throw PreconditionError("invalid atom name '" + name_ + "'");
  }
}

bool Atom::valid_name(std::string_view name) noexcept {
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (name.empty() || !alpha(name.front())) return false;
  for (char c : name) {
    if (!alpha(c) && !digit(c) && c != '_') return false;
  }
  return name != "true" && name != "false" && name != "exists";
}

// --- Formula ---------------------------------------------------------------

Formula Formula::top() {
  static const Formula t(std::make_shared<const Node>(Node{Op::True, {}, {}, {}, 1}));
  return t;
}

Formula Formula::bottom() {
  static const Formula f(std::make_shared<const Node>(Node{Op::False, {}, {}, {}, 1}));
  return f;
}

Formula Formula::var(const Atom& atom) {
  return Formula(std::make_shared<const Node>(Node{Op::Var, atom, {}, {}, 1}));
}

Formula operator!(const Formula& f) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Op::Not, std::nullopt, f, std::nullopt, f.size() + 1}));
}

Formula Formula::binary(Op op, const Formula& a, const Formula& b) {
  return Formula(std::make_shared<const Node>(
      Node{op, std::nullopt, a, b, a.size() + b.size() + 1}));
}

Formula operator&(const Formula& a, const Formula& b) {
  return Formula::binary(Op::And, a, b);
}
Formula operator|(const Formula& a, const Formula& b) {
  return Formula::binary(Op::Or, a, b);
}
Formula Formula::implies(const Formula& a, const Formula& b) {
  return binary(Op::Implies, a, b);
}
Formula Formula::iff(const Formula& a, const Formula& b) {
  return binary(Op::Iff, a, b);
}

const Atom& Formula::atom() const {
  if (op() != Op::Var) throw PreconditionError("formula is not an atom");
  return *node_->atom;
}

const Formula& Formula::lhs() const {
  if (!node_->lhs) throw PreconditionError("formula has no operand");
  return *node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!node_->rhs) throw PreconditionError("formula has no right operand");
  return *node_->rhs;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.size() != b.size()) return false;
  switch (a.op()) {
    case Op::True:
    case Op::False:
      return true;
    case Op::Var:
      return a.atom() == b.atom();
    case Op::Not:
      return a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// --- traversal helpers -----------------------------------------------------

void collect_atoms(const Formula& f, AtomSet& out) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
      return;
    case Op::Var:
      out.insert(f.atom());
      return;
    case Op::Not:
      collect_atoms(f.lhs(), out);
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

AtomSet atoms(const Formula& f) {
  AtomSet out;
  collect_atoms(f, out);
  return out;
}

namespace {

void count_atoms(const Formula& f, std::map<Atom, std::size_t>& counts) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
      return;
    case Op::Var:
      ++counts[f.atom()];
      return;
    case Op::Not:
      count_atoms(f.lhs(), counts);
      return;
    default:
      count_atoms(f.lhs(), counts);
      count_atoms(f.rhs(), counts);
  }
}

void flatten(const Formula& f, Op op, std::vector<Formula>& out) {
  if (f.op() == op) {
    flatten(f.lhs(), op, out);
    flatten(f.rhs(), op, out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

std::vector<std::pair<Atom, std::size_t>> atom_occurrences(const Formula& f) {
  std::map<Atom, std::size_t> counts;
  count_atoms(f, counts);
  return {counts.begin(), counts.end()};
}

Formula Literal::to_formula() const {
  auto v = Formula::var(atom);
  return positive ? v : !v;
}

std::string Literal::str() const {
  return positive ? atom.name() : "!" + atom.name();
}

std::optional<Literal> as_literal(const Formula& f) {
  if (f.is_var()) return Literal{f.atom(), true};
  if (f.op() == Op::Not && f.lhs().is_var()) return Literal{f.lhs().atom(), false};
  return std::nullopt;
}

std::vector<Formula> conjuncts(const Formula& f) {
  std::vector<Formula> out;
  flatten(f, Op::And, out);
  return out;
}

std::vector<Formula> disjuncts(const Formula& f) {
  std::vector<Formula> out;
  flatten(f, Op::Or, out);
  return out;
}

Formula conjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = acc & parts[i];
  return acc;
}

Formula disjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::bottom();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = acc | parts[i];
  return acc;
}

Formula cube_of(const std::vector<Literal>& lits) {
  std::vector<Formula> parts;
  parts.reserve(lits.size());
  for (const auto& l : lits) parts.push_back(l.to_formula());
  return conjoin(parts);
}

Formula clause_of(const std::vector<Literal>& lits) {
  std::vector<Formula> parts;
  parts.reserve(lits.size());
  for (const auto& l : lits) parts.push_back(l.to_formula());
  return disjoin(parts);
}

// --- classification --------------------------------------------------------

namespace {

std::optional<std::vector<Literal>> clause_literals(const Formula& f) {
  std::vector<Literal> lits;
  for (const auto& d : disjuncts(f)) {
    auto l = as_literal(d);
    if (!l) return std::nullopt;
    lits.push_back(*l);
  }
  return lits;
}

bool tautological(const std::vector<Literal>& clause) {
  for (std::size_t i = 0; i < clause.size(); ++i) {
    for (std::size_t j = i + 1; j < clause.size(); ++j) {
      if (clause[i].atom == clause[j].atom &&
          clause[i].positive != clause[j].positive) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

StructureReport classify(const Formula& f) {
  StructureReport r;
  if (f.is_top()) {
    r.is_cube = r.is_cnf = r.is_tautology_free_cnf = true;
    return r;
  }
  if (f.is_bottom()) {
    r.is_clause = r.is_cnf = r.is_tautology_free_cnf = true;
    return r;
  }
  r.is_literal = as_literal(f).has_value();

  auto single_clause = clause_literals(f);
  r.is_clause = single_clause.has_value();

  r.is_cube = true;
  for (const auto& c : conjuncts(f)) {
    if (!as_literal(c)) {
      r.is_cube = false;
      break;
    }
  }

  r.is_cnf = true;
  bool any_tautology = false;
  for (const auto& c : conjuncts(f)) {
    auto lits = clause_literals(c);
    if (!lits) {
      r.is_cnf = false;
      break;
    }
    any_tautology = any_tautology || tautological(*lits);
  }
  r.is_tautology_free_cnf = r.is_cnf && !any_tautology;
  return r;
}

std::vector<std::vector<Literal>> clauses(const Formula& f) {
  if (f.is_top()) return {};
  if (f.is_bottom()) return {std::vector<Literal>{}};
  std::vector<std::vector<Literal>> out;
  for (const auto& c : conjuncts(f)) {
    auto lits = clause_literals(c);
    if (!lits) throw PreconditionError("formula is not in CNF: " + print(f));
    out.push_back(std::move(*lits));
  }
  return out;
}

Formula from_clauses(const std::vector<std::vector<Literal>>& cls) {
  std::vector<Formula> parts;
  parts.reserve(cls.size());
  for (const auto& c : cls) parts.push_back(clause_of(c));
  return conjoin(parts);
}

// --- printing --------------------------------------------------------------

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Iff:
      return 1;
    case Op::Implies:
      return 2;
    case Op::Or:
      return 3;
    case Op::And:
      return 4;
    case Op::Not:
      return 5;
    default:
      return 6;
  }
}

void emit(const Formula& f, std::string& out);

void emit_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  emit(f, out);
  if (parens) out += ')';
}

void emit(const Formula& f, std::string& out) {
  const int p = precedence(f.op());
  switch (f.op()) {
    case Op::True:
      out += "true";
      return;
    case Op::False:
      out += "false";
      return;
    case Op::Var:
      out += f.atom().name();
      return;
    case Op::Not:
      out += '!';
      emit_operand(f.lhs(), precedence(f.lhs().op()) < p, out);
      return;
    default:
      break;
  }

  const Formula& l = f.lhs();
  const Formula& r = f.rhs();
  const int pl = precedence(l.op());
  const int pr = precedence(r.op());
  bool lp = false;
  bool rp = false;
  const char* sym = "";
  switch (f.op()) {
    case Op::And:
      sym = " & ";
      lp = pl < p;
      rp = pr <= p;
      break;
    case Op::Or:
      // conjunctions under a disjunction are always bracketed
      sym = " | ";
      lp = pl < p || l.op() == Op::And;
      rp = pr <= p || r.op() == Op::And;
      break;
    case Op::Implies:
      sym = " -> ";
      lp = pl <= p;
      rp = pr < p;
      break;
    case Op::Iff:
      sym = " <-> ";
      lp = pl < p;
      rp = pr <= p;
      break;
    default:
      break;
  }
  emit_operand(l, lp, out);
  out += sym;
  emit_operand(r, rp, out);
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  emit(f, out);
  return out;
}

}  // namespace partialsat
