#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace partialsat {

// A propositional atom. Names match [A-Za-z][A-Za-z0-9_]* and are compared
// lexicographically, which fixes every iteration order in the library.
class Atom {
 public:
  explicit Atom(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    return a.name_.compare(b.name_) <=> 0;
  }

  static bool valid_name(std::string_view name) noexcept;

 private:
  std::string name_;
};

using AtomSet = std::set<Atom>;

enum class Op { True, False, Var, Not, And, Or, Implies, Iff };

// Immutable formula tree. Copies share structure; equality is structural.
class Formula {
 public:
  static Formula top();
  static Formula bottom();
  static Formula constant(bool value) { return value ? top() : bottom(); }
  static Formula var(const Atom& atom);
  static Formula var(std::string name) { return var(Atom(std::move(name))); }

  friend Formula operator!(const Formula& f);
  friend Formula operator&(const Formula& a, const Formula& b);
  friend Formula operator|(const Formula& a, const Formula& b);
  static Formula implies(const Formula& a, const Formula& b);
  static Formula iff(const Formula& a, const Formula& b);
  static Formula binary(Op op, const Formula& a, const Formula& b);

  Op op() const noexcept;
  bool is_const() const noexcept { return op() == Op::True || op() == Op::False; }
  bool is_top() const noexcept { return op() == Op::True; }
  bool is_bottom() const noexcept { return op() == Op::False; }
  bool is_var() const noexcept { return op() == Op::Var; }
  bool is_binary() const noexcept {
    return op() == Op::And || op() == Op::Or || op() == Op::Implies ||
           op() == Op::Iff;
  }

  // Valid only for Op::Var.
  const Atom& atom() const;
  // Operand of Not, or left operand of a binary node.
  const Formula& lhs() const;
  // Right operand of a binary node.
  const Formula& rhs() const;

  // Number of nodes in the tree.
  std::size_t size() const noexcept;

  // Identity of the shared node; stable for the lifetime of any copy.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Op op;
  std::optional<Atom> atom;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::size_t size = 1;
};

inline Op Formula::op() const noexcept { return node_->op; }
inline std::size_t Formula::size() const noexcept { return node_->size; }

// Atoms occurring in f.
AtomSet atoms(const Formula& f);
void collect_atoms(const Formula& f, AtomSet& out);

// Occurrence count of every atom in f, in atom order.
std::vector<std::pair<Atom, std::size_t>> atom_occurrences(const Formula& f);

struct Literal {
  Atom atom;
  bool positive = true;

  // The complementary literal; negating !A yields A.
  Literal negate() const { return {atom, !positive}; }
  Formula to_formula() const;
  std::string str() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.atom <=> b.atom; c != 0) return c;
    // positive before negative for equal atoms
    return b.positive <=> a.positive;
  }
};

// Returns the literal if f is A or !A.
std::optional<Literal> as_literal(const Formula& f);

// Flattens nested And (resp. Or) nodes, left to right, in any association.
std::vector<Formula> conjuncts(const Formula& f);
std::vector<Formula> disjuncts(const Formula& f);

// Left-associated conjunction/disjunction; empty lists give top/bottom.
Formula conjoin(const std::vector<Formula>& parts);
Formula disjoin(const std::vector<Formula>& parts);

// Conjunction of the literals, in the given order.
Formula cube_of(const std::vector<Literal>& lits);
Formula clause_of(const std::vector<Literal>& lits);

struct StructureReport {
  bool is_literal = false;
  bool is_clause = false;
  bool is_cube = false;
  bool is_cnf = false;
  bool is_tautology_free_cnf = false;

  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

// Structural classification. `true` counts as the empty conjunction (a cube
// and a CNF), `false` as the empty clause (a clause and a CNF).
StructureReport classify(const Formula& f);

// Clauses of a CNF formula as literal lists. `true` yields no clauses,
// `false` yields one empty clause. Throws PreconditionError if f is not CNF.
std::vector<std::vector<Literal>> clauses(const Formula& f);

// Rebuilds a CNF formula from a clause list.
Formula from_clauses(const std::vector<std::vector<Literal>>& clauses);

// Infix rendering with `! & | -> <->`; parse(print(f)) == f.
std::string print(const Formula& f);

// Parses the infix grammar. Supports `#` line comments.
Formula parse(std::string_view text);

}  // namespace partialsat
