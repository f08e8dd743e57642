#include "partialsat/semantics.hpp"

#include <algorithm>
#include <string>

#include "partialsat/errors.hpp"

namespace partialsat {

std::string_view to_string(TruthValue3 v) noexcept {
  switch (v) {
    case TruthValue3::T:
      return "T";
    case TruthValue3::F:
      return "F";
    default:
      return "U";
  }
}

TruthValue3 not3(TruthValue3 a) noexcept {
  switch (a) {
    case TruthValue3::T:
      return TruthValue3::F;
    case TruthValue3::F:
      return TruthValue3::T;
    default:
      return TruthValue3::U;
  }
}

TruthValue3 apply3(Op op, TruthValue3 a, TruthValue3 b) noexcept {
  using enum TruthValue3;
  switch (op) {
    case Op::And:
      if (a == F || b == F) return F;
      if (a == T && b == T) return T;
      return U;
    case Op::Or:
      if (a == T || b == T) return T;
      if (a == F && b == F) return F;
      return U;
    case Op::Implies:
      if (a == F || b == T) return T;
      if (a == T && b == F) return F;
      return U;
    case Op::Iff:
      if (a == U || b == U) return U;
      return a == b ? T : F;
    default:
      return U;
  }
}

TruthValue3 eval3(const Formula& f, const Assignment& mu) {
  switch (f.op()) {
    case Op::True:
      return TruthValue3::T;
    case Op::False:
      return TruthValue3::F;
    case Op::Var: {
      auto v = mu.value(f.atom());
      if (!v) return TruthValue3::U;
      return *v ? TruthValue3::T : TruthValue3::F;
    }
    case Op::Not:
      return not3(eval3(f.lhs(), mu));
    default:
      return apply3(f.op(), eval3(f.lhs(), mu), eval3(f.rhs(), mu));
  }
}

// --- residual --------------------------------------------------------------

Formula fold_not(const Formula& x) {
  if (x.is_top()) return Formula::bottom();
  if (x.is_bottom()) return Formula::top();
  return !x;
}

Formula fold_binary(Op op, const Formula& l, const Formula& r) {
  switch (op) {
    case Op::And:
      if (l.is_bottom() || r.is_bottom()) return Formula::bottom();
      if (l.is_top()) return r;
      if (r.is_top()) return l;
      break;
    case Op::Or:
      if (l.is_top() || r.is_top()) return Formula::top();
      if (l.is_bottom()) return r;
      if (r.is_bottom()) return l;
      break;
    case Op::Implies:
      if (l.is_bottom() || r.is_top()) return Formula::top();
      if (l.is_top()) return r;
      if (r.is_bottom()) return fold_not(l);
      break;
    case Op::Iff:
      if (l.is_top()) return r;
      if (r.is_top()) return l;
      if (l.is_bottom()) return fold_not(r);
      if (r.is_bottom()) return fold_not(l);
      break;
    default:
      break;
  }
  return Formula::binary(op, l, r);
}

namespace {

Formula residual_rec(const Formula& f, const Assignment& mu) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
      return f;
    case Op::Var: {
      auto v = mu.value(f.atom());
      return v ? Formula::constant(*v) : f;
    }
    case Op::Not: {
      Formula x = residual_rec(f.lhs(), mu);
      if (x.id() == f.lhs().id() && !x.is_const()) return f;
      return fold_not(x);
    }
    default: {
      Formula l = residual_rec(f.lhs(), mu);
      Formula r = residual_rec(f.rhs(), mu);
      if (l.id() == f.lhs().id() && r.id() == f.rhs().id() && !l.is_const() &&
          !r.is_const()) {
        return f;
      }
      return fold_binary(f.op(), l, r);
    }
  }
}

}  // namespace

Formula residual(const Formula& f, const Assignment& mu) {
  return residual_rec(f, mu);
}

bool sat_total(const Formula& f, const Assignment& eta) {
  switch (f.op()) {
    case Op::True:
      return true;
    case Op::False:
      return false;
    case Op::Var: {
      auto v = eta.value(f.atom());
      if (!v) {
        throw PreconditionError("assignment is not total: " + f.atom().name() +
                                " unbound");
      }
      return *v;
    }
    case Op::Not:
      return !sat_total(f.lhs(), eta);
    case Op::And:
      return sat_total(f.lhs(), eta) && sat_total(f.rhs(), eta);
    case Op::Or:
      return sat_total(f.lhs(), eta) || sat_total(f.rhs(), eta);
    case Op::Implies:
      return !sat_total(f.lhs(), eta) || sat_total(f.rhs(), eta);
    case Op::Iff:
      return sat_total(f.lhs(), eta) == sat_total(f.rhs(), eta);
  }
  return false;
}

// --- truth tables ----------------------------------------------------------

TruthTable::TruthTable(const Formula& f, std::vector<Atom> order)
    : order_(std::move(order)) {
  compile(f);
  scratch_.resize(code_.size());
}

std::uint32_t TruthTable::compile(const Formula& f) {
  Instr ins{f.op()};
  switch (f.op()) {
    case Op::True:
    case Op::False:
      break;
    case Op::Var: {
      auto it = std::lower_bound(order_.begin(), order_.end(), f.atom());
      if (it == order_.end() || *it != f.atom()) {
        throw PreconditionError("atom " + f.atom().name() +
                                " missing from truth-table order");
      }
      ins.a = static_cast<std::uint32_t>(it - order_.begin());
      break;
    }
    case Op::Not:
      ins.a = compile(f.lhs());
      break;
    default:
      ins.a = compile(f.lhs());
      ins.b = compile(f.rhs());
  }
  code_.push_back(ins);
  return static_cast<std::uint32_t>(code_.size() - 1);
}

bool TruthTable::eval_row(std::uint64_t row) const {
  const std::size_t n = order_.size();
  for (std::size_t i = 0; i < code_.size(); ++i) {
    const Instr& ins = code_[i];
    std::uint8_t v = 0;
    switch (ins.op) {
      case Op::True:
        v = 1;
        break;
      case Op::False:
        v = 0;
        break;
      case Op::Var:
        v = ((row >> (n - 1 - ins.a)) & 1U) ? 0 : 1;
        break;
      case Op::Not:
        v = !scratch_[ins.a];
        break;
      case Op::And:
        v = scratch_[ins.a] && scratch_[ins.b];
        break;
      case Op::Or:
        v = scratch_[ins.a] || scratch_[ins.b];
        break;
      case Op::Implies:
        v = !scratch_[ins.a] || scratch_[ins.b];
        break;
      case Op::Iff:
        v = scratch_[ins.a] == scratch_[ins.b];
        break;
    }
    scratch_[i] = v;
  }
  return scratch_.back() != 0;
}

Assignment TruthTable::row_assignment(std::uint64_t row) const {
  std::vector<Literal> lits;
  const std::size_t n = order_.size();
  for (std::size_t i = 0; i < n; ++i) {
    lits.push_back({order_[i], ((row >> (n - 1 - i)) & 1U) == 0});
  }
  return Assignment::from_literals(lits);
}

namespace {

std::vector<Atom> checked_order(const AtomSet& set, std::size_t cap) {
  if (set.size() > cap) {
    throw ResourceLimitError("truth-table sweep over " +
                             std::to_string(set.size()) +
                             " atoms exceeds cap " + std::to_string(cap));
  }
  return {set.begin(), set.end()};
}

std::optional<std::uint64_t> sweep_for(const TruthTable& table, bool want) {
  const std::uint64_t rows = std::uint64_t{1} << table.order().size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    if (table.eval_row(row) == want) return row;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Assignment> brute_find(const Formula& f, bool want,
                                     std::size_t cap) {
  TruthTable table(f, checked_order(atoms(f), cap));
  auto row = sweep_for(table, want);
  if (!row) return std::nullopt;
  return table.row_assignment(*row);
}

bool brute_valid(const Formula& f, std::size_t cap) {
  TruthTable table(f, checked_order(atoms(f), cap));
  return !sweep_for(table, false).has_value();
}

bool brute_satisfiable(const Formula& f, std::size_t cap) {
  TruthTable table(f, checked_order(atoms(f), cap));
  return sweep_for(table, true).has_value();
}

bool brute_equivalent(const Formula& f, const Formula& g, std::size_t cap) {
  AtomSet all = atoms(f);
  collect_atoms(g, all);
  auto order = checked_order(all, cap);
  TruthTable tf(f, order);
  TruthTable tg(g, order);
  const std::uint64_t rows = std::uint64_t{1} << order.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    if (tf.eval_row(row) != tg.eval_row(row)) return false;
  }
  return true;
}

}  // namespace partialsat
