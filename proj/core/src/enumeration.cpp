#include "partialsat/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "partialsat/errors.hpp"
#include "partialsat/partial_sat.hpp"
#include "partialsat/semantics.hpp"

namespace partialsat {

std::string_view to_string(EnumMode m) noexcept {
  return m == EnumMode::Entailing ? "entailing" : "validating";
}

std::string_view to_string(Engine e) noexcept {
  switch (e) {
    case Engine::Obdd:
      return "obdd";
    case Engine::Tableaux:
      return "tableaux";
    default:
      return "dpll";
  }
}

Formula EnumResult::disjunction() const {
  std::vector<Formula> cubes;
  cubes.reserve(assignments.size());
  for (const auto& mu : assignments) cubes.push_back(mu.to_cube());
  return disjoin(cubes);
}

std::size_t EnumResult::total_literals() const {
  std::size_t n = 0;
  for (const auto& mu : assignments) n += mu.size();
  return n;
}

// --- OBDD ------------------------------------------------------------------

EnumResult obdd_enumerate(const Obdd& b) {
  return {b.paths(), EnumMode::Entailing, Engine::Obdd};
}

// --- tableaux --------------------------------------------------------------

Formula desugar(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Var:
      return f;
    case Op::Not:
      return !desugar(f.lhs());
    case Op::And:
      return desugar(f.lhs()) & desugar(f.rhs());
    case Op::Or:
      return !((!desugar(f.lhs())) & (!desugar(f.rhs())));
    case Op::Implies:
      return !(desugar(f.lhs()) & (!desugar(f.rhs())));
    case Op::Iff: {
      Formula a = desugar(f.lhs());
      Formula b = desugar(f.rhs());
      return (!(a & (!b))) & (!(b & (!a)));
    }
  }
  return f;
}

namespace {

class Tableau {
 public:
  explicit Tableau(std::size_t budget) : budget_(budget) {}

  void expand(std::vector<Formula> pending, std::map<Atom, bool> lits) {
    if (++branches_ > budget_) {
      throw ResourceLimitError("tableaux branch budget of " +
                               std::to_string(budget_) + " exceeded");
    }
    // Alpha rules and literals first; beta formulas are deferred.
    std::vector<Formula> betas;
    while (!pending.empty()) {
      Formula g = pending.front();
      pending.erase(pending.begin());
      if (auto l = as_literal(g)) {
        auto [it, inserted] = lits.emplace(l->atom, l->positive);
        if (!inserted && it->second != l->positive) return;  // closed
        continue;
      }
      switch (g.op()) {
        case Op::True:
          continue;
        case Op::False:
          return;
        case Op::And:
          pending.push_back(g.lhs());
          pending.push_back(g.rhs());
          continue;
        case Op::Not: {
          const Formula& x = g.lhs();
          if (x.is_top()) return;
          if (x.is_bottom()) continue;
          if (x.op() == Op::Not) {
            pending.push_back(x.lhs());
            continue;
          }
          betas.push_back(g);  // !(a & b)
          continue;
        }
        default:
          throw PreconditionError("tableaux expects a desugared formula");
      }
    }
    if (betas.empty()) {
      std::vector<Literal> out;
      for (const auto& [a, v] : lits) out.push_back({a, v});
      found_.push_back(Assignment::from_literals(out));
      return;
    }
    const Formula beta = betas.front();
    std::vector<Formula> rest(betas.begin() + 1, betas.end());
    for (const Formula& side : {beta.lhs().lhs(), beta.lhs().rhs()}) {
      std::vector<Formula> next = rest;
      next.insert(next.begin(), !side);
      expand(std::move(next), lits);
    }
  }

  std::vector<Assignment> take() { return std::move(found_); }

 private:
  std::size_t budget_;
  std::size_t branches_ = 0;
  std::vector<Assignment> found_;
};

}  // namespace

EnumResult tableaux_enumerate(const Formula& f, const TableauxOptions& opts) {
  Tableau t(opts.branch_budget);
  t.expand({desugar(f)}, {});
  auto found = t.take();
  if (opts.dedup) {
    std::vector<Assignment> unique;
    for (auto& mu : found) {
      if (std::find(unique.begin(), unique.end(), mu) == unique.end()) {
        unique.push_back(std::move(mu));
      }
    }
    found = std::move(unique);
  }
  return {std::move(found), EnumMode::Validating, Engine::Tableaux};
}

// --- DPLL ------------------------------------------------------------------

namespace {

class DpllSearch {
 public:
  DpllSearch(const DpllOptions& opts, bool first_only)
      : opts_(opts), first_only_(first_only) {}

  void visit(Formula g, Assignment mu) {
    if (++branches_ > opts_.branch_budget) {
      throw ResourceLimitError("DPLL branch budget of " +
                               std::to_string(opts_.branch_budget) +
                               " exceeded");
    }
    if (opts_.unit_propagation) propagate(g, mu);
    if (g.is_top()) {
      found_.push_back(std::move(mu));
      return;
    }
    if (g.is_bottom()) {
      if (opts_.conflict_budget != 0 && ++conflicts_ > opts_.conflict_budget) {
        throw ResourceLimitError("DPLL conflict budget of " +
                                 std::to_string(opts_.conflict_budget) +
                                 " exceeded");
      }
      return;
    }
    const Atom x = pick(g);
    for (bool value : {true, false}) {
      Assignment step = Assignment{}.with(x, value);
      visit(residual(g, step), mu.with(x, value));
      if (first_only_ && !found_.empty()) return;
    }
  }

  std::vector<Assignment> take() { return std::move(found_); }

 private:
  // Assigns every literal conjunct of the residual until none is left.
  static void propagate(Formula& g, Assignment& mu) {
    while (!g.is_const()) {
      std::vector<Literal> units;
      for (const auto& c : conjuncts(g)) {
        if (auto l = as_literal(c)) units.push_back(*l);
      }
      if (units.empty()) return;
      Assignment forced;
      for (const auto& l : units) {
        auto v = forced.value(l.atom);
        if (v && *v != l.positive) {
          g = Formula::bottom();
          return;
        }
        forced = forced.with(l);
      }
      g = residual(g, forced);
      mu = unite(mu, forced);
    }
  }

  Atom pick(const Formula& g) const {
    if (opts_.heuristic == BranchHeuristic::FixedOrder) {
      AtomSet present = atoms(g);
      for (const auto& a : opts_.order) {
        if (present.contains(a)) return a;
      }
      return *present.begin();
    }
    auto counts = atom_occurrences(g);
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    return best->first;
  }

  const DpllOptions& opts_;
  bool first_only_;
  std::size_t branches_ = 0;
  std::size_t conflicts_ = 0;
  std::vector<Assignment> found_;
};

}  // namespace

EnumResult dpll_enumerate(const Formula& f, const DpllOptions& opts) {
  DpllSearch search(opts, false);
  search.visit(residual(f, {}), {});
  return {search.take(), EnumMode::Validating, Engine::Dpll};
}

std::optional<Assignment> dpll_solve(const Formula& f, const DpllOptions& opts) {
  DpllSearch search(opts, true);
  search.visit(residual(f, {}), {});
  auto found = search.take();
  if (found.empty()) return std::nullopt;
  return found.front();
}

// --- verification ----------------------------------------------------------

EnumerationReport verify_enumeration(const EnumResult& r, const Formula& f) {
  EnumerationReport rep;
  for (std::size_t i = 0; i < r.assignments.size(); ++i) {
    const Assignment& mu = r.assignments[i];
    const bool ok = r.mode == EnumMode::Entailing ? entails(mu, f).entails
                                                  : validates(mu, f);
    if (!ok) rep.predicate_violations.push_back(i);
  }
  if (r.engine != Engine::Tableaux) {
    for (std::size_t i = 0; i < r.assignments.size(); ++i) {
      for (std::size_t j = i + 1; j < r.assignments.size(); ++j) {
        if (!r.assignments[i].conflicts_with(r.assignments[j])) {
          rep.overlapping_pairs.emplace_back(i, j);
        }
      }
    }
    rep.pairwise_inconsistent = rep.overlapping_pairs.empty();
  }
  rep.equivalent = brute_equivalent(r.disjunction(), f);
  return rep;
}

}  // namespace partialsat
