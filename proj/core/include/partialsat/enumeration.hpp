#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "partialsat/assignment.hpp"
#include "partialsat/formula.hpp"
#include "partialsat/obdd.hpp"

namespace partialsat {

enum class EnumMode { Entailing, Validating };
enum class Engine { Obdd, Tableaux, Dpll };

std::string_view to_string(EnumMode m) noexcept;
std::string_view to_string(Engine e) noexcept;

struct EnumResult {
  std::vector<Assignment> assignments;
  EnumMode mode = EnumMode::Validating;
  Engine engine = Engine::Dpll;

  // Disjunction of the assignment cubes (false when empty).
  Formula disjunction() const;
  std::size_t total_literals() const;
};

inline constexpr std::size_t kDefaultBranchBudget = 100'000;

// One ROBDD path per entailing assignment.
EnumResult obdd_enumerate(const Obdd& b);

struct TableauxOptions {
  std::size_t branch_budget = kDefaultBranchBudget;
  // Drop exact duplicate assignments (subsumed ones are kept).
  bool dedup = false;
};

// Propositional tableaux on the {!, &}-desugared formula. Each open,
// saturated branch contributes its literal set.
EnumResult tableaux_enumerate(const Formula& f, const TableauxOptions& opts = {});

// Rewrites |, ->, <-> in terms of ! and &.
Formula desugar(const Formula& f);

enum class BranchHeuristic {
  // Atom with most occurrences in the current residual, ties by atom order.
  MostFrequent,
  // First atom of `DpllOptions::order` occurring in the current residual;
  // atoms missing from the order follow in lexicographic order.
  FixedOrder,
};

struct DpllOptions {
  BranchHeuristic heuristic = BranchHeuristic::MostFrequent;
  std::vector<Atom> order;
  bool unit_propagation = true;
  std::size_t branch_budget = kDefaultBranchBudget;
  // Closed (false) leaves allowed before giving up; 0 means unlimited.
  std::size_t conflict_budget = 0;
};

// Non-CNF DPLL on residuals: branch on an atom of the current residual,
// record the trail when the residual becomes `true`, backtrack on `false`.
// Unit propagation assigns literal conjuncts of the residual. There is no
// pure-literal rule.
EnumResult dpll_enumerate(const Formula& f, const DpllOptions& opts = {});

// First validating assignment found by the same search, if f is satisfiable.
std::optional<Assignment> dpll_solve(const Formula& f,
                                     const DpllOptions& opts = {});

struct EnumerationReport {
  // Indices of assignments failing the mode predicate.
  std::vector<std::size_t> predicate_violations;
  // Unset for tableaux, where disjointness is not required.
  std::optional<bool> pairwise_inconsistent;
  std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs;
  bool equivalent = false;

  bool predicate_ok() const { return predicate_violations.empty(); }
  bool ok() const {
    return predicate_ok() && pairwise_inconsistent.value_or(true) && equivalent;
  }
};

// Re-checks an enumeration against its source formula. Uses truth-table
// sweeps, so atoms(f) must stay within the brute-force cap.
EnumerationReport verify_enumeration(const EnumResult& r, const Formula& f);

}  // namespace partialsat
