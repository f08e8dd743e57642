#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "partialsat/enumeration.hpp"
#include "partialsat/formula.hpp"
#include "partialsat/quantified.hpp"

namespace partialsat {

struct Predicate {
  Atom label;
  Formula definition;
};

// PredAbs(base, {label_i := def_i}) = exists atoms(base, defs) .
//   base & (label_1 <-> def_1) & ... & (label_n <-> def_n)
struct PredAbsProblem {
  Formula base = Formula::top();
  std::vector<Predicate> predicates;

  std::vector<Atom> labels() const;
  // Throws PreconditionError on repeated labels or a label that also occurs
  // in the base or in a definition.
  void check() const;
};

// {"base": "<formula>", "predicates": [{"label": "A1", "def": "<formula>"}]}
PredAbsProblem parse_problem_json(std::string_view json_text);
std::string problem_to_json(const PredAbsProblem& p);

ExistentialFormula to_existential(const PredAbsProblem& p);

struct PredAbsOptions {
  std::size_t cap = kDefaultBruteCap;
};

// DPLL over the label atoms only. A node is closed when base & definitions
// & mu is unsatisfiable; it is emitted once mu passes the mode's test
// (exists-validation or exists-entailment). Branching picks, in label
// order, the first atom having a polarity that yields an entailing child,
// falling back to the first unassigned label; `true` is explored first.
// The branching rule ignores the mode, so the validating search tree
// refines the entailing one. Cubes are pairwise inconsistent.
EnumResult enumerate_abstraction(const PredAbsProblem& p, EnumMode mode,
                                 const PredAbsOptions& opts = {});

struct ModeComparison {
  EnumResult validating;
  EnumResult entailing;
  std::size_t cube_count_validating = 0;
  std::size_t cube_count_entailing = 0;
  std::size_t total_literals_validating = 0;
  std::size_t total_literals_entailing = 0;
  // Both disjunctions are equivalent over the labels.
  bool equivalent = false;
};

ModeComparison compare_modes(const PredAbsProblem& p,
                             const PredAbsOptions& opts = {});

}  // namespace partialsat
