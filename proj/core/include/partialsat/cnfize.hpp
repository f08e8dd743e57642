#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partialsat/assignment.hpp"
#include "partialsat/formula.hpp"
#include "partialsat/partial_sat.hpp"

namespace partialsat {

// label <-> (lhs op rhs)
struct TseitinDefinition {
  Atom label;
  Op op;
  Literal lhs;
  Literal rhs;

  Formula defining_formula() const;
};

struct TseitinResult {
  Formula cnf = Formula::top();
  // Fresh atoms in introduction order.
  std::vector<Atom> fresh_atoms;
  std::vector<TseitinDefinition> definitions;
};

// Tseitin CNF-ization. Constants are folded first; a literal or constant
// passes through unchanged. Otherwise the clause structure at the top is
// kept and every non-literal subformula in a literal position is labelled
// bottom-up, left to right, by fresh atoms B1, B2, ... (skipping names that
// already occur in f). Output: top-level clauses, then each definition's
// clauses in introduction order.
TseitinResult tseitin(const Formula& f);

// Clauses of one definition: the !label clauses first, then the label ones.
std::vector<std::vector<Literal>> definition_clauses(const TseitinDefinition& d);

// Removes tautological clauses; an all-tautology CNF becomes `true`.
// Throws PreconditionError if cnf is not CNF.
Formula strip_tautologies(const Formula& cnf);

enum class DeltaOutcome {
  Holds,
  // validation: mu ∪ delta does not validate the CNF.
  NotValidated,
  // entailment: some total extension of mu ∪ delta falsifies the CNF.
  FalsifiedByExtension,
  // entailment: no extension of mu ∪ delta satisfies the CNF at all.
  Inconsistent,
};

std::string_view to_string(DeltaOutcome o) noexcept;

struct DeltaCase {
  Assignment delta;
  DeltaOutcome outcome = DeltaOutcome::Holds;
  std::optional<Assignment> witness;
};

struct LossReport {
  TseitinResult encoding;
  // One entry per total delta over the fresh atoms, in sweep order.
  std::vector<DeltaCase> cases;
  // True if no delta preserves the property.
  bool loss = false;
};

inline constexpr std::size_t kDefaultFreshSweepCap = 20;

// For mu validating f, checks every total delta over the fresh atoms of
// tseitin(f) for mu ∪ delta validating the CNF.
LossReport check_validation_loss(const Assignment& mu, const Formula& f,
                                 std::size_t sweep_cap = kDefaultFreshSweepCap);

// For mu entailing f, checks every total delta for mu ∪ delta entailing the
// CNF, separating falsified deltas from deltas inconsistent with the CNF.
LossReport check_entailment_loss(const Assignment& mu, const Formula& f,
                                 std::size_t sweep_cap = kDefaultFreshSweepCap,
                                 const EntailOptions& opts = {});

// DIMACS CNF. Atoms are numbered by first occurrence; the numbering is
// written as `c <index> <name>` comment lines before the header.
std::string to_dimacs(const Formula& cnf);

}  // namespace partialsat
