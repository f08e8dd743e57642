#pragma once

#include <cstddef>
#include <optional>

#include "partialsat/assignment.hpp"
#include "partialsat/formula.hpp"
#include "partialsat/semantics.hpp"

namespace partialsat {

// mu validates f: three-valued evaluation gives T (the residual is `true`).
// Linear in |f|.
bool validates(const Assignment& mu, const Formula& f);

enum class EntailBackend {
  // Truth-table sweep of the residual when it has at most `brute_cap`
  // atoms, DPLL refutation otherwise.
  Auto,
  BruteForce,
  // Tseitin-encode the negated residual and search it for a model.
  DpllRefutation,
};

struct EntailOptions {
  EntailBackend backend = EntailBackend::Auto;
  std::size_t brute_cap = kDefaultBruteCap;
  // 0 = unlimited.
  std::size_t conflict_budget = 1'000'000;
};

struct EntailResult {
  bool entails = false;
  // Set when entails is false: a total extension of mu over
  // atoms(f) ∪ domain(mu) that falsifies f.
  std::optional<Assignment> witness;
};

// mu entails f: every total extension of mu satisfies f, i.e. f|mu is
// valid. Throws ResourceLimitError when the chosen backend runs out of
// budget; that is never reported as `false`.
EntailResult entails(const Assignment& mu, const Formula& f,
                     const EntailOptions& opts = {});

struct SatVerdict {
  bool validates = false;
  bool entails = false;
  std::optional<Assignment> witness;
};

SatVerdict verdict(const Assignment& mu, const Formula& f,
                   const EntailOptions& opts = {});

// Greedily extends an entailing mu until it validates f: repeatedly binds
// the most frequent atom of the residual, `true` first unless that makes
// the residual false. Throws PreconditionError if mu does not entail f.
Assignment extend_to_validating(const Assignment& mu, const Formula& f,
                                const EntailOptions& opts = {});

// On tautology-free CNF validation and entailment coincide. Computes both,
// throws std::logic_error if they ever disagree, and returns the shared
// value. Throws PreconditionError unless f is tautology-free CNF.
bool cnf_equivalence_check(const Assignment& mu, const Formula& f,
                           const EntailOptions& opts = {});

}  // namespace partialsat
