#include "partialsat/partial_sat.hpp"

#include <limits>
#include <stdexcept>

#include "partialsat/cnfize.hpp"
#include "partialsat/enumeration.hpp"
#include "partialsat/errors.hpp"

namespace partialsat {

bool validates(const Assignment& mu, const Formula& f) {
  return eval3(f, mu) == TruthValue3::T;
}

namespace {

// Completes a partial falsifier of the residual into a total extension of
// mu over atoms(f) ∪ domain(mu); atoms it leaves open are set to true.
Assignment complete_witness(const Assignment& mu, const Formula& f,
                            const Assignment& falsifier) {
  Assignment eta = mu;
  for (const auto& [a, v] : falsifier.bindings()) {
    if (!eta.binds(a)) eta = eta.with(a, v);
  }
  for (const auto& a : atoms(f)) {
    if (!eta.binds(a)) eta = eta.with(a, true);
  }
  if (sat_total(f, eta)) {
    throw std::logic_error("entailment witness does not falsify the formula");
  }
  return eta;
}

EntailResult refute_by_dpll(const Assignment& mu, const Formula& f,
                            const Formula& rest, const EntailOptions& opts) {
  // rest is neither true nor false here
  TseitinResult enc = tseitin(!rest);
  DpllOptions dopts;
  dopts.conflict_budget = opts.conflict_budget;
  dopts.branch_budget = opts.conflict_budget == 0
                            ? std::numeric_limits<std::size_t>::max()
                            : 2 * opts.conflict_budget + 1;
  auto model = dpll_solve(enc.cnf, dopts);
  if (!model) return {true, std::nullopt};
  return {false, complete_witness(mu, f, model->restrict_to(atoms(rest)))};
}

}  // namespace

EntailResult entails(const Assignment& mu, const Formula& f,
                     const EntailOptions& opts) {
  const Formula rest = residual(f, mu);
  if (rest.is_top()) return {true, std::nullopt};
  if (rest.is_bottom()) return {false, complete_witness(mu, f, {})};

  bool use_brute = false;
  switch (opts.backend) {
    case EntailBackend::BruteForce:
      use_brute = true;
      break;
    case EntailBackend::DpllRefutation:
      use_brute = false;
      break;
    case EntailBackend::Auto:
      use_brute = atoms(rest).size() <= opts.brute_cap;
      break;
  }
  if (!use_brute) return refute_by_dpll(mu, f, rest, opts);

  auto falsifier = brute_find(rest, false, opts.brute_cap);
  if (!falsifier) return {true, std::nullopt};
  return {false, complete_witness(mu, f, *falsifier)};
}

SatVerdict verdict(const Assignment& mu, const Formula& f,
                   const EntailOptions& opts) {
  SatVerdict v;
  v.validates = validates(mu, f);
  if (v.validates) {
    v.entails = true;
    return v;
  }
  auto e = entails(mu, f, opts);
  v.entails = e.entails;
  v.witness = std::move(e.witness);
  return v;
}

Assignment extend_to_validating(const Assignment& mu, const Formula& f,
                                const EntailOptions& opts) {
  if (!entails(mu, f, opts).entails) {
    throw PreconditionError("assignment {" + mu.str() +
                            "} does not entail the formula");
  }
  Assignment cur = mu;
  Formula rest = residual(f, mu);
  // Every extension of an entailing assignment still entails, so the
  // residual never becomes false and the loop ends once it is `true`.
  while (!rest.is_top()) {
    auto counts = atom_occurrences(rest);
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    const Atom x = best->first;
    Formula pos = residual(rest, Assignment{}.with(x, true));
    if (!pos.is_bottom()) {
      cur = cur.with(x, true);
      rest = pos;
    } else {
      cur = cur.with(x, false);
      rest = residual(rest, Assignment{}.with(x, false));
    }
  }
  return cur;
}

bool cnf_equivalence_check(const Assignment& mu, const Formula& f,
                           const EntailOptions& opts) {
  if (!classify(f).is_tautology_free_cnf) {
    throw PreconditionError("formula is not a tautology-free CNF");
  }
  const bool v = validates(mu, f);
  const bool e = entails(mu, f, opts).entails;
  if (v != e) {
    throw std::logic_error("validation and entailment disagree on a "
                           "tautology-free CNF");
  }
  return v;
}

}  // namespace partialsat
