#include "partialsat/quantified.hpp"

#include <algorithm>

#include "partialsat/errors.hpp"
#include "partialsat/partial_sat.hpp"

namespace partialsat {

AtomSet ExistentialFormula::free_atoms() const {
  AtomSet out;
  for (const auto& a : atoms(matrix)) {
    if (!quantified.contains(a)) out.insert(a);
  }
  return out;
}

std::string print(const ExistentialFormula& ef) {
  if (ef.quantified.empty()) return print(ef.matrix);
  std::string out = "exists";
  for (const auto& a : ef.quantified) out += " " + a.name();
  return out + " . " + print(ef.matrix);
}

namespace {

Formula tidy_disjunct(const Formula& d) {
  if (d.op() != Op::And) return d;
  const auto parts = conjuncts(d);
  std::vector<Literal> units;
  bool consistent = true;
  for (const auto& p : parts) {
    auto l = as_literal(p);
    if (!l || std::find(units.begin(), units.end(), *l) != units.end()) continue;
    if (std::find(units.begin(), units.end(), l->negate()) != units.end()) {
      consistent = false;
    }
    units.push_back(*l);
  }
  if (units.empty()) return d;
  const Assignment unit_assignment =
      consistent ? Assignment::from_literals(units) : Assignment{};

  std::vector<Formula> kept;
  std::vector<Literal> emitted;
  for (const auto& p : parts) {
    if (auto l = as_literal(p)) {
      if (std::find(emitted.begin(), emitted.end(), *l) == emitted.end()) {
        emitted.push_back(*l);
        kept.push_back(p);
      }
      continue;
    }
    if (!consistent) {
      kept.push_back(p);
      continue;
    }
    Formula q = residual(p, unit_assignment);
    if (q.is_top()) continue;
    if (q.is_bottom()) return Formula::bottom();
    kept.push_back(q);
  }
  return conjoin(kept);
}

void require_free(const Assignment& mu, const ExistentialFormula& ef) {
  for (const auto& [a, v] : mu.bindings()) {
    if (ef.quantified.contains(a)) {
      throw PreconditionError("assignment binds quantified atom " + a.name());
    }
  }
}

void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw ResourceLimitError(std::string(what) + " over " + std::to_string(n) +
                             " atoms exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

Formula shannon_expand(const ExistentialFormula& ef, const ShannonOptions& opts) {
  require_cap(ef.quantified.size(), opts.cap, "Shannon expansion");
  ExtensionStream deltas({}, ef.quantified);
  std::vector<Formula> kept;
  while (auto delta = deltas.next()) {
    Formula d = tidy_disjunct(residual(ef.matrix, *delta));
    if (d.is_top()) return Formula::top();
    if (d.is_bottom() && !opts.keep_bottom) continue;
    kept.push_back(d);
  }
  return disjoin(kept);
}

ExistsValidation exists_validates(const Assignment& mu,
                                  const ExistentialFormula& ef,
                                  std::size_t cap) {
  require_free(mu, ef);
  require_cap(ef.quantified.size(), cap, "quantified sweep");
  ExtensionStream deltas({}, ef.quantified);
  while (auto delta = deltas.next()) {
    if (validates(unite(mu, *delta), ef.matrix)) return {true, *delta};
  }
  return {false, std::nullopt};
}

ExistsEntailment exists_entails(const Assignment& mu,
                                const ExistentialFormula& ef,
                                std::size_t cap) {
  require_free(mu, ef);
  require_cap(ef.quantified.size(), cap, "quantified sweep");
  AtomSet sweep = ef.free_atoms();
  for (const auto& [a, v] : mu.bindings()) sweep.insert(a);
  ExtensionStream etas(mu, sweep);
  require_cap(etas.free_count(), cap, "free-atom sweep");
  while (auto eta = etas.next()) {
    // only quantified atoms remain in the residual
    const Formula rest = residual(ef.matrix, *eta);
    if (rest.is_top()) continue;
    if (rest.is_bottom() || !brute_satisfiable(rest, cap)) {
      return {false, *eta};
    }
  }
  return {true, std::nullopt};
}

}  // namespace partialsat
