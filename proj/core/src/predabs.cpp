#include "partialsat/predabs.hpp"

#include <stdexcept>

#include <json.hpp>

#include "partialsat/errors.hpp"
#include "partialsat/semantics.hpp"

namespace partialsat {

std::vector<Atom> PredAbsProblem::labels() const {
  std::vector<Atom> out;
  out.reserve(predicates.size());
  for (const auto& p : predicates) out.push_back(p.label);
  return out;
}

void PredAbsProblem::check() const {
  AtomSet inner = atoms(base);
  for (const auto& p : predicates) collect_atoms(p.definition, inner);
  AtomSet seen;
  for (const auto& p : predicates) {
    if (!seen.insert(p.label).second) {
      throw PreconditionError("label " + p.label.name() + " used twice");
    }
    if (inner.contains(p.label)) {
      throw PreconditionError("label " + p.label.name() +
                              " collides with an abstracted atom");
    }
  }
}

PredAbsProblem parse_problem_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed problem JSON: ") + e.what(), 1,
                     e.byte);
  }
  PredAbsProblem p;
  try {
    p.base = parse(j.at("base").get<std::string>());
    for (const auto& item : j.value("predicates", nlohmann::json::array())) {
      p.predicates.push_back({Atom(item.at("label").get<std::string>()),
                              parse(item.at("def").get<std::string>())});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid problem JSON: ") + e.what(), 1, 1);
  }
  p.check();
  return p;
}

std::string problem_to_json(const PredAbsProblem& p) {
  nlohmann::ordered_json j;
  j["base"] = print(p.base);
  j["predicates"] = nlohmann::ordered_json::array();
  for (const auto& pr : p.predicates) {
    j["predicates"].push_back(
        {{"label", pr.label.name()}, {"def", print(pr.definition)}});
  }
  return j.dump(2);
}

ExistentialFormula to_existential(const PredAbsProblem& p) {
  p.check();
  ExistentialFormula ef;
  std::vector<Formula> parts{p.base};
  ef.quantified = atoms(p.base);
  for (const auto& pr : p.predicates) {
    parts.push_back(Formula::iff(Formula::var(pr.label), pr.definition));
    collect_atoms(pr.definition, ef.quantified);
  }
  ef.matrix = conjoin(parts);
  return ef;
}

namespace {

class AbstractionSearch {
 public:
  AbstractionSearch(const PredAbsProblem& p, EnumMode mode,
                    const PredAbsOptions& opts)
      : ef_(to_existential(p)), labels_(p.labels()), mode_(mode), opts_(opts) {}

  void visit(const Assignment& mu) {
    if (++branches_ > kDefaultBranchBudget) {
      throw ResourceLimitError("abstraction branch budget exceeded");
    }
    if (!consistent(mu)) return;
    if (accepts(mu)) {
      found_.push_back(mu);
      return;
    }
    const Atom x = pick(mu);
    visit(mu.with(x, true));
    visit(mu.with(x, false));
  }

  std::vector<Assignment> take() { return std::move(found_); }

 private:
  bool consistent(const Assignment& mu) const {
    return brute_satisfiable(residual(ef_.matrix, mu), opts_.cap);
  }

  bool accepts(const Assignment& mu) const {
    if (mode_ == EnumMode::Validating) {
      return exists_validates(mu, ef_, opts_.cap).holds;
    }
    return exists_entails(mu, ef_, opts_.cap).holds;
  }

  Atom pick(const Assignment& mu) const {
    std::optional<Atom> fallback;
    for (const auto& a : labels_) {
      if (mu.binds(a)) continue;
      if (!fallback) fallback = a;
      for (bool v : {true, false}) {
        const Assignment child = mu.with(a, v);
        if (consistent(child) && exists_entails(child, ef_, opts_.cap).holds) {
          return a;
        }
      }
    }
    if (!fallback) {
      // every label bound and still not accepted: cannot happen for a
      // satisfiable node, since a total label assignment then entails
      throw std::logic_error("abstraction search ran out of labels");
    }
    return *fallback;
  }

  ExistentialFormula ef_;
  std::vector<Atom> labels_;
  EnumMode mode_;
  PredAbsOptions opts_;
  std::size_t branches_ = 0;
  std::vector<Assignment> found_;
};

}  // namespace

EnumResult enumerate_abstraction(const PredAbsProblem& p, EnumMode mode,
                                 const PredAbsOptions& opts) {
  AbstractionSearch search(p, mode, opts);
  search.visit({});
  return {search.take(), mode, Engine::Dpll};
}

ModeComparison compare_modes(const PredAbsProblem& p,
                             const PredAbsOptions& opts) {
  ModeComparison c;
  c.validating = enumerate_abstraction(p, EnumMode::Validating, opts);
  c.entailing = enumerate_abstraction(p, EnumMode::Entailing, opts);
  c.cube_count_validating = c.validating.assignments.size();
  c.cube_count_entailing = c.entailing.assignments.size();
  c.total_literals_validating = c.validating.total_literals();
  c.total_literals_entailing = c.entailing.total_literals();
  c.equivalent = brute_equivalent(c.validating.disjunction(),
                                  c.entailing.disjunction(), opts.cap);
  return c;
}

}  // namespace partialsat
