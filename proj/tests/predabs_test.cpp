#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "partialsat/errors.hpp"
#include "partialsat/predabs.hpp"
#include "partialsat/quantified.hpp"
#include "support/oracle.hpp"

using namespace partialsat;

namespace {

PredAbsProblem load(const std::string& name) {
  std::ifstream in(std::string(PARTIALSAT_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_json(ss.str());
}

std::set<std::string> cube_set(const EnumResult& r) {
  std::set<std::string> out;
  for (const auto& mu : r.assignments) out.insert(mu.str());
  return out;
}

// PredAbs over the labels, computed by brute force as a set of total label
// assignments for which some assignment of the inner atoms satisfies it.
std::set<std::string> models_over_labels(const PredAbsProblem& p) {
  const ExistentialFormula ef = to_existential(p);
  std::set<std::string> labels, inner;
  for (const auto& a : p.labels()) labels.insert(a.name());
  for (const auto& a : ef.quantified) inner.insert(a.name());
  std::set<std::string> out;
  oracle::for_each_total(labels, {}, [&](const oracle::Env& eta) {
    std::set<std::string> all = inner;
    for (const auto& [k, v] : eta) all.insert(k);
    const bool sat = !oracle::for_each_total(all, eta, [&](const oracle::Env& e) {
      return !oracle::ev(ef.matrix, e);
    });
    if (sat) {
      std::string s;
      for (const auto& [k, v] : eta) s += (v ? "" : "!") + k + " ";
      out.insert(s);
    }
    return true;
  });
  return out;
}

std::set<std::string> models_of_cubes(const EnumResult& r,
                                      const std::vector<Atom>& labels) {
  std::set<std::string> names;
  for (const auto& a : labels) names.insert(a.name());
  std::set<std::string> out;
  oracle::for_each_total(names, {}, [&](const oracle::Env& eta) {
    if (oracle::ev(r.disjunction(), eta)) {
      std::string s;
      for (const auto& [k, v] : eta) s += (v ? "" : "!") + k + " ";
      out.insert(s);
    }
    return true;
  });
  return out;
}

void check_result(const EnumResult& r, const PredAbsProblem& p) {
  const ExistentialFormula ef = to_existential(p);
  for (std::size_t i = 0; i < r.assignments.size(); ++i) {
    for (std::size_t j = i + 1; j < r.assignments.size(); ++j) {
      ASSERT_TRUE(r.assignments[i].conflicts_with(r.assignments[j]));
    }
    if (r.mode == EnumMode::Validating) {
      ASSERT_TRUE(exists_validates(r.assignments[i], ef).holds);
    } else {
      ASSERT_TRUE(exists_entails(r.assignments[i], ef).holds);
    }
  }
  ASSERT_EQ(models_of_cubes(r, p.labels()), models_over_labels(p));
}

}  // namespace

TEST(PredAbs, WorkedExample) {
  const PredAbsProblem p = load("ex41.json");
  const auto v = enumerate_abstraction(p, EnumMode::Validating);
  const auto e = enumerate_abstraction(p, EnumMode::Entailing);
  EXPECT_EQ(cube_set(v), (std::set<std::string>{"A1, !A2", "!A1, !A2"}));
  EXPECT_EQ(cube_set(e), std::set<std::string>{"!A2"});
  check_result(v, p);
  check_result(e, p);

  const ModeComparison c = compare_modes(p);
  EXPECT_TRUE(c.equivalent);
  EXPECT_EQ(c.cube_count_validating, 2u);
  EXPECT_EQ(c.cube_count_entailing, 1u);
  EXPECT_EQ(c.total_literals_validating, 4u);
  EXPECT_EQ(c.total_literals_entailing, 1u);
}

TEST(PredAbs, ProseVariantOfSecondPredicate) {
  // With the second predicate defined as !B1 & B2 the base still forces
  // B1 = B2, so A2 is false in every model; the answer is derived here by
  // brute force instead of being copied from the worked example.
  PredAbsProblem p = load("ex41.json");
  p.predicates[1].definition = parse("!B1 & B2");
  const auto models = models_over_labels(p);
  EXPECT_EQ(models, (std::set<std::string>{"A1 !A2 ", "!A1 !A2 "}));
  const auto e = enumerate_abstraction(p, EnumMode::Entailing);
  check_result(e, p);
  EXPECT_EQ(cube_set(e), std::set<std::string>{"!A2"});
  check_result(enumerate_abstraction(p, EnumMode::Validating), p);
}

TEST(PredAbs, JsonRoundTripAndErrors) {
  const PredAbsProblem p = load("ex41.json");
  const PredAbsProblem q = parse_problem_json(problem_to_json(p));
  EXPECT_EQ(q.base, p.base);
  ASSERT_EQ(q.predicates.size(), 2u);
  EXPECT_EQ(q.predicates[1].definition, p.predicates[1].definition);
  EXPECT_EQ(print(to_existential(p)),
            "exists B1 B2 . (!B1 | B2) & (B1 | !B2) & (A1 <-> B1 & B2) & "
            "(A2 <-> B1 & !B2)");

  EXPECT_THROW(parse_problem_json("{"), ParseError);
  EXPECT_THROW(parse_problem_json(R"({"predicates": []})"), ParseError);
  EXPECT_THROW(parse_problem_json(R"({"base": "B1 &"})"), ParseError);
  EXPECT_THROW(parse_problem_json(
                   R"({"base": "B1", "predicates": [{"label": "B1", "def": "B1"}]})"),
               PreconditionError);
  EXPECT_THROW(parse_problem_json(R"({"base": "B1", "predicates": [
                   {"label": "A1", "def": "B1"}, {"label": "A1", "def": "!B1"}]})"),
               PreconditionError);
}

TEST(PredAbs, UnsatisfiableBaseGivesNoCubes) {
  PredAbsProblem p;
  p.base = parse("B1 & !B1");
  p.predicates = {{Atom("A1"), parse("B1")}};
  EXPECT_TRUE(enumerate_abstraction(p, EnumMode::Entailing).assignments.empty());
  EXPECT_TRUE(compare_modes(p).equivalent);
}

TEST(PredAbs, RandomProblems) {
  oracle::Gen gen(61);
  const auto bpool = oracle::atom_pool(4, "B");
  const auto labels = oracle::atom_pool(4, "A");
  int strictly_smaller = 0;
  for (int i = 0; i < 120; ++i) {
    PredAbsProblem p;
    p.base = gen.formula(bpool, gen.uniform(1, 4));
    const int n = gen.uniform(1, 4);
    for (int k = 0; k < n; ++k) {
      p.predicates.push_back({Atom(labels[k]), gen.formula(bpool, gen.uniform(1, 3))});
    }
    const auto v = enumerate_abstraction(p, EnumMode::Validating);
    const auto e = enumerate_abstraction(p, EnumMode::Entailing);
    check_result(v, p);
    check_result(e, p);
    ASSERT_LE(e.assignments.size(), v.assignments.size());
    for (const auto& mu : e.assignments) {
      bool covered = false;
      for (const auto& nu : v.assignments) covered = covered || mu.subset_of(nu);
      ASSERT_TRUE(covered) << problem_to_json(p);
    }
    const Formula sh = shannon_expand(to_existential(p));
    ASSERT_TRUE(oracle::equivalent(v.disjunction(), sh));
    ASSERT_TRUE(oracle::equivalent(e.disjunction(), sh));
    strictly_smaller += e.assignments.size() < v.assignments.size();
  }
  EXPECT_GT(strictly_smaller, 0);
}
