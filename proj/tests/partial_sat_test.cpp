#include <gtest/gtest.h>

#include "partialsat/errors.hpp"
#include "partialsat/partial_sat.hpp"
#include "support/oracle.hpp"

using namespace partialsat;

namespace {

const char* kEx1 = "(A1 & A2) | (A1 & !A2)";

EntailOptions forced(EntailBackend b) {
  EntailOptions o;
  o.backend = b;
  return o;
}

}  // namespace

TEST(Verdict, ValidationEntailmentGap) {
  const Formula f = parse(kEx1);
  const Assignment mu = Assignment::parse("A1");
  auto v = verdict(mu, f);
  EXPECT_FALSE(v.validates);
  EXPECT_TRUE(v.entails);
  EXPECT_FALSE(v.witness.has_value());
  EXPECT_TRUE(validates(Assignment::parse("A1, A2"), f));
}

TEST(Entails, WitnessIsTotalAndFalsifying) {
  const Formula f = parse("A1 | (A2 & A3)");
  const Assignment mu = Assignment::parse("!A1, B9");
  for (auto b : {EntailBackend::BruteForce, EntailBackend::DpllRefutation}) {
    auto r = entails(mu, f, forced(b));
    ASSERT_FALSE(r.entails);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(mu.subset_of(*r.witness));
    AtomSet want = atoms(f);
    want.insert(Atom("B9"));
    EXPECT_EQ(r.witness->domain(), want);
    EXPECT_FALSE(sat_total(f, *r.witness));
  }
}

TEST(Entails, ConstantResiduals) {
  EXPECT_TRUE(entails({}, Formula::top()).entails);
  auto r = entails(Assignment::parse("!A1"), parse("A1 & A2"));
  EXPECT_FALSE(r.entails);
  EXPECT_EQ(r.witness->str(), "!A1, A2");
}

TEST(Entails, ResourceLimitIsNotFalse) {
  // A valid formula the refuter has to work on: the residual is not folded
  // to true, so the Tseitin/DPLL path runs and hits the conflict budget.
  std::string text = "(X1 | !X1)";
  for (int i = 2; i <= 12; ++i) {
    text += " & (X" + std::to_string(i) + " | !X" + std::to_string(i) + ")";
  }
  EntailOptions o = forced(EntailBackend::DpllRefutation);
  o.conflict_budget = 1;
  EXPECT_THROW(entails({}, parse(text), o), ResourceLimitError);
  EntailOptions b = forced(EntailBackend::BruteForce);
  b.brute_cap = 4;
  EXPECT_THROW(entails({}, parse(text), b), ResourceLimitError);
  EXPECT_TRUE(entails({}, parse(text)).entails);
}

TEST(Entails, AutoSwitchesToRefutationAboveCap) {
  std::string text = "X1";
  for (int i = 2; i <= 30; ++i) text += " | X" + std::to_string(i);
  const Formula f = parse(text);
  EXPECT_FALSE(entails({}, f).entails);
  EXPECT_TRUE(entails(Assignment::parse("X17"), f).entails);
  EXPECT_TRUE(entails({}, Formula::implies(f, f)).entails);
}

TEST(Entails, ValidationCounterexamplePair) {
  // equivalent formulas, validation differs, entailment does not
  const Formula f = parse(kEx1);
  const Formula g = parse("A1");
  const Assignment mu = Assignment::parse("A1");
  ASSERT_TRUE(brute_equivalent(f, g));
  EXPECT_NE(validates(mu, f), validates(mu, g));
  EXPECT_EQ(entails(mu, f).entails, entails(mu, g).entails);
}

TEST(Entails, RandomAgainstOracle) {
  oracle::Gen gen(21);
  const auto pool = oracle::atom_pool(7);
  std::size_t gap = 0;
  for (int i = 0; i < 1500; ++i) {
    Formula f = gen.formula(pool, gen.uniform(1, 6));
    Assignment mu = gen.partial(pool, 0.4);
    const bool e = oracle::entails(mu, f);
    const bool v = oracle::validates(mu, f);
    ASSERT_EQ(validates(mu, f), v) << print(f) << " / " << mu.str();
    for (auto b : {EntailBackend::BruteForce, EntailBackend::DpllRefutation}) {
      auto r = entails(mu, f, forced(b));
      ASSERT_EQ(r.entails, e) << print(f) << " / " << mu.str();
      if (r.witness) ASSERT_FALSE(oracle::ev(f, oracle::env_of(*r.witness)));
    }
    // cube view: mu entails f iff (cube -> f) is valid
    ASSERT_EQ(e, oracle::valid(Formula::implies(mu.to_cube(), f)));
    if (v) ASSERT_TRUE(e);
    if (e && !v) ++gap;
  }
  EXPECT_GT(gap, 0u);
}

TEST(ExtendToValidating, ProducesValidatingSuperset) {
  const Formula f = parse(kEx1);
  const Assignment mu = Assignment::parse("A1");
  const Assignment ext = extend_to_validating(mu, f);
  EXPECT_TRUE(mu.subset_of(ext));
  EXPECT_TRUE(validates(ext, f));
  EXPECT_EQ(ext.str(), "A1, A2");
  EXPECT_THROW(extend_to_validating({}, f), PreconditionError);

  oracle::Gen gen(22);
  const auto pool = oracle::atom_pool(6);
  for (int i = 0; i < 500; ++i) {
    Formula g = gen.formula(pool, gen.uniform(1, 6));
    Assignment nu = gen.partial(pool);
    if (!oracle::entails(nu, g)) continue;
    Assignment x = extend_to_validating(nu, g);
    ASSERT_TRUE(nu.subset_of(x));
    ASSERT_TRUE(oracle::validates(x, g)) << print(g);
  }
}

TEST(CnfCollapse, TautologyFreeCnf) {
  oracle::Gen gen(23);
  const auto pool = oracle::atom_pool(6);
  for (int i = 0; i < 800; ++i) {
    Formula f = gen.tautology_free_cnf(pool, 6, 4);
    ASSERT_TRUE(classify(f).is_tautology_free_cnf);
    Assignment mu = gen.partial(pool);
    ASSERT_EQ(cnf_equivalence_check(mu, f), oracle::entails(mu, f));
  }
  EXPECT_THROW(cnf_equivalence_check({}, parse("A1 | !A1")), PreconditionError);
  EXPECT_THROW(cnf_equivalence_check({}, parse(kEx1)), PreconditionError);
}
