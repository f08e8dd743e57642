#include <gtest/gtest.h>

#include "partialsat/errors.hpp"
#include "partialsat/partial_sat.hpp"
#include "partialsat/quantified.hpp"
#include "support/oracle.hpp"

using namespace partialsat;

namespace {

const char* kPsi =
    "exists B1 B2 . (B1 | B2) & (!B1 | A1) & (!B1 | A2) & (B1 | !A1 | !A2)"
    " & (!B2 | A1) & (!B2 | !A2) & (B2 | !A1 | A2)";

// exists-entailment straight from the definition, on oracle semantics.
bool oracle_exists_entails(const Assignment& mu, const ExistentialFormula& ef) {
  std::set<std::string> free, bound;
  for (const auto& a : ef.free_atoms()) free.insert(a.name());
  for (const auto& a : ef.quantified) bound.insert(a.name());
  for (const auto& [a, v] : mu.bindings()) free.insert(a.name());
  return oracle::for_each_total(free, oracle::env_of(mu), [&](const oracle::Env& eta) {
    std::set<std::string> all = bound;
    for (const auto& [k, v] : eta) all.insert(k);
    return !oracle::for_each_total(all, eta, [&](const oracle::Env& e) {
      return !oracle::ev(ef.matrix, e);
    });
  });
}

bool oracle_exists_validates(const Assignment& mu, const ExistentialFormula& ef) {
  std::set<std::string> bound;
  for (const auto& a : ef.quantified) bound.insert(a.name());
  const oracle::Env base = oracle::env_of(mu);
  return !oracle::for_each_total(bound, {}, [&](const oracle::Env& delta) {
    oracle::Env e = base;
    for (const auto& [k, v] : delta) e[k] = v;
    return oracle::ev3(ef.matrix, e) != oracle::T;
  });
}

}  // namespace

TEST(Shannon, TautologyFreeCnfExample) {
  const ExistentialFormula ef = parse_existential(kPsi);
  ASSERT_TRUE(classify(ef.matrix).is_tautology_free_cnf);
  ShannonOptions keep;
  keep.keep_bottom = true;
  EXPECT_EQ(print(shannon_expand(ef, keep)),
            "(A1 & A2 & !A2) | (A1 & A2) | (A1 & !A2) | false");
  EXPECT_EQ(print(shannon_expand(ef)), "(A1 & A2 & !A2) | (A1 & A2) | (A1 & !A2)");

  const Assignment mu = Assignment::parse("A1");
  EXPECT_TRUE(exists_entails(mu, ef).holds);
  EXPECT_FALSE(exists_validates(mu, ef).holds);
  EXPECT_TRUE(entails(mu, shannon_expand(ef)).entails);
  EXPECT_FALSE(validates(mu, shannon_expand(ef)));
}

TEST(Shannon, EdgeCases) {
  EXPECT_EQ(shannon_expand(parse_existential("exists B1 . B1 | A1")), Formula::top());
  EXPECT_EQ(shannon_expand(parse_existential("exists B1 . B1 & !B1")),
            Formula::bottom());
  EXPECT_EQ(print(shannon_expand(parse_existential("A1 & A2"))), "A1 & A2");
  // quantifying an absent atom just duplicates the disjunct
  EXPECT_EQ(print(shannon_expand(parse_existential("exists B1 . A1"))), "A1 | A1");
  ShannonOptions small;
  small.cap = 1;
  EXPECT_THROW(shannon_expand(parse_existential("exists B1 B2 . B1 & B2"), small),
               ResourceLimitError);
}

TEST(Existential, ParseAndPrint) {
  const auto ef = parse_existential("exists B2 B1 . B1 -> A1");
  EXPECT_EQ(print(ef), "exists B1 B2 . B1 -> A1");
  EXPECT_EQ(ef.free_atoms(), AtomSet{Atom("A1")});
  EXPECT_THROW(parse_existential("exists . A1"), ParseError);
  EXPECT_THROW(parse_existential("exists B1 A1"), ParseError);
}

TEST(Existential, Witnesses) {
  const auto ef = parse_existential("exists B1 . (B1 & A1) | (!B1 & A2)");
  auto v = exists_validates(Assignment::parse("A1"), ef);
  ASSERT_TRUE(v.holds);
  EXPECT_EQ(v.delta->str(), "B1");
  auto e = exists_entails(Assignment::parse("!A1"), ef);
  ASSERT_FALSE(e.holds);
  EXPECT_EQ(e.falsifying->str(), "!A1, !A2");
  EXPECT_THROW(exists_validates(Assignment::parse("B1"), ef), PreconditionError);
  EXPECT_THROW(exists_entails(Assignment::parse("B1"), ef), PreconditionError);
}

TEST(Existential, RandomCorrespondence) {
  oracle::Gen gen(41);
  const auto apool = oracle::atom_pool(5);
  const auto bpool = oracle::atom_pool(4, "B");
  std::vector<std::string> pool = apool;
  pool.insert(pool.end(), bpool.begin(), bpool.end());
  int strict = 0;
  for (int i = 0; i < 400; ++i) {
    ExistentialFormula ef;
    ef.matrix = gen.formula(pool, gen.uniform(1, 5));
    const int k = gen.uniform(1, 4);
    for (int j = 0; j < k; ++j) ef.quantified.insert(Atom(bpool[j]));
    const Formula g = shannon_expand(ef);
    for (int m = 0; m < 5; ++m) {
      const Assignment mu = gen.partial(apool);
      const bool ev = exists_validates(mu, ef).holds;
      const bool ee = exists_entails(mu, ef).holds;
      ASSERT_EQ(ev, oracle_exists_validates(mu, ef)) << print(ef) << " / " << mu.str();
      ASSERT_EQ(ee, oracle_exists_entails(mu, ef)) << print(ef) << " / " << mu.str();
      ASSERT_EQ(ev, validates(mu, g)) << print(ef) << " / " << mu.str();
      ASSERT_EQ(ee, entails(mu, g).entails) << print(ef) << " / " << mu.str();
      if (ev) ASSERT_TRUE(ee);
      if (ee && !ev) ++strict;
    }
    // total assignments over the free atoms: both notions agree
    Assignment eta;
    for (const auto& a : ef.free_atoms()) eta = eta.with(a, gen.coin());
    ASSERT_EQ(exists_validates(eta, ef).holds, exists_entails(eta, ef).holds);
  }
  EXPECT_GT(strict, 0);
}
