#include <gtest/gtest.h>

#include "partialsat/errors.hpp"
#include "partialsat/formula.hpp"
#include "support/oracle.hpp"

using namespace partialsat;

namespace {

Formula A(int i) { return Formula::var("A" + std::to_string(i)); }

}  // namespace

TEST(Parse, Precedence) {
  // ! > & > | > -> > <->
  EXPECT_EQ(parse("!A1 & A2 | A3"), ((!A(1)) & A(2)) | A(3));
  EXPECT_EQ(parse("A1 | A2 -> A3 <-> A4"),
            Formula::iff(Formula::implies(A(1) | A(2), A(3)), A(4)));
  EXPECT_EQ(parse("A1 & A2 | A3 & A4"), (A(1) & A(2)) | (A(3) & A(4)));
}

TEST(Parse, Associativity) {
  EXPECT_EQ(parse("A1 -> A2 -> A3"),
            Formula::implies(A(1), Formula::implies(A(2), A(3))));
  EXPECT_EQ(parse("A1 & A2 & A3"), (A(1) & A(2)) & A(3));
  EXPECT_EQ(parse("A1 | A2 | A3"), (A(1) | A(2)) | A(3));
  EXPECT_EQ(parse("A1 <-> A2 <-> A3"),
            Formula::iff(Formula::iff(A(1), A(2)), A(3)));
}

TEST(Parse, ConstantsCommentsWhitespace) {
  EXPECT_EQ(parse("true"), Formula::top());
  EXPECT_EQ(parse("  false "), Formula::bottom());
  EXPECT_EQ(parse("# header\nA1 &   # trailing\n A2\n"), A(1) & A(2));
  EXPECT_EQ(parse("!!A1"), !(!A(1)));
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse("A1 &\n  $");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("(A1 & A2"), ParseError);
  EXPECT_THROW(parse("A1 A2"), ParseError);
  EXPECT_THROW(parse("A1 - A2"), ParseError);
  EXPECT_THROW(parse("A1 <- A2"), ParseError);
  EXPECT_THROW(parse("exists"), ParseError);
}

TEST(Atom, Names) {
  EXPECT_TRUE(Atom::valid_name("A1"));
  EXPECT_TRUE(Atom::valid_name("x_y2"));
  EXPECT_FALSE(Atom::valid_name("1A"));
  EXPECT_FALSE(Atom::valid_name(""));
  EXPECT_FALSE(Atom::valid_name("true"));
  EXPECT_FALSE(Atom::valid_name("exists"));
  EXPECT_THROW(Atom("a-b"), PreconditionError);
  EXPECT_LT(Atom("A10"), Atom("A2"));  // lexicographic, not numeric
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(print(parse("(A1 & A2) | (A1 & !A2)")), "(A1 & A2) | (A1 & !A2)");
  EXPECT_EQ(print(parse("A1 -> A2 -> A3")), "A1 -> A2 -> A3");
  EXPECT_EQ(print(parse("(A1 -> A2) -> A3")), "(A1 -> A2) -> A3");
  EXPECT_EQ(print(parse("A1 & (A2 & A3)")), "A1 & (A2 & A3)");
  EXPECT_EQ(print(parse("!(A1 | A2)")), "!(A1 | A2)");
  EXPECT_EQ(print(Formula::top()), "true");
}

TEST(Print, RoundTripRandom) {
  oracle::Gen gen(11);
  const auto pool = oracle::atom_pool(8);
  for (int i = 0; i < 2000; ++i) {
    Formula f = gen.formula(pool, gen.uniform(0, 8));
    const std::string text = print(f);
    ASSERT_EQ(parse(text), f) << text;
    ASSERT_EQ(classify(parse(text)), classify(f)) << text;
  }
}

TEST(Formula, StructuralEqualityAndSize) {
  EXPECT_EQ(A(1) & A(2), A(1) & A(2));
  EXPECT_NE(A(1) & A(2), A(2) & A(1));
  EXPECT_EQ(parse("(A1 & !A2) | A3").size(), 6u);
  EXPECT_EQ(atoms(parse("A2 & A1 | A2")), (AtomSet{Atom("A1"), Atom("A2")}));
  auto occ = atom_occurrences(parse("A2 & A1 | A2"));
  ASSERT_EQ(occ.size(), 2u);
  EXPECT_EQ(occ[1].first, Atom("A2"));
  EXPECT_EQ(occ[1].second, 2u);
}

TEST(Formula, AccessorsRejectWrongKind) {
  EXPECT_THROW(A(1).lhs(), PreconditionError);
  EXPECT_THROW((A(1) & A(2)).atom(), PreconditionError);
  EXPECT_THROW((!A(1)).rhs(), PreconditionError);
}

TEST(Classify, Shapes) {
  auto c = classify(parse("A1"));
  EXPECT_TRUE(c.is_literal && c.is_clause && c.is_cube && c.is_cnf);

  c = classify(parse("A1 | !A2 | A3"));
  EXPECT_TRUE(c.is_clause && c.is_cnf && c.is_tautology_free_cnf);
  EXPECT_FALSE(c.is_cube);

  c = classify(parse("(A1 | A2) & (!A1 | A1)"));
  EXPECT_TRUE(c.is_cnf);
  EXPECT_FALSE(c.is_tautology_free_cnf);

  // association does not matter
  EXPECT_TRUE(classify(parse("A1 | (A2 | A3)")).is_clause);
  EXPECT_TRUE(classify(parse("(A1 & A2) & (A3 & !A4)")).is_cube);

  EXPECT_FALSE(classify(parse("!(A1 | A2)")).is_cnf);
  EXPECT_FALSE(classify(parse("A1 -> A2")).is_cnf);
  EXPECT_FALSE(classify(parse("A1 | (A2 & A3)")).is_cnf);
  EXPECT_FALSE(classify(parse("A1 & true")).is_cnf);
}

TEST(Classify, Constants) {
  auto t = classify(Formula::top());
  EXPECT_TRUE(t.is_cube && t.is_cnf && t.is_tautology_free_cnf);
  EXPECT_FALSE(t.is_clause);
  auto f = classify(Formula::bottom());
  EXPECT_TRUE(f.is_clause && f.is_cnf);
  EXPECT_FALSE(f.is_cube);
}

TEST(Clauses, RoundTrip) {
  Formula f = parse("(A1 | !A2) & A3 & (!A1 | A2 | A3)");
  auto cls = clauses(f);
  ASSERT_EQ(cls.size(), 3u);
  EXPECT_EQ(cls[1], (std::vector<Literal>{{Atom("A3"), true}}));
  EXPECT_EQ(from_clauses(cls), f);
  EXPECT_TRUE(clauses(Formula::top()).empty());
  ASSERT_EQ(clauses(Formula::bottom()).size(), 1u);
  EXPECT_TRUE(clauses(Formula::bottom())[0].empty());
  EXPECT_THROW(clauses(parse("A1 -> A2")), PreconditionError);
}

TEST(Literal, OrderAndNegation) {
  Literal p{Atom("A1"), true};
  Literal n = p.negate();
  EXPECT_FALSE(n.positive);
  EXPECT_EQ(n.negate(), p);
  EXPECT_LT(p, n);
  EXPECT_LT(n, (Literal{Atom("A2"), true}));
  EXPECT_EQ(n.str(), "!A1");
  EXPECT_EQ(as_literal(parse("!A3"))->atom, Atom("A3"));
  EXPECT_FALSE(as_literal(parse("!!A3")).has_value());
}
