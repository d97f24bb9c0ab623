#include <gtest/gtest.h>

#include <random>

#include "snpneg/generate.hpp"
#include "snpneg/kb.hpp"
#include "test_support.hpp"

using namespace snpneg;
using namespace snpneg::testing;

TEST(ParseKb, FactIsEmptyBodyRule) {
  Database db = parse_kb("-> p1.");
  ASSERT_EQ(db.var_count(), 1u);
  ASSERT_EQ(db.rule_count(), 1u);
  EXPECT_TRUE(db.rule(0).body.empty());
  EXPECT_EQ(db.rule(0).head, p(1));
}

TEST(ParseKb, Example1Shape) {
  Database db = example1();
  EXPECT_EQ(db.var_count(), 9u);
  EXPECT_EQ(db.rule_count(), 10u);
  for (std::size_t j = 0; j < db.rule_count(); ++j) EXPECT_EQ(db.rule(j).id, j);
}

TEST(ParseKb, NegativeLiteralRejected) {
  try {
    parse_kb("~p1 -> p2.");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 1u);
    EXPECT_NE(std::string(e.what()).find("definite"), std::string::npos);
  }
}

TEST(ParseKb, NegativeLiteralLaterInBody) {
  try {
    parse_kb("p1 -> p2.\np1 & ~p3 -> p2.");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 6u);
  }
}

TEST(ParseKb, FirstAppearanceOrder) {
  Database db = parse_kb("b & a -> c.\n-> d.");
  EXPECT_EQ(db.variable_names(), (std::vector<std::string>{"b", "a", "c", "d"}));
}

TEST(ParseKb, HeaderFixesOrderAndDeclaresUnused) {
  Database db = parse_kb("vars z, y, x\n# comment\nx -> z.  # trailing\n");
  EXPECT_EQ(db.variable_names(), (std::vector<std::string>{"z", "y", "x"}));
  EXPECT_EQ(db.rule(0).head, VarId{0});
  EXPECT_EQ(db.rule(0).body, (std::vector<VarId>{VarId{2}}));
}

TEST(ParseKb, HeaderRejectsUndeclared) {
  EXPECT_THROW(parse_kb("vars p1\np1 -> p2."), ParseError);
}

TEST(ParseKb, SyntaxErrors) {
  EXPECT_THROW(parse_kb("p1 -> p2"), ParseError);       // missing '.'
  EXPECT_THROW(parse_kb("p1 p2 -> p3."), ParseError);   // missing '&'
  EXPECT_THROW(parse_kb("p1 -> ."), ParseError);        // missing head
  EXPECT_THROW(parse_kb("vars p1, p1\n"), ParseError);  // duplicate declaration
  EXPECT_THROW(parse_kb("p1 -> vars."), ParseError);    // reserved word
}

TEST(ParseKb, EmptyText) {
  Database db = parse_kb("# nothing here\n\n");
  EXPECT_EQ(db.var_count(), 0u);
  EXPECT_EQ(db.rule_count(), 0u);
}

TEST(ParseKb, DuplicateBodyAtomsPreserved) {
  Database db = parse_kb("p1 & p1 & p2 -> p3.");
  EXPECT_EQ(db.body_size(0), 3u);
}

TEST(HeadCount, Example1) {
  Database db = example1();
  EXPECT_EQ(db.head_count(p(7)), 0u);
  EXPECT_EQ(db.head_count(p(2)), 2u);
  EXPECT_EQ(db.head_count(p(5)), 2u);
  EXPECT_EQ(parse_kb("vars p1").head_count(p(1)), 0u);
  EXPECT_THROW(db.head_count(VarId{9}), std::invalid_argument);
}

TEST(BodySize, Example1) {
  Database db = example1();
  EXPECT_EQ(db.body_size(0), 0u);
  EXPECT_EQ(db.body_size(2), 2u);
  EXPECT_EQ(db.body_size(9), 1u);
}

TEST(Interpretation, LatticeOps) {
  EXPECT_EQ(unite(bits("10"), bits("01")), bits("11"));
  Interpretation i = bits("011010");
  EXPECT_EQ(intersect(i, Interpretation::top(6)), i);
  EXPECT_EQ(unite(bits("000111100"), bits("000111111")), bits("000111111"));
  EXPECT_TRUE(leq(bits("010"), bits("011")));
  EXPECT_FALSE(leq(bits("011"), bits("010")));
  EXPECT_THROW(leq(bits("01"), bits("011")), std::invalid_argument);
  EXPECT_THROW(unite(bits("01"), bits("011")), std::invalid_argument);
  EXPECT_THROW(Interpretation::from_bits("012"), std::invalid_argument);
  EXPECT_EQ(bits("0101").to_tuple(), "(0,1,0,1)");
}

TEST(Eval, LiteralsConjunctionsRules) {
  Database db = example1();
  Interpretation i1 = bits("111000000");
  EXPECT_EQ(eval(i1, db.rule(2)), 1);
  for (const Rule& r : db.rules()) EXPECT_EQ(eval(i1, r), 1);
  // A fact evaluates to the value of its head.
  EXPECT_EQ(eval(bits("1"), parse_kb("-> p1.").rule(0)), 1);
  EXPECT_EQ(eval(bits("0"), parse_kb("-> p1.").rule(0)), 0);
  EXPECT_EQ(eval(bits("000"), Literal{p(1), true}), 1);
  EXPECT_EQ(eval(bits("100"), std::span<const Literal>{}), 1);
  EXPECT_THROW(eval(bits("1"), Literal{p(3), false}), std::out_of_range);
}

TEST(KbProperties, RoundTripAndHeadCountSum) {
  DatabaseGenerator gen(7, GeneratorBounds{8, 12, 3});
  for (int i = 0; i < 300; ++i) {
    Database db = gen.next();
    EXPECT_EQ(parse_kb(render_kb(db)), db) << render_kb(db);
    std::size_t sum = 0;
    for (std::uint32_t v = 0; v < db.var_count(); ++v) sum += db.head_count(VarId{v});
    EXPECT_EQ(sum, db.rule_count());
  }
}

TEST(KbProperties, LatticeLaws) {
  std::mt19937_64 rng(11);
  auto random_interp = [&](std::size_t n) {
    std::vector<std::uint8_t> b(n);
    for (auto& x : b) x = rng() & 1;
    return Interpretation(std::move(b));
  };
  for (int t = 0; t < 500; ++t) {
    std::size_t n = 1 + rng() % 10;
    Interpretation a = random_interp(n), b = random_interp(n), c = random_interp(n);
    EXPECT_TRUE(leq(a, a));
    if (leq(a, b) && leq(b, a)) {
      EXPECT_EQ(a, b);
    }
    if (leq(a, b) && leq(b, c)) {
      EXPECT_TRUE(leq(a, c));
    }
    EXPECT_EQ(unite(a, a), a);
    EXPECT_EQ(intersect(a, a), a);
    EXPECT_EQ(unite(a, b), unite(b, a));
    EXPECT_EQ(intersect(a, b), intersect(b, a));
    EXPECT_EQ(unite(unite(a, b), c), unite(a, unite(b, c)));
    EXPECT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
    EXPECT_EQ(unite(a, intersect(a, b)), a);
    EXPECT_EQ(intersect(a, unite(a, b)), a);
    EXPECT_TRUE(leq(a, unite(a, b)));
    EXPECT_TRUE(leq(intersect(a, b), a));
    // Conjunction is the minimum of its literals.
    std::vector<Literal> conj{{VarId{0}, false}, {VarId{static_cast<std::uint32_t>(n - 1)}, true}};
    EXPECT_EQ(eval(a, conj), std::min(eval(a, conj[0]), eval(a, conj[1])));
  }
}
