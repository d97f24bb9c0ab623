#include <gtest/gtest.h>

#include <algorithm>

#include "snpneg/generate.hpp"
#include "snpneg/semantics.hpp"
#include "snpneg/sld.hpp"
#include "test_support.hpp"

using namespace snpneg;
using namespace snpneg::testing;

namespace {

std::vector<std::size_t> rule_ids(const DerivationOutcome& o) {
  std::vector<std::size_t> out;
  for (const auto& s : o.derivation) out.push_back(s.rule);
  return out;
}

}  // namespace

TEST(Resolvent, Example3Steps) {
  Database db = example1();
  EXPECT_EQ(resolvent(Goal{p(3)}, 0, db.rule(2)), (Goal{p(1), p(2)}));
  EXPECT_EQ(resolvent(Goal{p(1)}, 0, db.rule(0)), Goal{});
  EXPECT_EQ(resolvent(Goal{p(9)}, 0, db.rule(7)), Goal{p(8)});
}

TEST(Resolvent, InPlaceReplacementAndErrors) {
  Database db = example1();
  EXPECT_EQ(resolvent(Goal{p(5), p(4), p(6)}, 1, db.rule(3)), (Goal{p(5), p(3), p(6), p(6)}));
  EXPECT_THROW(resolvent(Goal{p(1)}, 1, db.rule(0)), std::out_of_range);
  EXPECT_THROW(resolvent(Goal{p(2)}, 0, db.rule(0)), std::invalid_argument);
  EXPECT_EQ(factor(Goal{p(1), p(2), p(1)}), (Goal{p(1), p(2)}));
}

TEST(Classify, Example3) {
  Database db = example1();
  std::size_t budget = default_budget(db);

  DerivationOutcome six = classify(db, p(6), budget);
  EXPECT_EQ(six.status, SldStatus::finitely_fails);
  EXPECT_EQ(six.tree_size, 2u);

  DerivationOutcome three = classify(db, p(3), budget);
  ASSERT_EQ(three.status, SldStatus::succeeds);
  EXPECT_EQ(rule_ids(three), (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(three.derivation[0].goal, (Goal{p(1), p(2)}));
  EXPECT_EQ(three.derivation[1].goal, Goal{p(1)});
  EXPECT_TRUE(three.derivation.back().goal.empty());

  DerivationOutcome nine = classify(db, p(9), budget);
  ASSERT_EQ(nine.status, SldStatus::diverges);
  EXPECT_EQ(rule_ids(nine), (std::vector<std::size_t>{7, 9}));
  EXPECT_EQ(nine.derivation.back().goal, Goal{p(9)});
  EXPECT_EQ(nine.cycle_start, 0u);
}

TEST(Classify, RenderTwoColumns) {
  Database db = example1();
  EXPECT_EQ(render_derivation(db, classify(db, p(3), 1000)),
            "Rule used  Goals\n"
            "           p3 →\n"
            "R3         p1,p2 →\n"
            "R2         p1 →\n"
            "R1         □\n");
  EXPECT_EQ(render_derivation(db, classify(db, p(9), 1000)),
            "Rule used  Goals\n"
            "           p9 →\n"
            "R8         p8 →\n"
            "R10        p9 →\n"
            "...        ...\n");
}

TEST(Classify, Errors) {
  Database db = example1();
  EXPECT_THROW(classify(db, p(1), 0), std::invalid_argument);
  EXPECT_THROW(classify(db, VarId{42}, 10), std::invalid_argument);
}

TEST(Classify, BudgetExceeded) {
  Database db = example1();
  EXPECT_EQ(classify(db, p(5), 1).status, SldStatus::budget_exceeded);
  try {
    failure_set(db, 1);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.var(), p(1));
  }
}

// An unfair rule that always selects the looping atom would never see f fail.
TEST(Classify, FairSelectionFindsFailureBehindLoop) {
  Database db = parse_kb("q & f -> p.\nq -> q.");
  EXPECT_EQ(classify(db, db.var("p"), 100).status, SldStatus::finitely_fails);
  EXPECT_EQ(classify(db, db.var("q"), 100).status, SldStatus::diverges);
  EXPECT_EQ(failure_set(db, 100), naf_set(db));
}

TEST(Classify, SuccessTakesPrecedenceOverLoop) {
  Database db = parse_kb("p -> p.\n-> p.");
  DerivationOutcome o = classify(db, db.var("p"), 100);
  EXPECT_EQ(o.status, SldStatus::succeeds);
  EXPECT_EQ(rule_ids(o), (std::vector<std::size_t>{1}));
}

TEST(FailureSet, Example1AndEmpty) {
  Database db = example1();
  EXPECT_EQ(failure_set(db, default_budget(db)), vars({4, 5, 6, 7}));
  EXPECT_EQ(failure_set(parse_kb("vars p1, p2, p3"), 1), vars({1, 2, 3}));
}

TEST(FailureSet, DefaultBudget) {
  EXPECT_EQ(default_budget(example1()), 512u * 11u);
  EXPECT_EQ(default_budget(parse_kb("")), 1u);
}

TEST(SldProperties, AgreesWithFailureOperatorAndWitnessesReplay) {
  DatabaseGenerator gen(31337, GeneratorBounds{8, 12, 3});
  for (int t = 0; t < 500; ++t) {
    Database db = gen.next();
    std::size_t budget = default_budget(db);
    ASSERT_EQ(failure_set(db, budget), naf_set(db)) << render_kb(db);
    Interpretation lm = least_model(db);
    for (std::uint32_t v = 0; v < db.var_count(); ++v) {
      DerivationOutcome o = classify(db, VarId{v}, budget);
      EXPECT_EQ(o.status == SldStatus::succeeds, lm[VarId{v}]) << render_kb(db);
      Goal g = o.start;
      for (const DerivationStep& s : o.derivation) {
        std::size_t before = g.size();
        Goal raw = resolvent(g, s.position, db.rule(s.rule));
        EXPECT_EQ(raw.size(), before + db.body_size(s.rule) - 1);
        Goal want = factor(raw), got = s.goal;
        EXPECT_EQ(factor(got), got);
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, want);
        g = s.goal;
      }
      if (o.status == SldStatus::succeeds) {
        EXPECT_TRUE(g.empty());
      }
      if (o.status == SldStatus::diverges) {
        ASSERT_FALSE(o.derivation.empty());
        Goal at_cycle = o.cycle_start == 0 ? o.start : o.derivation[o.cycle_start - 1].goal;
        Goal a = o.derivation.back().goal, b = at_cycle;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
      }
    }
  }
}
