#include <gtest/gtest.h>

#include "snpneg/compile.hpp"
#include "snpneg/generate.hpp"
#include "snpneg/semantics.hpp"
#include "snpneg/snp_io.hpp"
#include "test_support.hpp"

using namespace snpneg;
using namespace snpneg::testing;
using snp::SpikeCount;

namespace {

std::vector<SpikeCount> counts(std::initializer_list<SpikeCount> c) { return c; }

std::set<std::string> loaded(const CompiledSystem& cs, const snp::Configuration& c) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < c.counts.size(); ++i)
    if (c.counts[i] > 0) out.insert(cs.layout.label(i));
  return out;
}

}  // namespace

TEST(Layout, IndicesAndLabels) {
  NeuronLayout l(3, 2);
  EXPECT_EQ(l.size(), 10u);
  EXPECT_EQ(l.output(p(2)), 1u);
  EXPECT_EQ(l.variable(p(1)), 3u);
  EXPECT_EQ(l.rule(1), 7u);
  EXPECT_EQ(l.clock_g(), 8u);
  EXPECT_EQ(l.clock_t(), 9u);
  EXPECT_EQ(l.label(7), "σ_8");
  EXPECT_EQ(l.label(8), "σ_G");
  EXPECT_EQ(l.label(9), "σ_T");
  EXPECT_EQ(l.role(4), NeuronRole::variable);
  EXPECT_EQ(l.entity(4), 1u);
  Database db = three_var();
  EXPECT_EQ(l.describe(0, db), "output:p1");
  EXPECT_EQ(l.describe(5, db), "variable:p3");
  EXPECT_EQ(l.describe(6, db), "rule:R1");
  EXPECT_EQ(l.describe(9, db), "clock:T");
}

TEST(Compile, ThreeVariableSystem) {
  Database db = three_var();
  CompiledSystem cs = compile(db, Interpretation::bottom(3));
  EXPECT_EQ(cs.system.size(), 10u);
  EXPECT_TRUE(snp::validate(cs.system).empty());
  EXPECT_EQ(cs.system.successors(cs.layout.variable(p(1))), (std::vector<std::size_t>{0, 6, 7}));
  EXPECT_EQ(cs.system.successors(cs.layout.clock_t()), (std::vector<std::size_t>{3, 8}));
  EXPECT_EQ(cs.system.successors(cs.layout.rule(1)), (std::vector<std::size_t>{5}));

  snp::Simulator sim(cs.system);
  snp::Trace t = sim.run(3);
  EXPECT_EQ(loaded(cs, t.configurations[0]), (std::set<std::string>{"σ_G"}));
  EXPECT_EQ(loaded(cs, t.configurations[1]), (std::set<std::string>{"σ_T"}));
  EXPECT_EQ(loaded(cs, t.configurations[2]), (std::set<std::string>{"σ_G", "σ_4"}));
  EXPECT_EQ(loaded(cs, t.configurations[3]), (std::set<std::string>{"σ_T", "σ_1", "σ_7", "σ_8"}));
}

TEST(Compile, NeuronRules) {
  Database db = example1();
  CompiledSystem cs = compile(db, Interpretation::bottom(9));
  EXPECT_EQ(cs.system.size(), 30u);
  const snp::Neuron& p2 = cs.system.neuron(cs.layout.variable(p(2)));
  ASSERT_EQ(p2.firing.size(), 1u);
  EXPECT_EQ(p2.firing[0].condition, snp::SpikeCondition::exactly(2));
  EXPECT_EQ(p2.firing[0].consume, 2u);
  EXPECT_EQ(p2.forgetting, (std::vector<snp::ForgettingRule>{{1}}));
  const snp::Neuron& r3 = cs.system.neuron(cs.layout.rule(2));
  EXPECT_EQ(r3.firing.size(), 2u);
  EXPECT_TRUE(cs.system.neuron(cs.layout.rule(0)).firing.empty());
  EXPECT_EQ(cs.system.neuron(cs.layout.output(p(1))).forgetting, (std::vector<snp::ForgettingRule>{{1}}));

  CompiledSystem verbatim = compile(db, Interpretation::bottom(9), CompileOptions{true});
  EXPECT_TRUE(verbatim.system.neuron(verbatim.layout.variable(p(2))).forgetting.empty());
  EXPECT_TRUE(snp::validate(verbatim.system).empty());
}

TEST(Compile, Encoding) {
  Database db = example1();
  std::vector<SpikeCount> up = encode_interpretation(db, Interpretation::top(9));
  EXPECT_EQ(std::vector<SpikeCount>(up.begin() + 9, up.begin() + 18), counts({1, 2, 1, 1, 2, 1, 1, 1, 1}));
  EXPECT_EQ(up[28], 1u);
  EXPECT_EQ(up[29], 0u);
  std::vector<SpikeCount> some = encode_interpretation(db, bits("010010100"));
  EXPECT_EQ(std::vector<SpikeCount>(some.begin() + 9, some.begin() + 18), counts({0, 2, 0, 0, 2, 0, 1, 0, 0}));
  EXPECT_THROW(encode_interpretation(db, bits("01")), std::invalid_argument);
}

TEST(Compile, InitialStepReadsInterpretation) {
  Database db = example1();
  for (const char* s : {"000000000", "111111111", "101010101", "010010100"}) {
    CompiledSystem cs = compile(db, bits(s));
    snp::Simulator sim(cs.system);
    EXPECT_EQ(read_outputs(cs.layout, sim.run(1).configurations[1]), bits(s));
  }
}

TEST(Compile, ReadOutputsRejectsOverflow) {
  NeuronLayout l(2, 0);
  EXPECT_THROW(read_outputs(l, snp::Configuration{{2, 0, 0, 0, 1, 0}}), std::logic_error);
  EXPECT_EQ(read_outputs(l, snp::Configuration{{0, 1, 0, 0, 1, 0}}), bits("01"));
}

TEST(FailureViaSnp, Example1) {
  Database db = example1();
  EXPECT_EQ(failure_via_snp(db, bits("000000000")), bits("000000100"));
  EXPECT_EQ(failure_via_snp(db, bits("111111111")), bits("011111111"));
  EXPECT_EQ(failure_via_snp(db, bits("000000100")), bits("000001100"));
  EXPECT_EQ(failure_via_snp(db, bits("000001100")), bits("000101100"));
}

TEST(IterateViaSnp, MatchesOperatorChains) {
  Database db = example1();
  for (Direction d : {Direction::down, Direction::up}) {
    SnpIteration it = iterate_via_snp(db, d);
    FixpointChain op = iterate_failure(db, d);
    EXPECT_EQ(it.chain.steps, op.steps);
    EXPECT_EQ(it.chain.limit, op.limit);
    EXPECT_EQ(it.chain.iterations_to_fixpoint, op.iterations_to_fixpoint);
    EXPECT_EQ(it.simulator_steps, 2 * op.steps.size() + 1);
    EXPECT_TRUE(check_structural_lemmas(it.compiled.layout, db, it.trace).empty());
  }
  EXPECT_EQ(naf_via_snp(db), vars({4, 5, 6, 7}));
  EXPECT_EQ(cwa_via_snp(db), vars({4, 5, 6, 7, 8, 9}));
}

TEST(IterateViaSnp, SingleFact) {
  Database db = parse_kb("-> p1.");
  SnpIteration it = iterate_via_snp(db, Direction::down);
  EXPECT_EQ(it.chain.steps, std::vector<Interpretation>{bits("0")});
  EXPECT_EQ(it.chain.iterations_to_fixpoint, 0u);
  EXPECT_EQ(it.simulator_steps, 3u);
  SnpIteration up = iterate_via_snp(db, Direction::up);
  EXPECT_EQ(up.chain.steps, (std::vector<Interpretation>{bits("1"), bits("0")}));
}

TEST(TraceTable, ShapeAndTsv) {
  Database db = example1();
  TraceTable down = trace_table(db, Direction::down);
  EXPECT_EQ(down.columns, 10u);
  EXPECT_EQ(down.rows.size(), 30u);
  EXPECT_TRUE(down.is_reading(0, 1));
  EXPECT_FALSE(down.is_reading(0, 2));
  EXPECT_FALSE(down.is_reading(9, 1));
  EXPECT_EQ(trace_table(db, Direction::up).columns, 8u);
  std::string tsv = render_tsv(down);
  EXPECT_NE(tsv.find("neuron\trole\tC_0\tC_1"), std::string::npos);
  EXPECT_NE(tsv.find("σ_G\tclock:G\t1\t0\t1"), std::string::npos);
  nlohmann::json doc = to_json(down);
  EXPECT_EQ(doc["reading"]["columns"], nlohmann::json::parse("[1,3,5,7,9]"));
  EXPECT_THROW(make_trace_table(db, iterate_via_snp(db, Direction::down).compiled, snp::Trace{}, Direction::down, 1),
               std::out_of_range);
}

TEST(LayoutJson, Example1) {
  Database db = example1();
  NeuronLayout l(9, 10);
  nlohmann::json doc = to_json(l, db);
  EXPECT_EQ(doc["degree"], 30);
  EXPECT_EQ(doc["neurons"][20]["source"], "R3");
  EXPECT_EQ(doc["neurons"][20]["rule"], "p1 & p2 -> p3.");
  EXPECT_EQ(doc["neurons"][29]["label"], "σ_T");
  EXPECT_NE(compiled_to_dot(compile(db, Interpretation::bottom(9)).system, l).find("fillcolor"), std::string::npos);
}

TEST(Lemmas, DetectViolations) {
  Database db = three_var();
  SnpIteration it = iterate_via_snp(db, Direction::down);
  snp::Trace t = it.trace;
  t.configurations[1].counts[it.compiled.layout.variable(p(2))] = 1;
  t.configurations[2].counts[it.compiled.layout.clock_g()] = 0;
  EXPECT_EQ(check_structural_lemmas(it.compiled.layout, db, t).size(), 2u);
}

// A variable neuron that keeps sub-threshold spikes drifts from the operator.
TEST(StrictPaper, StraySpikesBreakLemmas) {
  Database db = parse_kb("vars c, a\nc -> a.\n-> a.");
  CompiledSystem cs = compile(db, Interpretation::bottom(2), CompileOptions{true});
  snp::Simulator sim(cs.system);
  snp::Trace t = sim.run(5);
  EXPECT_FALSE(check_structural_lemmas(cs.layout, db, t).empty());
  CompiledSystem fixed = compile(db, Interpretation::bottom(2));
  snp::Simulator sim2(fixed.system);
  EXPECT_TRUE(check_structural_lemmas(fixed.layout, db, sim2.run(5)).empty());
}

TEST(SnpProperties, SingleApplicationExhaustive) {
  for (std::size_t n = 1; n <= 3; ++n) {
    enumerate_databases(n, 6 - n, [&](const Database& db) {
      for (const Interpretation& i : all_interpretations(n)) {
        Interpretation want = failure_operator(db, i);
        ASSERT_EQ(failure_via_snp(db, i), want) << render_kb(db) << i.to_bits();
        ASSERT_EQ(failure_via_snp(db, i, CompileOptions{true}), want) << render_kb(db) << i.to_bits();
      }
    });
  }
}

TEST(SnpProperties, RandomChainsAndLemmas) {
  DatabaseGenerator gen(4242, GeneratorBounds{8, 12, 3});
  for (int t = 0; t < 300; ++t) {
    Database db = gen.next();
    for (Direction d : {Direction::down, Direction::up}) {
      SnpIteration it = iterate_via_snp(db, d);
      ASSERT_EQ(it.chain.steps, iterate_failure(db, d).steps) << render_kb(db);
      EXPECT_LE(it.simulator_steps, 2 * (db.var_count() + 1) + 1);
      EXPECT_TRUE(check_structural_lemmas(it.compiled.layout, db, it.trace).empty()) << render_kb(db);
      EXPECT_TRUE(snp::replay_matches(it.compiled.system, it.trace));
    }
  }
}
