#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "flogic/errors.hpp"
#include "flogic/fuzzy_semantics.hpp"
#include "flogic/fuzzy_tableau.hpp"
#include "flogic/generators.hpp"
#include "flogic/normal_form.hpp"
#include "test_util.hpp"

namespace flogic {
namespace {

using testing::M;
using testing::N;
using testing::Th;

MetaAtom lit(std::string_view text) { return M(text).atom(); }

TEST(Subsumes, Examples) {
  EXPECT_TRUE(subsumes(lit("[p >= 0.3]"), lit("[p >= 0.2]")));
  EXPECT_FALSE(subsumes(lit("[p >= 0.3]"), lit("[p <= 0.9]")));
  EXPECT_TRUE(subsumes(lit("[p > 0.3]"), lit("[p >= 0.3]")));
  EXPECT_FALSE(subsumes(lit("[p >= 0.3]"), lit("[p > 0.3]")));
  EXPECT_TRUE(subsumes(lit("[p <= 0.3]"), lit("[p < 0.4]")));
  EXPECT_FALSE(subsumes(lit("[p <= 0.3]"), lit("[p < 0.3]")));
  EXPECT_TRUE(subsumes(lit("[p < 0.3]"), lit("[p <= 0.3]")));
  EXPECT_FALSE(subsumes(lit("[p >= 0.3]"), lit("[q >= 0.2]")));
}

TEST(Contradicts, Examples) {
  EXPECT_TRUE(contradicts(lit("[p <= 0.3]"), lit("[p >= 0.8]")));
  EXPECT_TRUE(contradicts(lit("[q <= 0.3]"), lit("[q > 0.3]")));
  EXPECT_FALSE(contradicts(lit("[p >= 0.2]"), lit("[p >= 0.9]")));
  EXPECT_FALSE(contradicts(lit("[p <= 0.3]"), lit("[p >= 0.3]")));
  EXPECT_TRUE(contradicts(lit("[p < 0.3]"), lit("[p >= 0.3]")));
  EXPECT_FALSE(contradicts(lit("[p <= 0.3]"), lit("[q >= 0.8]")));
}

std::vector<MetaAtom> all_literals() {
  std::vector<MetaAtom> out;
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k <= 10; ++k) out.push_back({Prop::atom("p"), static_cast<Rel>(r), Threshold(k, 10)});
  }
  return out;
}

// Semantic reading over a grid fine enough to separate every k/10 bound.
bool sat_at(const MetaAtom& l, int j) { return holds(l.rel, Threshold(j, 40), l.bound); }

TEST(LiteralTables, MatchSemantics) {
  for (const auto& a : all_literals()) {
    bool a_empty = true;
    for (int j = 0; j <= 40; ++j) a_empty = a_empty && !sat_at(a, j);
    for (const auto& b : all_literals()) {
      bool b_empty = true;
      for (int j = 0; j <= 40; ++j) b_empty = b_empty && !sat_at(b, j);
      bool implied = true, joint = false;
      for (int j = 0; j <= 40; ++j) {
        implied = implied && (!sat_at(a, j) || sat_at(b, j));
        joint = joint || (sat_at(a, j) && sat_at(b, j));
      }
      // Empty literals such as [p < 0] are folded to false by NNF before
      // the tableau sees them, so only non-empty pairs are compared.
      if (!a_empty && !b_empty) EXPECT_EQ(contradicts(a, b), !joint) << to_string(a) << " " << to_string(b);
      EXPECT_EQ(contradicts(a, b), contradicts(b, a));
      if (!a_empty && is_lower(a.rel) == is_lower(b.rel)) {
        EXPECT_EQ(subsumes(a, b), implied) << to_string(a) << " " << to_string(b);
      }
      if (contradicts(a, b)) {
        MetaAtom flipped{b.prop, negate(b.rel), b.bound};
        EXPECT_TRUE(subsumes(a, flipped)) << to_string(a) << " " << to_string(b);
      }
    }
  }
}

TEST(Sat, Examples) {
  SatOutcome ex4 = sat(Th(testing::kEx4));
  ASSERT_TRUE(ex4.satisfiable);
  EXPECT_TRUE(eval_theory(ex4.model, Th(testing::kEx4)));
  EXPECT_EQ(ex4.branch.status, Branch::Status::Completed);
  EXPECT_FALSE(sat(Th(testing::kEx1).with(M("[q > 0.6]"))).satisfiable);
  EXPECT_FALSE(sat(MetaTheory{MetaProp::bottom()}).satisfiable);
  EXPECT_TRUE(sat(MetaTheory{}).satisfiable);
}

TEST(Entails, Examples) {
  EXPECT_TRUE(entails(Th(testing::kEx1), M("[q <= 0.6]")));
  EXPECT_FALSE(entails(Th(testing::kEx2), M("[q >= 0.6]")));
  EXPECT_TRUE(entails(MetaTheory{}, M("[p | ~p >= 0.5]")));
  EXPECT_FALSE(entails(MetaTheory{}, M("[p | ~p > 0.5]")));
  EXPECT_TRUE(entails(Th(testing::kEx2), MetaProp::top()));
  EXPECT_FALSE(entails(Th(testing::kEx2), MetaProp::bottom()));
}

TEST(ExtractModel, Examples) {
  FuzzyInterp a = extract_model({lit("[p <= 0.3]"), lit("[q >= 0.4]"), lit("[u >= 0.6]")});
  EXPECT_EQ(a, (FuzzyInterp{{"p", Threshold::zero()}, {"q", N("0.4")}, {"u", N("0.6")}}));
  FuzzyInterp b = extract_model({lit("[p > 0.2]"), lit("[p < 0.4]")});
  EXPECT_EQ(b("p"), N("0.3"));
  EXPECT_TRUE(eval_meta(b, M("[p > 0.2] & [p < 0.4]")));
  EXPECT_EQ(extract_model({lit("[p >= 0.5]")})("p"), Threshold::half());
  EXPECT_EQ(extract_model({lit("[p > 0.5]"), lit("[p <= 0.7]")})("p"), N("0.7"));
  EXPECT_THROW(extract_model({lit("[p > 0.5]"), lit("[p < 0.5]")}), std::logic_error);
}

TEST(Sat, AgreesWithOracleAndModelsValidate) {
  Rng rng(20);
  for (int k = 0; k < 1000; ++k) {
    MetaTheory t = random_meta_theory(rng);
    SatOutcome o = sat(t);
    ASSERT_EQ(o.satisfiable, oracle_sat(t).satisfiable) << k;
    if (o.satisfiable) EXPECT_TRUE(eval_theory(o.model, t));
  }
}

TEST(Sat, PruningDoesNotChangeVerdicts) {
  Rng rng(21);
  TableauOptions pruning;
  pruning.subsumption_pruning = true;
  for (int k = 0; k < 500; ++k) {
    MetaTheory t = random_meta_theory(rng);
    SatOutcome o = sat(t, pruning);
    EXPECT_EQ(o.satisfiable, sat(t).satisfiable);
    if (o.satisfiable) EXPECT_TRUE(eval_theory(o.model, t));
  }
}

TEST(Sat, StaysWithinQuadraticStepBudget) {
  Rng rng(22);
  for (int k = 0; k < 500; ++k) {
    MetaTheory t = random_meta_theory(rng, 3, 8);
    std::size_t size = 0;
    for (const auto& m : t) size += nnf_meta(m).size();
    TableauOptions budget;
    budget.step_limit = size * size;
    EXPECT_NO_THROW(sat(t, budget));
  }
  TableauOptions tiny;
  tiny.step_limit = 1;
  EXPECT_THROW(sat(Th("[p >= 0.1] | [q >= 0.1]\n[p >= 0.2] | [q >= 0.2]\n"), tiny), ResourceExhausted);
}

TEST(Trace, MatchesGoldenFileForThreeClauseTheory) {
  std::ostringstream trace;
  TableauOptions opts;
  opts.trace = &trace;
  sat(Th(testing::kEx4), opts);
  std::ifstream golden(FLOGIC_TEST_DATA "/golden/ex4.trace");
  ASSERT_TRUE(golden);
  std::stringstream expected;
  expected << golden.rdbuf();
  EXPECT_EQ(trace.str(), expected.str());
}

}  // namespace
}  // namespace flogic
