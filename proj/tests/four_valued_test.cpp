#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "flogic/errors.hpp"
#include "flogic/four_valued.hpp"
#include "flogic/generators.hpp"
#include "flogic/normal_form.hpp"
#include "flogic/parser.hpp"
#include "test_util.hpp"

namespace flogic {
namespace {

using testing::P;

TEST(Eval4, Examples) {
  EXPECT_EQ(eval4(FourInterp{{"p", FourValue::Both}}, P("~p")), FourValue::Both);
  EXPECT_EQ(eval4(FourInterp{{"p", FourValue::True}}, P("p & q")), FourValue::Unknown);
  FourInterp glut{{"p", FourValue::Both}};
  EXPECT_TRUE(satisfies(glut, T(P("p & ~p"))));
  EXPECT_FALSE(satisfies(glut, T(P("q"))));
  EXPECT_EQ(eval4(FourInterp{{"p", FourValue::False}, {"q", FourValue::Unknown}}, P("p | q")), FourValue::Unknown);
  EXPECT_EQ(eval4(FourInterp{{"p", FourValue::False}, {"q", FourValue::True}}, P("p | q")), FourValue::True);
  EXPECT_THROW(eval4(FourInterp{}, P("p & true")), PreconditionError);
}

TEST(Decompose, Examples) {
  Decomposition a = decompose(T(P("p & (q | r)")));
  EXPECT_EQ(a.kind, Decomposition::Kind::Alpha);
  EXPECT_EQ(a.first, T(P("p")));
  EXPECT_EQ(a.second, T(P("q | r")));
  Decomposition b = decompose(NT(P("(p | r) & (q | r | s)")));
  EXPECT_EQ(b.kind, Decomposition::Kind::Beta);
  EXPECT_EQ(b.first, NT(P("p | r")));
  EXPECT_EQ(b.second, NT(P("q | r | s")));
  EXPECT_EQ(decompose(NT(P("p | q"))).kind, Decomposition::Kind::Alpha);
  EXPECT_EQ(decompose(T(P("p | q"))).kind, Decomposition::Kind::Beta);
  Decomposition two = decompose(T(P("~p")), Semantics::TwoValued);
  EXPECT_EQ(two.kind, Decomposition::Kind::Alpha);
  EXPECT_EQ(two.first, NT(P("p")));
  EXPECT_EQ(decompose(NT(P("~p")), Semantics::TwoValued).first, T(P("p")));
  EXPECT_EQ(decompose(T(P("~p"))).kind, Decomposition::Kind::Atomic);
  EXPECT_THROW(decompose(T(P("~(p & q)"))), PreconditionError);
}

TEST(Sat4, Examples) {
  EXPECT_FALSE(sat4({T(P("p & (q | r)")), NT(P("(p | r) & (q | r | s)"))}).satisfiable);
  Sat4Outcome glut = sat4({T(P("p & ~p")), NT(P("q"))});
  ASSERT_TRUE(glut.satisfiable);
  EXPECT_EQ(glut.model("p"), FourValue::Both);
  Sat4Outcome gap = sat4({NT(P("p | ~p"))});
  ASSERT_TRUE(gap.satisfiable);
  EXPECT_EQ(gap.model("p"), FourValue::Unknown);
  // Conjugates over a negated letter close too.
  EXPECT_FALSE(sat4({T(P("~p")), NT(P("~p"))}).satisfiable);
  EXPECT_FALSE(sat4({T(Prop::bottom())}).satisfiable);
  EXPECT_TRUE(sat4({NT(Prop::bottom()), T(Prop::top())}).satisfiable);
}

TEST(Entails4, Examples) {
  EXPECT_TRUE(entails4({P("p & (q | r)")}, P("(p | r) & (q | r | s)")));
  EXPECT_FALSE(entails4({P("p & (~p | q)")}, P("q")));
  EXPECT_TRUE(entails4({P("p & q")}, P("p")));
  EXPECT_TRUE(entails4({P("p")}, P("p | q")));
  EXPECT_FALSE(entails4({P("p & ~p")}, P("q")));
  EXPECT_FALSE(entails4({}, P("p | ~p")));
  EXPECT_TRUE(entails4({P("~(p | q)")}, P("~p")));
}

TEST(Oracle4, Examples) {
  EXPECT_FALSE(oracle4({T(P("p")), NT(P("p"))}).satisfiable);
  Sat4Outcome all_t = oracle4({T(P("p & ~p")), T(P("~q & (q | ~r)"))});
  EXPECT_TRUE(all_t.satisfiable);
  Sat4Outcome gap = oracle4({NT(P("p")), NT(P("~p"))});
  ASSERT_TRUE(gap.satisfiable);
  EXPECT_EQ(gap.model("p"), FourValue::Unknown);
  EXPECT_THROW(oracle4({T(P("a & b & c & d & e & f & g & h & i & j & k & l"))}, 1000), ResourceExhausted);
}

TEST(TwoValued, Examples) {
  EXPECT_TRUE(entails2({P("~p | q"), P("p")}, P("q")));
  EXPECT_TRUE(entails2({P("p | ~q"), P("~p")}, P("~q")));
  EXPECT_TRUE(tautology2(P("p | ~p")));
  EXPECT_FALSE(tautology2(P("p | q")));
  EXPECT_TRUE(unsat2({P("p & ~p")}));
  EXPECT_FALSE(unsat2({P("p | ~p")}));
  EXPECT_TRUE(tautology2(P("~(p & ~p)")));
  EXPECT_TRUE(tautology2(Prop::top()));
  EXPECT_FALSE(tautology2(P("~true")));
}

std::vector<SignedProp> query(const std::vector<Prop>& t, const Prop& a) {
  std::vector<SignedProp> s;
  for (const auto& m : t) s.push_back(T(m));
  s.push_back(NT(a));
  return s;
}

TEST(Sat4, AgreesWithOracle) {
  Rng rng(40);
  for (int k = 0; k < 1000; ++k) {
    std::vector<SignedProp> s = random_signed_set(rng);
    Sat4Outcome o = sat4(s);
    ASSERT_EQ(o.satisfiable, oracle4(s).satisfiable) << k;
    if (o.satisfiable) {
      for (const auto& x : s) EXPECT_TRUE(satisfies(o.model, x)) << to_string(x);
    }
    Sat4Outcome c = sat4(s, Semantics::TwoValued);
    ASSERT_EQ(c.satisfiable, oracle2(s).satisfiable) << k;
    if (c.satisfiable) {
      for (const auto& x : s) EXPECT_TRUE(satisfies(c.model, x)) << to_string(x);
    }
  }
}

TEST(FourValuedEntailment, Properties) {
  Rng rng(41);
  for (int k = 0; k < 500; ++k) {
    Prop a = random_prop(rng, {3, 3, false});
    Prop b = random_prop(rng, {3, 3, false});
    Prop c = random_prop(rng, {3, 2, false});
    bool ab = entails4({a}, b);
    if (ab) {
      EXPECT_TRUE(entails2({a}, b)) << to_string(a) << " / " << to_string(b);
      EXPECT_TRUE(entails4({~b}, ~a)) << to_string(a) << " / " << to_string(b);
      if (entails4({b}, c)) EXPECT_TRUE(entails4({a}, c));
    }
    EXPECT_FALSE(entails4({}, a)) << to_string(a);
    EXPECT_EQ(ab, !oracle4(query({a}, b)).satisfiable);
  }
  // A chain with every link holding.
  EXPECT_TRUE(entails4({P("p & q")}, P("p")));
  EXPECT_TRUE(entails4({P("p")}, P("p | r")));
  EXPECT_TRUE(entails4({P("p & q")}, P("p | r")));
}

TEST(SignedList, ParsesSignsAndComments) {
  std::vector<SignedProp> s = parse_signed_list("# c\nT p & q\n\nNT ~r   # x\nq | T1\n");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], T(P("p & q")));
  EXPECT_EQ(s[1], NT(P("~r")));
  EXPECT_EQ(s[2], T(P("q | T1")));
  // A letter called T or NT is read as a sign only when followed by space.
  EXPECT_EQ(parse_signed_list("NT\tTx")[0], NT(P("Tx")));
  try {
    parse_signed_list("T p\nNT p &\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Trace, MatchesGoldenFileForClosingSignedSet) {
  std::ostringstream trace;
  TableauOptions opts;
  opts.trace = &trace;
  sat4({T(P("p & (q | r)")), NT(P("(p | r) & (q | r | s)"))}, Semantics::FourValued, opts);
  std::ifstream golden(FLOGIC_TEST_DATA "/golden/fig2.trace");
  ASSERT_TRUE(golden);
  std::stringstream expected;
  expected << golden.rdbuf();
  EXPECT_EQ(trace.str(), expected.str());
}

}  // namespace
}  // namespace flogic
