#include "flogic/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "flogic/bounds.hpp"
#include "flogic/bridges.hpp"
#include "flogic/four_valued.hpp"
#include "flogic/fuzzy_semantics.hpp"
#include "flogic/fuzzy_tableau.hpp"
#include "flogic/generators.hpp"
#include "flogic/normal_form.hpp"
#include "flogic/parser.hpp"

namespace flogic {

namespace {

// Tally of one sub-check over a random corpus.
struct Tally {
  explicit Tally(std::string n) : name(std::move(n)) {}

  std::string name;
  int total = 0;
  int failures = 0;
  std::string first;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++total;
    if (ok) return;
    if (failures++ == 0) first = describe();
  }

  std::string line() const {
    std::ostringstream s;
    s << name << ": " << failures << "/" << total << " failing";
    if (failures > 0) s << "; first: " << first;
    return s.str();
  }
};

CriterionResult from_tallies(int id, std::string name, const std::vector<Tally>& tallies, std::string extra = {}) {
  CriterionResult r{id, std::move(name), true, {}, {}};
  int failing = 0;
  for (const auto& t : tallies) {
    if (t.failures > 0) {
      r.passed = false;
      ++failing;
    }
    r.notes.push_back(t.line());
  }
  std::ostringstream d;
  d << tallies.size() - failing << "/" << tallies.size() << " sub-checks clean";
  if (!extra.empty()) d << "; " << extra;
  r.detail = d.str();
  return r;
}

// Fixed checks: each entry is (description, outcome).
CriterionResult from_checks(int id, std::string name, const std::vector<std::pair<std::string, bool>>& checks) {
  CriterionResult r{id, std::move(name), true, {}, {}};
  int ok = 0;
  for (const auto& [what, passed] : checks) {
    r.notes.push_back(std::string(passed ? "ok   " : "FAIL ") + what);
    if (passed) {
      ++ok;
    } else {
      r.passed = false;
    }
  }
  r.detail = std::to_string(ok) + "/" + std::to_string(checks.size()) + " checks";
  return r;
}

std::string show(const MetaTheory& t) {
  std::string s = "{";
  bool first = true;
  for (const auto& m : t) {
    s += (first ? "" : ", ") + to_string(m);
    first = false;
  }
  return s + "}";
}

std::string show(const std::vector<SignedProp>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : "") + to_string(s[k]);
  return out + "}";
}

std::string show_pair(const Prop& a, const Prop& b) { return "a = " + to_string(a) + ", b = " + to_string(b); }

const Threshold kQuarter(1, 4);
const Threshold kThreeQuarters(3, 4);

// Guards a check so that an exception counts as a failure with its message.
template <typename F>
bool guarded(F&& f, std::string& error) {
  try {
    return f();
  } catch (const std::exception& e) {
    error = e.what();
    return false;
  }
}

}  // namespace

std::vector<CriterionResult> run_worked_suite() {
  std::vector<CriterionResult> out;
  const MetaTheory ex1 = parse_theory("[p >= 0.8] | [q <= 0.3]\n[p <= 0.3]\n");
  const MetaTheory ex2 = parse_theory("[p <= 0.5] | [q >= 0.6]\n[p >= 0.3]\n");
  const MetaTheory ex4 = parse_theory("[p >= 0.5] | ([q >= 0.4] & [u >= 0.6])\n[p <= 0.3]\n");
  const Prop p = Prop::atom("p"), q = Prop::atom("q"), r = Prop::atom("r"), s = Prop::atom("s");

  {
    MetaProp query = parse_meta("[q <= 0.6]");
    std::vector<Prop> crisp_ex1 = crisp_theory(ex1);
    std::vector<Prop> expected{p | ~q, ~p};
    out.push_back(from_checks(1, "ex1 entailment and crisp form",
                              {{"tableau: Sigma |= [q <= 0.6]", entails(ex1, query)},
                               {"grid oracle: Sigma |= [q <= 0.6]", oracle_entails(ex1, query)},
                               {"crisp(Sigma) = {p | ~q, ~p}", crisp_ex1 == expected},
                               {"crisp(Sigma) |=2 ~q", entails2(crisp_ex1, ~q)}}));
  }
  {
    GlbResult g = glb(ex2, q);
    out.push_back(from_checks(2, "ex2 classical entailment without fuzzy bound",
                              {{"crisp(Sigma) |=2 q", entails2(crisp_theory(ex2), q)},
                               {"glb(Sigma, q) = 0 (got " + g.value.str() + ")",
                                g.value == Threshold::zero() && !g.theory_unsat}}));
  }
  {
    SatOutcome o = sat(ex4);
    FuzzyInterp known_model{{"p", Threshold(3, 10)}, {"q", Threshold(2, 5)}, {"u", Threshold(3, 5)}};
    out.push_back(from_checks(3, "ex4 satisfiability and model",
                              {{"sat(Sigma) is satisfiable", o.satisfiable},
                               {"extracted model satisfies Sigma", o.satisfiable && eval_theory(o.model, ex4)},
                               {"p = 3/10, q = 2/5, u = 3/5 satisfies Sigma", eval_theory(known_model, ex4)}}));
  }
  {
    std::vector<Threshold> ns = n_sigma(ex1);
    std::vector<Threshold> expected{Threshold::zero(), Threshold::half(), Threshold(7, 10), Threshold(4, 5),
                                    Threshold::one()};
    std::string got;
    for (const auto& n : ns) got += (got.empty() ? "" : " ") + n.str();
    out.push_back(from_checks(4, "ex1 candidate bound set", {{"N = {" + got + "}", ns == expected}}));
  }
  {
    auto agree = [](const std::vector<Prop>& t, const Prop& a, bool expected) {
      std::vector<SignedProp> signed_set;
      for (const auto& m : t) signed_set.push_back(T(m));
      signed_set.push_back(NT(a));
      bool oracle = !oracle4(signed_set).satisfiable;
      return entails4(t, a) == expected && oracle == expected;
    };
    out.push_back(from_checks(
        5, "four-valued entailment examples",
        {{"p & (q | r) |=4 (p | r) & (q | r | s)", agree({p & (q | r)}, (p | r) & (q | r | s), true)},
         {"p & ~p does not 4-entail q", agree({p & ~p}, q, false)},
         {"p | ~p is not a four-valued tautology", agree({}, p | ~p, false)},
         {"p & (~p | q) does not 4-entail q", agree({p & (~p | q)}, q, false)}}));
  }
  return out;
}

std::vector<CriterionResult> run_random_suite(std::uint64_t seed, const SuiteSizes& sizes) {
  std::vector<CriterionResult> out;
  Rng rng(seed);

  {
    Tally verdict{"tableau vs grid oracle verdict"};
    Tally model{"tableau model satisfies theory"};
    int unsat = 0;
    for (int k = 0; k < sizes.fuzzy_fuzz; ++k) {
      MetaTheory t = random_meta_theory(rng, 3, 6);
      SatOutcome o = sat(t);
      OracleOutcome g = oracle_sat(t);
      unsat += o.satisfiable ? 0 : 1;
      verdict.record(o.satisfiable == g.satisfiable, [&] {
        return show(t) + " tableau=" + (o.satisfiable ? "sat" : "unsat") + " oracle=" + (g.satisfiable ? "sat" : "unsat");
      });
      if (o.satisfiable) model.record(eval_theory(o.model, t), [&] { return show(t); });
    }
    out.push_back(from_tallies(6, "differential fuzz, fuzzy tableau", {verdict, model},
                               std::to_string(sizes.fuzzy_fuzz) + " theories, " + std::to_string(unsat) + " unsat"));
  }

  {
    Tally verdict{"sat4 vs 4^k oracle verdict"};
    Tally model{"sat4 model satisfies signed set"};
    int unsat = 0;
    for (int k = 0; k < sizes.four_fuzz; ++k) {
      std::vector<SignedProp> s = random_signed_set(rng, 3, 6);
      Sat4Outcome o = sat4(s);
      Sat4Outcome g = oracle4(s);
      unsat += o.satisfiable ? 0 : 1;
      verdict.record(o.satisfiable == g.satisfiable, [&] { return show(s); });
      if (o.satisfiable) {
        model.record(std::all_of(s.begin(), s.end(), [&](const SignedProp& x) { return satisfies(o.model, x); }),
                     [&] { return show(s); });
      }
    }
    out.push_back(from_tallies(7, "differential fuzz, four-valued tableau", {verdict, model},
                               std::to_string(sizes.four_fuzz) + " sets, " + std::to_string(unsat) + " unsat"));
  }

  {
    Tally low{"char_low = scaled at 1/4 = scaled at 1/2"};
    Tally high{"char_high = scaled at 3/4"};
    Tally all{"char_all = scaled at 1/4 and 3/4"};
    Tally rel_r{"relation r = scaled at 1/4 and 3/4"};
    Tally spot{"relation r true => I(a) <= I(b) on random grid points"};
    Tally rel_a{"relation a = entails2 = [~a | b >= 1/2] valid"};
    Tally rel_b{"relation b = {[a >= 1/2]} |= [b >= 1/2]"};
    Tally rel_c{"relation c = {[a > 1/2]} |= [b > 1/2]"};
    int positives = 0;
    for (int k = 0; k < sizes.theorem_pairs; ++k) {
      Prop a = random_prop(rng, {3, 3, false});
      Prop b = random_prop(rng, {3, 3, false});
      auto describe = [&] { return show_pair(a, b); };
      bool s25 = scaled_entails(a, b, kQuarter);
      bool s50 = scaled_entails(a, b, Threshold::half());
      bool s75 = scaled_entails(a, b, kThreeQuarters);

      CharReport cl = char_low(a, b);
      low.record(cl.verdict == s25 && cl.verdict == s50, [&] {
        return describe() + " char_low=" + std::to_string(cl.verdict) + " s(1/4)=" + std::to_string(s25) +
               " s(1/2)=" + std::to_string(s50);
      });
      CharReport ch = char_high(a, b);
      high.record(ch.verdict == s75, [&] {
        return describe() + " char_high=" + std::to_string(ch.verdict) + " s(3/4)=" + std::to_string(s75);
      });
      CharReport ca = char_all(a, b);
      all.record(ca.verdict == (s25 && s75), [&] {
        return describe() + " char_all=" + std::to_string(ca.verdict) + " s(1/4)&s(3/4)=" + std::to_string(s25 && s75);
      });
      CharReport rr = relation(RelationKind::R, a, b);
      positives += rr.verdict ? 1 : 0;
      rel_r.record(rr.verdict == (s25 && s75), [&] { return describe(); });
      if (rr.verdict) {
        std::set<std::string> ls = letters(a);
        collect_letters(b, ls);
        std::vector<std::string> names(ls.begin(), ls.end());
        const std::int64_t den = 2 * static_cast<std::int64_t>(std::max<std::size_t>(1, names.size()));
        bool ok = true;
        for (int j = 0; j < 200 && ok; ++j) {
          FuzzyInterp i = random_interp(rng, names, den);
          ok = eval_prop(i, a) <= eval_prop(i, b);
        }
        spot.record(ok, describe);
      }

      bool ra = relation(RelationKind::A, a, b).verdict;
      rel_a.record(ra == entails2({a}, b) && ra == entails(MetaTheory{}, geq(~a | b, Threshold::half())), describe);
      bool rb = relation(RelationKind::B, a, b).verdict;
      rel_b.record(rb == entails(MetaTheory{geq(a, Threshold::half())}, geq(b, Threshold::half())), describe);
      bool rc = relation(RelationKind::C, a, b).verdict;
      rel_c.record(rc == entails(MetaTheory{gt(a, Threshold::half())}, gt(b, Threshold::half())), describe);
    }
    out.push_back(from_tallies(8, "characterisation theorems on random pairs",
                               {low, high, all, rel_r, spot, rel_a, rel_b, rel_c},
                               std::to_string(sizes.theorem_pairs) + " pairs, " + std::to_string(positives) +
                                   " with relation r true"));
  }

  {
    Tally member{"glb in candidate set"};
    Tally attained{"glb entailed, next candidate not (tableau and oracle)"};
    Tally dual{"glb(Sigma, ~A) = 1 - lub(Sigma, A), lub entailed"};
    Tally taut{"glb(empty, A) in {0, 1/2}, 1/2 iff classical tautology"};
    int made = 0;
    while (made < sizes.bounds_instances) {
      MetaTheory t = random_meta_theory(rng, 3, 6);
      if (!sat(t).satisfiable) continue;
      ++made;
      Prop a = random_prop(rng, {3, 2, false});
      auto describe = [&] { return show(t) + " A = " + to_string(a); };
      std::vector<Threshold> cand = n_sigma(t);
      GlbResult g = glb(t, a);
      auto pos = std::find(cand.begin(), cand.end(), g.value);
      member.record(pos != cand.end() && !g.theory_unsat, describe);
      std::string err;
      bool ok = guarded(
          [&] {
            if (!entails(t, geq(a, g.value)) || !oracle_entails(t, geq(a, g.value))) return false;
            if (pos == cand.end() || pos + 1 == cand.end()) return pos != cand.end();
            return !entails(t, geq(a, *(pos + 1))) && !oracle_entails(t, geq(a, *(pos + 1)));
          },
          err);
      attained.record(ok, [&] { return describe() + (err.empty() ? "" : " (" + err + ")"); });

      GlbResult l = lub(t, a);
      GlbResult gn = glb(t, ~a);
      dual.record(gn.value == l.value.complement() && entails(t, leq(a, l.value)) &&
                      oracle_entails(t, leq(a, l.value)),
                  describe);

      Prop b = random_prop(rng, {3, 3, false});
      GlbResult e = glb(MetaTheory{}, b);
      bool classical = tautology2(b);
      bool classical_oracle = !oracle2({NT(b)}).satisfiable;
      bool in_set = e.value == Threshold::zero() || e.value == Threshold::half();
      taut.record(in_set && (e.value == Threshold::half()) == classical && classical == classical_oracle,
                  [&] { return "A = " + to_string(b) + " glb = " + e.value.str(); });
    }
    out.push_back(from_tallies(9, "bounds on random satisfiable theories", {member, attained, dual, taut},
                               std::to_string(made) + " instances"));
  }

  {
    Tally satisfiable{"sub-normalised theory satisfiable with validating constructed model"};
    Tally bridge{"entails => tautology2(crisp q) or crisp(Sigma) |=4 crisp(q)"};
    int entailed = 0;
    for (int k = 0; k < sizes.subnorm_instances; ++k) {
      MetaTheory t = random_meta_theory(rng, 3, 6, LiteralSide::SubNormalised);
      std::string err;
      bool ok = guarded(
          [&] {
            FuzzyInterp m = subnorm_model(t);
            return sat(t).satisfiable && eval_theory(m, t);
          },
          err);
      satisfiable.record(ok, [&] { return show(t) + (err.empty() ? "" : " (" + err + ")"); });

      MetaTheory sigma = random_meta_theory(rng, 3, 4, LiteralSide::SubNormalised);
      MetaProp psi = random_meta_nnf(rng, 3, 1 + static_cast<int>(rng() % 3), LiteralSide::SubNormalised);
      if (entails(sigma, psi)) {
        ++entailed;
        Prop cq = crisp(psi);
        bridge.record(tautology2(cq) || entails4(crisp_theory(sigma), cq),
                      [&] { return show(sigma) + " |= " + to_string(psi); });
      }
    }
    out.push_back(from_tallies(10, "sub-normalised theories", {satisfiable, bridge},
                               std::to_string(sizes.subnorm_instances) + " theories, " + std::to_string(entailed) +
                                   " entailed queries"));
  }
  return out;
}

void print_results(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << '\n';
    for (const auto& n : r.notes) out << "       " << n << '\n';
  }
}

}  // namespace flogic
