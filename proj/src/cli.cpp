#include "flogic/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "flogic/acceptance.hpp"
#include "flogic/bounds.hpp"
#include "flogic/bridges.hpp"
#include "flogic/errors.hpp"
#include "flogic/four_valued.hpp"
#include "flogic/fuzzy_semantics.hpp"
#include "flogic/fuzzy_tableau.hpp"
#include "flogic/normal_form.hpp"
#include "flogic/parser.hpp"

namespace flogic {

namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Divergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Wraps parse errors with the file they came from.
template <typename F>
auto parse_file(const std::string& path, F&& parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

template <typename F>
auto parse_arg(const std::string& what, const std::string& text, F&& parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(what + ": " + e.what());
  }
}

json model_json(const FuzzyInterp& m) {
  json j = json::object();
  for (const auto& [letter, v] : m.values()) j[letter] = v.str();
  return j;
}

json model_json(const FourInterp& m) {
  json j = json::object();
  for (const auto& [letter, v] : m.values()) j[letter] = to_string(v);
  return j;
}

json report_json(const CharReport& r) {
  json e = json::object();
  if (r.tautology2_b) e["tautology2_b"] = *r.tautology2_b;
  if (r.unsat2_a) e["unsat2_a"] = *r.unsat2_a;
  if (r.entails4_ab) e["entails4"] = *r.entails4_ab;
  if (r.entails2_ab) e["entails2"] = *r.entails2_ab;
  if (!r.disjuncts.empty()) {
    json d = json::array();
    for (const auto& x : r.disjuncts) {
      d.push_back({{"disjunct", to_string(x.disjunct)}, {"unsat2", x.unsat2}, {"entails4", x.entails4}});
    }
    e["disjuncts"] = d;
  }
  return e;
}

// The oracle-only glb: scan the candidates from the top.
GlbResult oracle_glb(const MetaTheory& t, const Prop& a) {
  if (!oracle_sat(t).satisfiable) return {Threshold::one(), true};
  std::vector<Threshold> cand = n_sigma(t);
  for (auto it = cand.rbegin(); it != cand.rend(); ++it) {
    if (oracle_entails(t, geq(a, *it))) return {*it, false};
  }
  return {Threshold::zero(), false};
}

struct Options {
  bool oracle = false;
  bool trace = false;
  bool json = false;
};

// Accumulates the answer of one command and renders it as text or JSON.
class Answer {
 public:
  Answer(std::string command, const Options& opts) : command_(std::move(command)), opts_(opts) {
    doc_["command"] = command_;
  }

  void verdict(bool v) { doc_["verdict"] = v; }
  void value(json v) { doc_["value"] = std::move(v); }
  void model(json m) { doc_["model"] = std::move(m); }
  json& evidence() {
    if (!doc_.contains("evidence")) doc_["evidence"] = json::object();
    return doc_["evidence"];
  }
  std::ostringstream& trace() { return trace_; }
  std::ostringstream& text() { return text_; }

  void emit(std::ostream& out) {
    std::string tr = trace_.str();
    if (opts_.json) {
      if (!tr.empty()) {
        json lines = json::array();
        std::istringstream in(tr);
        for (std::string line; std::getline(in, line);) lines.push_back(line);
        evidence()["trace"] = lines;
      }
      out << doc_.dump(2) << '\n';
    } else {
      out << tr << text_.str();
    }
  }

 private:
  std::string command_;
  const Options& opts_;
  json doc_;
  std::ostringstream trace_;
  std::ostringstream text_;
};

TableauOptions tableau_options(Answer& a, const Options& opts) {
  TableauOptions t;
  if (opts.trace) t.trace = &a.trace();
  return t;
}

void check_oracle(Answer& a, bool tableau, bool oracle) {
  a.evidence()["oracle_verdict"] = oracle;
  if (tableau != oracle) {
    throw Divergence("brute-force oracle disagrees: tableau says " + std::string(tableau ? "true" : "false") +
                     ", oracle says " + (oracle ? "true" : "false"));
  }
}

int yes_no(bool v) { return v ? kExitYes : kExitNo; }

int cmd_sat(const std::string& file, const Options& opts, std::ostream& out) {
  MetaTheory t = parse_file(file, parse_theory);
  Answer a("sat", opts);
  SatOutcome o = sat(t, tableau_options(a, opts));
  a.verdict(o.satisfiable);
  a.text() << (o.satisfiable ? "satisfiable" : "unsatisfiable") << '\n';
  if (o.satisfiable) {
    a.model(model_json(o.model));
    for (const auto& [letter, v] : o.model.values()) a.text() << letter << " = " << v.str() << '\n';
  }
  a.evidence()["rule_applications"] = o.stats.rule_applications;
  a.evidence()["branches_closed"] = o.stats.branches_closed;
  if (opts.oracle) {
    check_oracle(a, o.satisfiable, oracle_sat(t).satisfiable);
    if (o.satisfiable && !eval_theory(o.model, t)) throw Divergence("extracted model does not satisfy the theory");
  }
  a.emit(out);
  return yes_no(o.satisfiable);
}

int cmd_entails(const std::string& file, const std::string& query, const Options& opts, std::ostream& out) {
  MetaTheory t = parse_file(file, parse_theory);
  MetaProp q = parse_arg("query", query, parse_meta);
  Answer a("entails", opts);
  bool v = entails(t, q, tableau_options(a, opts));
  a.verdict(v);
  a.text() << (v ? "true" : "false") << '\n';
  if (opts.oracle) check_oracle(a, v, oracle_entails(t, q));
  a.emit(out);
  return yes_no(v);
}

int cmd_bound(bool lower, const std::string& file, const std::string& prop, const Options& opts, std::ostream& out) {
  MetaTheory t = parse_file(file, parse_theory);
  Prop p = parse_arg("proposition", prop, parse_prop);
  Answer a(lower ? "glb" : "lub", opts);
  GlbResult r = lower ? glb(t, p, tableau_options(a, opts)) : lub(t, p, tableau_options(a, opts));
  a.verdict(!r.theory_unsat);
  a.value(r.value.str());
  a.evidence()["theory_unsat"] = r.theory_unsat;
  a.text() << r.value.str();
  if (r.theory_unsat) a.text() << " (theory unsatisfiable)";
  a.text() << '\n';
  if (opts.oracle) {
    GlbResult o = oracle_glb(t, lower ? p : nnf_prop(~p));
    if (!lower) o = o.theory_unsat ? GlbResult{Threshold::zero(), true} : GlbResult{o.value.complement(), false};
    const Threshold& ov = o.value;
    a.evidence()["oracle_value"] = ov.str();
    if (!(ov == r.value) || o.theory_unsat != r.theory_unsat) {
      throw Divergence("brute-force oracle disagrees: tableau gives " + r.value.str() + ", oracle gives " + ov.str());
    }
  }
  a.emit(out);
  return kExitYes;
}

int cmd_sat4(const std::string& file, const Options& opts, std::ostream& out) {
  std::vector<SignedProp> s = parse_file(file, parse_signed_list);
  Answer a("sat4", opts);
  Sat4Outcome o = sat4(s, Semantics::FourValued, tableau_options(a, opts));
  a.verdict(o.satisfiable);
  a.text() << (o.satisfiable ? "satisfiable" : "unsatisfiable") << '\n';
  if (o.satisfiable) {
    a.model(model_json(o.model));
    for (const auto& [letter, v] : o.model.values()) a.text() << letter << " = " << to_string(v) << '\n';
  }
  if (opts.oracle) {
    check_oracle(a, o.satisfiable, oracle4(s).satisfiable);
    if (o.satisfiable &&
        !std::all_of(s.begin(), s.end(), [&](const SignedProp& x) { return satisfies(o.model, x); })) {
      throw Divergence("extracted four-valued model does not satisfy the input");
    }
  }
  a.emit(out);
  return yes_no(o.satisfiable);
}

int cmd_entails4(const std::string& file, const std::string& prop, const Options& opts, std::ostream& out) {
  std::vector<Prop> t = parse_file(file, parse_prop_list);
  Prop p = parse_arg("proposition", prop, parse_prop);
  Answer a("entails4", opts);
  bool v = entails4(t, p, tableau_options(a, opts));
  a.verdict(v);
  a.text() << (v ? "true" : "false") << '\n';
  if (opts.oracle) {
    std::vector<SignedProp> s;
    for (const auto& m : t) s.push_back(T(m));
    s.push_back(NT(p));
    check_oracle(a, v, !oracle4(s).satisfiable);
  }
  a.emit(out);
  return yes_no(v);
}

int cmd_taut2(const std::string& prop, const Options& opts, std::ostream& out) {
  Prop p = parse_arg("proposition", prop, parse_prop);
  Answer a("taut2", opts);
  bool v = entails2({}, p, tableau_options(a, opts));
  a.verdict(v);
  a.text() << (v ? "true" : "false") << '\n';
  if (opts.oracle) check_oracle(a, v, !oracle2({NT(p)}).satisfiable);
  a.emit(out);
  return yes_no(v);
}

int cmd_relation(const std::string& kind, const std::string& lhs, const std::string& rhs, const Options& opts,
                 std::ostream& out) {
  static const std::map<std::string, RelationKind> kKinds{
      {"r", RelationKind::R}, {"a", RelationKind::A}, {"b", RelationKind::B}, {"c", RelationKind::C}};
  RelationKind k = kKinds.at(kind);
  Prop pa = parse_arg("first proposition", lhs, parse_prop);
  Prop pb = parse_arg("second proposition", rhs, parse_prop);
  Answer a("relation", opts);
  CharReport r = relation(k, pa, pb);
  a.verdict(r.verdict);
  a.evidence() = report_json(r);
  a.evidence()["kind"] = kind;
  a.text() << (r.verdict ? "true" : "false") << '\n';
  if (opts.oracle) {
    std::optional<FuzzyInterp> cex = relation_counterexample(k, pa, pb);
    if (cex) a.evidence()["oracle_counterexample"] = model_json(*cex);
    check_oracle(a, r.verdict, !cex.has_value());
  }
  a.emit(out);
  return yes_no(r.verdict);
}

int cmd_crisp(const std::string& file, const Options& opts, std::ostream& out) {
  MetaTheory t = parse_file(file, parse_theory);
  Answer a("crisp", opts);
  json list = json::array();
  for (const auto& p : crisp_theory(t)) {
    list.push_back(to_string(p));
    a.text() << to_string(p) << '\n';
  }
  a.verdict(true);
  a.value(list);
  a.emit(out);
  return kExitYes;
}

int cmd_nnf(const std::string& expr, const Options& opts, std::ostream& out) {
  Answer a("nnf", opts);
  std::string result;
  if (expr.find('[') != std::string::npos) {
    result = to_string(nnf_meta(parse_arg("meta proposition", expr, parse_meta)));
  } else {
    result = to_string(nnf_prop(parse_arg("proposition", expr, parse_prop)));
  }
  a.verdict(true);
  a.value(result);
  a.text() << result << '\n';
  a.emit(out);
  return kExitYes;
}

int cmd_check(const std::string& suite, std::uint64_t seed, const Options& opts, std::ostream& out) {
  std::vector<CriterionResult> results = suite == "paper" ? run_worked_suite() : run_random_suite(seed);
  bool all = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
  Answer a("check", opts);
  a.verdict(all);
  json criteria = json::array();
  for (const auto& r : results) {
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"notes", r.notes}});
  }
  a.evidence()["suite"] = suite;
  a.evidence()["criteria"] = criteria;
  print_results(a.text(), results);
  a.emit(out);
  return yes_no(all);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy and four-valued propositional reasoning", "flogic"};
  app.require_subcommand(1);
  Options opts;
  app.add_flag("--oracle", opts.oracle, "Cross-check the answer against brute-force enumeration");
  app.add_flag("--trace", opts.trace, "Print the tableau deduction steps");
  app.add_flag("--json", opts.json, "Print one JSON document");

  std::string file, query, prop, prop2, kind, suite, expr;
  std::uint64_t seed = kDefaultSeed;
  std::function<int()> action;

  auto* c_sat = app.add_subcommand("sat", "Satisfiability of a meta theory file");
  c_sat->add_option("FILE", file)->required();
  c_sat->callback([&] { action = [&] { return cmd_sat(file, opts, out); }; });

  auto* c_ent = app.add_subcommand("entails", "Does the theory entail a meta proposition");
  c_ent->add_option("FILE", file)->required();
  c_ent->add_option("QUERY", query)->required();
  c_ent->callback([&] { action = [&] { return cmd_entails(file, query, opts, out); }; });

  auto* c_glb = app.add_subcommand("glb", "Greatest lower bound of a proposition's truth value");
  c_glb->add_option("FILE", file)->required();
  c_glb->add_option("PROP", prop)->required();
  c_glb->callback([&] { action = [&] { return cmd_bound(true, file, prop, opts, out); }; });

  auto* c_lub = app.add_subcommand("lub", "Least upper bound of a proposition's truth value");
  c_lub->add_option("FILE", file)->required();
  c_lub->add_option("PROP", prop)->required();
  c_lub->callback([&] { action = [&] { return cmd_bound(false, file, prop, opts, out); }; });

  auto* c_sat4 = app.add_subcommand("sat4", "Four-valued satisfiability of a signed proposition file");
  c_sat4->add_option("FILE", file)->required();
  c_sat4->callback([&] { action = [&] { return cmd_sat4(file, opts, out); }; });

  auto* c_ent4 = app.add_subcommand("entails4", "Four-valued entailment from a proposition file");
  c_ent4->add_option("FILE", file)->required();
  c_ent4->add_option("PROP", prop)->required();
  c_ent4->callback([&] { action = [&] { return cmd_entails4(file, prop, opts, out); }; });

  auto* c_taut = app.add_subcommand("taut2", "Classical tautology check");
  c_taut->add_option("PROP", prop)->required();
  c_taut->callback([&] { action = [&] { return cmd_taut2(prop, opts, out); }; });

  auto* c_rel = app.add_subcommand("relation", "Proposition-level fuzzy entailment");
  c_rel->add_option("--kind", kind, "r, a, b or c")->required()->check(CLI::IsMember({"r", "a", "b", "c"}));
  c_rel->add_option("A", prop)->required();
  c_rel->add_option("B", prop2)->required();
  c_rel->callback([&] { action = [&] { return cmd_relation(kind, prop, prop2, opts, out); }; });

  auto* c_crisp = app.add_subcommand("crisp", "Threshold-free classical form of a theory file");
  c_crisp->add_option("FILE", file)->required();
  c_crisp->callback([&] { action = [&] { return cmd_crisp(file, opts, out); }; });

  auto* c_nnf = app.add_subcommand("nnf", "Negation normal form of a proposition or meta proposition");
  c_nnf->add_option("EXPR", expr)->required();
  c_nnf->callback([&] { action = [&] { return cmd_nnf(expr, opts, out); }; });

  auto* c_check = app.add_subcommand("check", "Run an acceptance suite");
  c_check->add_option("--suite", suite)->required()->check(CLI::IsMember({"paper", "random"}));
  c_check->add_option("--seed", seed, "Seed of the random suite");
  c_check->callback([&] { action = [&] { return cmd_check(suite, seed, opts, out); }; });

  // Global flags may also follow the subcommand.
  for (auto* sub : app.get_subcommands({})) {
    sub->add_flag("--oracle", opts.oracle);
    sub->add_flag("--trace", opts.trace);
    sub->add_flag("--json", opts.json);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitUsage;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceExhausted& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const Divergence& e) {
    err << "divergence: " << e.what() << '\n';
    return kExitDivergence;
  }
}

}  // namespace flogic
