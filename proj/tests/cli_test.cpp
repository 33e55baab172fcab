#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "flogic/cli.hpp"

namespace flogic {
namespace {

using nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(FLOGIC_CORPUS) + "/" + name; }

// Enough of JSON Schema for the bundled output schema: type, enum,
// required, properties, additionalProperties, items.
bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "number") return v.is_number();
  if (t == "integer") return v.is_number_integer();
  if (t == "null") return v.is_null();
  return false;
}

void validate(const json& v, const json& schema, const std::string& path, std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    std::vector<std::string> types;
    if (schema["type"].is_string()) {
      types.push_back(schema["type"]);
    } else {
      for (const auto& t : schema["type"]) types.push_back(t);
    }
    if (std::none_of(types.begin(), types.end(), [&](const std::string& t) { return type_matches(v, t); })) {
      errors.push_back(path + ": wrong type");
      return;
    }
  }
  if (schema.contains("enum") &&
      std::find(schema["enum"].begin(), schema["enum"].end(), v) == schema["enum"].end()) {
    errors.push_back(path + ": not in enum");
  }
  if (v.is_object()) {
    for (const auto& r : schema.value("required", json::array())) {
      if (!v.contains(r.get<std::string>())) errors.push_back(path + ": missing " + r.get<std::string>());
    }
    const json props = schema.value("properties", json::object());
    for (const auto& [key, child] : v.items()) {
      if (props.contains(key)) {
        validate(child, props[key], path + "." + key, errors);
      } else if (schema.contains("additionalProperties")) {
        const json& extra = schema["additionalProperties"];
        if (extra.is_boolean() && !extra.get<bool>()) {
          errors.push_back(path + ": unexpected " + key);
        } else if (extra.is_object()) {
          validate(child, extra, path + "." + key, errors);
        }
      }
    }
  }
  if (v.is_array() && schema.contains("items")) {
    for (std::size_t k = 0; k < v.size(); ++k) validate(v[k], schema["items"], path + "[" + std::to_string(k) + "]", errors);
  }
}

json load_schema() {
  std::ifstream in(std::string(FLOGIC_SCHEMA));
  return json::parse(in);
}

TEST(Cli, CommandExamples) {
  CliRun e = run({"entails", corpus("ex1.th"), "[q <= 0.6]"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "true\n");
  CliRun g = run({"glb", corpus("empty.th"), "p | ~p"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out, "1/2\n");
  CliRun r = run({"relation", "--kind", "r", "p", "p | q"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
}

TEST(Cli, SatPrintsModelLines) {
  CliRun s = run({"sat", corpus("ex4.th")});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, "satisfiable\np = 0/1\nq = 2/5\nu = 3/5\n");
}

TEST(Cli, NegativeAnswersExitOne) {
  EXPECT_EQ(run({"entails", corpus("ex2.th"), "[q >= 0.6]"}).code, 1);
  EXPECT_EQ(run({"sat4", corpus("fig2.sgn")}).code, 1);
  EXPECT_EQ(run({"taut2", "p | q"}).code, 1);
  EXPECT_EQ(run({"relation", "--kind", "b", "p & (~p | q)", "q"}).code, 1);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"lub", corpus("ex1.th"), "q"}).out, "3/10\n");
  EXPECT_EQ(run({"crisp", corpus("ex2.th")}).out, "~p | q\np\n");
  EXPECT_EQ(run({"nnf", "~[q <= 0.6]"}).out, "[q > 3/5]\n");
  EXPECT_EQ(run({"nnf", "~(p & ~q)"}).out, "~p | q\n");
  EXPECT_EQ(run({"entails4", corpus("fig2.pth"), "(p | r) & (q | r | s)"}).out, "true\n");
  CliRun c = run({"check", "--suite", "paper"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("PASS [1]"), std::string::npos);
}

TEST(Cli, TraceComesBeforeTheAnswer) {
  CliRun t = run({"--trace", "sat", corpus("ex4.th")});
  EXPECT_EQ(t.out.rfind("OR 0 ", 0), 0u);
  EXPECT_NE(t.out.find("COMPLETE 2\nsatisfiable\n"), std::string::npos);
  // Flags are accepted after the subcommand as well.
  EXPECT_EQ(run({"sat", corpus("ex4.th"), "--trace"}).out, t.out);
}

TEST(Cli, OracleGivesSameVerdictsOnCorpus) {
  std::vector<std::vector<std::string>> commands{
      {"sat", corpus("ex1.th")},
      {"sat", corpus("ex2.th")},
      {"sat", corpus("ex4.th")},
      {"sat", corpus("empty.th")},
      {"entails", corpus("ex1.th"), "[q <= 0.6]"},
      {"entails", corpus("ex1.th"), "[q < 0.3]"},
      {"entails", corpus("ex2.th"), "[q >= 0.6]"},
      {"entails", corpus("ex4.th"), "[u >= 0.6]"},
      {"glb", corpus("ex2.th"), "q"},
      {"glb", corpus("ex1.th"), "~p"},
      {"lub", corpus("ex1.th"), "q"},
      {"sat4", corpus("fig2.sgn")},
      {"entails4", corpus("fig2.pth"), "(p | r) & (q | r | s)"},
      {"entails4", corpus("fig2.pth"), "s"},
      {"taut2", "p | ~p"},
      {"taut2", "p | q"},
      {"relation", "--kind", "r", "p", "p | q"},
      {"relation", "--kind", "a", "p & (~p | q)", "q"},
      {"relation", "--kind", "b", "p & (~p | q)", "q"},
      {"relation", "--kind", "c", "p | (q & ~q)", "p"},
  };
  for (auto args : commands) {
    CliRun plain = run(args);
    args.push_back("--oracle");
    CliRun checked = run(args);
    EXPECT_EQ(plain.code, checked.code) << args[0] << " " << args[1] << "\n" << checked.err;
    EXPECT_EQ(plain.out, checked.out) << args[0] << " " << args[1];
    EXPECT_LT(checked.code, 2) << checked.err;
  }
}

TEST(Cli, JsonOutputMatchesSchema) {
  json schema = load_schema();
  std::vector<std::vector<std::string>> commands{
      {"sat", corpus("ex4.th")},
      {"sat", corpus("ex1.th"), "--trace"},
      {"entails", corpus("ex1.th"), "[q <= 0.6]", "--oracle"},
      {"glb", corpus("empty.th"), "p | ~p"},
      {"lub", corpus("ex1.th"), "q", "--oracle"},
      {"sat4", corpus("fig2.sgn"), "--trace"},
      {"sat4", corpus("fig2.pth")},
      {"entails4", corpus("fig2.pth"), "q"},
      {"taut2", "p | ~p"},
      {"relation", "--kind", "c", "p | (q & ~q)", "p", "--oracle"},
      {"relation", "--kind", "b", "p & (~p | q)", "q", "--oracle"},
      {"crisp", corpus("ex1.th")},
      {"nnf", "~[q <= 0.6]"},
      {"check", "--suite", "paper"},
  };
  for (auto args : commands) {
    args.insert(args.begin(), "--json");
    CliRun r = run(args);
    ASSERT_LT(r.code, 2) << r.err;
    json doc = json::parse(r.out);
    std::vector<std::string> errors;
    validate(doc, schema, "$", errors);
    EXPECT_TRUE(errors.empty()) << args[1] << ": " << (errors.empty() ? "" : errors[0]);
    EXPECT_EQ(doc["command"], args[1]);
  }
  json sat = json::parse(run({"--json", "sat", corpus("ex4.th")}).out);
  EXPECT_EQ(sat["verdict"], true);
  EXPECT_EQ(sat["model"]["q"], "2/5");
  json glb = json::parse(run({"--json", "glb", corpus("empty.th"), "p | ~p"}).out);
  EXPECT_EQ(glb["value"], "1/2");

  // The validator itself rejects malformed documents.
  std::vector<std::string> errors;
  validate(json{{"command", "sat"}}, schema, "$", errors);
  validate(json{{"command", "sat"}, {"verdict", "yes"}}, schema, "$", errors);
  validate(json{{"command", "sat"}, {"verdict", true}, {"extra", 1}}, schema, "$", errors);
  EXPECT_EQ(errors.size(), 3u);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"sat", corpus("missing.th")}).code, 2);
  CliRun bad = run({"entails", corpus("ex1.th"), "[q <= 1.5]"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("1:"), std::string::npos);
  EXPECT_EQ(run({"relation", "--kind", "x", "p", "q"}).code, 2);
  EXPECT_EQ(run({"sat4", corpus("ex1.th")}).code, 2);
}

TEST(Cli, ResourceGuardExitsThree) {
  std::filesystem::path path = std::filesystem::temp_directory_path() / "flogic_cli_wide.th";
  {
    std::ofstream out(path);
    out << "[a >= 0.11] | [b >= 0.12] | [c >= 0.13] | [d >= 0.14]\n";
    out << "[e >= 0.15] | [f >= 0.16] | [g >= 0.17] | [h >= 0.18]\n";
  }
  EXPECT_EQ(run({"sat", path.string()}).code, 0);
  CliRun guarded = run({"sat", path.string(), "--oracle"});
  EXPECT_EQ(guarded.code, 3);
  EXPECT_FALSE(guarded.err.empty());
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace flogic
