#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chainmod/cli.hpp"

using chainmod::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("chainmod_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

// Every scalar of a JSON tree, in document order, as printed text.
void scalars(const Json& j, std::vector<std::string>& out) {
  if (j.is_structured()) {
    for (const auto& e : j) scalars(e, out);
  } else if (j.is_string()) {
    out.push_back(j.get<std::string>());
  } else if (!j.is_null()) {
    out.push_back(j.dump());
  }
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("polarize") {
  auto r = call({"polarize", "--r", "2", "--chi", "-1,-3"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["schema"] == "1");
  CHECK(j["status"] == "feasible");
  CHECK(j["weights"] == Json::parse(R"(["1/3","2/3"])"));
  CHECK(j["case"] == "Case2");

  auto bad = call({"polarize", "--r", "2", "--chi", "-1,5"});
  CHECK(bad.code == 1);
  CHECK(bad.json()["status"] == "infeasible");

  auto with_oracle = call({"polarize", "--r", "2", "--chi", "-1,-1,-1", "--oracle-den", "12"});
  CHECK(with_oracle.code == 0);
  CHECK(with_oracle.json()["oracle"]["found"] == true);
}

TEST_CASE("components") {
  auto r = call({"components", "--genera", "2,3", "--r", "2", "--chi", "-6", "--w", "2/5,3/5"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  REQUIRE(j["components"].size() == 2);
  int rational = 0;
  for (const auto& c : j["components"]) rational += c["verdict"] == "RationalByMainTheorem";
  CHECK(rational == 1);

  auto sampled = call({"components", "--genera", "2,2,2", "--r", "2", "--chi", "1", "--seed", "5"});
  CHECK(sampled.code == 0);
  CHECK(sampled.json()["count"] == 4);
  CHECK(sampled.out == call({"--seed", "5", "components", "--genera", "2,2,2", "--r", "2", "--chi", "1"}).out);

  auto none = call({"components", "--genera", "2,3", "--r", "2", "--chi", "-6", "--w", "1/3,2/3", "--r", "2"});
  CHECK(none.code == 2);  // repeated flag
  auto unknown = call({"components", "--genera", "2,2", "--r", "2", "--chi", "-5", "--w", "1/3,2/3"});
  CHECK(unknown.code == 1);  // parity forbids an all-odd multidegree
}

TEST_CASE("check reports and exit codes") {
  auto ok = call({"check", "--r", "2", "--chi", "-1,-3", "--w", "1/3,2/3", "--strict"});
  CHECK(ok.code == 0);
  CHECK(ok.json()["partial_euler_bounds"]["verdict"] == "AllStrict");

  auto bad = call({"check", "--r", "2", "--chi", "-1,-3", "--w", "1/7,6/7", "--strict"});
  CHECK(bad.code == 1);
  CHECK(bad.json()["partial_euler_bounds"]["rows"][0]["lower_bound"] == "-6/7");

  auto k = call({"check", "--r", "2", "--chi", "-1,-3", "--w", "1/3,2/3", "--k", "0"});
  CHECK(k.code == 1);
  CHECK(k.json()["verdict"]["status"] == "NecessaryViolated");

  auto flagged = call({"check", "--r", "2", "--chi", "-1,-3", "--w", "1/3,2/3", "--genera", "2,3",
                       "--restriction-semistable", "1,1", "--restriction-stable-any"});
  CHECK(flagged.code == 0);
  CHECK(flagged.json()["verdict"]["status"] == "CertifiedStable");

  auto sigma = temp_file("sigma.json", R"({"r": 2, "matrices": [[["1","0"],["0","0"]]]})");
  auto from_file = call({"check", "--r", "2", "--chi", "-1,-3", "--w", "1/3,2/3", "--sigma", sigma});
  CHECK(from_file.json()["k"] == Json::parse("[1]"));
}

TEST_CASE("invalid input exits 2") {
  CHECK(call({"polarize", "--r", "2"}).code == 2);
  CHECK(call({"polarize", "--r", "2", "--chi", "1/2,3"}).code == 2);
  CHECK(call({"check", "--r", "2", "--chi", "-1,-3", "--w", "1/2,1/2,1/2"}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"polarize", "--bogus", "1"}).code == 2);
  CHECK(call({}).code == 2);
  auto v = call({"check", "--r", "2", "--chi", "-1,-3", "--w", "1,0"});
  CHECK(v.code == 2);
  CHECK(v.err.find("index 1") != std::string::npos);
}

TEST_CASE("chi, dim, slope, glue") {
  auto chi = call({"chi", "--r", "2", "--chi", "-1,-3", "--genera", "2,3"});
  CHECK(chi.json()["chi"] == -6);
  CHECK(chi.json()["degrees"] == Json::parse("[1,1]"));
  CHECK(chi.json()["degree"] == 2);
  auto from_deg = call({"chi", "--r", "2", "--degrees", "1,1", "--genera", "2,3", "--twist", "1,-1"});
  CHECK(from_deg.json()["euler"] == Json::parse("[-1,-3]"));
  CHECK(from_deg.json()["twisted_chi"] == -6);

  auto dim = call({"dim", "--genera", "2,2", "--r", "2"});
  CHECK(dim.json()["moduli_dimension"] == 13);
  CHECK(dim.json()["node_contribution"] == 3);

  CHECK(call({"slope", "--chi", "-6", "--r", "2", "--w", "1/3,2/3"}).json()["slope"] == "-3");
  CHECK(call({"slope", "--degree", "1", "--rank", "2", "--k", "2"}).json()["mu_k"] == "3/2");

  auto datum = temp_file("glue.json", R"({"r": 2, "matrices": [[[1, 0], [0, 0]]], "euler": [-1, -3]})");
  auto glue = call({"glue", "--input", datum});
  REQUIRE(glue.code == 0);
  CHECK(glue.json()["sheaf"]["sigma_ranks"] == Json::parse("[1]"));
  CHECK(glue.json()["chi"] == -6);
  CHECK(glue.json()["vector_bundle"] == false);
}

TEST_CASE("oracle subcommand") {
  CHECK(call({"oracle", "subset", "--r", "2", "--chi", "6,-1,4"}).json()["agree"] == true);
  auto rank = call({"oracle", "rank", "--matrix", "1,2;2,4"});
  CHECK(rank.code == 0);
  CHECK(rank.json()["rank"] == 1);
  CHECK(call({"oracle", "feasibility", "--r", "2", "--chi", "-1,-3"}).code == 0);
  CHECK(call({"oracle", "enumeration", "--genera", "2,3", "--r", "2", "--chi", "-6", "--w", "2/5,3/5"}).code == 0);
  auto sweep = call({"oracle", "implication", "--n", "2", "--r", "1", "--chi-min", "-3", "--chi-max", "3"});
  CHECK(sweep.code == 0);
  CHECK(sweep.json()["implication_failures"].empty());
  CHECK(call({"oracle", "nope"}).code == 2);
}

TEST_CASE("config files merge with flags") {
  auto cfg = temp_file("job.json", R"({"command": "polarize", "r": 2, "chi_vec": [-1, -1, -1]})");
  auto r = call({"--config", cfg});
  REQUIRE(r.code == 0);
  CHECK(r.json()["weights"] == Json::parse(R"(["1/3","1/3","1/3"])"));

  auto overridden = call({"polarize", "--config", cfg, "--chi", "-1,-3"});
  CHECK(overridden.json()["weights"] == Json::parse(R"(["1/3","2/3"])"));

  auto typo = temp_file("typo.json", R"({"command": "polarize", "r": 2, "chi": "-1,-3", "colour": 1})");
  auto rejected = call({"--config", typo});
  CHECK(rejected.code == 2);
  CHECK(rejected.err.find("colour") != std::string::npos);

  auto flags = temp_file("flags.json", R"({"command": "check", "r": 2, "chi": [-1, -3], "w": ["1/3", "2/3"],
    "component_flags": {"restriction_semistable": [1, 1], "restriction_stable_any": true}})");
  CHECK(call({"--config", flags}).json()["verdict"]["status"] == "CertifiedStable");
}

TEST_CASE("pretty output carries the same numbers") {
  std::vector<std::vector<std::string>> cases{
      {"polarize", "--r", "2", "--chi", "-1,-1,-1"},
      {"components", "--genera", "2,3,2", "--r", "3", "--chi", "-7", "--w", "2/7,3/7,2/7"},
      {"check", "--r", "2", "--chi", "-1,-3", "--w", "1/7,6/7", "--k", "1"},
  };
  for (auto args : cases) {
    auto plain = call(args);
    args.push_back("--pretty");
    auto pretty = call(args);
    CHECK(plain.code == pretty.code);
    CHECK(chainmod::cli::render_pretty(plain.out) == pretty.out);
    std::vector<std::string> values;
    scalars(plain.json(), values);
    std::size_t pos = 0;
    for (const auto& v : values) {
      auto at = pretty.out.find(v, pos);
      REQUIRE_MESSAGE(at != std::string::npos, "missing " << v);
      pos = at + v.size();
    }
  }
}

TEST_CASE("output file and schema round trip") {
  auto path = std::filesystem::temp_directory_path() / "chainmod_test_out.json";
  auto r = call({"polarize", "--r", "3", "--chi", "4,4", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  auto j = Json::parse(in);
  CHECK(j["schema"] == "1");
  CHECK(j["command"] == "polarize");
  for (const auto& w : j["weights"]) CHECK(w.is_string());
}

}  // TEST_SUITE
