#include <random>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = fgi::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

const std::string catalan =
    R"({"components":[{"n":1,"degree":4,"terms":[{"exp":[1],"coeff":"1"},{"exp":[2],"coeff":"-1"}]}]})";

const std::string linear_plus_constant =
    R"({"G":{"components":[{"n":2,"degree":2,"terms":[{"exp":[0,0],"coeff":"1"},{"exp":[0,1],"coeff":"1/2"}]},)"
    R"({"n":2,"degree":2,"terms":[{"exp":[0,0],"coeff":"-1"},{"exp":[1,0],"coeff":"2"}]}]},"omega":[1,0]})";

std::vector<std::pair<std::vector<std::string>, std::string>> corpus() {
  const std::string x_plus_x2 = R"({"n":1,"degree":3,"terms":[{"exp":[1],"coeff":"1"},{"exp":[2],"coeff":"1"}]})";
  const std::string g_exp = R"({"components":[{"n":1,"degree":3,"terms":[{"exp":[0],"coeff":"1"},{"exp":[1],"coeff":"1"},)"
                            R"({"exp":[2],"coeff":"1/2"},{"exp":[3],"coeff":"1/6"}]}]})";
  return {
      {{"revert"}, catalan},
      {{"compose"}, R"({"F":{"components":[)" + x_plus_x2 + R"(]},"G":{"components":[)" + x_plus_x2 + "]}}"},
      {{"lg-solve"}, g_exp},
      {{"lg-check"}, R"({"G":)" + g_exp + R"(,"omega":[1],"M":[2]})"},
      {{"zw-check", "--flavor", "reversion"}, catalan},
      {{"lg-matrix-check"}, linear_plus_constant},
      {{"wick"}, R"({"A":[[2,1],[1,1]],"alpha1":[1,1],"alpha2":[0,2]})"},
  };
}

}  // namespace

TEST_CASE("documented examples", "[cli]") {
  const Outcome rev = run_cli({"revert"}, catalan);
  REQUIRE(rev.status == 0);
  const json doc = json::parse(rev.out);
  const json terms = doc.at("result").at("components").at(0).at("terms");
  std::vector<std::string> coeffs;
  for (const auto& t : terms) coeffs.push_back(t.at("coeff"));
  CHECK(coeffs == std::vector<std::string>{"1", "1", "2", "5"});
  CHECK(doc.at("diagnostics").at("matches_oracle") == true);

  const Outcome diag = run_cli({"diagrams", "--flavor", "reversion", "--bound", "2"});
  REQUIRE(diag.status == 0);
  const json classes = json::parse(diag.out);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].at("aut") == 1);
  CHECK(classes[1].at("aut") == 2);
  CHECK(classes[1].at("class") == "H(L,L)");

  const Outcome w = run_cli({"wick"}, R"({"A":[[1]],"alpha1":[2],"alpha2":[2]})");
  REQUIRE(w.status == 0);
  CHECK(json::parse(w.out).at("value") == "2");
}

TEST_CASE("exit statuses", "[cli]") {
  CHECK(run_cli({}).status == fgi::cli::parse_failure);
  CHECK(run_cli({"revert"}, "{not json").status == fgi::cli::parse_failure);
  CHECK(run_cli({"revert", "--degree", "0"}, catalan).status == fgi::cli::parse_failure);
  const Outcome bad_field = run_cli({"revert"}, R"({"components":[{"n":1,"degree":2,"terms":[{"exp":[1],"coeff":"x"}]}]})");
  CHECK(bad_field.status == fgi::cli::parse_failure);
  CHECK(bad_field.err.find("coeff") != std::string::npos);

  const std::string singular =
      R"({"components":[{"n":2,"degree":3,"terms":[{"exp":[1,0],"coeff":"1"},{"exp":[0,1],"coeff":"1"}]},)"
      R"({"n":2,"degree":3,"terms":[{"exp":[1,0],"coeff":"2"},{"exp":[0,1],"coeff":"2"}]}]})";
  const Outcome dom = run_cli({"revert"}, singular);
  CHECK(dom.status == fgi::cli::domain_failure);
  CHECK(dom.err.find("singular") != std::string::npos);

  CHECK(run_cli({"revert"}, R"({"components":[{"n":1,"degree":50,"terms":[{"exp":[1],"coeff":"1"}]}]})").status ==
        fgi::cli::resource_failure);
  CHECK(run_cli({"diagrams", "--flavor", "reversion", "--bound", "30"}).status == fgi::cli::resource_failure);
  CHECK(run_cli({"revert", "--in", "/nonexistent/spec.json"}).status == fgi::cli::parse_failure);
  CHECK(run_cli({"revert", "--help"}).status == fgi::cli::ok);
}

TEST_CASE("table output and determinism", "[cli]") {
  const Outcome table = run_cli({"revert", "--out-format", "table"}, catalan);
  REQUIRE(table.status == 0);
  CHECK(table.out.find("0\t(4)\t5") != std::string::npos);
  CHECK(table.out.find("0\t(2)\t1") < table.out.find("0\t(3)\t2"));

  for (const auto& [args, input] : corpus()) {
    const Outcome a = run_cli(args, input), b = run_cli(args, input);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
  const Outcome m = run_cli({"lg-matrix-check"}, linear_plus_constant);
  CHECK(json::parse(m.out).at("diagnostics").dump().find("true") != std::string::npos);
}

TEST_CASE("mutated specs never crash", "[cli][fuzz]") {
  const auto seeds = corpus();
  std::mt19937 gen(20261015);
  const std::string alphabet = "{}[]\",:-/0123456789 abcnexpdgrcoef";
  int counts[5] = {0, 0, 0, 0, 0};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& [args, base] = seeds[static_cast<std::size_t>(trial) % seeds.size()];
    std::string text = base;
    const int edits = std::uniform_int_distribution<int>(1, 4)(gen);
    for (int e = 0; e < edits && !text.empty(); ++e) {
      const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, text.size() - 1)(gen);
      const char c = alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(gen)];
      switch (std::uniform_int_distribution<int>(0, 3)(gen)) {
        case 0: text.erase(pos, 1); break;
        case 1: text.insert(pos, 1, c); break;
        case 2: text[pos] = c; break;
        default: text.insert(pos, "9"); break;
      }
    }
    const Outcome o = run_cli(args, text);
    const bool known = o.status == 0 || o.status == 2 || o.status == 3 || o.status == 4;
    CHECK(known);
    if (known) ++counts[o.status];
  }
  CHECK(counts[2] > 0);
}
