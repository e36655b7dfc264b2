// Tests for the command-line front end: verbs, formats, exit codes, golden
// round-trips, and the JSON verification verdicts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rhact/cli.hpp"

using namespace rhact;

namespace {

struct CliResult {
  int rc = 0;
  std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("rhact-cli-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("rational rendering") {
  CHECK(rat_str(Rat(3)) == "3");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK(rat_str(Rat(1) / 2) == "1/2");
  CHECK(rat_str(Rat(-7) / 3) == "-7/3");
  CHECK(rat_str(Rat(10) / 5) == "2");
}

TEST_CASE("catalog tables are deterministic and sized as expected") {
  TableOptions opt;
  int expected_rows[] = {0, 100, 258, 31, 71, 278, 76};
  for (int id = 1; id <= 6; ++id) {
    Table t = build_catalog_table(id, opt);
    CHECK(t.id == id);
    CHECK(static_cast<int>(t.rows.size()) == expected_rows[id]);
    for (const auto& row : t.rows) CHECK(row.size() == t.headers.size());
    std::string once = render(t, Format::kMarkdown);
    std::string twice = render(build_catalog_table(id, opt), Format::kMarkdown);
    CHECK(once == twice);
  }
}

TEST_CASE("basic verbs succeed") {
  auto roots = run({"roots", "G2"});
  CHECK(roots.rc == 0);
  CHECK(contains(roots.out, "Positive roots of G2"));
  CHECK(contains(roots.out, "height"));

  auto fp = run({"fixed-points", "A3(2)", "--cochar", "2"});
  CHECK(fp.rc == 0);
  CHECK(contains(fp.out, "A1(1)xA1(1)"));

  auto xb = run({"xbar", "C4", "4"});
  CHECK(xb.rc == 0);
  CHECK(contains(xb.out, "Blowup fixed components for C4 at node 4"));

  auto exc = run({"exc", "E6", "1"});
  CHECK(exc.rc == 0);
  CHECK(contains(exc.out, "A4(4)"));

  auto sg = run({"short-gradings"});
  CHECK(sg.rc == 0);

  auto help = run({"--help"});
  CHECK(help.rc == 0);
  CHECK(contains(help.out, "fixed-points"));
}

TEST_CASE("input problems exit with code one") {
  auto bad_variety = run({"fixed-points", "Z9", "--cochar", "1"});
  CHECK(bad_variety.rc == 1);
  CHECK(contains(bad_variety.err, "pos 1"));

  auto bad_cochar = run({"fixed-points", "A3(2)", "--cochar", "0,x"});
  CHECK(bad_cochar.rc == 1);
  CHECK(contains(bad_cochar.err, "pos"));

  auto bad_id = run({"table", "9"});
  CHECK(bad_id.rc == 1);

  auto bad_verb = run({"bogus-verb"});
  CHECK(bad_verb.rc == 1);

  auto empty = run({});
  CHECK(empty.rc == 1);

  auto bad_format = run({"table", "3", "--format", "yaml"});
  CHECK(bad_format.rc == 1);
  CHECK(contains(bad_format.err, "unknown format"));

  auto bad_node = run({"xbar", "C4", "9"});
  CHECK(bad_node.rc == 1);
}

TEST_CASE("tsv and json formats") {
  auto tsv = run({"table", "3", "--format", "tsv"});
  CHECK(tsv.rc == 0);
  CHECK(contains(tsv.out, "\t"));

  auto js = run({"table", "3", "--format", "json"});
  CHECK(js.rc == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["id"] == 3);
  CHECK(j["rows"].size() == 31);
  CHECK(j["params"]["engine"] == kEngineVersion);
  CHECK(j["headers"].is_array());
}

TEST_CASE("golden workflow bootstraps, matches, and diffs") {
  TempDir tmp;
  auto missing = run({"table", "3", "--diff-golden", tmp.str()});
  CHECK(missing.rc == 2);
  CHECK(contains(missing.err, "--write-golden"));

  auto wrote = run({"table", "3", "--write-golden", tmp.str()});
  CHECK(wrote.rc == 0);
  CHECK(contains(wrote.out, "wrote"));

  auto match = run({"table", "3", "--diff-golden", tmp.str()});
  CHECK(match.rc == 0);
  CHECK(contains(match.out, "matches golden"));

  // Corrupt one row and expect the diff to cite the divergent line.
  auto golden_file = tmp.path / "table3.md";
  std::ifstream in(golden_file);
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  std::string text = buf.str();
  auto pos = text.find("A1(1)");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 5, "A9(9)");
  std::ofstream(golden_file) << text;
  auto diff = run({"table", "3", "--diff-golden", tmp.str()});
  CHECK(diff.rc == 2);
  CHECK(contains(diff.err, "first divergence at payload line"));
}

TEST_CASE("report renders every table and round-trips golden files") {
  TempDir tmp;
  auto rep = run({"report", "--format", "tsv", "--max-rank", "4"});
  CHECK(rep.rc == 0);

  auto missing = run({"report", "--diff-golden", tmp.str(), "--max-rank", "4"});
  CHECK(missing.rc == 2);

  auto wrote = run({"report", "--write-golden", tmp.str(), "--max-rank", "4"});
  CHECK(wrote.rc == 0);
  auto match = run({"report", "--diff-golden", tmp.str(), "--max-rank", "4"});
  CHECK(match.rc == 0);
  CHECK(contains(match.out, "6/6 tables match golden"));
}

TEST_CASE("inversion verification verdicts") {
  auto ok = run({"verify-inversion", "--n", "3", "--count", "4", "--seed", "9"});
  CHECK(ok.rc == 0);
  auto j = nlohmann::json::parse(ok.out);
  CHECK(j["verb"] == "verify-inversion");
  CHECK(j["n"] == 3);
  CHECK(j["count"] == 4);
  CHECK(j["mode"] == "generic");
  CHECK(j["passed"] == 4);
  CHECK(j["failed"] == 0);
  CHECK(j["cases"].size() == 4);
  CHECK(j["cases"][0].contains("c"));
  CHECK(j["cases"][0]["pass"] == true);

  auto sym = run({"verify-inversion", "--n", "2", "--count", "2",
                  "--symmetric"});
  CHECK(sym.rc == 0);
  CHECK(nlohmann::json::parse(sym.out)["mode"] == "symmetric");

  auto skew = run({"verify-inversion", "--n", "4", "--count", "2", "--skew"});
  CHECK(skew.rc == 0);
  CHECK(nlohmann::json::parse(skew.out)["mode"] == "skew");

  auto odd_skew = run({"verify-inversion", "--n", "3", "--skew"});
  CHECK(odd_skew.rc == 1);
  CHECK(contains(odd_skew.err, "odd skew"));

  auto bad_n = run({"verify-inversion", "--n", "0"});
  CHECK(bad_n.rc == 1);
}

TEST_CASE("quadric verification verdicts") {
  auto ok = run({"verify-quadric", "--dim", "4", "--seed", "2"});
  CHECK(ok.rc == 0);
  auto j = nlohmann::json::parse(ok.out);
  CHECK(j["verb"] == "verify-quadric");
  CHECK(j["dim"] == 4);
  CHECK(j["count"] == 25);
  CHECK(j["passed"] == 25);
  CHECK(j["failed"] == 0);

  auto bad = run({"verify-quadric", "--dim", "0"});
  CHECK(bad.rc == 1);
}

TEST_CASE("cache directory is created and populated") {
  TempDir tmp;
  auto r = run({"fixed-points", "E6(1)", "--cochar", "1", "--cache",
                (tmp.path / "nested").string()});
  CHECK(r.rc == 0);
  bool has_file = false;
  if (std::filesystem::exists(tmp.path / "nested"))
    for (const auto& e :
         std::filesystem::directory_iterator(tmp.path / "nested"))
      has_file = has_file || e.is_regular_file();
  CHECK(has_file);
}
