#include "overpart/cli.hpp"

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "overpart/halfint.hpp"
#include "overpart/modseries.hpp"
#include "overpart/qgen.hpp"
#include "overpart/report.hpp"

using namespace overpart;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("overpart_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("expand") {
  const auto r = run_cli({"expand", "phi", "--mod", "11", "--trunc", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 2 0 0 2\n");

  CHECK(run_cli({"expand", "F", "--mod", "1000", "--trunc", "5"}).out == "0 1 0 4 0 6\n");
  CHECK(run_cli({"expand", "overpartition", "--mod", "1000", "--trunc", "4"}).out == "1 2 4 8 14\n");
  CHECK(run_cli({"expand", "rm:2", "--mod", "100", "--trunc", "5"}).out == "1 4 4 0 4 8\n");
  CHECK(run_cli({"expand", "eta:2^5,1^-2,4^-2", "--mod", "11", "--trunc", "4"}).out == "1 2 0 0 2\n");

  const auto j = run_cli({"--output", "json", "expand", "phi", "--mod", "11", "--trunc", "4"});
  CHECK(Json::parse(j.out)["coeffs"] == Json::parse("[1,2,0,0,2]"));

  CHECK(run_cli({"expand", "psi", "--mod", "11", "--trunc", "4"}).code == 2);
  CHECK(run_cli({"expand", "phi", "--mod", "1", "--trunc", "4"}).code == 2);
  CHECK(run_cli({"expand", "eta:1", "--mod", "11", "--trunc", "4"}).code == 2);
  CHECK(run_cli({"expand", "phi", "--trunc", "4"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
}

TEST_CASE("global options may follow the subcommand") {
  const auto j = run_cli({"expand", "phi", "--mod", "11", "--trunc", "4", "--output", "json"});
  CHECK(j.code == 0);
  CHECK(Json::parse(j.out)["modulus"] == 11);
}

TEST_CASE("decompose from a coefficient file and from a QSER file") {
  const auto dir = scratch_dir("decompose");
  const ResidueRing ring(11);
  const TruncSeries f = recombine(Decomposition{9, ring, {1, 1, 0}}, 40);

  const auto text_path = dir / "f.txt";
  {
    std::ofstream out(text_path);
    for (auto c : f.coeffs()) out << c << "\n";
  }
  auto r = run_cli({"decompose", "--k2", "9", "--mod", "11", "--input", text_path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 0\nF*phi^5 + phi^9\n");

  const auto bin_path = dir / "f.qser";
  write_series_file(bin_path, f);
  r = run_cli({"--output", "json", "decompose", "--k2", "9", "--mod", "11", "--input", bin_path.string()});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["coeffs"] == Json::parse("[1,1,0]"));

  r = run_cli({"decompose", "--k2", "9", "--mod", "13", "--input", bin_path.string()});
  CHECK(r.code == 2);

  {
    std::ofstream out(text_path);
    for (std::size_t n = 0; n <= 40; ++n) out << (n == 9 ? f[n] + 1 : f[n]) << " ";
  }
  r = run_cli({"decompose", "--k2", "9", "--mod", "11", "--input", text_path.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("9") != std::string::npos);
}

TEST_CASE("bound") {
  auto r = run_cli({"bound", "--weight2", "15", "--level", "340736", "--group", "g1", "--progression", "88,19"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n <= 1226649601") != std::string::npos);

  r = run_cli({"bound", "--weight2", "15", "--level", "340736", "--group", "g1", "--progression", "104,29"});
  CHECK(r.code == 2);
  r = run_cli({"bound", "--weight2", "15", "--level", "340736", "--group", "g1", "--progression", "88,22"});
  CHECK(r.code == 2);

  r = run_cli({"--output", "json", "bound", "--weight2", "21", "--level", "562432", "--group", "g1", "--progression",
               "104,29"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["progression"]["max_n"] == 3968520193ull);

  r = run_cli({"--output", "json", "bound", "--weight2", "9", "--level", "256"});
  CHECK(Json::parse(r.out)["bound"] == 289);
  CHECK(run_cli({"bound", "--weight2", "9", "--level", "256", "--group", "g2"}).code == 2);
}

TEST_CASE("prove") {
  const auto r = run_cli({"--output", "json", "prove", "thm11"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["limits"]["checked_indices"] == 36);
  bool saw_decomposition = false;
  for (const auto& s : j["steps"]) {
    if (s["anchor"] == "thm-mod11/decomposition") saw_decomposition = s["witness"] == "[1, 1, 0]";
  }
  CHECK(saw_decomposition);
  CHECK(report_from_json(j) == prove_theorem_mod11());
  CHECK(r.out == run_cli({"--output", "json", "prove", "thm11"}).out);
  CHECK(run_cli({"prove", "thm7"}).code == 2);
}

TEST_CASE("verify-identity and lemma1") {
  CHECK(run_cli({"verify-identity", "17", "--trunc", "200"}).code == 0);
  CHECK(run_cli({"verify-identity", "21", "--trunc", "200"}).code == 2);
  CHECK(run_cli({"lemma1", "--p", "3", "--alpha", "2", "--trunc", "200"}).out == "pass\n");
  CHECK(run_cli({"lemma1", "--p", "6", "--alpha", "1"}).code == 2);
}

TEST_CASE("scan and check") {
  auto r = run_cli({"--threads", "4", "scan", "--mod", "5", "--d", "1", "--A", "40", "--budget", "50000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("d=1 A=40 residues {35}") != std::string::npos);

  r = run_cli({"--output", "json", "scan", "--mod", "7", "--d", "16", "--A", "56", "--budget", "400000"});
  const Json j = Json::parse(r.out);
  REQUIRE(j["findings"].size() == 1);
  CHECK(j["findings"][0]["residues"] == Json::parse("[11,43,51]"));
  CHECK(j["findings"][0]["compressed"]["conditions"][0]["prime"] == 7);

  r = run_cli({"check", "--claim", R"({"modulus":5,"A":40,"B":35})", "--nmax", "200"});
  CHECK(r.code == 0);
  CHECK(r.out.find("support 201") != std::string::npos);
  r = run_cli({"check", "--claim", R"({"modulus":5,"A":40,"B":15})", "--nmax", "200"});
  CHECK(r.code == 1);
  CHECK(r.out.find("counterexample") != std::string::npos);
  CHECK(run_cli({"check", "--claim", "not json"}).code == 2);
  CHECK(run_cli({"check", "--claim", R"({"modulus":5,"multiplier":100000,"A":40,"B":35})", "--nmax", "100000"}).code ==
        2);
}

TEST_CASE("coefficient cache") {
  const auto dir = scratch_dir("cache");
  const std::vector<std::string> args{"--cache-dir", dir.string(), "expand", "overpartition", "--mod", "13", "--trunc",
                                      "300"};
  const auto first = run_cli(args);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  const auto second = run_cli(args);
  CHECK(first.out == second.out);

  const auto entry = std::filesystem::directory_iterator(dir)->path();
  CHECK(read_series_file(entry) == overpartition_series(300, ResidueRing(13)));

  // A corrupted entry is recomputed.
  std::ofstream(entry, std::ios::binary | std::ios::trunc) << "QSER garbage";
  CHECK(run_cli(args).out == first.out);
  CHECK(read_series_file(entry) == overpartition_series(300, ResidueRing(13)));
}
