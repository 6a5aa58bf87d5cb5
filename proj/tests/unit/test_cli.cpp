#include <doctest.h>

#include "gwb/cli.hpp"
#include "gwb/parse.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gwb;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "gwb_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::filesystem::remove(path);
  return path;
}

}  // namespace

TEST_CASE("parse classes and insertions") {
  const auto b = parse::manifold("BlP2");
  CHECK(parse::curve(b, "3f-1e") == CurveClass{3, -1});
  CHECK(parse::curve(b, "f-e") == CurveClass{1, -1});
  CHECK(parse::curve(b, "-2e") == CurveClass{0, -2});
  CHECK(parse::curve(parse::manifold("P5"), "4l") == CurveClass{4});
  CHECK_THROWS_WITH_AS(parse::curve(b, "3x"), doctest::Contains("'3x'"), parse::ParseError);
  CHECK_THROWS_AS(parse::curve(b, "3f 1e"), parse::ParseError);
  CHECK_THROWS_AS(parse::manifold("Q2"), parse::ParseError);
  CHECK_THROWS_AS(parse::manifold("P1"), parse::ParseError);

  const auto ins = parse::insertions(b, "pt,E,h,p*pt,PD(E)");
  CHECK(ins.size() == 5);
  CHECK(ins[3].kind() == InsertionKind::pullback);
  CHECK(parse::insertion(parse::manifold("P4"), "H^2").real_degree() == 4);
  CHECK(parse::insertion(parse::manifold("P4"), "H@away").supported_away_from_locus());
  CHECK_THROWS_AS(parse::insertion(parse::manifold("P2"), "H^3"), parse::ParseError);
  CHECK_THROWS_AS(parse::insertions(b, "pt,,pt"), parse::ParseError);
}

TEST_CASE("parse loci and ranges") {
  const auto c = parse::locus("curve:g0=1,c1=-2", 3);
  CHECK(c.g0 == 1);
  CHECK(c.c1M_on_C == -2);
  CHECK(parse::locus("surface:product:1x2", 4).factor_genus_2 == 2);
  CHECK_THROWS_AS(parse::locus("curve:g0=1", 3), parse::ParseError);
  CHECK(parse::range("2..5").hi == 5);
  CHECK(parse::range("3").lo == 3);
}

TEST_CASE("invariant command") {
  auto r = run({"--no-cache", "invariant", "P2", "3l", "--points", "8"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "12\n");

  r = run({"--no-cache", "invariant", "BlP2", "e", "--insert", "PD(E),PD(E)"});
  CHECK(r.out == "1\n");

  r = run({"--no-cache", "invariant", "BlP2", "2e", "--insert", "p*pt"});
  CHECK(r.out == "0 (Lemma 1.1)\n");

  r = run({"--no-cache", "--json", "invariant", "P3", "l", "--points", "2"});
  CHECK(nlohmann::json::parse(r.out)["value"] == "1");

  r = run({"--no-cache", "invariant", "P3", "2l", "--points", "4"});
  CHECK(r.out == "symbolic Psi^P3_(2l,g=0)(pt,pt,pt,pt)\n");

  r = run({"--no-cache", "invariant", "BlP2", "3q"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("'3q'") != std::string::npos);
}

TEST_CASE("verify command") {
  auto r = run({"--no-cache", "verify", "thm1-4", "--max-degree", "6"});
  CHECK(r.code == cli::kOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  CHECK(r.out.find("mismatch") == std::string::npos);

  r = run({"--no-cache", "verify", "lemma1-1", "--r", "1..5"});
  CHECK(r.code == cli::kOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);

  const auto serial = run({"--no-cache", "--json", "verify", "all", "--max-degree", "4"});
  const auto parallel = run({"--no-cache", "--json", "--jobs", "3", "verify", "all", "--max-degree", "4"});
  CHECK(serial.out == parallel.out);

  r = run({"--no-cache", "verify", "thm7-1"});
  CHECK(r.code == cli::kUsage);
}

TEST_CASE("table command") {
  auto r = run({"--no-cache", "table", "kontsevich", "--max-degree", "4"});
  CHECK(r.out == "1l 1\n2l 1\n3l 12\n4l 620\n");
  r = run({"--no-cache", "--csv", "table", "blowup", "--max-degree", "1"});
  CHECK(r.out == "class,value\ne,1\nf,1\nf-e,1\n");
}

TEST_CASE("cache persistence and export/import") {
  const auto cache = scratch("cache.json");
  const auto exported = scratch("export.json");
  auto cold = run({"--cache", cache.string(), "--json", "verify", "all", "--max-degree", "4"});
  CHECK(std::filesystem::exists(cache));
  auto warm = run({"--cache", cache.string(), "--json", "verify", "all", "--max-degree", "4"});
  CHECK(cold.out == warm.out);

  const auto shown = run({"--cache", cache.string(), "cache", "show"});
  CHECK(run({"--cache", cache.string(), "cache", "export", exported.string()}).code == cli::kOk);
  CHECK(run({"--cache", cache.string(), "cache", "clear"}).code == cli::kOk);
  CHECK(run({"--cache", cache.string(), "cache", "show"}).out.empty());
  CHECK(run({"--cache", cache.string(), "cache", "import", exported.string()}).code == cli::kOk);
  CHECK(run({"--cache", cache.string(), "cache", "show"}).out == shown.out);
}

TEST_CASE("corrupt cache is not fatal") {
  const auto cache = scratch("corrupt.json");
  std::ofstream(cache) << "[1, 2";
  const auto r = run({"--cache", cache.string(), "invariant", "P2", "2l", "--points", "5"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "1\n");
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"--json", "--csv", "--no-cache", "table", "kontsevich"}).code == cli::kUsage);
}
