#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "koornwinder/cli.hpp"
#include "koornwinder/json_io.hpp"
#include "support.hpp"

using namespace kw;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("koornwinder-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("compute-e produces E_(-1) for n = 1") {
  const Run r = invoke({"compute-e", "--n", "1", "--alpha=-1"});
  REQUIRE(r.code == cli::kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j.at("mode") == "symbolic");
  const auto [label, poly, spectrum] = labeled_from_json<FieldElement>(j);
  KoornwinderFamily<FieldElement> fam(1, SymbolicContext{});
  const auto e = fam.E(ExponentVector{-1});
  CHECK(label == e.label);
  CHECK(poly == e.poly);
  CHECK(spectrum == e.spectrum);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"bogus"}).code == cli::kExitUsage);
  CHECK(invoke({"compute-e", "--n", "1"}).code == cli::kExitUsage);
  CHECK(invoke({"compute-e", "--n", "0", "--alpha", "0"}).code == cli::kExitUsage);
  CHECK(invoke({"compute-e", "--n", "2", "--alpha", "1"}).code == cli::kExitUsage);
  CHECK(invoke({"compute-p", "--n", "2", "--lambda", "0,1"}).code == cli::kExitUsage);
  CHECK(invoke({"compute-e", "--n", "1", "--alpha", "1", "--json", "--text"}).code == cli::kExitUsage);
  CHECK(invoke({"compute-e", "--n", "1", "--alpha", "1", "--mode", "fuzzy"}).code == cli::kExitUsage);
  CHECK(invoke({"specialize", "--n", "1"}).code == cli::kExitUsage);
  const Run r = invoke({"bogus"});
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("checks pass") {
  const Run rel = invoke({"check-relations", "--n", "2", "--degree", "2", "--with-un"});
  CHECK(rel.code == cli::kExitOk);
  CHECK(Json::parse(rel.out).at("status") == "pass");
  const Run three = invoke({"check-relations", "--n", "2", "--degree", "1", "--three-parameter"});
  CHECK(three.code == cli::kExitOk);
  CHECK(Json::parse(three.out).at("three_parameter") == true);
  const Run dual = invoke({"check-duality", "--n", "1", "--max-weight", "2", "--symbolic"});
  CHECK(dual.code == cli::kExitOk);
  CHECK(Json::parse(dual.out).at("failures").empty());
  const Run basis = invoke({"basis-check", "--n", "2", "--degree", "2"});
  CHECK(basis.code == cli::kExitOk);
  CHECK(Json::parse(basis.out).at("rank") == 13);
}

TEST_CASE("text and JSON reports describe the same result") {
  const Run j = invoke({"compute-p", "--n", "1", "--lambda", "1", "--mode", "specialized"});
  const Run t = invoke({"compute-p", "--n", "1", "--lambda", "1", "--mode", "specialized", "--text"});
  REQUIRE(j.code == cli::kExitOk);
  REQUIRE(t.code == cli::kExitOk);
  CHECK(render_text(Json::parse(j.out)) == t.out);
  CHECK(t.out.find("assignment: 2,3,5,7,11,13") != std::string::npos);
}

TEST_CASE("seeds and explicit assignments") {
  const Run a = invoke({"compute-e", "--n", "2", "--alpha", "1,0", "--mode", "specialized", "--seed", "7"});
  const Run b = invoke({"compute-e", "--n", "2", "--alpha", "1,0", "--mode", "specialized", "--seed", "7"});
  const Run c = invoke({"compute-e", "--n", "2", "--alpha", "1,0", "--mode", "specialized", "--seed", "8"});
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  const Run d = invoke({"compute-e", "--n", "1", "--alpha", "1", "--mode", "specialized", "--assignment",
                        "2,3,5,7,11,13"});
  const Run e = invoke({"compute-e", "--n", "1", "--alpha", "1", "--mode", "specialized"});
  CHECK(d.out == e.out);
  const Run short_list =
      invoke({"compute-e", "--n", "1", "--alpha", "1", "--mode", "specialized", "--assignment", "1,2"});
  CHECK(short_list.code == cli::kExitUsage);
}

TEST_CASE("cache directory") {
  const auto dir = fresh_dir("cache");
  const std::vector<std::string> args{"compute-e", "--n", "2", "--alpha", "0,-1", "--cache-dir", dir.string()};
  const Run first = invoke(args);
  REQUIRE(first.code == cli::kExitOk);
  std::size_t files = 0;
  std::filesystem::path entry;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    ++files;
    entry = f.path();
  }
  REQUIRE(files == 1);
  const Run second = invoke(args);
  CHECK(second.out == first.out);
  // A corrupted entry is recomputed.
  { std::ofstream(entry) << "not json"; }
  const Run third = invoke(args);
  CHECK(third.out == first.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("specialize agrees with direct specialized computation") {
  const Run e = invoke({"specialize", "--n", "1", "--alpha", "2"});
  REQUIRE(e.code == cli::kExitOk);
  CHECK(Json::parse(e.out).at("consistent") == true);
  const Run p = invoke({"specialize", "--n", "2", "--lambda", "1,0", "--seed", "5"});
  CHECK(p.code == cli::kExitOk);

  const auto dir = fresh_dir("input");
  std::filesystem::create_directories(dir);
  const Run sym = invoke({"compute-e", "--n", "1", "--alpha", "1"});
  const auto file = dir / "e1.json";
  { std::ofstream(file) << sym.out; }
  const Run from_file = invoke({"specialize", "--n", "1", "--input", file.string()});
  REQUIRE(from_file.code == cli::kExitOk);
  const Run direct = invoke({"compute-e", "--n", "1", "--alpha", "1", "--mode", "specialized"});
  Json a = Json::parse(from_file.out);
  Json b = Json::parse(direct.out);
  CHECK(a.at("terms") == b.at("terms"));
  CHECK(a.at("spectrum") == b.at("spectrum"));
  CHECK(invoke({"specialize", "--n", "1", "--input", (dir / "missing.json").string()}).code == cli::kExitUsage);
  std::filesystem::remove_all(dir);
}

TEST_CASE("JSON round trips") {
  const SymbolicContext sym;
  std::mt19937_64 rng(41);
  for (int j = 0; j < 20; ++j) {
    const auto f = kw::testing::random_laurent(rng, 2, sym);
    CHECK(polynomial_from_json<FieldElement>(polynomial_to_json(f)) == f);
  }
  const SpecializedContext spec;
  for (int j = 0; j < 20; ++j) {
    const auto f = kw::testing::random_laurent(rng, 3, spec);
    CHECK(polynomial_from_json<Rational>(polynomial_to_json(f)) == f);
  }
}

TEST_CASE("installed binary") {
  const char* exe = std::getenv("KOORNWINDER_CLI");
  if (exe == nullptr) return;
  const std::string cmd = std::string(exe) + " compute-e --n 1 --alpha=-1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) out += buf.data();
  const int status = pclose(pipe);
  CHECK(status == 0);
  CHECK(out == invoke({"compute-e", "--n", "1", "--alpha=-1"}).out);
  CHECK(std::system((std::string(exe) + " bogus > /dev/null 2>&1").c_str()) != 0);
}
