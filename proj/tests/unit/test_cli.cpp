#include <doctest.h>

#include "app/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ghyp;
namespace fs = std::filesystem;

namespace {

struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& name) : dir(fs::temp_directory_path() / ("ghyp-cli-" + name)) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string write(const std::string& file, const std::string& text) const {
    std::ofstream(dir / file) << text;
    return (dir / file).string();
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(const cli::RunConfig& c, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(c, out, err);
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("analyze exit codes and artifacts") {
  Scratch s("analyze");
  cli::RunConfig c;
  c.lmax = 10;

  c.spec_path = s.write("good.json", R"({"group": "su2", "symbol": {"builtin": "neutral_plus_c", "params": {"c": 0.3}}})");
  c.out_path = (s.dir / "good").string();
  CHECK(run(c) == cli::kExitOk);
  CHECK(fs::exists(s.dir / "good" / "profile.csv"));
  const auto report = nlohmann::json::parse(slurp(s.dir / "good" / "report.json"));
  CHECK(report["schema"] == 1);
  CHECK(report["verdict"] == "GH_EVIDENCE");

  c.spec_path = s.write("bad.json", R"({"group": "su2", "symbol": {"builtin": "neutral_plus_c", "params": {"c": 0.5}}})");
  c.out_path = (s.dir / "bad").string();
  CHECK(run(c) == cli::kExitNotGH);

  std::string err;
  c.spec_path = s.write("broken.json", R"({"group": "su2", "symbol": {"builtin": "neutral_plus_c", "params": {"c": "x"}}})");
  CHECK(run(c, &err) == cli::kExitError);
  CHECK(err.find("/symbol/params/c") != std::string::npos);

  c.spec_path = (s.dir / "missing.json").string();
  CHECK(run(c) == cli::kExitError);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  Scratch s("determinism");
  cli::RunConfig c;
  c.lmax = 12;
  c.spec_path = s.write("spec.json", R"({"group": "su2", "symbol": {"builtin": "neutral_plus_c", "params": {"c": [0.3, 0.1]}}})");
  std::string first;
  for (int jobs : {1, 1, 3}) {
    c.jobs = jobs;
    c.out_path = (s.dir / ("run" + std::to_string(jobs))).string();
    REQUIRE(run(c) == cli::kExitOk);
    const std::string text = slurp(fs::path(c.out_path) / "report.json");
    if (first.empty()) first = text;
    CHECK(text == first);
  }
}

TEST_CASE("counterexample and profile commands") {
  Scratch s("ce");
  cli::RunConfig c;
  c.lmax = 20;
  c.out_path = s.dir.string();
  c.spec_path = s.write("spec.json", R"({"group": "su2", "symbol": {"builtin": "neutral_plus_c", "params": {"c": 0.5}}})");
  c.command = cli::Command::Counterexample;
  CHECK(run(c) == cli::kExitOk);
  CHECK(fs::exists(s.dir / "counterexample.json"));

  c.spec_path = s.write("id.json", R"({"group": "su2", "symbol": {"builtin": "identity"}})");
  CHECK(run(c) == cli::kExitError);

  c.command = cli::Command::Profile;
  CHECK(run(c) == cli::kExitOk);
  CHECK(fs::exists(s.dir / "profile.csv"));
}

TEST_CASE("transform round trip") {
  Scratch s("transform");
  cli::RunConfig c;
  c.command = cli::Command::Transform;
  c.group = "su2";
  c.lmax = 2;
  c.out_path = s.dir.string();
  c.emit_sample = (s.dir / "sample.csv").string();
  c.input_path = c.emit_sample;
  REQUIRE(run(c) == cli::kExitOk);
  const auto t = nlohmann::json::parse(slurp(s.dir / "transform.json"));
  CHECK(t["roundtrip_residual"].get<double>() < 1e-10);
  CHECK(fs::exists(s.dir / "roundtrip.csv"));

  c.emit_sample.clear();
  c.input_path = s.write("junk.csv", "not,a,grid\n");
  CHECK(run(c) == cli::kExitError);
}

TEST_CASE("cutoff resolution") {
  cli::RunConfig c;
  CHECK_THROWS_AS(cli::resolve_cutoff(c, GroupId::su2()), Error);
  c.lmax = 2;
  CHECK(cli::resolve_cutoff(c, GroupId::su2()) == su2_cutoff_for_ell(2));
  CHECK(cli::resolve_cutoff(c, GroupId::torus(1)) == doctest::Approx(std::sqrt(5.0)));
  c.lmax = 0.3;
  CHECK_THROWS_AS(cli::resolve_cutoff(c, GroupId::su2()), Error);
  c.cutoff = 3.0;
  CHECK_THROWS_AS(cli::resolve_cutoff(c, GroupId::su2()), Error);
  c.lmax.reset();
  c.cutoff = 0.5;
  CHECK_THROWS_AS(cli::resolve_cutoff(c, GroupId::su2()), Error);
}
