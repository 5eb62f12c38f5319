// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

#include <json.hpp>

#include "polygraph/analysis/density.h"
#include "polygraph/core/error.h"
#include "polygraph/fftyping/fragment.h"
#include "polygraph/io/atomic_file.h"
#include "polygraph/io/cli.h"
#include "polygraph/io/lammps_data.h"
#include "test_support.h"

namespace polygraph {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.status = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "polygraph_test_cli" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// The toy epoxy configuration with absolute inputs, written next to its outputs.
fs::path small_config(const fs::path& dir, int dgeba, int ipd, double target) {
  const fs::path data = testing::data_dir();
  json c = json::parse(read_text_file(data / "configs" / "toy_epoxy.json"));
  c["monomers"] = json::array({{{"file", (data / "monomers" / "dgeba.json").string()}, {"count", dgeba}},
                               {{"file", (data / "monomers" / "ipd.json").string()}, {"count", ipd}}});
  c["rules"] = (data / "rules" / "amine_only.json").string();
  c["fragments"] = json::array({(data / "fragments" / "dgeba_ipd.json").string()});
  c["polymerization"]["target_conversion"] = target;
  c["polymerization"]["stall_limit"] = 5;
  c["minimizer"]["max_steps"] = 40;
  c["output"] = {{"data", "out.data"}, {"report", "report.json"}};
  const fs::path path = dir / "config.json";
  write_file_atomic(path, c.dump(2));
  return path;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli({}).status, 2);
  EXPECT_EQ(cli({"frobnicate"}).status, 2);
  EXPECT_EQ(cli({"analyze", "--samples", "-3"}).status, 2);
  const CliRun r = cli({"carve", "-i", "a.data"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("usage error"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const CliRun r = cli({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("polymerize"), std::string::npos);
}

TEST(Cli, ErrorsAreOneMachineParseableLine) {
  const CliRun r = cli({"pack"});
  EXPECT_EQ(r.status, error_exit_status(ErrorCode::kConfig));
  EXPECT_EQ(r.status, 10 + static_cast<int>(ErrorCode::kConfig));
  EXPECT_EQ(r.err.rfind("polygraph: error[", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, ExitStatusFollowsErrorCode) {
  const fs::path dir = scratch_dir("codes");
  EXPECT_EQ(cli({"analyze", "-i", (dir / "missing.data").string()}).status, error_exit_status(ErrorCode::kIo));
  write_file_atomic(dir / "bad.data", "title\n\n3 atoms\n\nAtoms # full\n\n1 1 1 0 0 0 0\n");
  EXPECT_EQ(cli({"analyze", "-i", (dir / "bad.data").string()}).status, error_exit_status(ErrorCode::kFormat));
  EXPECT_EQ(cli({"carve", "-i", (dir / "bad.data").string(), "-o", (dir / "x.data").string(), "--slab", "w", "0",
                 "1"})
                .status,
            error_exit_status(ErrorCode::kConfig));
  write_file_atomic(dir / "flat.csv", "T,rho\n300,1\n320,1\n340,1\n360,1\n380,1\n400,1\n420,1\n");
  const CliRun flat = cli({"analyze", "--tg", (dir / "flat.csv").string()});
  ASSERT_EQ(flat.status, 0) << flat.err;
  EXPECT_TRUE(json::parse(flat.out)["tg"]["degenerate"].get<bool>());
}

TEST(Cli, ExitStatusesAreDistinct) {
  std::set<int> seen;
  for (int c = 0; c <= static_cast<int>(ErrorCode::kIo); ++c) {
    const int status = error_exit_status(static_cast<ErrorCode>(c));
    EXPECT_EQ(status, 10 + c);
    EXPECT_TRUE(seen.insert(status).second);
    EXPECT_FALSE(error_code_name(static_cast<ErrorCode>(c)).empty());
  }
}

TEST(Cli, AnalyzeTgFromCsv) {
  const fs::path dir = scratch_dir("tg");
  std::string csv = "# temperature,density\nT,rho\n";
  for (int t = 300; t <= 600; t += 20) {
    const double rho = t <= 430 ? 1.20 - 2.5e-4 * (t - 430) : 1.20 - 6e-4 * (t - 430);
    char line[64];
    std::snprintf(line, sizeof line, "%d,%.12f\n", t, rho);
    csv += line;
  }
  write_file_atomic(dir / "series.csv", csv);
  const CliRun r = cli({"analyze", "--tg", (dir / "series.csv").string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["tg"]["tg"].get<double>(), 430.0, 1e-6);
  EXPECT_FALSE(j["tg"]["degenerate"].get<bool>());
}

TEST(Cli, CompositesWritesGraphLibrary) {
  const fs::path dir = scratch_dir("composites");
  const fs::path data = testing::data_dir();
  const CliRun r = cli({"composites", "-m", (data / "monomers" / "dgeba.json").string(),
                     (data / "monomers" / "ipd.json").string(), "-r", (data / "rules" / "amine_only.json").string(),
                     "-o", (dir / "frags.json").string(), "--include-monomers"});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(read_text_file(dir / "frags.json"));
  ASSERT_TRUE(j.contains("fragments"));
  EXPECT_GE(j["fragments"].size(), 4u);
}

TEST(Cli, PackWritesExpectedAtomCount) {
  const fs::path dir = scratch_dir("pack");
  const fs::path config = small_config(dir, 4, 2, 0.5);
  const CliRun r = cli({"--config", config.string(), "pack"});
  ASSERT_EQ(r.status, 0) << r.err;
  const MolecularSystem s = load_lammps_data(dir / "out.data");
  const std::size_t expected =
      4 * testing::data_monomer("dgeba").graph.size() + 2 * testing::data_monomer("ipd").graph.size();
  EXPECT_EQ(s.graph.size(), expected);
  EXPECT_TRUE(s.parameterized);
  EXPECT_NEAR(density(s), 0.45, 1e-6);  // box edges are written with 6 decimals
}

TEST(Cli, SeedFlagMakesPackingReproducible) {
  const fs::path dir = scratch_dir("seed");
  const fs::path config = small_config(dir, 2, 1, 0.5);
  const auto run = [&](const std::string& seed, const std::string& name) {
    const CliRun r = cli({"--seed", seed, "--config", config.string(), "pack", "-o", (dir / name).string()});
    EXPECT_EQ(r.status, 0) << r.err;
    return read_text_file(dir / name);
  };
  EXPECT_EQ(run("3", "a.data"), run("3", "b.data"));
  EXPECT_NE(run("3", "a.data"), run("4", "c.data"));
}

TEST(Cli, PolymerizeReportsNondecreasingConversion) {
  const fs::path dir = scratch_dir("polymerize");
  const fs::path config = small_config(dir, 4, 2, 0.5);
  const CliRun r = cli({"--config", config.string(), "polymerize"});
  ASSERT_EQ(r.status, 0) << r.err;
  ASSERT_TRUE(fs::exists(dir / "out.data"));
  const CliRun a = cli({"analyze", "-i", (dir / "out.data").string(), "--report", (dir / "report.json").string()});
  ASSERT_EQ(a.status, 0) << a.err;
  const json j = json::parse(a.out);
  double last = 0.0;
  ASSERT_FALSE(j["conversion_series"].empty());
  for (const auto& point : j["conversion_series"]) {
    EXPECT_GE(point[1].get<double>(), last);
    last = point[1].get<double>();
  }
  EXPECT_GT(last, 0.0);
  EXPECT_LE(last, 1.0);
  EXPECT_GT(j["density"].get<double>(), 0.0);
}

TEST(Cli, CarveAndCapRoundTrip) {
  const fs::path dir = scratch_dir("carve");
  const fs::path config = small_config(dir, 4, 2, 0.5);
  ASSERT_EQ(cli({"--config", config.string(), "polymerize"}).status, 0);
  const MolecularSystem before = load_lammps_data(dir / "out.data");
  const std::string lo = std::to_string(before.box.lengths.x * 0.4);
  const std::string hi = std::to_string(before.box.lengths.x * 0.6);
  const CliRun r = cli({"--config", config.string(), "carve", "-i", (dir / "out.data").string(), "-o",
                     (dir / "carved.data").string(), "--slab", "x", lo, hi, "--cap"});
  ASSERT_EQ(r.status, 0) << r.err;
  const json summary = json::parse(r.out);
  const MolecularSystem after = load_lammps_data(dir / "carved.data");
  EXPECT_EQ(after.graph.size(), summary["atoms_after"].get<std::size_t>());
  EXPECT_LE(summary["atoms_after"].get<std::size_t>(), before.graph.size() + summary["dangling_sites"].get<std::size_t>());
  EXPECT_TRUE(after.parameterized);
}

TEST(Cli, BinaryExitStatusMatches) {
  const std::string cmd = std::string("'") + POLYGRAPH_CLI + "' pack > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(raw));
  EXPECT_EQ(WEXITSTATUS(raw), error_exit_status(ErrorCode::kConfig));
  const int usage = std::system((std::string("'") + POLYGRAPH_CLI + "' > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(usage), 2);
}

}  // namespace
}  // namespace polygraph
