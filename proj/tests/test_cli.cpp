// End-to-end checks of the goldenfa binary: exit codes, output formats,
// byte-for-byte reproducibility of result files.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GOLDENFA_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    result.output.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path temp_dir() {
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / ("goldenfa_cli_" + std::to_string(::getpid()) +
                                              "_" + std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const std::string& text) {
  const fs::path path = temp_dir() / "config.txt";
  std::ofstream out(path);
  out << text;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

const char* kHeadOnTrial = R"(
arena.shape = circle
arena.extent = 50
cluster.bearing = 0
cluster.distance = 20
cluster.diameter = 4
swarm.n = 1
swarm.scheduler = golden
)";

const char* kOppositeTrial = R"(
arena.shape = circle
arena.extent = 50
cluster.bearing = 3.14159265358979312
cluster.distance = 20
cluster.diameter = 4
swarm.n = 1
swarm.scheduler = golden
)";

}  // namespace

TEST_CASE("gaps subcommand") {
  const RunResult one = run_cli("gaps --k 1");
  CHECK(one.exit_code == 0);
  CHECK(one.output.find("6.2831853071795862,1") != std::string::npos);
  CHECK(one.output.find("# three_gap = pass") != std::string::npos);

  const RunResult five = run_cli("gaps --k 5");
  CHECK(five.exit_code == 0);
  CHECK(five.output.find("# distinct_gaps = 3") != std::string::npos);

  const RunResult zero = run_cli("gaps --k 0");
  CHECK(zero.exit_code == 2);

  const RunResult golden_angle = run_cli("gaps --k 13 --increment golden-angle");
  CHECK(golden_angle.exit_code == 0);
  CHECK(golden_angle.output.find("# three_gap = pass") != std::string::npos);

  const fs::path table = temp_dir() / "gaps.csv";
  const RunResult saved = run_cli("gaps --k 5 --out " + table.string());
  CHECK(saved.exit_code == 0);
  CHECK(slurp(table) == saved.output);
}

TEST_CASE("predict subcommand") {
  const RunResult base = run_cli("predict 50 33.333 10 4.8");
  CHECK(base.exit_code == 0);
  CHECK(std::stod(base.output) == Catch::Approx(1111.1).margin(1e-6));

  const RunResult doubled = run_cli("predict 50 33.333 20 4.8");
  CHECK(std::stod(doubled.output) == Catch::Approx(1111.1 / 2.0).margin(1e-6));

  const RunResult full = run_cli("predict 50 33.333 10 4.8 --full-form");
  CHECK(std::stod(full.output) == Catch::Approx(1111.1 + 32.0 * 33.333).margin(1e-6));

  CHECK(run_cli("predict 50 0 10 4.8").exit_code == 2);
}

TEST_CASE("simulate subcommand") {
  const fs::path config = write_config(kHeadOnTrial);
  const RunResult r = run_cli("simulate --config " + config.string() + " --seed 7");
  REQUIRE(r.exit_code == 0);
  const auto json = nlohmann::json::parse(r.output);
  CHECK(json.at("discovery_time_s").get<double>() == Catch::Approx(18.0));
  CHECK(json.at("discovering_searcher").get<int>() == 1);
  CHECK(json.at("hit_spoke_index").get<int>() == 0);

  const RunResult again = run_cli("simulate --config " + config.string() + " --seed 7");
  CHECK(again.output == r.output);  // byte-identical for the same seed

  const fs::path opposite = write_config(kOppositeTrial);
  const RunResult far = run_cli("simulate --config " + opposite.string() + " --seed 7");
  REQUIRE(far.exit_code == 0);
  CHECK(nlohmann::json::parse(far.output).at("discovery_time_s").get<double>() ==
        Catch::Approx(219.249).margin(1e-2));
}

TEST_CASE("simulate error paths") {
  CHECK(run_cli("simulate --config /nonexistent.cfg --seed 1").exit_code == 2);

  const fs::path config = write_config(kHeadOnTrial);
  CHECK(run_cli("simulate --config " + config.string()).exit_code == 2);  // seed required

  const fs::path unknown = write_config(std::string(kHeadOnTrial) + "swarm.mood = cheerful\n");
  CHECK(run_cli("simulate --config " + unknown.string() + " --seed 1").exit_code == 2);

  const fs::path capped = write_config(std::string(kOppositeTrial) + "swarm.spoke_cap = 1\n");
  CHECK(run_cli("simulate --config " + capped.string() + " --seed 1").exit_code == 3);
}

TEST_CASE("sweep subcommand writes reproducible results") {
  const fs::path config = write_config(R"(
arena.shape = circle
arena.extent = 50
sweep.delta_grid = 4.8
sweep.n_grid = 2
sweep.schedulers = golden
sweep.trials_per_cell = 3
sweep.master_seed = 42
)");
  const fs::path out1 = temp_dir();
  const fs::path out2 = temp_dir();
  const RunResult r1 = run_cli("sweep --config " + config.string() + " --out " + out1.string());
  REQUIRE(r1.exit_code == 0);
  const RunResult r2 = run_cli("sweep --config " + config.string() + " --out " + out2.string() +
                               " --threads 3");
  REQUIRE(r2.exit_code == 0);

  const std::string csv1 = slurp(out1 / "results.csv");
  const std::string csv2 = slurp(out2 / "results.csv");
  CHECK(csv1 == csv2);
  CHECK(count_lines(csv1) == 2);
  CHECK(csv1.rfind("scheduler,arena_shape,extent_m,delta_m,n_searchers,trials,", 0) == 0);

  const auto manifest = nlohmann::json::parse(slurp(out1 / "manifest.json"));
  CHECK(manifest.at("tool") == "goldenfa");
  CHECK(manifest.at("command") == "sweep");
  CHECK(manifest.at("master_seed").get<std::uint64_t>() == 42);
  CHECK(manifest.at("outputs").size() == 1);
  CHECK(manifest.at("config").at("sweep.delta_grid") == "4.8");
}

TEST_CASE("sweep grid cardinality and plotting") {
  const fs::path config = write_config(R"(
arena.shape = square
arena.extent = 50
sweep.delta_grid = 1.2, 2.4, 4.8, 9.6, 19.2
sweep.n_grid = 1, 10, 100
sweep.schedulers = golden
sweep.trials_per_cell = 2
sweep.master_seed = 9
)");
  const fs::path out = temp_dir();
  const RunResult r =
      run_cli("sweep --config " + config.string() + " --out " + out.string() + " --plot");
  REQUIRE(r.exit_code == 0);
  CHECK(count_lines(slurp(out / "results.csv")) == 16);  // header + 5*3 cells

  const std::string svg = slurp(out / "discovery_time.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("manifest.json") != std::string::npos);
  const auto manifest = nlohmann::json::parse(slurp(out / "manifest.json"));
  CHECK(manifest.at("outputs").size() == 2);

  const fs::path out_log = temp_dir();
  const RunResult rlog = run_cli("sweep --config " + config.string() + " --out " +
                                 out_log.string() + " --plot --log-log");
  REQUIRE(rlog.exit_code == 0);
  CHECK(slurp(out_log / "discovery_time.svg").rfind("<svg", 0) == 0);
  CHECK(slurp(out_log / "results.csv") == slurp(out / "results.csv"));
}

TEST_CASE("sweep error paths") {
  const fs::path config = write_config(R"(
arena.extent = 50
sweep.delta_grid = 4.8
sweep.n_grid = 1
sweep.schedulers = golden
sweep.trials_per_cell = 1
)");
  // no master seed anywhere: refuse to run
  CHECK(run_cli("sweep --config " + config.string() + " --out " + temp_dir().string())
            .exit_code == 2);
  // unwritable output directory
  CHECK(run_cli("sweep --config " + config.string() + " --seed 1 --out /proc/nope/out")
            .exit_code == 2);
}

TEST_CASE("compare subcommand") {
  const fs::path self = write_config(R"(
arena.shape = circle
arena.extent = 50
sweep.delta_grid = 4.8
sweep.n_grid = 2
sweep.schedulers = golden, golden
sweep.trials_per_cell = 10
sweep.master_seed = 5
sweep.placement = fixed_distance
sweep.distance = 33.333
)");
  const fs::path out = temp_dir();
  const RunResult r = run_cli("compare --config " + self.string() + " --out " + out.string() +
                              " --resamples 500 --plot");
  REQUIRE(r.exit_code == 0);
  const std::string csv = slurp(out / "comparison.csv");
  CHECK(count_lines(csv) == 2);
  // self-comparison: the mean difference column is exactly 0
  const auto first_row = csv.substr(csv.find('\n') + 1);
  CHECK(first_row.find(",0,") != std::string::npos);
  CHECK(slurp(out / "comparison.svg").rfind("<svg", 0) == 0);

  const fs::path bad = write_config(R"(
arena.extent = 50
sweep.delta_grid = 4.8
sweep.n_grid = 2
sweep.schedulers = golden, sideways
sweep.trials_per_cell = 10
sweep.master_seed = 5
)");
  CHECK(run_cli("compare --config " + bad.string() + " --out " + temp_dir().string())
            .exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("gaps").exit_code == 2);           // --k required
  CHECK(run_cli("predict 1 2 3").exit_code == 2);  // DELTA missing
}
