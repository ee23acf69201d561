// goldenfa: command-line front end for the golden-ratio spoke foraging
// simulator. Subcommands: gaps, simulate, sweep, predict, compare.
// Exit codes: 0 success, 2 configuration/usage error, 3 spoke cap exceeded.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "goldenfa/compare.hpp"
#include "goldenfa/config.hpp"
#include "goldenfa/csv.hpp"
#include "goldenfa/format.hpp"
#include "goldenfa/gaps.hpp"
#include "goldenfa/manifest.hpp"
#include "goldenfa/predictor.hpp"
#include "goldenfa/sim.hpp"
#include "goldenfa/svg.hpp"
#include "goldenfa/sweep.hpp"
#include "goldenfa/version.hpp"

namespace fs = std::filesystem;
using namespace goldenfa;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file: " + path.string());
  out << content;
  if (!out) throw ConfigError("failed writing output file: " + path.string());
}

fs::path prepare_out_dir(const std::string& dir) {
  fs::path path(dir);
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec || !fs::is_directory(path))
    throw ConfigError("cannot create output directory: " + dir);
  return path;
}

std::uint64_t resolve_master_seed(const FlatConfig& cfg, const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (cfg.has("sweep.master_seed")) return 0;  // parse_sweep_config reads it
  throw ConfigError("a master seed is required: pass --seed or set sweep.master_seed");
}

nlohmann::json trial_result_json(const TrialResult& r) {
  return nlohmann::json{{"discovery_time_s", r.discovery_time},
                        {"discovering_searcher", r.discovering_searcher},
                        {"hit_spoke_index", r.hit_spoke_index},
                        {"full_spokes_completed", r.full_spokes_completed},
                        {"distance_travelled_m", r.distance_travelled_total},
                        {"hit_angle_rad", r.hit_angle.value()}};
}

int cmd_gaps(std::uint64_t k, const std::string& increment, double offset,
             const std::string& out_path) {
  if (k == 0) throw ConfigError("--k must be >= 1");
  SpokeSequence seq;
  seq.increment = detail::parse_increment(increment);
  seq.offset = offset;
  const GapStructure g = gap_structure(k, seq);
  const std::string table = gaps_csv(g);
  std::cout << table;
  if (!out_path.empty()) write_file(out_path, table);
  return 0;
}

int cmd_simulate(const std::string& config_path, std::uint64_t seed) {
  FlatConfig cfg = FlatConfig::parse_file(config_path);
  TrialSetup setup = parse_trial_config(cfg);
  const TrialResult result = simulate_trial(setup.arena, setup.clusters, setup.swarm, seed);
  std::cout << trial_result_json(result).dump() << "\n";
  return 0;
}

int cmd_predict(double r, double d, double n, double delta, double c, bool full_form) {
  std::cout << fmt17(predict_discovery_time(r, d, n, delta, c, full_form)) << "\n";
  return 0;
}

svg::Series series_from_rows(const std::vector<SweepRow>& rows, SchedulerKind sched,
                             std::uint32_t n, bool x_is_delta, double fixed_other) {
  svg::Series s;
  s.label = std::string(scheduler_name(sched)) + " n=" + std::to_string(n);
  for (const auto& row : rows) {
    if (row.cell.scheduler != sched || row.stats.n == 0) continue;
    if (x_is_delta) {
      if (row.cell.n_searchers != n) continue;
      s.points.push_back({row.cell.delta, row.stats.mean, row.stats.std_dev});
    } else {
      if (row.cell.delta != fixed_other) continue;
      s.points.push_back({static_cast<double>(row.cell.n_searchers), row.stats.mean,
                          row.stats.std_dev});
    }
  }
  return s;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              std::optional<std::uint64_t> seed_flag, bool plot, bool log_log, unsigned threads) {
  FlatConfig cfg = FlatConfig::parse_file(config_path);
  (void)resolve_master_seed(cfg, seed_flag);
  SweepConfig sweep = parse_sweep_config(cfg);
  if (seed_flag) sweep.master_seed = *seed_flag;

  const fs::path dir = prepare_out_dir(out_dir);
  const auto rows = run_sweep(sweep, threads);
  write_file(dir / "results.csv", sweep_results_csv(rows, sweep.arena));

  RunManifest manifest;
  manifest.command = "sweep";
  manifest.master_seed = sweep.master_seed;
  manifest.resolved_config = echo_config(cfg);
  manifest.outputs = {"results.csv"};

  if (plot) {
    const bool x_is_delta = sweep.delta_grid.size() > 1 || sweep.n_grid.size() == 1;
    std::vector<svg::Series> series;
    if (x_is_delta) {
      for (auto sched : sweep.schedulers)
        for (auto n : sweep.n_grid) {
          auto s = series_from_rows(rows, sched, n, true, 0.0);
          if (!s.points.empty()) series.push_back(std::move(s));
        }
    } else {
      for (auto sched : sweep.schedulers)
        for (double delta : sweep.delta_grid) {
          auto s = series_from_rows(rows, sched, 0, false, delta);
          s.label = std::string(scheduler_name(sched)) + " delta=" + fmt17(delta);
          if (!s.points.empty()) series.push_back(std::move(s));
        }
    }
    const std::string svg_text = svg::line_plot(
        series, "Mean discovery time", x_is_delta ? "cluster diameter (m)" : "searchers",
        "time (s)", log_log, log_log, "manifest.json");
    write_file(dir / "discovery_time.svg", svg_text);
    manifest.outputs.push_back("discovery_time.svg");
  }
  write_file(dir / "manifest.json", manifest.to_json().dump(2) + "\n");
  std::cout << "wrote " << (dir / "results.csv").string() << " (" << rows.size() << " cells)\n";
  return 0;
}

int cmd_compare(const std::string& config_path, const std::string& out_dir,
                std::optional<std::uint64_t> seed_flag, bool plot, std::uint32_t resamples) {
  FlatConfig cfg = FlatConfig::parse_file(config_path);
  (void)resolve_master_seed(cfg, seed_flag);
  SweepConfig sweep = parse_sweep_config(cfg);
  if (seed_flag) sweep.master_seed = *seed_flag;

  const fs::path dir = prepare_out_dir(out_dir);
  const ComparisonReport report = compare_algorithms(sweep, resamples);
  write_file(dir / "comparison.csv", comparison_csv(report));

  RunManifest manifest;
  manifest.command = "compare";
  manifest.master_seed = sweep.master_seed;
  manifest.resolved_config = echo_config(cfg);
  manifest.outputs = {"comparison.csv"};

  if (plot) {
    std::vector<svg::Box> boxes;
    for (const auto& c : report.cells) {
      const std::string group = "d=" + fmt17(c.delta) + " n=" + std::to_string(c.n_searchers);
      boxes.push_back({group, scheduler_name(report.scheduler_a), c.stats_a.p5, c.stats_a.p25,
                       c.stats_a.p50, c.stats_a.p75, c.stats_a.p95, c.stats_a.mean});
      boxes.push_back({group, scheduler_name(report.scheduler_b), c.stats_b.p5, c.stats_b.p25,
                       c.stats_b.p50, c.stats_b.p75, c.stats_b.p95, c.stats_b.mean});
    }
    write_file(dir / "comparison.svg",
               svg::box_plot(boxes, "Discovery time by scheduler", "time (s)", false,
                             "manifest.json"));
    manifest.outputs.push_back("comparison.svg");
  }
  write_file(dir / "manifest.json", manifest.to_json().dump(2) + "\n");
  std::cout << "wrote " << (dir / "comparison.csv").string() << " (" << report.cells.size()
            << " cells)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"golden-ratio spoke foraging: simulator and analysis toolkit"};
  app.set_version_flag("--version", std::string("goldenfa ") + version_string);
  app.require_subcommand(1);

  // gaps
  auto* gaps = app.add_subcommand("gaps", "circular gap structure of the first k spoke headings");
  std::uint64_t gaps_k = 0;
  std::string gaps_increment = "phi";
  double gaps_offset = 0.0;
  std::string gaps_out;
  gaps->add_option("--k", gaps_k, "number of spoke headings")->required();
  gaps->add_option("--increment", gaps_increment, "phi | golden-angle | radians");
  gaps->add_option("--offset", gaps_offset, "sequence offset in radians");
  gaps->add_option("--out", gaps_out, "also write the table to this file");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "run one trial, print the result as JSON");
  std::string sim_config;
  std::uint64_t sim_seed = 0;
  simulate->add_option("--config", sim_config, "trial config file")->required();
  simulate->add_option("--seed", sim_seed, "trial seed (required; no wall-clock seeding)")
      ->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a seeded grid sweep, write results.csv");
  std::string sweep_config, sweep_out;
  std::optional<std::uint64_t> sweep_seed;
  bool sweep_plot = false, sweep_loglog = false;
  unsigned sweep_threads = std::max(1u, std::thread::hardware_concurrency());
  sweep->add_option("--config", sweep_config, "sweep config file")->required();
  sweep->add_option("--out", sweep_out, "output directory")->required();
  sweep->add_option("--seed", sweep_seed, "master seed (overrides sweep.master_seed)");
  sweep->add_flag("--plot", sweep_plot, "also write discovery_time.svg");
  sweep->add_flag("--log-log", sweep_loglog, "log-log axes for the plot");
  sweep->add_option("--threads", sweep_threads, "worker threads (output is identical for any value)");

  // predict
  auto* predict = app.add_subcommand("predict", "closed-form discovery-time prediction");
  double p_r = 0, p_d = 0, p_n = 0, p_delta = 0, p_c = default_predictor_constant;
  bool p_full = false;
  predict->add_option("R", p_r, "arena radius (m)")->required();
  predict->add_option("D", p_d, "cluster distance (m)")->required();
  predict->add_option("N", p_n, "searcher count")->required();
  predict->add_option("DELTA", p_delta, "cluster diameter (m)")->required();
  predict->add_option("--c", p_c, "calibration constant");
  predict->add_flag("--full-form", p_full, "use c*(R/(N*DELTA)+1)*D");

  // compare
  auto* compare = app.add_subcommand("compare", "paired two-scheduler comparison report");
  std::string cmp_config, cmp_out;
  std::optional<std::uint64_t> cmp_seed;
  bool cmp_plot = false;
  std::uint32_t cmp_resamples = 10'000;
  compare->add_option("--config", cmp_config, "sweep config with exactly two schedulers")
      ->required();
  compare->add_option("--out", cmp_out, "output directory")->required();
  compare->add_option("--seed", cmp_seed, "master seed (overrides sweep.master_seed)");
  compare->add_flag("--plot", cmp_plot, "also write comparison.svg box plot");
  compare->add_option("--resamples", cmp_resamples, "bootstrap resamples");

  try {
    app.parse(argc, argv);
    if (gaps->parsed()) return cmd_gaps(gaps_k, gaps_increment, gaps_offset, gaps_out);
    if (simulate->parsed()) return cmd_simulate(sim_config, sim_seed);
    if (sweep->parsed())
      return cmd_sweep(sweep_config, sweep_out, sweep_seed, sweep_plot, sweep_loglog,
                       sweep_threads);
    if (predict->parsed()) return cmd_predict(p_r, p_d, p_n, p_delta, p_c, p_full);
    if (compare->parsed()) return cmd_compare(cmp_config, cmp_out, cmp_seed, cmp_plot,
                                              cmp_resamples);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SpokeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
