// SPDX-License-Identifier: Apache-2.0

#include "drs/cli/commands.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>
#include <spdlog/cfg/env.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "drs/cli/config.hpp"
#include "drs/cli/report.hpp"
#include "drs/cli/svg.hpp"
#include "drs/engine.hpp"

namespace drs::cli {
namespace {

using nlohmann::ordered_json;

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

RunConfig resolve(const std::optional<std::filesystem::path>& path, const std::optional<std::uint64_t>& seed,
                  const std::optional<long>& steps, const std::optional<std::string>& sinr_form,
                  const std::optional<std::filesystem::path>& out) {
  RunConfig config;
  if (path) {
    config = load_config(*path);
  }
  if (seed) config.sim.scenario.seed = *seed;
  if (steps) config.sim.steps = *steps;
  if (sinr_form) {
    if (*sinr_form == "standard") config.sim.radio.sinr_form = SinrForm::standard;
    else if (*sinr_form == "paper-literal") config.sim.radio.sinr_form = SinrForm::paper_literal;
    else throw ConfigError("--sinr-form", "expected standard or paper-literal");
  }
  if (out) config.output_dir = *out;
  validate(config);
  return config;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

const char* mode_name(bool control) { return control ? "on" : "off"; }

ordered_json config_json(const RunConfig& config) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : describe(config)) j[k] = v;
  return j;
}

template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    spdlog::error("invalid configuration: {}", e.what());
    return kInvalidInput;
  } catch (const CsvError& e) {
    spdlog::error("malformed CSV: {}", e.what());
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    spdlog::error("invalid argument: {}", e.what());
    return kInvalidInput;
  } catch (const IoError& e) {
    spdlog::error("I/O failure: {}", e.what());
    return kIoFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    spdlog::error("I/O failure: {}", e.what());
    return kIoFailure;
  }
}

void init_logging() {
  static const bool once = [] {
    auto logger = spdlog::stderr_color_mt("drs");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    spdlog::cfg::load_env_levels();
    return true;
  }();
  (void)once;
}

}  // namespace

int cmd_run(const RunOptions& options) {
  init_logging();
  return guarded([&] {
    RunConfig config = resolve(options.config, options.seed, options.steps, options.sinr_form, options.out);
    if (options.orientation_control) config.sim.orientation_control = *options.orientation_control;

    std::vector<bool> modes{config.sim.orientation_control};
    if (options.paired) modes.push_back(!config.sim.orientation_control);

    std::ostringstream csv;
    write_steps_header(csv);
    ordered_json by_mode = ordered_json::object();
    std::map<bool, double> means;
    std::size_t records = 0;
    int pairs = 0;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < modes.size(); ++i) {
      SimulationConfig sim = config.sim;
      sim.orientation_control = modes[i];
      spdlog::info("run seed={} steps={} control={}", sim.scenario.seed, sim.steps, mode_name(modes[i]));
      const RunSummary summary = run_simulation(sim);
      for (const StepRecord& rec : summary.records) write_step_row(csv, rec);
      by_mode[mode_name(modes[i])] = summary.mean_rate_bps;
      means[modes[i]] = summary.mean_rate_bps;
      if (i == 0) {
        records = summary.records.size();
        pairs = summary.pairs;
        cumulative = summary.cumulative_rate_bits;
      }
    }

    ordered_json summary;
    summary["mode"] = mode_name(config.sim.orientation_control);
    summary["seed"] = config.sim.scenario.seed;
    summary["steps"] = config.sim.steps;
    summary["sinr_form"] = to_string(config.sim.radio.sinr_form);
    summary["pairs"] = pairs;
    summary["records"] = records;
    summary["mean_rate_bps"] = means[config.sim.orientation_control];
    summary["cumulative_rate_bits"] = cumulative;
    summary["mean_rate_by_mode"] = by_mode;
    if (options.paired) summary["improvement_pct"] = improvement_pct(means[true], means[false]);
    else summary["improvement_pct"] = nullptr;
    summary["config"] = config_json(config);

    ensure_dir(config.output_dir);
    write_file(config.output_dir / "steps.csv", csv.str());
    write_file(config.output_dir / "summary.json", summary.dump(2) + "\n");
    spdlog::info("wrote {} rows to {}", records, (config.output_dir / "steps.csv").string());
    return static_cast<int>(kOk);
  });
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text, std::uint64_t base) {
  const auto parse = [](std::string_view s) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
      throw std::invalid_argument("bad seed '" + std::string(s) + "'");
    }
    return v;
  };
  std::vector<std::uint64_t> seeds;
  if (text.find(',') != std::string::npos) {
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) seeds.push_back(parse(item));
  } else if (const auto dash = text.find('-'); dash != std::string::npos) {
    const std::uint64_t lo = parse(std::string_view(text).substr(0, dash));
    const std::uint64_t hi = parse(std::string_view(text).substr(dash + 1));
    if (hi < lo) throw std::invalid_argument("seed range " + text + " is descending");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  } else {
    const std::uint64_t count = parse(text);
    for (std::uint64_t i = 0; i < count; ++i) seeds.push_back(base + i);
  }
  if (seeds.empty()) throw std::invalid_argument("empty seed list");
  return seeds;
}

int cmd_sweep(const SweepOptions& options) {
  init_logging();
  return guarded([&] {
    const RunConfig config = resolve(options.config, std::nullopt, options.steps, options.sinr_form, options.out);
    const std::vector<std::uint64_t> seeds =
        parse_seed_list(options.seeds, options.seed.value_or(config.sim.scenario.seed));

    std::vector<SweepRow> rows(seeds.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
      for (std::size_t i = next++; i < seeds.size(); i = next++) {
        SimulationConfig sim = config.sim;
        sim.scenario.seed = seeds[i];
        sim.orientation_control = true;
        const double on = run_simulation(sim).mean_rate_bps;
        sim.orientation_control = false;
        const double off = run_simulation(sim).mean_rate_bps;
        rows[i] = {seeds[i], on, off, improvement_pct(on, off)};
      }
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(seeds.size()));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    SweepRow aggregate;
    double mean_pct = 0.0;
    for (const SweepRow& r : rows) {
      aggregate.mean_rate_on += r.mean_rate_on / rows.size();
      aggregate.mean_rate_off += r.mean_rate_off / rows.size();
      mean_pct += r.improvement_pct / rows.size();
    }
    aggregate.improvement_pct = improvement_pct(aggregate.mean_rate_on, aggregate.mean_rate_off);

    std::ostringstream csv;
    write_sweep_csv(csv, rows, aggregate);
    ordered_json summary;
    summary["seeds"] = seeds;
    summary["steps"] = config.sim.steps;
    summary["mean_rate_on"] = aggregate.mean_rate_on;
    summary["mean_rate_off"] = aggregate.mean_rate_off;
    summary["improvement_pct"] = aggregate.improvement_pct;
    summary["mean_per_seed_improvement_pct"] = mean_pct;
    summary["config"] = config_json(config);

    ensure_dir(config.output_dir);
    write_file(config.output_dir / "sweep.csv", csv.str());
    write_file(config.output_dir / "sweep.json", summary.dump(2) + "\n");
    std::cout << "aggregate improvement: " << format_number(aggregate.improvement_pct) << " % over " << rows.size()
              << " seeds\n";
    return static_cast<int>(kOk);
  });
}

int cmd_plot(const PlotOptions& options) {
  init_logging();
  return guarded([&] {
    if (options.inputs.empty()) throw std::invalid_argument("plot needs at least one --input");
    std::vector<StepRow> rows;
    for (const auto& path : options.inputs) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw CsvError("cannot open " + path.string());
      std::vector<StepRow> part = read_steps_csv(in);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    if (rows.empty()) throw CsvError("no data rows");

    // mode -> cycle -> (sum, count)
    std::map<bool, std::map<long, std::pair<double, long>>> by_cycle;
    std::map<bool, std::pair<double, long>> totals;
    for (const StepRow& r : rows) {
      auto& cell = by_cycle[r.control][r.cycle_index];
      cell.first += r.rate_bps;
      ++cell.second;
      totals[r.control].first += r.rate_bps;
      ++totals[r.control].second;
    }

    std::vector<Series> series;
    std::vector<Bar> bars;
    for (bool mode : {true, false}) {
      if (!totals.count(mode)) continue;
      Series s{std::string("control ") + mode_name(mode), {}};
      for (const auto& [cycle, acc] : by_cycle[mode]) s.points.emplace_back(cycle, acc.first / acc.second);
      series.push_back(std::move(s));
      bars.push_back({mode_name(mode), totals[mode].first / totals[mode].second});
    }

    ensure_dir(options.out);
    write_file(options.out / "rate_vs_cycle.svg",
               line_chart_svg("Mean rate through the relay per cycle index", "cycle index", "rate [bit/s]", series));
    write_file(options.out / "mean_rate.svg", bar_chart_svg("Mean rate per mode", "rate [bit/s]", bars));
    spdlog::info("wrote plots to {}", options.out.string());
    return static_cast<int>(kOk);
  });
}

int run_cli(int argc, const char* const* argv) {
  init_logging();
  CLI::App app{"Drone-mounted reflecting surface relay simulator"};
  app.require_subcommand(1);

  const std::map<std::string, bool> on_off{{"on", true}, {"off", false}};

  RunOptions run;
  std::string run_config, run_out, run_sinr;
  auto* run_cmd = app.add_subcommand("run", "Simulate one seed and write steps.csv and summary.json");
  run_cmd->add_option("--config", run_config, "Configuration file")->check(CLI::ExistingFile);
  run_cmd->add_option("--seed", run.seed, "Scenario seed");
  run_cmd->add_option("--steps", run.steps, "Number of time steps");
  run_cmd->add_option("--orientation-control", run.orientation_control, "on|off")
      ->transform(CLI::CheckedTransformer(on_off, CLI::ignore_case));
  run_cmd->add_option("--sinr-form", run_sinr, "standard|paper-literal");
  run_cmd->add_option("--out", run_out, "Output directory");
  run_cmd->add_flag("--paired", run.paired, "Also simulate the opposite control mode on the same seed");

  SweepOptions sweep;
  std::string sweep_config, sweep_out, sweep_sinr;
  auto* sweep_cmd = app.add_subcommand("sweep", "Paired control on/off runs over many seeds");
  sweep_cmd->add_option("--config", sweep_config, "Configuration file")->check(CLI::ExistingFile);
  sweep_cmd->add_option("--seed", sweep.seed, "First seed when --seeds is a count");
  sweep_cmd->add_option("--seeds", sweep.seeds, "Seed count, list (1,2,5) or range (1-20)");
  sweep_cmd->add_option("--steps", sweep.steps, "Number of time steps");
  sweep_cmd->add_option("--sinr-form", sweep_sinr, "standard|paper-literal");
  sweep_cmd->add_option("--out", sweep_out, "Output directory");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0: all cores)");

  PlotOptions plot;
  std::string plot_out = "out";
  auto* plot_cmd = app.add_subcommand("plot", "Render SVG charts from one or more steps.csv files");
  plot_cmd->add_option("--input", plot.inputs, "steps.csv file(s)")->required();
  plot_cmd->add_option("--out", plot_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? static_cast<int>(kOk) : static_cast<int>(kInvalidInput);
  }

  const auto opt_path = [](const std::string& s) {
    return s.empty() ? std::nullopt : std::optional<std::filesystem::path>(s);
  };
  const auto opt_str = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };

  if (*run_cmd) {
    run.config = opt_path(run_config);
    run.out = opt_path(run_out);
    run.sinr_form = opt_str(run_sinr);
    return cmd_run(run);
  }
  if (*sweep_cmd) {
    sweep.config = opt_path(sweep_config);
    sweep.out = opt_path(sweep_out);
    sweep.sinr_form = opt_str(sweep_sinr);
    return cmd_sweep(sweep);
  }
  plot.out = plot_out;
  return cmd_plot(plot);
}

}  // namespace drs::cli
