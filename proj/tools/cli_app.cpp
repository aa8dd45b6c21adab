// Copyright 2026 The spdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli_app.hpp"

#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "spd/circuits.hpp"
#include "spd/engine.hpp"
#include "spd/statevector.hpp"

namespace spd::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitContract = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Option resolution

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("SPD_DATA_DIR")) return env;
  return SPD_DATA_DIR;
}

LatticeSpec resolve_lattice(const std::string& source) {
  try {
    if (source == "eagle127") return LatticeSpec::load(data_dir() / "eagle_127.txt");
    if (source.starts_with("heavyhex:")) {
      return heavy_hex(static_cast<uint32_t>(std::stoul(source.substr(9))));
    }
    if (source.starts_with("chain:")) {
      return LatticeSpec::chain(static_cast<uint32_t>(std::stoul(source.substr(6))));
    }
    if (source.starts_with("ring:")) {
      return LatticeSpec::ring(static_cast<uint32_t>(std::stoul(source.substr(5))));
    }
    return LatticeSpec::load(source);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(std::string("--lattice: ") + err.what());
  }
}

bool is_observable_preset(const std::string& source) {
  return source == "Mz" || source.starts_with("Z_q:") || source.starts_with("custom:");
}

std::vector<ObservableTerm> resolve_observable(const std::string& source,
                                               const LatticeSpec& lattice) {
  try {
    if (is_observable_preset(source)) return observable_preset(source, lattice);
    return load_observable_file(source, lattice.n);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(std::string("--observable: ") + err.what());
  }
}

/// Grid forms: "k*pi/<d>:<lo>..<hi>", a comma list, or a single value.
std::vector<double> parse_theta_grid(const std::string& spec) {
  std::vector<double> grid;
  if (spec.starts_with("k*pi/")) {
    const auto colon = spec.find(':');
    const auto dots = spec.find("..");
    if (colon == std::string::npos || dots == std::string::npos || dots < colon) {
      throw ConfigError("--theta-grid: expected k*pi/<denom>:<lo>..<hi>, got '" + spec + "'");
    }
    long denom = 0, lo = 0, hi = 0;
    try {
      denom = std::stol(spec.substr(5, colon - 5));
      lo = std::stol(spec.substr(colon + 1, dots - colon - 1));
      hi = std::stol(spec.substr(dots + 2));
    } catch (const std::exception&) {
      throw ConfigError("--theta-grid: malformed grid '" + spec + "'");
    }
    if (denom == 0 || hi < lo) {
      throw ConfigError("--theta-grid: empty or invalid grid '" + spec + "'");
    }
    for (long k = lo; k <= hi; ++k) {
      grid.push_back((static_cast<double>(k) * kPi) / static_cast<double>(denom));
    }
    return grid;
  }
  size_t start = 0;
  while (start <= spec.size()) {
    const auto comma = spec.find(',', start);
    const std::string item =
        spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      grid.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("--theta-grid: bad value '" + item + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (grid.empty()) throw ConfigError("--theta-grid: empty grid");
  return grid;
}

uint32_t parse_order(const std::string& text) {
  if (text == "inf" || text == "unbounded") return kUnboundedOrder;
  uint32_t k = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("--K: expected a non-negative integer or 'inf', got '" + text + "'");
  }
  return k;
}

// ---------------------------------------------------------------------------
// Sweep execution

struct SweepRow {
  double theta_h = 0.0;
  double value = 0.0;
  uint32_t max_order = 0;
  size_t peak_terms = 0;
  size_t gate_count = 0;
  double wall_time_seconds = 0.0;
};

struct RunOptions {
  LatticeSpec lattice;
  uint32_t trotter_steps = 0;
  std::vector<double> theta_grid;
  std::string observable;
  uint32_t max_order = 0;
  bool angle_transform = false;
  bool extra_rx_layer = false;
  bool mz_bound_check = false;  // Mz preset: assert result within [-1, 1]
  std::string out = "-";
  std::string format = "csv";
  unsigned threads = 1;
};

SweepRow evaluate_point(const RunOptions& opt, double theta_h) {
  const auto circuit =
      build_circuit({opt.lattice, opt.trotter_steps, theta_h, opt.extra_rx_layer});

  // The Mz preset runs unit-coefficient Z_q terms and divides once at the
  // end, so the Clifford point theta_h = 0 yields exactly 1.
  const bool mz = opt.observable == "Mz";
  std::vector<ObservableTerm> terms;
  if (mz) {
    for (uint32_t q = 0; q < opt.lattice.n; ++q) {
      terms.push_back({1.0, PauliString::single(opt.lattice.n, q, 'Z')});
    }
  } else {
    terms = resolve_observable(opt.observable, opt.lattice);
  }

  const auto folded = fold(circuit, terms, {.angle_transform = opt.angle_transform});
  std::vector<FoldedCircuit> per_term;
  per_term.reserve(folded.observable_terms.size());
  for (const auto& term : folded.observable_terms) {
    per_term.push_back({folded.num_qubits, folded.rotations, {term}});
  }

  const SpdConfig cfg{.max_order = opt.max_order};
  RunStats agg;
  double value = run_sum(per_term, cfg, &agg);
  if (mz) value /= static_cast<double>(opt.lattice.n);

  if (opt.mz_bound_check && std::abs(value) > 1.0 + 1e-9) {
    throw ContractViolation("Mz value " + format_double(value) +
                            " violates the physical bound [-1, 1]");
  }
  return {theta_h, value, opt.max_order, agg.peak_terms, agg.gate_count,
          agg.wall_time_seconds};
}

std::vector<SweepRow> run_sweep(const RunOptions& opt) {
  std::vector<SweepRow> rows(opt.theta_grid.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(opt.threads, opt.theta_grid.size()));
  if (workers == 1) {
    for (size_t i = 0; i < opt.theta_grid.size(); ++i) {
      rows[i] = evaluate_point(opt, opt.theta_grid[i]);
    }
    return rows;
  }
  // Sweep-level parallelism only: every point still runs a single-threaded
  // engine and reports its own single-thread wall time.
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= opt.theta_grid.size() || failed.load()) return;
      try {
        rows[i] = evaluate_point(opt, opt.theta_grid[i]);
      } catch (const std::exception& err) {
        std::scoped_lock lock(error_mutex);
        failed.store(true);
        if (error.empty()) error = err.what();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load()) throw ContractViolation(error);
  return rows;
}

// ---------------------------------------------------------------------------
// Output

std::string order_text(uint32_t k) {
  return k == kUnboundedOrder ? "inf" : std::to_string(k);
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "theta_h,value,K,peak_terms,gate_count,wall_time_seconds\n";
  for (const auto& row : rows) {
    os << format_double(row.theta_h) << ',' << format_double(row.value) << ','
       << order_text(row.max_order) << ',' << row.peak_terms << ',' << row.gate_count
       << ',' << format_double(row.wall_time_seconds) << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<SweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json j{{"theta_h", row.theta_h},
                     {"value", row.value},
                     {"peak_terms", row.peak_terms},
                     {"gate_count", row.gate_count},
                     {"wall_time_seconds", row.wall_time_seconds}};
    if (row.max_order == kUnboundedOrder) {
      j["K"] = "inf";
    } else {
      j["K"] = row.max_order;
    }
    out.push_back(std::move(j));
  }
  os << out.dump(2) << '\n';
}

void write_rows(const RunOptions& opt, const std::vector<SweepRow>& rows) {
  const auto write = [&](std::ostream& os) {
    if (opt.format == "csv") {
      write_csv(os, rows);
    } else {
      write_json(os, rows);
    }
  };
  if (opt.out == "-") {
    write(std::cout);
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw ConfigError("cannot open output file " + opt.out);
  write(file);
}

// ---------------------------------------------------------------------------
// Subcommands

struct PanelPreset {
  uint32_t t;
  const char* K;
  const char* observable;  // nullptr: an observable file must be supplied
  bool angle_transform;
  bool extra_rx_layer;
};

const std::map<std::string, PanelPreset> kPanels = {
    {"a", {5, "10", "Mz", false, false}},
    {"b", {5, "10", nullptr, true, false}},
    {"c", {5, "6", nullptr, true, false}},
    {"d", {5, "6", nullptr, true, true}},
    {"e", {20, "10", "Z_q:62", false, false}},
};

struct RawRunArgs {
  std::string lattice;
  uint32_t trotter_steps = 0;
  std::string theta_grid = "k*pi/32:0..16";
  std::string observable;
  std::string max_order;
  bool angle_transform = false;
  bool extra_rx_layer = false;
  std::string panel;
  std::string out = "-";
  std::string format = "csv";
  unsigned threads = 1;
};

int cmd_run(const RawRunArgs& raw, const CLI::App& parsed) {
  RawRunArgs args = raw;
  if (!args.panel.empty()) {
    const auto it = kPanels.find(args.panel);
    if (it == kPanels.end()) throw ConfigError("unknown panel '" + args.panel + "'");
    const PanelPreset& preset = it->second;
    if (parsed.count("--t") == 0) args.trotter_steps = preset.t;
    if (parsed.count("--K") == 0) args.max_order = preset.K;
    if (parsed.count("--angle-transform") == 0) args.angle_transform = preset.angle_transform;
    if (parsed.count("--extra-rx-layer") == 0) args.extra_rx_layer = preset.extra_rx_layer;
    if (parsed.count("--lattice") == 0) args.lattice = "eagle127";
    if (parsed.count("--observable") == 0) {
      if (preset.observable == nullptr) {
        throw ConfigError("panel " + args.panel +
                          " needs --observable <file> with the measured site list");
      }
      args.observable = preset.observable;
    }
  }
  if (args.lattice.empty()) throw ConfigError("--lattice is required");
  if (args.observable.empty()) throw ConfigError("--observable is required");
  if (args.max_order.empty()) throw ConfigError("--K is required");
  if (args.format != "csv" && args.format != "json") {
    throw ConfigError("--format must be csv or json");
  }
  if (args.threads == 0) throw ConfigError("--threads must be positive");

  RunOptions opt;
  opt.lattice = resolve_lattice(args.lattice);
  opt.trotter_steps = args.trotter_steps;
  opt.theta_grid = parse_theta_grid(args.theta_grid);
  opt.observable = args.observable;
  opt.max_order = parse_order(args.max_order);
  opt.angle_transform = args.angle_transform;
  opt.extra_rx_layer = args.extra_rx_layer;
  opt.mz_bound_check = args.observable == "Mz";
  opt.out = args.out;
  opt.format = args.format;
  opt.threads = args.threads;
  resolve_observable(opt.observable, opt.lattice);  // validate before running

  write_rows(opt, run_sweep(opt));
  return kExitOk;
}

struct RawVerifyArgs {
  std::string lattice;
  uint32_t trotter_steps = 3;
  std::string observable = "Mz";
  std::string max_order = "inf";
  uint64_t seed = 0;
  unsigned trials = 5;
  double fixed_theta = std::numeric_limits<double>::quiet_NaN();
  bool corrupt_phase = false;
};

int cmd_verify(const RawVerifyArgs& args) {
  if (args.lattice.empty()) throw ConfigError("--lattice is required");
  const LatticeSpec lattice = resolve_lattice(args.lattice);
  if (lattice.n > 12) {
    throw ConfigError("verify needs n <= 12 for the dense reference, got n=" +
                      std::to_string(lattice.n));
  }
  const auto observable = resolve_observable(args.observable, lattice);
  const uint32_t given_k = parse_order(args.max_order);

  std::mt19937_64 rng(args.seed);
  std::uniform_real_distribution<double> theta_dist(0.05, 1.5);
  const bool fixed = !std::isnan(args.fixed_theta);
  const unsigned trials = fixed ? 1 : args.trials;

  double dev_exact = 0.0, dev_given = 0.0;
  for (unsigned trial = 0; trial < trials; ++trial) {
    const double theta_h = fixed ? args.fixed_theta : theta_dist(rng);
    const auto circuit = build_circuit({lattice, args.trotter_steps, theta_h, false});
    auto folded = fold(circuit, observable);
    if (args.corrupt_phase) {
      // Test hook: breaks the folding phase convention on purpose.
      for (auto& rot : folded.rotations) rot.angle = -rot.angle;
    }
    std::vector<FoldedCircuit> per_term;
    for (const auto& term : folded.observable_terms) {
      per_term.push_back({folded.num_qubits, folded.rotations, {term}});
    }
    const double reference = oracle_expectation(circuit, observable);
    const double exact = run_sum(per_term, SpdConfig{});
    dev_exact = std::max(dev_exact, std::abs(exact - reference));
    if (given_k != kUnboundedOrder) {
      const double truncated = run_sum(per_term, SpdConfig{.max_order = given_k});
      dev_given = std::max(dev_given, std::abs(truncated - reference));
    }
  }

  std::cout << "max |SPD(K=inf) - oracle| = " << format_double(dev_exact) << '\n';
  if (given_k != kUnboundedOrder) {
    std::cout << "max |SPD(K=" << given_k << ") - oracle| = " << format_double(dev_given)
              << '\n';
  }
  if (dev_exact < 1e-10) {
    std::cout << "PASS\n";
    return kExitOk;
  }
  std::cout << "FAIL\n";
  return kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse Pauli dynamics simulator for Pauli-rotation circuits"};
  app.require_subcommand(1);
  app.set_config("--config")->configurable(false);

  RawRunArgs run_args;
  CLI::App* run_cmd = app.add_subcommand(
      "run", "Sweep theta_h over a kicked-Ising circuit and write CSV/JSON rows");
  run_cmd->add_option("--lattice", run_args.lattice,
                      "eagle127 | heavyhex:<d> | chain:<n> | ring:<n> | <file>");
  run_cmd->add_option("--t", run_args.trotter_steps, "Trotter steps");
  run_cmd->add_option("--theta-grid", run_args.theta_grid,
                      "k*pi/<d>:<lo>..<hi>, a comma list, or one value");
  run_cmd->add_option("--observable", run_args.observable,
                      "Mz | Z_q:<index> | custom:<pauli> | <file>");
  run_cmd->add_option("--K", run_args.max_order, "truncation order (integer or 'inf')");
  run_cmd->add_flag("--angle-transform", run_args.angle_transform,
                    "pull one extra pi/2 kick out of every non-Clifford rotation");
  run_cmd->add_flag("--extra-rx-layer", run_args.extra_rx_layer,
                    "append one more R_X layer after the final Trotter step");
  run_cmd->add_option("--panel", run_args.panel, "preset bundle: a, b, c, d or e");
  run_cmd->add_option("--out", run_args.out, "output path ('-' for stdout)");
  run_cmd->add_option("--format", run_args.format, "csv | json");
  run_cmd->add_option("--threads", run_args.threads, "parallel sweep points");

  RawVerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Cross-check SPD against the dense statevector reference (n <= 12)");
  verify_cmd->add_option("--lattice", verify_args.lattice, "lattice preset or file");
  verify_cmd->add_option("--t", verify_args.trotter_steps, "Trotter steps");
  verify_cmd->add_option("--observable", verify_args.observable, "observable preset or file");
  verify_cmd->add_option("--K", verify_args.max_order,
                         "also report the deviation at this truncation order");
  verify_cmd->add_option("--seed", verify_args.seed, "seed for the random angles");
  verify_cmd->add_option("--trials", verify_args.trials, "number of random-angle trials");
  verify_cmd->add_option("--theta", verify_args.fixed_theta,
                         "use one fixed theta_h instead of random draws");
  verify_cmd->add_flag("--corrupt-phase", verify_args.corrupt_phase,
                       "negative-control hook: corrupt the folded phases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitConfig;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_args, *run_cmd);
    return cmd_verify(verify_args);
  } catch (const ConfigError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitConfig;
  } catch (const ContractViolation& err) {
    std::cerr << "contract violation: " << err.what() << '\n';
    return kExitContract;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitContract;
  }
}

}  // namespace spd::cli
