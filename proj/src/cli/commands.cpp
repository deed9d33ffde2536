// Copyright 2026 The stasoc Authors
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

#include "stasoc/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "stasoc/csv.hpp"
#include "stasoc/dynamics.hpp"
#include "stasoc/observables.hpp"
#include "stasoc/oscillator.hpp"
#include "stasoc/propagator.hpp"
#include "stasoc/protocols.hpp"

namespace stasoc::cli {

using nlohmann::json;

namespace {

constexpr const char* kOutDirEnv = "STASOC_OUT_DIR";

class DesignRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Design {
  ControlSchedule schedule;
  ValidationReport report;
  std::optional<StaProtocol> sta;
  std::optional<AdiabaticProtocol> adiabatic;
};

StaParameters sta_parameters(const RunConfig& c) { return {c.distance, c.duration, c.scales}; }

AdiabaticParameters adiabatic_parameters(const RunConfig& c) {
  return {c.soc_strength, c.distance, c.duration, c.scales};
}

Design make_design(const RunConfig& c) {
  if (c.protocol == ProtocolKind::Sta) {
    auto report = validate(sta_parameters(c));
    if (report.singular) throw DesignRejected(report.warnings.front().message);
    StaProtocol p(sta_parameters(c));
    return {ControlSchedule::from(p), report, p, std::nullopt};
  }
  AdiabaticProtocol p(adiabatic_parameters(c));
  return {ControlSchedule::from(p), validate(adiabatic_parameters(c)), std::nullopt, p};
}

GridPtr make_grid(const RunConfig& c, double dt) {
  return std::make_shared<const SimulationGrid>(
      SimulationGrid::build(c.x_min, c.x_max, c.grid_points, dt, c.duration));
}

SpinorField initial_state(const GridPtr& grid, const PhysicalScales& scales) {
  return SpinorField::product(grid, Spinor::sigma_x(+1), harmonic_eigenstate(0, scales, *grid));
}

json warnings_json(const ValidationReport& r) {
  json list = json::array();
  for (const auto& w : r.warnings) list.push_back({{"code", w.code}, {"message", w.message}});
  return list;
}

json base_summary(const RunConfig& c, Mode mode) {
  return {{"mode", to_string(mode)},
          {"protocol", to_string(c.protocol)},
          {"d", c.distance},
          {"t_f", c.duration},
          {"alpha0", c.soc_strength},
          {"grid_points", c.grid_points},
          {"x_min", c.x_min},
          {"x_max", c.x_max},
          {"dt", c.dt},
          {"gN", c.coupling}};
}

std::filesystem::path prepare_out(const RunConfig& c) {
  std::filesystem::create_directories(c.out_dir);
  return c.out_dir;
}

void write_summary(const std::filesystem::path& dir, const json& summary) {
  std::ofstream out(dir / "summary.json");
  out << summary.dump(2) << '\n';
  if (!out) throw std::runtime_error("cannot write summary.json");
}

CommandResult rejected(const RunConfig& c, Mode mode, const std::filesystem::path& dir,
                       const std::string& why, std::ostream& log) {
  json s = base_summary(c, mode);
  s["status"] = "rejected";
  s["error"] = why;
  write_summary(dir, s);
  log << "error: " << why << '\n';
  return {kExitFailed, s};
}

std::string fraction_label(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", f);
  return buf;
}

int exit_for(const ValidationReport& r) { return r.ok() ? kExitOk : kExitWarnings; }

}  // namespace

CommandResult cmd_design(const RunConfig& c, std::ostream& log) {
  const auto dir = prepare_out(c);
  json s = base_summary(c, Mode::Design);
  if (c.protocol == ProtocolKind::Sta) {
    const auto report = validate(sta_parameters(c));
    if (report.singular) {
      CommandResult r = rejected(c, Mode::Design, dir, report.warnings.front().message, log);
      r.summary["singular_distance"] = report.singular_distance;
      write_summary(dir, r.summary);
      return r;
    }
  }
  Design design = make_design(c);

  const auto n_steps = static_cast<std::size_t>(std::llround(c.duration / c.dt));
  const std::size_t n_samples = std::max<std::size_t>(2, n_steps / c.sample_every + 1);
  s["warnings"] = warnings_json(design.report);
  if (design.sta) {
    const StaProtocol& p = *design.sta;
    write_control_trace(dir / "controls.csv", sample_controls(p, n_samples));
    s["phase_sigma"] = phase_sigma(p);
    s["singular_distance"] = design.report.singular_distance;
    s["peak_alpha"] = design.report.peak_soc_strength;
    s["soc_amplitude"] = p.soc_amplitude();
  } else {
    const AdiabaticProtocol& p = *design.adiabatic;
    write_control_trace(dir / "controls.csv", sample_controls(p, n_samples));
    s["phase_sigma"] = phase_sigma(p);
    s["phase_sigma_closed_form"] = p.closed_form_spin_phase();
    s["adiabatic_time_bound"] = design.report.adiabatic_time_bound;
    s["residual_excitation"] = design.report.residual_excitation;
    s["adiabaticity_violated"] = design.report.adiabaticity_violated;
    if (c.soc_strength != 0.0) {
      s["d_sp"] = spin_flip_length(c.soc_strength, c.scales);
      s["t_sp"] = spin_flip_time(p);
      s["t_sp_fraction"] = spin_flip_time(p) / p.duration();
    }
  }
  s["status"] = design.report.ok() ? "ok" : "warnings";
  write_summary(dir, s);
  for (const auto& w : design.report.warnings) log << "warning: " << w.message << '\n';
  log << "phase_sigma = " << format_number(s["phase_sigma"].get<double>()) << '\n';
  return {exit_for(design.report), s};
}

CommandResult cmd_simulate(const RunConfig& c, std::ostream& log) {
  const auto dir = prepare_out(c);
  Design design = make_design(c);
  const GridPtr grid = make_grid(c, c.dt);
  const std::size_t n = grid->n_steps();

  std::map<std::size_t, double> snapshots;
  for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) snapshots.emplace(std::llround(f * n), f);
  for (double f : c.snapshot_fractions) snapshots.emplace(std::llround(f * n), f);

  const FourierTransform fft(grid->size());
  std::vector<ObservableRecord> records;
  double max_trace_error = 0.0;
  const Observer observer = [&](std::size_t step, double t, const SpinorField& field) {
    if (step % c.sample_every == 0 || step == n) {
      records.push_back(measure(field, t, design.schedule.at(t).soc_strength, fft, c.scales));
      max_trace_error = std::max(max_trace_error, std::abs(density_matrix(field).trace() - 1.0));
    }
    if (auto it = snapshots.find(step); it != snapshots.end()) {
      write_density(dir / ("density_t" + fraction_label(it->second) + ".csv"), field);
    }
  };

  SplitOperatorPropagator propagator(grid, c.scales, {c.coupling, 1, c.midpoint_controls});
  const SpinorField final_state = propagator.evolve(initial_state(grid, c.scales), design.schedule, observer);
  write_observables(dir / "observables.csv", records);

  json s = base_summary(c, Mode::Simulate);
  s["warnings"] = warnings_json(design.report);
  try {
    s["fidelity"] = fidelity(final_state, make_target(c.distance, -1, grid, c.scales));
  } catch (const std::invalid_argument&) {
    s["fidelity"] = nullptr;
  }
  const auto& last = records.back();
  s["final"] = {{"t", last.t},   {"com", last.com}, {"mom", last.mom}, {"vel", last.vel},
                {"sx", last.sx}, {"sy", last.sy},   {"sz", last.sz},   {"P", last.bloch},
                {"norm", last.norm}};

  double norm_drift = 0.0, max_sz = 0.0, ehrenfest = 0.0;
  double min_interior_bloch = records.size() > 2 ? 1e300 : 1.0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    norm_drift = std::max(norm_drift, std::abs(records[i].norm - 1.0));
    max_sz = std::max(max_sz, std::abs(records[i].sz));
    if (i > 0 && i + 1 < records.size()) {
      min_interior_bloch = std::min(min_interior_bloch, records[i].bloch);
      const double h1 = records[i].t - records[i - 1].t;
      const double h2 = records[i + 1].t - records[i].t;
      if (std::abs(h1 - h2) < 1e-9 * h1) {
        const double rate = (records[i + 1].com - records[i - 1].com) / (h1 + h2);
        ehrenfest = std::max(ehrenfest, std::abs(rate - records[i].vel));
      }
    }
  }
  s["max_norm_drift"] = norm_drift;
  s["max_trace_error"] = max_trace_error;
  s["max_abs_sz"] = max_sz;
  s["max_ehrenfest_residual"] = ehrenfest;
  s["min_interior_P"] = min_interior_bloch;
  if (design.adiabatic && c.soc_strength != 0.0) {
    const auto& p = *design.adiabatic;
    s["t_sp_predicted"] = spin_flip_time(p);
    const auto crossing = precession_crossing_time(records, 2.0 * kPi / c.scales.omega, kPi);
    s["flip_time"] = crossing ? json(*crossing) : json(nullptr);
    s["flip_time_fraction"] = crossing ? json(*crossing / p.duration()) : json(nullptr);
  }
  s["status"] = design.report.ok() ? "ok" : "warnings";
  write_summary(dir, s);
  for (const auto& w : design.report.warnings) log << "warning: " << w.message << '\n';
  log << "final sx = " << format_number(last.sx) << ", <x> = " << format_number(last.com) << '\n';
  return {exit_for(design.report), s};
}

CommandResult cmd_compare(const RunConfig& c, std::ostream& log) {
  const auto dir = prepare_out(c);
  if (c.coupling != 0.0) {
    return rejected(c, Mode::Compare, dir,
                    "oracle undefined for g≠0: the exact solution exists only for gN = 0", log);
  }
  Design design = make_design(c);

  struct Resolution {
    double dt = 0.0;
    double max_infidelity = 0.0;
    double max_error = 0.0;
    std::vector<std::array<double, 3>> rows;  // t, infidelity, error
  };
  std::vector<Resolution> runs(2);
  runs[0].dt = c.dt;
  runs[1].dt = 0.5 * c.dt;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    auto& run = runs[r];
    const GridPtr grid = make_grid(c, run.dt);
    const std::size_t n = grid->n_steps();
    const AuxiliaryTrace trace = integrate_auxiliary(design.schedule, c.scales, n + 1);
    std::vector<std::size_t> checkpoints;
    for (std::size_t k = 1; k <= 10; ++k) checkpoints.push_back(static_cast<std::size_t>(std::llround(k * n / 10.0)));

    const Observer observer = [&](std::size_t step, double, const SpinorField& field) {
      const bool checkpoint = std::find(checkpoints.begin(), checkpoints.end(), step) != checkpoints.end();
      const bool sample = r == 0 && (step % c.sample_every == 0 || step == n);
      if (!checkpoint && !sample) return;
      const SpinorField exact = exact_state(trace, trace.times[step], 0, Spinor::sigma_x(+1), grid);
      const double infidelity = stasoc::infidelity(field, exact);
      const double error = distance(field, exact);
      if (sample) run.rows.push_back({trace.times[step], infidelity, error});
      if (checkpoint) {
        run.max_infidelity = std::max(run.max_infidelity, infidelity);
        run.max_error = std::max(run.max_error, error);
      }
    };
    SplitOperatorPropagator propagator(grid, c.scales, {0.0, 1, c.midpoint_controls});
    propagator.evolve(initial_state(grid, c.scales), design.schedule, observer);
  }

  CsvWriter csv(dir / "compare.csv", {"t", "infidelity", "error_norm"});
  double max_sample_infidelity = 0.0;
  for (const auto& row : runs[0].rows) {
    csv.row(row);
    max_sample_infidelity = std::max(max_sample_infidelity, row[1]);
  }

  json s = base_summary(c, Mode::Compare);
  s["warnings"] = warnings_json(design.report);
  s["max_infidelity"] = runs[0].max_infidelity;
  s["max_infidelity_all_samples"] = max_sample_infidelity;
  s["max_error_norm"] = runs[0].max_error;
  s["max_infidelity_half_dt"] = runs[1].max_infidelity;
  s["max_error_norm_half_dt"] = runs[1].max_error;
  s["convergence_order"] = std::log2(runs[0].max_error / runs[1].max_error);
  s["infidelity_ratio"] = runs[0].max_infidelity / runs[1].max_infidelity;
  s["status"] = design.report.ok() ? "ok" : "warnings";
  write_summary(dir, s);
  log << "max infidelity = " << format_number(runs[0].max_infidelity)
      << ", order = " << format_number(s["convergence_order"].get<double>()) << '\n';
  return {exit_for(design.report), s};
}

CommandResult cmd_sweep(const RunConfig& c, std::ostream& log) {
  const auto dir = prepare_out(c);
  if (c.protocol != ProtocolKind::Sta) {
    return rejected(c, Mode::Sweep, dir, "sweep requires the sta protocol", log);
  }
  Design design = make_design(c);
  const GridPtr grid = make_grid(c, c.dt);
  const SpinorField initial = initial_state(grid, c.scales);
  const SpinorField target = make_target(c.distance, -1, grid, c.scales);
  const std::vector<double> couplings =
      c.sweep_couplings.empty() ? std::vector<double>{c.coupling} : c.sweep_couplings;

  struct Outcome {
    double fidelity = std::numeric_limits<double>::quiet_NaN();
    std::string error;
  };
  std::vector<Outcome> outcomes(couplings.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < couplings.size();) {
      try {
        SplitOperatorPropagator propagator(grid, c.scales, {couplings[i], 1, c.midpoint_controls});
        outcomes[i].fidelity = fidelity(propagator.evolve(initial, design.schedule), target);
      } catch (const std::exception& e) {
        outcomes[i].error = e.what();
      }
    }
  };
  std::size_t workers = c.sequential ? 1 : (c.threads ? c.threads : std::thread::hardware_concurrency());
  workers = std::clamp<std::size_t>(workers, 1, couplings.size());
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  CsvWriter csv(dir / "sweep.csv", {"gN", "fidelity", "ok"});
  json rows = json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < couplings.size(); ++i) {
    const bool ok = outcomes[i].error.empty();
    all_ok = all_ok && ok;
    csv.row({couplings[i], outcomes[i].fidelity, ok ? 1.0 : 0.0});
    json row = {{"gN", couplings[i]}, {"ok", ok}};
    row["fidelity"] = ok ? json(outcomes[i].fidelity) : json(nullptr);
    if (!ok) {
      row["error"] = outcomes[i].error;
      log << "run gN = " << couplings[i] << " failed: " << outcomes[i].error << '\n';
    }
    rows.push_back(row);
  }

  json s = base_summary(c, Mode::Sweep);
  s["warnings"] = warnings_json(design.report);
  s["runs"] = rows;
  s["workers"] = workers;
  s["status"] = all_ok ? (design.report.ok() ? "ok" : "warnings") : "failed";
  write_summary(dir, s);
  return {all_ok ? exit_for(design.report) : kExitFailed, s};
}

CommandResult run_mode(Mode mode, const RunConfig& cfg, std::ostream& log) {
  RunConfig c = cfg;
  c.mode = mode;
  c.validate();
  try {
    switch (mode) {
      case Mode::Design: return cmd_design(c, log);
      case Mode::Simulate: return cmd_simulate(c, log);
      case Mode::Compare: return cmd_compare(c, log);
      case Mode::Sweep: return cmd_sweep(c, log);
    }
  } catch (const DesignRejected& e) {
    return rejected(c, mode, prepare_out(c), e.what(), log);
  }
  throw std::logic_error("unhandled mode");
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Shortcut-to-adiabaticity transport and spin flip of a spin-orbit-coupled BEC"};
  app.require_subcommand(1);

  struct Flags {
    std::string config;
    std::string out;
    bool sequential = false;
    std::optional<double> dt;
    std::optional<std::size_t> grid_points;
  } flags;

  const std::vector<std::pair<Mode, std::string>> modes = {
      {Mode::Design, "write controls.csv and the protocol summary"},
      {Mode::Simulate, "propagate the spinor and record observables"},
      {Mode::Compare, "compare the split-operator field with the exact state"},
      {Mode::Sweep, "fidelity versus the nonlinear coupling gN"}};
  std::vector<std::pair<Mode, CLI::App*>> subs;
  for (const auto& [mode, help] : modes) {
    auto* sub = app.add_subcommand(to_string(mode), help);
    sub->add_option("--config", flags.config, "key = value experiment file")->check(CLI::ExistingFile);
    sub->add_option("--out", flags.out, "output directory");
    sub->add_flag("--sequential", flags.sequential, "run sweeps on a single thread");
    sub->add_option("--dt", flags.dt, "time step override");
    sub->add_option("--grid-points", flags.grid_points, "grid size override (power of two)");
    subs.emplace_back(mode, sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  Mode mode = Mode::Design;
  for (const auto& [m, sub] : subs) {
    if (sub->parsed()) mode = m;
  }

  try {
    RunConfig cfg = flags.config.empty() ? RunConfig{} : load_config(flags.config);
    if (cfg.mode && *cfg.mode != mode) {
      throw ConfigError("config declares mode '" + to_string(*cfg.mode) +
                        "' but the command is '" + to_string(mode) + "'");
    }
    if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') cfg.out_dir = env;
    if (!flags.out.empty()) cfg.out_dir = flags.out;
    if (flags.sequential) cfg.sequential = true;
    if (flags.dt) cfg.dt = *flags.dt;
    if (flags.grid_points) cfg.grid_points = *flags.grid_points;
    const CommandResult result = run_mode(mode, cfg, std::cerr);
    std::cout << result.summary.value("status", "unknown") << '\n';
    return result.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "run failed: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace stasoc::cli
