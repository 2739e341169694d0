#include "mslit/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "mslit/config.hpp"
#include "mslit/fourier.hpp"
#include "mslit/report_io.hpp"
#include "mslit/validate.hpp"

namespace mslit {

namespace {

namespace fs = std::filesystem;

int guard(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

std::string prepare_out_dir(const std::string& out_dir) {
  fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output dir: " + out_dir);
  return dir.string();
}

void check_finite(const Wavefunction& psi, const std::string& label) {
  for (const Complex& v : psi.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericalError("non-finite amplitude in " + label);
}

void check_probability(double p, const std::string& label) {
  if (!std::isfinite(p) || p < -1e-9 || p > 1.0 + 1e-9)
    throw NumericalError(label + " probability out of range: " +
                         format_double(p));
}

struct ColumnNames {
  std::string x, x_density, k, k_density;
};

ColumnNames columns(bool natural) {
  if (natural) return {"x", "abs_psi_sq", "k", "abs_psi_tilde_sq"};
  return {"x_m", "abs_psi_sq_per_m", "k_per_m", "abs_psi_tilde_sq_m"};
}

}  // namespace

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
  return guard([&] {
    LoadedConfig loaded = load_config(config_path);
    const ExperimentConfig& cfg = require_experiment(loaded);
    RunResult result = run(cfg);

    const Wavefunction* states[] = {&result.prepared, &result.after_grating,
                                    &result.imaged};
    for (size_t i = 0; i < result.reports.size(); ++i) {
      check_finite(*states[i], stage_name(result.reports[i].stage));
      check_probability(result.reports[i].probability,
                        stage_name(result.reports[i].stage));
    }

    const std::string dir = prepare_out_dir(out_dir);
    const ColumnNames col = columns(loaded.natural_units);
    std::vector<std::string> outputs;
    for (size_t i = 0; i < result.reports.size(); ++i) {
      const std::string stage = stage_name(result.reports[i].stage);
      const std::string pos = dir + "/" + stage + "_position.csv";
      write_density_csv(pos, *states[i], col.x, col.x_density);
      outputs.push_back(pos);
      const std::string mom = dir + "/" + stage + "_momentum.csv";
      write_density_csv(mom, fourier(*states[i]), col.k, col.k_density);
      outputs.push_back(mom);
    }
    const std::string summary = dir + "/summary.csv";
    write_summary_csv(summary, result.reports);
    outputs.push_back(summary);
    const std::string peaks = dir + "/peaks.csv";
    write_peaks_csv(peaks, result.reports);
    outputs.push_back(peaks);
    write_manifest(dir + "/manifest.json", fnv1a_hex(loaded.resolved_text),
                   outputs);

    const StageReport& imaged = result.reports.back();
    std::cout << "transmitted=" << format_double(result.reports[1].probability)
              << " leakage_transmitted="
              << format_double(imaged.leakage_transmitted)
              << " leakage_total=" << format_double(imaged.leakage_total)
              << '\n';
    return 0;
  });
}

int cmd_eigenstate(const std::string& config_path,
                   const std::string& out_dir) {
  return guard([&] {
    LoadedConfig loaded = load_config(config_path);
    const EnvelopeConfig& e = require_envelope(loaded);
    EnvelopeSpec spec{rect_window(e.a), cosine_momentum_window(e.Tprime, e.T),
                      e.T, e.shift};
    try {
      validate(spec);
    } catch (const std::invalid_argument& err) {
      throw ConfigError(err.what());
    }
    Grid grid = make_grid(e.extent_over_T * e.T, e.n_points);
    JointEigenstate state = comb_construct(spec, e.n_terms, grid);
    check_finite(state.psi, "eigenstate");
    Residuals r = residuals(state);

    const std::string dir = prepare_out_dir(out_dir);
    std::vector<std::string> outputs;
    const std::string amp = dir + "/eigenstate_psi.csv";
    {
      std::ofstream out(amp, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + amp);
      out << "x,re_psi,im_psi\n";
      for (int j = 0; j < grid.n_points; ++j)
        out << format_double(grid.coord(j)) << ','
            << format_double(state.psi.values[j].real()) << ','
            << format_double(state.psi.values[j].imag()) << '\n';
    }
    outputs.push_back(amp);
    const std::string pos = dir + "/eigenstate_position_density.csv";
    write_density_csv(pos, state.psi, "x", "abs_psi_sq");
    outputs.push_back(pos);
    const std::string mom = dir + "/eigenstate_momentum_density.csv";
    write_density_csv(mom, fourier(state.psi), "k", "abs_psi_tilde_sq");
    outputs.push_back(mom);
    const std::string summary = dir + "/eigenstate_summary.csv";
    {
      std::ofstream out(summary, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + summary);
      out << "residual_position,residual_momentum,raw_norm_sq,n_replicas\n"
          << format_double(r.position) << ',' << format_double(r.momentum)
          << ',' << format_double(state.raw_norm_sq) << ','
          << state.centers.size() << '\n';
    }
    outputs.push_back(summary);
    write_manifest(dir + "/manifest.json", fnv1a_hex(loaded.resolved_text),
                   outputs);

    std::cout << "residual_position=" << format_double(r.position)
              << " residual_momentum=" << format_double(r.momentum) << '\n';
    return 0;
  });
}

int cmd_validate(unsigned seed, const std::string& out_dir) {
  return guard([&] {
    std::vector<Check> checks = run_validation_suite({seed, false});
    for (const Check& c : checks)
      std::printf("%-34s %12.5e %s %.1e  %s\n", c.name.c_str(), c.value,
                  c.require_below ? "<" : ">", c.threshold,
                  c.pass ? "pass" : "FAIL");
    if (!out_dir.empty()) {
      const std::string dir = prepare_out_dir(out_dir);
      std::ofstream out(dir + "/checks.csv", std::ios::binary);
      if (!out) throw std::runtime_error("cannot write checks.csv");
      out << "check,value,threshold,relation,pass\n";
      for (const Check& c : checks)
        out << c.name << ',' << format_double(c.value) << ','
            << format_double(c.threshold) << ','
            << (c.require_below ? "below" : "above") << ','
            << (c.pass ? 1 : 0) << '\n';
    }
    return all_pass(checks) ? 0 : 1;
  });
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              const std::string& parameter,
              const std::vector<double>& values) {
  return guard([&] {
    LoadedConfig loaded = load_config(config_path);
    const ExperimentConfig& cfg = require_experiment(loaded);
    if (values.empty()) throw ConfigError("sweep needs a non-empty value list");
    std::vector<SweepRow> rows = sweep(cfg, parameter, values);
    for (const SweepRow& r : rows) {
      check_probability(r.transmitted, "sweep");
      if (!std::isfinite(r.leakage) || !std::isfinite(r.fidelity_distance))
        throw NumericalError("non-finite sweep metric");
    }
    const std::string dir = prepare_out_dir(out_dir);
    const std::string table = dir + "/sweep.csv";
    write_sweep_csv(table, parameter, rows);
    write_manifest(dir + "/manifest.json", fnv1a_hex(loaded.resolved_text),
                   {table});
    std::cout << "rows=" << rows.size() << '\n';
    return 0;
  });
}

}  // namespace mslit
