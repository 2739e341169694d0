#include "mslit/report_io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace mslit {

const char* const kToolVersion = "mslit 1.0.0";

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::Prepared: return "prepared";
    case Stage::AfterGrating: return "after_grating";
    default: return "imaged";
  }
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  return out;
}

}  // namespace

void write_density_csv(const std::string& path, const Wavefunction& psi,
                       const std::string& coord_column,
                       const std::string& density_column) {
  std::ofstream out = open_out(path);
  out << coord_column << ',' << density_column << '\n';
  for (int j = 0; j < psi.grid.n_points; ++j)
    out << format_double(psi.grid.coord(j)) << ','
        << format_double(std::norm(psi.values[j])) << '\n';
}

void write_summary_csv(const std::string& path,
                       const std::vector<StageReport>& reports) {
  std::ofstream out = open_out(path);
  out << "stage,probability,l2_to_input,overlap_sq,n_peaks,"
         "leakage_transmitted,leakage_total\n";
  for (const StageReport& r : reports)
    out << stage_name(r.stage) << ',' << format_double(r.probability) << ','
        << format_double(r.l2_to_input) << ',' << format_double(r.overlap_sq)
        << ',' << r.peaks.size() << ','
        << format_double(r.leakage_transmitted) << ','
        << format_double(r.leakage_total) << '\n';
}

void write_peaks_csv(const std::string& path,
                     const std::vector<StageReport>& reports) {
  std::ofstream out = open_out(path);
  out << "stage,peak_center,peak_mass\n";
  for (const StageReport& r : reports)
    for (const Peak& p : r.peaks)
      out << stage_name(r.stage) << ',' << format_double(p.center) << ','
          << format_double(p.mass) << '\n';
}

void write_sweep_csv(const std::string& path, const std::string& parameter,
                     const std::vector<SweepRow>& rows) {
  std::ofstream out = open_out(path);
  out << parameter << ",transmitted,leakage,fidelity_distance\n";
  for (const SweepRow& r : rows)
    out << format_double(r.value) << ',' << format_double(r.transmitted)
        << ',' << format_double(r.leakage) << ','
        << format_double(r.fidelity_distance) << '\n';
}

void write_manifest(const std::string& path, const std::string& config_hash,
                    const std::vector<std::string>& outputs) {
  nlohmann::json m;
  m["config_hash"] = config_hash;
  m["tool_version"] = kToolVersion;
  m["timestamp_unix"] =
      std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count();
  m["outputs"] = outputs;
  std::ofstream out = open_out(path);
  out << m.dump(2) << '\n';
}

}  // namespace mslit
