#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mslit/pipeline.hpp"

namespace mslit {

/// Shortest round-trippable decimal representation ('.' decimal point).
std::string format_double(double v);

/// FNV-1a 64-bit digest, hex string. Used to fingerprint resolved configs.
std::string fnv1a_hex(const std::string& data);

const char* stage_name(Stage stage);

/// Density CSV: header row with unit-bearing column names, LF endings.
void write_density_csv(const std::string& path, const Wavefunction& psi,
                       const std::string& coord_column,
                       const std::string& density_column);

void write_summary_csv(const std::string& path,
                       const std::vector<StageReport>& reports);

void write_peaks_csv(const std::string& path,
                     const std::vector<StageReport>& reports);

void write_sweep_csv(const std::string& path, const std::string& parameter,
                     const std::vector<SweepRow>& rows);

/// Run manifest (JSON): config hash, tool version, timestamp, output list.
/// The manifest itself is not part of the byte-determinism contract; the
/// CSVs it lists are.
void write_manifest(const std::string& path, const std::string& config_hash,
                    const std::vector<std::string>& outputs);

extern const char* const kToolVersion;

}  // namespace mslit
