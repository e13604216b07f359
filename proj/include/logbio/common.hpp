#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace logbio {

/// Raised for data/configuration errors (bad input files, contract
/// violations). I/O failures use std::runtime_error as well; callers
/// that care about exit codes catch at the CLI boundary.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Decimal thresholds like 0.85 are not exactly representable; all
// ratio-vs-threshold comparisons get this much slack on the >= side.
inline constexpr double kThresholdSlack = 1e-9;

/// num/den >= threshold, with slack. den must be > 0.
inline bool ratio_at_least(std::uint64_t num, std::uint64_t den, double threshold) {
    return static_cast<double>(num) >= (threshold - kThresholdSlack) * static_cast<double>(den);
}

/// value >= threshold * scale, with slack (Eq.-style "at least x% of" checks).
inline bool count_at_least(std::uint64_t value, double threshold, std::uint64_t scale) {
    return static_cast<double>(value) >= (threshold - kThresholdSlack) * static_cast<double>(scale);
}

/// Write content to path via a temp file + rename so readers never see
/// a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

/// Slurp a whole file; throws on I/O failure naming the path.
std::string read_file(const std::string& path);

} // namespace logbio
