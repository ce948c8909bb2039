#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oloid::verify {

struct Check {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed() const { return max_residual <= tolerance; }
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0.0;
    bool passed() const;
};

struct Options {
    // Replaces every per-check tolerance when set.
    std::optional<double> tolerance;
    // 0 keeps the fixed sample grids; other values jitter them reproducibly.
    std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view name, const Options& options = {});
std::vector<SuiteReport> run_all(const Options& options = {});

std::string format_report(const std::vector<SuiteReport>& reports);

}  // namespace oloid::verify
