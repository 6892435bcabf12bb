#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace radii_atlas {

enum class VerifyLevel { Smoke, Full };

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::Full;
    std::uint64_t seed = 20240601;
    int jobs = 0;
};

// Runs criteria 1 to 11 in order, printing one PASS/FAIL line per criterion to out as it finishes.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options, std::ostream& out);

VerifyLevel parse_verify_level(const std::string& text);

}  // namespace radii_atlas
