#ifndef SPFKIT_SUITE_HPP
#define SPFKIT_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace spfkit
{

struct AcceptanceResult
{
    int id = 0;
    std::string title;
    bool passed = false;
    /// Measured worst-case quantities behind the verdict.
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int acceptance_count = 14;

/// Runs acceptance criterion `id` (1..14) on corpora drawn from `seed`.
/// Throws Error(precondition) for an unknown id.
AcceptanceResult run_acceptance(int id, std::uint64_t seed = 42);

/// All criteria in order.
std::vector<AcceptanceResult> run_acceptance_all(std::uint64_t seed = 42);

} // namespace spfkit

#endif
