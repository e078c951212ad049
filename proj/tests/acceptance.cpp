#include <cstdio>
#include <cstdlib>

#include "spfkit/suite.hpp"

int main(int argc, char** argv)
{
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 42;
    int failures = 0;
    for (int id = 1; id <= spfkit::acceptance_count; ++id)
    {
        spfkit::AcceptanceResult r = spfkit::run_acceptance(id, seed);
        std::printf("%s %d %s: %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        failures += r.passed ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", spfkit::acceptance_count - failures, spfkit::acceptance_count);
    return failures == 0 ? 0 : 1;
}
