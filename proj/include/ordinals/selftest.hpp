#ifndef ORDINALS_SELFTEST_HPP
#define ORDINALS_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ordinals::selftest {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

struct Report {
    std::vector<SuiteResult> suites;

    bool ok() const;
    std::string str() const;   // one line per suite plus a summary line
};

// Runs every property suite with generators seeded deterministically
// from `seed`; two runs with the same seed produce identical reports.
Report run_selftest(std::uint64_t seed);

} // namespace ordinals::selftest

#endif
