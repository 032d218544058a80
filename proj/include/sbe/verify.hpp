#ifndef SBE_VERIFY_HPP
#define SBE_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sbe {

enum class VerifyLevel { Quick, Full };

struct VerifyReport {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;
};

// Runs the randomized invariant suites over seeded inputs and writes one
// line per check to `log`. Deterministic: the same level always exercises
// the same inputs.
VerifyReport run_verification(VerifyLevel level, std::ostream& log);

} // namespace sbe

#endif
