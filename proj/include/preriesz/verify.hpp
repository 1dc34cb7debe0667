#ifndef PRERIESZ_VERIFY_HPP
#define PRERIESZ_VERIFY_HPP

#include <string>
#include <vector>

#include "preriesz/report.hpp"

namespace preriesz {

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> problems;

    void fail(const std::string& what) {
        ok = false;
        problems.push_back(what);
    }
};

// Standalone re-check of every witness and certificate in a report, working
// from the report schema alone: expected systems are rebuilt from the stored
// functional matrix and compared with the embedded ones, Farkas combinations
// and claimed solutions are recomputed in rational arithmetic.  No solver,
// no decider code paths.
VerifyResult verify_report(const Json& report);

} // namespace preriesz

#endif
