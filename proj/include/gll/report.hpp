#ifndef GLL_REPORT_HPP
#define GLL_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace gll {

/// Every corpus sample was skipped (zero or non-finite right-hand side),
/// so no ratio can be reported.
struct EmptyEffectiveCorpus : std::runtime_error {
    explicit EmptyEffectiveCorpus(const std::string& what) : std::runtime_error(what) {}
};

/// One sample's evaluation: ratio = lhs / rhs, both sides finite and rhs > 0.
struct RatioSample {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

enum class Verdict { Pass, Fail };

/// Outcome of a ratio run (inequality suite or operator boundedness sweep)
/// over a corpus.  stability_drift is the relative change of max_ratio when
/// a sub-corpus is re-evaluated on the doubled grid; threshold is the bound
/// max_ratio was judged against (0 when the caller judges).
struct InequalityReport {
    std::string name;
    std::vector<RatioSample> ratios;
    double max_ratio = 0.0;
    std::string argmax_id;
    Verdict verdict = Verdict::Pass;
    double stability_drift = 0.0;
    long skipped = 0;
    std::string grid_descriptor;
    double threshold = 0.0;
};

}  // namespace gll

#endif
