#ifndef GLL_EPSILON_HPP
#define GLL_EPSILON_HPP

#include <functional>

namespace gll {

/// One objective evaluation.  usable = false marks a point the scan must
/// skip (e.g. the inner integral could not be certified at this epsilon).
struct ObjectiveValue {
    double value = 0.0;
    bool usable = true;
};

enum class OptMode { Sup, Inf };

/// Optimization of eps -> objective(eps) over (0, eps_max].
struct EpsilonProblem {
    OptMode mode = OptMode::Sup;
    double eps_max = 1.0;
    std::function<ObjectiveValue(double)> objective;
};

struct EpsilonResult {
    double value = 0.0;
    double eps_star = 0.0;
    bool any_usable = false;
    bool on_boundary = false;  // best eps == eps_max
};

/// Scan eps_j = eps_max * 2^{-j/8}, j = 0..320, keep the best usable node,
/// then (optionally) refine by golden-section search on log(eps) over the
/// bracketing interval to relative tolerance 1e-10.  The returned value is
/// never worse than any scanned value.
EpsilonResult epsilon_optimize(const EpsilonProblem& prob, bool refine = true);

}  // namespace gll

#endif
