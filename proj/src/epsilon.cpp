#include "gll/epsilon.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gll {

namespace {

constexpr int kScanSteps = 320;      // eps spans eps_max * 2^{-40} .. eps_max
constexpr double kRelTol = 1e-10;
constexpr double kInvPhi = 0.6180339887498949;  // 1/phi

// Signed objective: maximize in both modes.
double signed_value(const EpsilonProblem& prob, double eps) {
    ObjectiveValue v = prob.objective(eps);
    if (!v.usable) return -std::numeric_limits<double>::infinity();
    return prob.mode == OptMode::Sup ? v.value : -v.value;
}

}  // namespace

EpsilonResult epsilon_optimize(const EpsilonProblem& prob, bool refine) {
    if (!(prob.eps_max > 0.0))
        throw std::invalid_argument("epsilon_optimize: eps_max must be > 0");
    if (!prob.objective)
        throw std::invalid_argument("epsilon_optimize: missing objective");

    const double lmax = std::log(prob.eps_max);
    const double lstep = std::log(2.0) / 8.0;

    double best = -std::numeric_limits<double>::infinity();
    int best_j = -1;
    for (int j = 0; j <= kScanSteps; ++j) {
        const double v = signed_value(prob, std::exp(lmax - j * lstep));
        if (v > best) {
            best = v;
            best_j = j;
        }
    }

    EpsilonResult res;
    if (best_j < 0) return res;  // nothing usable anywhere
    res.any_usable = true;
    double best_l = lmax - best_j * lstep;

    if (refine) {
        // golden-section on log(eps) between the neighbors of the best node
        double a = lmax - std::min(best_j + 1, kScanSteps) * lstep;
        double b = lmax - std::max(best_j - 1, 0) * lstep;
        double x1 = b - kInvPhi * (b - a);
        double x2 = a + kInvPhi * (b - a);
        double f1 = signed_value(prob, std::exp(x1));
        double f2 = signed_value(prob, std::exp(x2));
        // log-scale width tolerance == relative tolerance on eps
        while (b - a > kRelTol) {
            if (f1 < f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + kInvPhi * (b - a);
                f2 = signed_value(prob, std::exp(x2));
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - kInvPhi * (b - a);
                f1 = signed_value(prob, std::exp(x1));
            }
        }
        const double lm = 0.5 * (a + b);
        const double fm = signed_value(prob, std::exp(lm));
        if (fm > best) {
            best = fm;
            best_l = lm;
        }
        if (f1 > best) {
            best = f1;
            best_l = x1;
        }
        if (f2 > best) {
            best = f2;
            best_l = x2;
        }
    }

    res.eps_star = std::exp(best_l);
    res.value = prob.mode == OptMode::Sup ? best : -best;
    res.on_boundary = best_j == 0 && res.eps_star >= prob.eps_max * (1.0 - 1e-9);
    if (res.eps_star > prob.eps_max) res.eps_star = prob.eps_max;
    return res;
}

}  // namespace gll
