#ifndef GLL_QUADRATURE_HPP
#define GLL_QUADRATURE_HPP

#include <cstddef>
#include <vector>

#include "gll/grid.hpp"
#include "gll/rearrangement.hpp"

namespace gll {

/// Quadrature outcome.  For integral forms, `value` includes the
/// extrapolated tail below t_min and `converged` reports the tail test:
/// the last-octave increment must not exceed kTailRelTol of the accumulated
/// integral, and the per-octave contributions must be decaying.  A failed
/// test means the grid cannot certify the integral; callers treat the norm
/// as +inf.  For sup forms `value` is the grid max (always usable) and
/// tail_rel records relative last-octave growth of the octave maxima.
struct QuadResult {
    double value = 0.0;
    double tail_rel = 0.0;
    bool converged = true;
    std::size_t argmax_cell = 0;
};

inline constexpr double kTailRelTol = 1e-6;
inline constexpr double kGeomRhoMax = 0.93;    // octave ratio cap for tail trust
inline constexpr double kGeomDriftTol = 5e-3;  // relative spread of trusted ratios

/// Running octave accumulator: total plus a window of the five most recent
/// octave sums (index 4 = deepest).
struct OctaveTail {
    double total = 0.0;
    double last[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
    int count = 0;
    bool finite = true;

    void push(double oct) {
        for (int i = 0; i < 4; ++i) last[i] = last[i + 1];
        last[4] = oct;
        total += oct;
        ++count;
    }
};

/// Tail decision for an octave-accumulated integral.  The tail below the
/// grid floor is trusted in two cases: the last octave is negligible
/// (kTailRelTol of the total), or the last four octave ratios form a clean
/// geometric decay (each below kGeomRhoMax, mutual spread within
/// kGeomDriftTol) so the geometric extrapolation is reliable.  Otherwise
/// the integral cannot be certified.
struct TailAssessment {
    bool converged = false;
    double tail = 0.0;      // geometric extrapolation below the grid floor
    double tail_rel = 0.0;  // last-octave sum relative to the total
};

TailAssessment assess_octave_tail(const OctaveTail& acc);

/// Apply the tail policy to octave-accumulated sums of g^q h and return
/// (total + tail)^{1/q}; non-converged results carry value = +inf.
QuadResult finalize_log_integral(const OctaveTail& acc, double q);

/// (integral_0^1 g(t)^q dt/t)^{1/q} by the midpoint rule in u = -ln t,
/// with geometric-decay tail extrapolation below t_min.
/// `integrand` holds g at the grid cell representatives.
QuadResult log_cell_integral(const GeometricGrid& grid,
                             const std::vector<double>& integrand, double q);

/// sup over grid cells of g(t).
QuadResult log_cell_sup(const GeometricGrid& grid, const std::vector<double>& integrand);

/// integral_0^1 g(t) dt (plain Lebesgue measure) over the geometric grid,
/// with the same deep-end tail policy.
QuadResult plain_cell_integral(const GeometricGrid& grid,
                               const std::vector<double>& integrand);

enum class LogWeight { None, AbsLog, OneMinusLog };

/// Weighted Lorentz-type functional: t^a * w(t) * f*(t) with
/// w(t) = |ln t|^{-log_theta} (AbsLog) or (1 - ln t)^{-log_theta}
/// (OneMinusLog), integrated or sup'd with outer exponent q.
struct WeightedFunctional {
    const Rearrangement* f = nullptr;
    double exponent_a = 0.0;
    double log_theta = 0.0;
    LogWeight weight = LogWeight::None;
    double outer_q = 1.0;  // ignored by weighted_lorentz_sup
};

std::vector<double> weighted_integrand(const WeightedFunctional& wf);

QuadResult weighted_lorentz_integral(const WeightedFunctional& wf);
QuadResult weighted_lorentz_sup(const WeightedFunctional& wf);

/// Hardy-Littlewood pairing integral_0^1 f*(t) g*(t) dt.
QuadResult pairing_integral(const Rearrangement& f, const Rearrangement& g);

}  // namespace gll

#endif
