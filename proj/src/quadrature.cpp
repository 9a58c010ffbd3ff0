#include "gll/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gll {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TailAssessment assess_octave_tail(const OctaveTail& acc) {
    TailAssessment a;
    if (!acc.finite || acc.total <= 0.0) {
        a.tail_rel = acc.finite ? 0.0 : 1.0;
        a.converged = acc.finite;  // an all-zero accumulation is exact
        return a;
    }
    const double oct_last = acc.last[4];
    const double oct_prev = acc.last[3];
    a.tail_rel = oct_last / acc.total;
    const bool decaying = oct_last == 0.0 || oct_last < oct_prev;
    if (oct_last > 0.0 && oct_last < oct_prev) {
        const double rho = oct_last / oct_prev;
        a.tail = oct_last * rho / (1.0 - rho);
    }
    if (decaying && oct_last <= kTailRelTol * acc.total) {
        a.converged = true;
        return a;
    }
    if (!decaying || acc.count < 5) return a;
    // geometric certificate: the last four octave ratios must all sit below
    // the cap and agree to within the drift tolerance
    double rmin = kInf, rmax = 0.0;
    for (int i = 0; i < 4; ++i) {
        if (!(acc.last[i] > 0.0)) return a;
        const double r = acc.last[i + 1] / acc.last[i];
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    a.converged = rmax <= kGeomRhoMax && (rmax - rmin) <= kGeomDriftTol * rmax;
    return a;
}

QuadResult finalize_log_integral(const OctaveTail& acc, double q) {
    const TailAssessment a = assess_octave_tail(acc);
    QuadResult r;
    r.tail_rel = a.tail_rel;
    r.converged = a.converged;
    if (!acc.finite || !a.converged) {
        r.value = kInf;
        return r;
    }
    if (acc.total <= 0.0) return r;
    r.value = std::pow(acc.total + a.tail, 1.0 / q);
    return r;
}

QuadResult log_cell_integral(const GeometricGrid& grid,
                             const std::vector<double>& integrand, double q) {
    if (integrand.size() != grid.size())
        throw std::invalid_argument("log_cell_integral: integrand size mismatch");
    if (!(q > 0.0) || q == kInf)
        throw std::invalid_argument("log_cell_integral: need 0 < q < inf");
    const double h = grid.u_step();
    const int M = grid.octaves();
    const int J = grid.subdivisions();

    OctaveTail acc;
    for (int m = 0; m < M; ++m) {
        double oct = 0.0;
        const std::size_t base = static_cast<std::size_t>(m) * J;
        for (int j = 0; j < J; ++j) {
            const double g = integrand[base + j];
            const double cell = std::pow(g, q) * h;
            if (!std::isfinite(cell)) acc.finite = false;
            oct += cell;
        }
        acc.push(oct);
    }
    return finalize_log_integral(acc, q);
}

QuadResult log_cell_sup(const GeometricGrid& grid, const std::vector<double>& integrand) {
    if (integrand.size() != grid.size())
        throw std::invalid_argument("log_cell_sup: integrand size mismatch");
    const int M = grid.octaves();
    const int J = grid.subdivisions();

    QuadResult r;
    double best = 0.0, oct_last = 0.0, oct_prev = 0.0;
    std::size_t arg = 0;
    for (int m = 0; m < M; ++m) {
        double oct = 0.0;
        const std::size_t base = static_cast<std::size_t>(m) * J;
        for (int j = 0; j < J; ++j) {
            const double g = integrand[base + j];
            if (g > best) {
                best = g;
                arg = base + j;
            }
            if (g > oct) oct = g;
        }
        oct_prev = oct_last;
        oct_last = oct;
    }
    r.value = best;
    r.argmax_cell = arg;
    if (best > 0.0 && oct_last > oct_prev)
        r.tail_rel = (oct_last - oct_prev) / best;
    return r;
}

QuadResult plain_cell_integral(const GeometricGrid& grid,
                               const std::vector<double>& integrand) {
    // integral g dt = integral (t g) dt/t, so reuse the log-cell engine
    std::vector<double> scaled(integrand.size());
    for (std::size_t k = 0; k < integrand.size(); ++k)
        scaled[k] = integrand[k] * grid.rep(k);
    return log_cell_integral(grid, scaled, 1.0);
}

std::vector<double> weighted_integrand(const WeightedFunctional& wf) {
    if (!wf.f) throw std::invalid_argument("WeightedFunctional: null rearrangement");
    const GeometricGrid& grid = wf.f->grid();
    const auto& s = wf.f->samples();
    std::vector<double> g(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        const double u = grid.u_mid(k);
        double v = s[k];
        if (wf.exponent_a != 0.0) v *= std::exp(-wf.exponent_a * u);
        if (wf.weight == LogWeight::AbsLog && wf.log_theta != 0.0)
            v *= std::pow(u, -wf.log_theta);
        else if (wf.weight == LogWeight::OneMinusLog && wf.log_theta != 0.0)
            v *= std::pow(1.0 + u, -wf.log_theta);
        g[k] = v;
    }
    return g;
}

QuadResult weighted_lorentz_integral(const WeightedFunctional& wf) {
    return log_cell_integral(wf.f->grid(), weighted_integrand(wf), wf.outer_q);
}

QuadResult weighted_lorentz_sup(const WeightedFunctional& wf) {
    return log_cell_sup(wf.f->grid(), weighted_integrand(wf));
}

QuadResult pairing_integral(const Rearrangement& f, const Rearrangement& g) {
    if (!(f.grid() == g.grid()))
        throw std::invalid_argument("pairing_integral: grids must match");
    std::vector<double> prod(f.samples().size());
    for (std::size_t k = 0; k < prod.size(); ++k)
        prod[k] = f.samples()[k] * g.samples()[k];
    return plain_cell_integral(f.grid(), prod);
}

}  // namespace gll
