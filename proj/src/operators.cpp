#include "gll/operators.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

#include "gll/norms.hpp"
#include "gll/rearrangement.hpp"

namespace gll {

namespace {

constexpr std::size_t kDirectConvolutionLimit = std::size_t{1} << 13;

// FFTW plan creation and destruction are not thread-safe.
std::mutex fftw_plan_mutex;

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

// Full linear convolution s[k] = sum_i a[i] b[k-i], length 2n-1.
std::vector<double> linear_convolution_direct(const std::vector<double>& a,
                                              const std::vector<double>& b) {
    const std::size_t n = a.size();
    std::vector<double> s(2 * n - 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double ai = a[i];
        if (ai == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) s[i + j] += ai * b[j];
    }
    return s;
}

// Same via zero-padded length-2n real FFT; 2n >= 2n-1 avoids wraparound.
std::vector<double> linear_convolution_fft(const std::vector<double>& a,
                                           const std::vector<double>& b) {
    const std::size_t n = a.size();
    const std::size_t big = 2 * n;
    const std::size_t nc = big / 2 + 1;
    std::vector<double> pa(big, 0.0), pb(big, 0.0), inv(big, 0.0);
    std::copy(a.begin(), a.end(), pa.begin());
    std::copy(b.begin(), b.end(), pb.begin());
    std::vector<fftw_complex> fa(nc), fb(nc);

    fftw_plan plan_a, plan_b, plan_inv;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        plan_a = fftw_plan_dft_r2c_1d(static_cast<int>(big), pa.data(), fa.data(),
                                      FFTW_ESTIMATE);
        plan_b = fftw_plan_dft_r2c_1d(static_cast<int>(big), pb.data(), fb.data(),
                                      FFTW_ESTIMATE);
        plan_inv = fftw_plan_dft_c2r_1d(static_cast<int>(big), fa.data(), inv.data(),
                                        FFTW_ESTIMATE);
    }
    fftw_execute(plan_a);
    fftw_execute(plan_b);
    for (std::size_t j = 0; j < nc; ++j) {
        const double re = fa[j][0] * fb[j][0] - fa[j][1] * fb[j][1];
        const double im = fa[j][0] * fb[j][1] + fa[j][1] * fb[j][0];
        fa[j][0] = re;
        fa[j][1] = im;
    }
    fftw_execute(plan_inv);
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fftw_destroy_plan(plan_a);
        fftw_destroy_plan(plan_b);
        fftw_destroy_plan(plan_inv);
    }

    std::vector<double> s(2 * n - 1);
    const double scale = 1.0 / static_cast<double>(big);
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = inv[k] * scale;
    return s;
}

}  // namespace

StepFunction step_from_uniform_cells(const std::vector<double>& vals,
                                     const UniformGrid& grid) {
    if (vals.size() != grid.n_cells())
        throw InvalidSpec("step_from_uniform_cells: cell count does not match the grid");
    std::vector<double> bp(grid.n_cells() + 1);
    for (std::size_t j = 0; j <= grid.n_cells(); ++j)
        bp[j] = static_cast<double>(j) * grid.h();
    bp.back() = 1.0;
    return StepFunction(std::move(bp), vals);
}

UniformGrid::UniformGrid(std::size_t n_cells) : n_(n_cells), h_(0.0) {
    if (!is_power_of_two(n_cells))
        throw InvalidSpec("UniformGrid: n_cells must be a power of two >= 2");
    h_ = 1.0 / static_cast<double>(n_);
}

void validate(const KernelSpec& k) {
    if (!(k.alpha > 0.0 && k.alpha < 1.0))
        throw InvalidSpec("KernelSpec: alpha must lie in (0,1)");
    if (!(k.theta >= 0.0)) throw InvalidSpec("KernelSpec: theta must be >= 0");
}

std::vector<double> ConvolutionResult::unit_part() const {
    return std::vector<double>(values.begin(),
                               values.begin() + static_cast<std::ptrdiff_t>(n_cells));
}

double ConvolutionResult::mass() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s * h;
}

ConvolutionResult convolve(const StepFunction& f, const StepFunction& g,
                           const UniformGrid& grid) {
    const std::size_t n = grid.n_cells();
    const std::vector<double> a = f.resample_uniform(n);
    const std::vector<double> b = g.resample_uniform(n);

    const std::vector<double> s = n <= kDirectConvolutionLimit
                                      ? linear_convolution_direct(a, b)
                                      : linear_convolution_fft(a, b);

    // Center value c[m] averages the trapezoid of the lattice convolution:
    // h * (s[m] + s[m-1]) / 2 reproduces piecewise-linear conv of steps
    // exactly at the centers (m+1/2)h.
    ConvolutionResult out;
    out.n_cells = n;
    out.h = grid.h();
    out.values.resize(2 * n);
    for (std::size_t m = 0; m < 2 * n; ++m) {
        const double sm = m < s.size() ? s[m] : 0.0;
        const double sm1 = (m >= 1 && m - 1 < s.size()) ? s[m - 1] : 0.0;
        out.values[m] = grid.h() * 0.5 * (sm + sm1);
    }
    return out;
}

double riesz_point(const std::vector<double>& cell_values, const UniformGrid& grid,
                   const KernelSpec& k, double y, long* log_singular) {
    validate(k);
    if (cell_values.size() != grid.n_cells())
        throw InvalidSpec("riesz_point: cell count does not match the grid");
    if (!(y >= 0.0 && y <= 1.0)) throw InvalidSpec("riesz_point: query outside [0,1]");

    const std::size_t n = grid.n_cells();
    const double h = grid.h();
    const double alpha = k.alpha;
    // Representative factor for an interval [0, r]: the point whose log is
    // the r^{alpha-1} dx weighted mean of ln x over the interval.
    const double zero_rep = std::exp(-1.0 / alpha);

    std::vector<double> d(n + 1), pw(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        d[j] = std::abs(y - static_cast<double>(j) * h);
        pw[j] = std::pow(d[j], alpha);
    }

    auto log_factor = [&](double rep) -> double {
        if (k.theta == 0.0) return 1.0;
        const double al = std::abs(std::log(rep));
        if (al == 0.0) {
            if (log_singular) ++*log_singular;
            return 0.0;
        }
        return std::pow(al, k.theta);
    };
    // Radial interval between boundary indices jn (near y) and jf (far).
    auto interval = [&](std::size_t jn, std::size_t jf) -> double {
        const double width_pw = (pw[jf] - pw[jn]) / alpha;
        if (width_pw <= 0.0) return 0.0;
        const double rep = d[jn] > 0.0 ? std::sqrt(d[jn] * d[jf]) : d[jf] * zero_rep;
        return width_pw * log_factor(rep);
    };

    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (cell_values[i] == 0.0) continue;
        const double lo = static_cast<double>(i) * h;
        const double hi = lo + h;
        double w;
        if (hi <= y) {
            w = interval(i + 1, i);
        } else if (lo >= y) {
            w = interval(i, i + 1);
        } else {
            // y interior to the cell: both halves touch r = 0
            w = 0.0;
            if (d[i] > 0.0) w += (pw[i] / alpha) * log_factor(d[i] * zero_rep);
            if (d[i + 1] > 0.0) w += (pw[i + 1] / alpha) * log_factor(d[i + 1] * zero_rep);
        }
        acc += cell_values[i] * w;
    }
    return acc;
}

RieszResult riesz_apply(const StepFunction& f, const KernelSpec& k,
                        const UniformGrid& grid) {
    validate(k);
    const std::vector<double> cells = f.resample_uniform(grid.n_cells());
    RieszResult out;
    out.values.resize(grid.n_cells());
    for (std::size_t m = 0; m < grid.n_cells(); ++m)
        out.values[m] =
            riesz_point(cells, grid, k, grid.center(m), &out.log_singular_cells);
    return out;
}

InequalityReport boundedness_ratio(OperatorTag op, const KernelSpec& k,
                                   const SpaceSpec& source, const SpaceSpec& target,
                                   const std::vector<StepFunction>& corpus,
                                   const UniformGrid& grid, const GeometricGrid& ggrid) {
    validate(source);
    validate(target);
    if (op == OperatorTag::Riesz) validate(k);

    InequalityReport rep;
    rep.name = op == OperatorTag::Riesz ? "riesz_boundedness" : "identity_boundedness";
    rep.grid_descriptor = ggrid.descriptor() + "/n" + std::to_string(grid.n_cells());

    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
        const Rearrangement fr = decreasing_rearrangement(corpus[idx], ggrid);
        const double src = compute_norm(fr, source).value;
        if (!(src > 0.0) || !std::isfinite(src)) {
            ++rep.skipped;
            continue;
        }
        double tgt;
        if (op == OperatorTag::Identity) {
            tgt = compute_norm(fr, target).value;
        } else {
            const RieszResult image = riesz_apply(corpus[idx], k, grid);
            const StepFunction tf = step_from_uniform_cells(image.values, grid);
            tgt = compute_norm(decreasing_rearrangement(tf, ggrid), target).value;
        }
        RatioSample rs;
        rs.id = "sample_" + std::to_string(idx);
        rs.lhs = tgt;
        rs.rhs = src;
        rs.ratio = tgt / src;
        rep.ratios.push_back(rs);
        if (rs.ratio > rep.max_ratio) {
            rep.max_ratio = rs.ratio;
            rep.argmax_id = rs.id;
        }
    }
    if (rep.ratios.empty())
        throw EmptyEffectiveCorpus("boundedness_ratio: every sample was skipped");
    return rep;
}

}  // namespace gll
