#include "gll/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace gll {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_finite(const std::vector<double>& samples, const char* what) {
    for (double v : samples)
        if (!std::isfinite(v))
            throw NonFiniteSample(std::string(what) + ": non-finite sample");
}

double eval_power_log(const PowerLog& pl, double t) {
    double v = 1.0;
    if (pl.p != kInf) v = std::pow(t, -1.0 / pl.p);
    if (pl.beta != 0.0) v *= std::pow(-std::log(t), pl.beta);
    return v;
}

}  // namespace

std::string describe(const Descriptor& d) {
    char buf[80];
    if (auto* pl = std::get_if<PowerLog>(&d)) {
        std::snprintf(buf, sizeof buf, "powerlog:p=%g,beta=%g", pl->p, pl->beta);
        return buf;
    }
    if (auto* ind = std::get_if<IndicatorDesc>(&d)) {
        std::snprintf(buf, sizeof buf, "indicator:s=%g", ind->s);
        return buf;
    }
    if (auto* c = std::get_if<ConstantDesc>(&d)) {
        std::snprintf(buf, sizeof buf, "constant:c=%g", c->c);
        return buf;
    }
    return "numeric";
}

Rearrangement::Rearrangement(GeometricGrid grid, std::vector<double> samples, Descriptor d)
    : grid_(grid), samples_(std::move(samples)), desc_(std::move(d)) {
    if (samples_.size() != grid_.size())
        throw std::invalid_argument("Rearrangement: sample count must match grid size");
    check_finite(samples_, "Rearrangement");
    for (double v : samples_)
        if (v < 0.0) throw std::invalid_argument("Rearrangement: samples must be >= 0");
    // samples run from t near 1 down to t near 0, so they may only grow
    for (std::size_t k = 0; k + 1 < samples_.size(); ++k)
        if (samples_[k] > samples_[k + 1] * (1.0 + 1e-12))
            throw std::invalid_argument(
                "Rearrangement: samples must be non-increasing in t");
}

Rearrangement Rearrangement::from_raw_samples(GeometricGrid grid,
                                              std::vector<double> samples, Descriptor d) {
    if (samples.size() != grid.size())
        throw std::invalid_argument("Rearrangement: sample count must match grid size");
    check_finite(samples, "Rearrangement");
    Rearrangement r;
    r.grid_ = grid;
    r.samples_ = std::move(samples);
    r.desc_ = std::move(d);
    return r;
}

bool Rearrangement::is_zero() const {
    for (double v : samples_)
        if (v != 0.0) return false;
    return true;
}

Rearrangement Rearrangement::scaled(double c) const {
    if (!(c >= 0.0) || !std::isfinite(c))
        throw std::invalid_argument("Rearrangement::scaled: factor must be finite, >= 0");
    std::vector<double> s(samples_);
    for (double& v : s) v *= c;
    return from_raw_samples(grid_, std::move(s), desc_);
}

Rearrangement Rearrangement::pointwise_product(const Rearrangement& other) const {
    if (!(grid_ == other.grid_))
        throw std::invalid_argument("pointwise_product: grids must match");
    std::vector<double> s(samples_.size());
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = samples_[k] * other.samples_[k];
    return from_raw_samples(grid_, std::move(s), NumericDesc{});
}

void Rearrangement::write_csv(std::ostream& os) const {
    os << "t,fstar\n";
    char buf[80];
    for (std::size_t k = 0; k < samples_.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", grid_.rep(k), samples_[k]);
        os << buf;
    }
}

Rearrangement Rearrangement::read_csv(std::istream& is, const GeometricGrid& grid) {
    std::string line;
    std::vector<double> samples;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (header) { header = false; continue; }
        auto comma = line.find(',');
        samples.push_back(std::stod(line.substr(comma + 1)));
    }
    return from_raw_samples(grid, std::move(samples), NumericDesc{});
}

Rearrangement rearrange_weighted_profile(std::vector<std::pair<double, double>> cells,
                                         const GeometricGrid& grid, Descriptor d) {
    std::stable_sort(cells.begin(), cells.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    // cumulative measure boundaries of the sorted step
    std::vector<double> cum(cells.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        acc += cells[i].second;
        cum[i] = acc;
    }
    std::vector<double> samples(grid.size(), 0.0);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double t = grid.rep(k);
        // first sorted cell whose cumulative measure exceeds t
        auto it = std::upper_bound(cum.begin(), cum.end(), t);
        if (it == cum.end())
            samples[k] = 0.0;  // beyond total measure: function vanishes
        else
            samples[k] = cells[static_cast<std::size_t>(it - cum.begin())].first;
    }
    return Rearrangement::from_raw_samples(grid, std::move(samples), std::move(d));
}

Rearrangement decreasing_rearrangement(const StepFunction& f, const GeometricGrid& grid) {
    std::vector<std::pair<double, double>> cells;
    cells.reserve(f.pieces());
    const auto& bp = f.breakpoints();
    for (std::size_t i = 0; i < f.pieces(); ++i)
        cells.emplace_back(f.values()[i], bp[i + 1] - bp[i]);
    return rearrange_weighted_profile(std::move(cells), grid, NumericDesc{});
}

Rearrangement analytic_rearrangement(const Descriptor& d, const GeometricGrid& grid) {
    if (auto* c = std::get_if<ConstantDesc>(&d)) {
        if (!(c->c >= 0.0) || !std::isfinite(c->c))
            throw std::invalid_argument("analytic_rearrangement: constant must be >= 0");
        return Rearrangement(grid, std::vector<double>(grid.size(), c->c), d);
    }
    if (auto* ind = std::get_if<IndicatorDesc>(&d)) {
        if (!(ind->s > 0.0 && ind->s <= 1.0))
            throw std::invalid_argument("analytic_rearrangement: indicator s in (0,1]");
        std::vector<double> s(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k)
            s[k] = grid.rep(k) < ind->s ? 1.0 : 0.0;
        return Rearrangement(grid, std::move(s), d);
    }
    auto* pl = std::get_if<PowerLog>(&d);
    if (!pl) throw std::invalid_argument("analytic_rearrangement: numeric descriptor");
    if (!(pl->p > 0.0))
        throw std::invalid_argument("analytic_rearrangement: p must be > 0");

    if (pl->beta >= 0.0) {
        // product of non-increasing factors: sample directly
        std::vector<double> s(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k) s[k] = eval_power_log(*pl, grid.rep(k));
        check_finite(s, "analytic_rearrangement");
        return Rearrangement(grid, std::move(s), d);
    }

    // beta < 0 blows up near t = 1: rearrange a 16x-dense sampling by measure
    GeometricGrid fine(grid.octaves(), 16 * grid.subdivisions());
    std::vector<std::pair<double, double>> cells(fine.size());
    for (std::size_t k = 0; k < fine.size(); ++k) {
        const double v = eval_power_log(*pl, fine.rep(k));
        if (!std::isfinite(v)) throw NonFiniteSample("analytic_rearrangement");
        cells[k] = {v, fine.dt(k)};
    }
    return rearrange_weighted_profile(std::move(cells), grid, d);
}

Rearrangement riesz_kernel_rearrangement(double alpha, double theta,
                                         const GeometricGrid& grid) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("riesz_kernel_rearrangement: alpha in (0,1)");
    if (!(theta >= 0.0))
        throw std::invalid_argument("riesz_kernel_rearrangement: theta >= 0");
    GeometricGrid fine(grid.octaves(), 16 * grid.subdivisions());
    std::vector<std::pair<double, double>> cells(fine.size());
    for (std::size_t k = 0; k < fine.size(); ++k) {
        const double x = fine.rep(k);
        double v = std::pow(x, alpha - 1.0);
        if (theta != 0.0) v *= std::pow(-std::log(x), theta);
        if (!std::isfinite(v)) throw NonFiniteSample("riesz_kernel_rearrangement");
        cells[k] = {v, fine.dt(k)};
    }
    return rearrange_weighted_profile(std::move(cells), grid, NumericDesc{});
}

}  // namespace gll
