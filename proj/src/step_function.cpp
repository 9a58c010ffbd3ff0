#include "gll/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gll {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
    if (breaks_.size() != values_.size() + 1 || values_.empty())
        throw std::invalid_argument("StepFunction: need k+1 breakpoints for k values");
    if (breaks_.front() != 0.0 || breaks_.back() != 1.0)
        throw std::invalid_argument("StepFunction: domain must be [0,1]");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw std::invalid_argument("StepFunction: breakpoints must increase strictly");
    for (double v : values_)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("StepFunction: values must be finite and >= 0");
}

StepFunction StepFunction::constant(double c) {
    return StepFunction({0.0, 1.0}, {c});
}

StepFunction StepFunction::indicator(double s, double c) {
    if (!(s > 0.0 && s < 1.0))
        throw std::invalid_argument("StepFunction::indicator: s must lie in (0,1)");
    return StepFunction({0.0, s, 1.0}, {c, 0.0});
}

double StepFunction::value_at(double x) const {
    if (x < 0.0 || x >= 1.0) return 0.0;
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    auto idx = static_cast<std::size_t>(it - breaks_.begin());
    return values_[idx - 1];
}

double StepFunction::measure_above(double lambda) const {
    double m = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] > lambda) m += breaks_[i + 1] - breaks_[i];
    return m;
}

double StepFunction::lp_norm(double p) const {
    if (p == std::numeric_limits<double>::infinity()) {
        double m = 0.0;
        for (double v : values_) m = std::max(m, v);
        return m;
    }
    if (!(p > 0.0)) throw std::invalid_argument("StepFunction::lp_norm: p must be > 0");
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        s += std::pow(values_[i], p) * (breaks_[i + 1] - breaks_[i]);
    return std::pow(s, 1.0 / p);
}

double StepFunction::integral() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        s += values_[i] * (breaks_[i + 1] - breaks_[i]);
    return s;
}

std::vector<double> StepFunction::resample_uniform(std::size_t n) const {
    if (n == 0) throw std::invalid_argument("resample_uniform: n must be > 0");
    std::vector<double> out(n, 0.0);
    const double h = 1.0 / static_cast<double>(n);
    std::size_t piece = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = i * h, hi = (i + 1) * h;
        while (piece + 1 < values_.size() && breaks_[piece + 1] <= lo) ++piece;
        double acc = 0.0;
        for (std::size_t j = piece; j < values_.size() && breaks_[j] < hi; ++j) {
            const double a = std::max(lo, breaks_[j]);
            const double b = std::min(hi, breaks_[j + 1]);
            if (b > a) acc += values_[j] * (b - a);
        }
        out[i] = acc / h;
    }
    return out;
}

StepFunction StepFunction::rearranged() const {
    std::vector<std::pair<double, double>> cells;  // (value, length)
    cells.reserve(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        cells.emplace_back(values_[i], breaks_[i + 1] - breaks_[i]);
    std::stable_sort(cells.begin(), cells.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<double> bp{0.0}, vals;
    double cum = 0.0;
    for (auto& [v, len] : cells) {
        // merge equal-value runs so breakpoints stay strictly increasing
        if (!vals.empty() && vals.back() == v) {
            cum += len;
            bp.back() = cum;
        } else {
            cum += len;
            vals.push_back(v);
            bp.push_back(cum);
        }
    }
    bp.back() = 1.0;  // absorb rounding in the cumulative sum
    return StepFunction(std::move(bp), std::move(vals));
}

void StepFunction::write_csv(std::ostream& os) const {
    os << "breakpoint,value\n";
    char buf[64];
    for (std::size_t i = 0; i < values_.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", breaks_[i], values_[i]);
        os << buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g,\n", breaks_.back());
    os << buf;
}

StepFunction StepFunction::read_csv(std::istream& is) {
    std::string line;
    std::vector<double> bp, vals;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (header) { header = false; continue; }
        std::istringstream row(line);
        std::string a, b;
        std::getline(row, a, ',');
        std::getline(row, b, ',');
        bp.push_back(std::stod(a));
        if (!b.empty()) vals.push_back(std::stod(b));
    }
    return StepFunction(std::move(bp), std::move(vals));
}

}  // namespace gll
