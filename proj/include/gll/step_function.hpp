#ifndef GLL_STEP_FUNCTION_HPP
#define GLL_STEP_FUNCTION_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace gll {

/// Non-negative step function on [0,1): value values[i] on
/// [breakpoints[i], breakpoints[i+1]).  breakpoints.front() == 0,
/// breakpoints.back() == 1, strictly increasing.
class StepFunction {
public:
    StepFunction(std::vector<double> breakpoints, std::vector<double> values);

    static StepFunction constant(double c);
    /// Indicator of (0,s) scaled by c (value 0 on [s,1)).
    static StepFunction indicator(double s, double c = 1.0);

    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t pieces() const { return values_.size(); }

    double value_at(double x) const;  // right-continuous lookup

    /// Exact Lebesgue measure of {x : f(x) > lambda}.
    double measure_above(double lambda) const;

    /// Exact integral of f^p over [0,1] (p = inf gives the sup).
    double lp_norm(double p) const;

    double integral() const;

    /// Piecewise-constant resample onto n equal cells (cell averages, exact).
    std::vector<double> resample_uniform(std::size_t n) const;

    /// Exact decreasing rearrangement as a step function: same multiset of
    /// (value, length) pieces, sorted by value descending.
    StepFunction rearranged() const;

    void write_csv(std::ostream& os) const;
    static StepFunction read_csv(std::istream& is);

private:
    std::vector<double> breaks_;
    std::vector<double> values_;
};

}  // namespace gll

#endif
