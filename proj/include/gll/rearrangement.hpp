#ifndef GLL_REARRANGEMENT_HPP
#define GLL_REARRANGEMENT_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gll/grid.hpp"
#include "gll/step_function.hpp"

namespace gll {

struct NonFiniteSample : std::runtime_error {
    explicit NonFiniteSample(const std::string& what) : std::runtime_error(what) {}
};

/// Analytic families used as rearrangement inputs.
/// PowerLog: t^{-1/p} |ln t|^beta  (p = inf drops the power factor).
struct PowerLog {
    double p;
    double beta;
};
struct IndicatorDesc {
    double s;  // rearrangement of an indicator of measure s
};
struct ConstantDesc {
    double c;
};
struct NumericDesc {};

using Descriptor = std::variant<PowerLog, IndicatorDesc, ConstantDesc, NumericDesc>;

std::string describe(const Descriptor& d);

/// Decreasing rearrangement sampled on a geometric grid: samples[k] is the
/// value at the representative of cell k (t decreasing with k), so samples
/// are non-decreasing in k.
class Rearrangement {
public:
    Rearrangement(GeometricGrid grid, std::vector<double> samples, Descriptor d);

    /// Escape hatch for profiles that are not non-increasing (some norm
    /// formulas read raw samples).  Monotonicity is not enforced.
    static Rearrangement from_raw_samples(GeometricGrid grid, std::vector<double> samples,
                                          Descriptor d = NumericDesc{});

    const GeometricGrid& grid() const { return grid_; }
    const std::vector<double>& samples() const { return samples_; }
    const Descriptor& descriptor() const { return desc_; }

    /// Sample of the cell containing t (right-continuous step lookup).
    double value_at(double t) const { return samples_[grid_.cell_containing(t)]; }

    bool is_zero() const;

    Rearrangement scaled(double c) const;
    /// Pointwise product of sample profiles (cf. comonotone realization).
    Rearrangement pointwise_product(const Rearrangement& other) const;

    void write_csv(std::ostream& os) const;
    static Rearrangement read_csv(std::istream& is, const GeometricGrid& grid);

private:
    Rearrangement() : grid_(2, 1) {}
    GeometricGrid grid_;
    std::vector<double> samples_;
    Descriptor desc_;
};

/// Exact rearrangement of a step function, sampled on the grid.
Rearrangement decreasing_rearrangement(const StepFunction& f, const GeometricGrid& grid);

/// Sample an analytic family on the grid.  Families that are not
/// non-increasing (PowerLog with beta < 0) go through a numeric
/// rearrangement of a 16x-dense sampling.
Rearrangement analytic_rearrangement(const Descriptor& d, const GeometricGrid& grid);

/// Rearrangement of the kernel x^{alpha-1} |ln x|^theta on (0,1),
/// via fine sampling (16x grid density) + numeric rearrangement.
Rearrangement riesz_kernel_rearrangement(double alpha, double theta,
                                         const GeometricGrid& grid);

/// Numeric rearrangement of a weighted profile: sort (value, measure) cells
/// by value descending, accumulate measure, sample the resulting step at the
/// grid representatives.
Rearrangement rearrange_weighted_profile(std::vector<std::pair<double, double>> cells,
                                         const GeometricGrid& grid,
                                         Descriptor d = NumericDesc{});

}  // namespace gll

#endif
