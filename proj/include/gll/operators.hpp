#ifndef GLL_OPERATORS_HPP
#define GLL_OPERATORS_HPP

#include <cstddef>
#include <vector>

#include "gll/grid.hpp"
#include "gll/report.hpp"
#include "gll/spaces.hpp"
#include "gll/step_function.hpp"

namespace gll {

/// Uniform partition of [0,1] into a power-of-two number of cells of
/// width h = 1/n_cells.  Cell m spans [m h, (m+1) h) with center (m+1/2) h.
class UniformGrid {
public:
    explicit UniformGrid(std::size_t n_cells);

    std::size_t n_cells() const { return n_; }
    double h() const { return h_; }
    double center(std::size_t m) const { return (static_cast<double>(m) + 0.5) * h_; }

private:
    std::size_t n_;
    double h_;
};

/// Power-logarithmic kernel r^{alpha-1} |ln r|^theta on (0,1),
/// alpha in (0,1) and theta >= 0.
struct KernelSpec {
    double alpha = 0.5;
    double theta = 0.0;
};

void validate(const KernelSpec& k);

/// Discrete convolution of f and g, both extended by zero outside [0,1].
/// values[m] approximates (f*g) at the center (m+1/2)h of the full support
/// [0,2]; unit_part() restricts to [0,1] for norm work, while mass() uses
/// the full support so it matches (integral f)(integral g).
struct ConvolutionResult {
    std::size_t n_cells = 0;
    double h = 0.0;
    std::vector<double> values;

    std::vector<double> unit_part() const;
    double mass() const;
};

ConvolutionResult convolve(const StepFunction& f, const StepFunction& g,
                           const UniformGrid& grid);

/// Step function on [0,1] taking vals[m] on cell m of the grid.
StepFunction step_from_uniform_cells(const std::vector<double>& vals,
                                     const UniformGrid& grid);

/// Integral of f(x) k(|y-x|) over [0,1] for one query point y in [0,1],
/// with f given by its cell values on the grid.  Each radial interval uses
/// the exact integral of the power factor and the log factor at its
/// geometric midpoint; the interval touching r = 0 uses the power-weighted
/// midpoint hi * exp(-1/alpha).  The cell holding y is split at y.
/// log_singular (optional) counts intervals whose midpoint lands exactly on
/// r = 1 with theta > 0, where the log factor vanishes; they contribute 0.
double riesz_point(const std::vector<double>& cell_values, const UniformGrid& grid,
                   const KernelSpec& k, double y, long* log_singular = nullptr);

struct RieszResult {
    std::vector<double> values;
    long log_singular_cells = 0;
};

/// riesz_point at every cell center of [0,1].
RieszResult riesz_apply(const StepFunction& f, const KernelSpec& k,
                        const UniformGrid& grid);

enum class OperatorTag { Identity, Riesz };

/// Empirical boundedness ratios target_norm(op f) / source_norm(f) over a
/// corpus.  Norms are taken of decreasing rearrangements on ggrid; the
/// Riesz image is sampled on grid and rearranged numerically, while the
/// identity skips resampling so equal source/target specs give ratio 1.
/// Samples with zero or non-finite source norm are skipped and counted;
/// throws EmptyEffectiveCorpus when no sample survives.
InequalityReport boundedness_ratio(OperatorTag op, const KernelSpec& k,
                                   const SpaceSpec& source, const SpaceSpec& target,
                                   const std::vector<StepFunction>& corpus,
                                   const UniformGrid& grid, const GeometricGrid& ggrid);

}  // namespace gll

#endif
