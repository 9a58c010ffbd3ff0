#ifndef GLL_GRID_HPP
#define GLL_GRID_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace gll {

/// Geometric cell grid on (0,1), dyadic in log scale.
///
/// Cell k (k = 0 .. n-1) spans (2^{-(k+1)/J}, 2^{-k/J}]; its representative
/// is the geometric midpoint 2^{-(k+1/2)/J}.  Representatives stay strictly
/// inside (0,1), so integrands singular at t = 1 (log weights) or t = 0
/// (power weights) are always evaluated at finite points.
class GeometricGrid {
public:
    GeometricGrid(int octaves, int subdivisions)
        : octaves_(octaves), subdivisions_(subdivisions) {
        if (octaves < 2)
            throw std::invalid_argument("GeometricGrid: need at least 2 octaves");
        if (subdivisions < 1)
            throw std::invalid_argument("GeometricGrid: subdivisions must be >= 1");
    }

    static GeometricGrid standard() { return GeometricGrid(40, 16); }

    int octaves() const { return octaves_; }
    int subdivisions() const { return subdivisions_; }
    std::size_t size() const {
        return static_cast<std::size_t>(octaves_) * subdivisions_;
    }

    /// Cell width in u = -ln t coordinates (uniform).
    double u_step() const { return kLn2 / subdivisions_; }

    double u_mid(std::size_t k) const { return (k + 0.5) * u_step(); }
    double rep(std::size_t k) const { return std::exp(-u_mid(k)); }
    double t_hi(std::size_t k) const { return std::exp(-(double)k * u_step()); }
    double t_lo(std::size_t k) const { return std::exp(-(double)(k + 1) * u_step()); }
    /// Lebesgue measure of cell k.
    double dt(std::size_t k) const { return t_hi(k) - t_lo(k); }

    double t_min() const { return std::exp2(-(double)octaves_); }

    /// Index of the cell containing t; t outside (t_min, 1] is clamped to
    /// the nearest cell.  Boundary points resolve to the cell on their
    /// right (larger-t) side, matching right-continuous step lookup in t;
    /// the snap tolerance absorbs rounding in -log(t) for exact dyadic t.
    std::size_t cell_containing(double t) const {
        if (!(t > 0.0))
            throw std::invalid_argument("GeometricGrid: t must be positive");
        if (t >= 1.0) return 0;
        const double x = -std::log(t) / u_step();
        auto k = static_cast<long>(std::floor(x));
        if (x - (double)k < 1e-9) --k;  // on (or within rounding of) a boundary
        if (k < 0) k = 0;
        const long n = static_cast<long>(size());
        if (k >= n) k = n - 1;
        return static_cast<std::size_t>(k);
    }

    std::string descriptor() const {
        return "M" + std::to_string(octaves_) + "J" + std::to_string(subdivisions_);
    }

    GeometricGrid refined() const { return GeometricGrid(octaves_, 2 * subdivisions_); }

    bool operator==(const GeometricGrid& o) const {
        return octaves_ == o.octaves_ && subdivisions_ == o.subdivisions_;
    }

private:
    static constexpr double kLn2 = 0.6931471805599453094;
    int octaves_;
    int subdivisions_;
};

}  // namespace gll

#endif
