#ifndef GLL_NORMS_HPP
#define GLL_NORMS_HPP

#include <optional>
#include <vector>

#include "gll/epsilon.hpp"
#include "gll/quadrature.hpp"
#include "gll/rearrangement.hpp"
#include "gll/spaces.hpp"

namespace gll {

/// Outcome of a norm evaluation.  value = +inf with converged = false means
/// the grid could not certify a finite value (divergent or too-slow tail).
struct NormResult {
    double value = 0.0;
    std::optional<double> eps_star;  // extremizing eps (the dyadic kind stores k*)
    bool eps_on_boundary = false;
    double tail_rel = 0.0;
    bool converged = true;
    int grid_octaves = 0;
    int grid_subdivisions = 0;
    // Filled by the grand-Lebesgue EpsilonSup form: the same sup taken over
    // the defining range eps < p-1 and over the halved range eps <= (p-1)/2.
    std::optional<double> value_full;
    std::optional<double> value_restricted;
};

/// Precomputed profile for the grand-Lorentz family: evaluates the inner
/// Lorentz functional at shifted exponent 1/p + sign*eps in O(cells)
/// multiplies per eps (the eps dependence e^{-sign*eps*q*u} is geometric
/// across cells, so one exp seeds a running factor).
class GrandLorentzProfile {
public:
    struct Inner {
        double value = 0.0;
        bool usable = true;
        double tail_rel = 0.0;
    };

    /// sign = +1 shifts 1/p up by eps (sup branch), -1 shifts down (inf
    /// branch).  p = inf drops the power factor entirely.
    GrandLorentzProfile(const Rearrangement& f, double p, double q, int sign);

    Inner inner(double eps) const;

    double q() const { return q_; }
    const GeometricGrid& grid() const { return grid_; }

private:
    GeometricGrid grid_;
    double q_;
    int sign_;
    std::vector<double> base_;  // q < inf: (t^{1/p} f*)^q h; q = inf: t^{1/p} f*
};

NormResult lorentz_norm(const Rearrangement& f, double p, double q);

/// theta > 0: sup over 0 < eps <= eps_max (default 1) of eps^theta times the
/// Lorentz norm at exponent 1/p + eps (p = inf: plain t^eps weight).
/// theta < 0: inf over 0 < eps <= eps_max (default 1/p) at exponent
/// 1/p - eps.  theta = 0 is the plain Lorentz norm.  refine = false stops
/// after the deterministic eps scan; suites that compare two norms termwise
/// need both sides evaluated on the identical eps node set.
NormResult grand_lorentz_norm(const Rearrangement& f, double p, double q, double theta,
                              std::optional<double> eps_max = std::nullopt,
                              bool refine = true);

/// Discrete characterization over dyadic points 2^m: theta > 0 takes
/// sup_{k>1} k^{-theta} (sum_m (2^{m(1/p+1/k)} f*(2^m))^tau)^{1/tau},
/// theta < 0 takes inf_{k>=p} k^{|theta|} (...) with exponent 1/p - 1/k.
NormResult dyadic_grand_lorentz_norm(const Rearrangement& f, double p, double tau,
                                     double theta);

/// (int_0^1 (t^{1/p} (1 - ln t)^{-theta} f*)^tau dt/t)^{1/tau}.
NormResult lorentz_karamata_norm(const Rearrangement& f, double p, double tau,
                                 double theta);

/// sup_{0<s<1} (1 - ln s)^{-theta} (int_s^1 (t^{1/p} f*)^tau dt/t)^{1/tau}.
NormResult afh_grand_lorentz_norm(const Rearrangement& f, double p, double tau,
                                  double theta);

NormResult grand_lebesgue_norm(const Rearrangement& f, double p, double theta,
                               GrandLebesgueForm form, EpsRange range = EpsRange::Full);

/// int_0^1 (1 - ln s)^{theta - theta/p' - 1} (int_0^s f*^{p'} dt/t)^{1/p'} ds/s.
NormResult small_lebesgue_norm(const Rearrangement& f, double p_prime, double theta);

/// Dispatch on the space spec; validates first.
NormResult compute_norm(const Rearrangement& f, const SpaceSpec& spec);

/// Closed-form envelope sup_{0<eps<=eps_max} eps^theta t^eps: equals
/// (theta/|ln t|)^theta e^{-theta} when theta/|ln t| <= eps_max, else the
/// boundary value eps_max^theta t^{eps_max}.  Requires theta > 0, 0 < t < 1.
double log_envelope_weight(double t, double theta, double eps_max = 1.0);

/// Closed-form lower envelope inf_{0<eps<=eps_max} eps^{-theta} t^{-eps}:
/// equals (theta/|ln t|)^{-theta} e^{theta} when theta/|ln t| <= eps_max,
/// else eps_max^{-theta} t^{-eps_max}.  Requires theta > 0, 0 < t < 1.
double log_envelope_weight_lower(double t, double theta, double eps_max);

}  // namespace gll

#endif
