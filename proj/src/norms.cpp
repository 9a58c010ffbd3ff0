#include "gll/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gll {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

NormResult result_shell(const GeometricGrid& grid) {
    NormResult nr;
    nr.grid_octaves = grid.octaves();
    nr.grid_subdivisions = grid.subdivisions();
    return nr;
}

NormResult diverged(const GeometricGrid& grid) {
    NormResult nr = result_shell(grid);
    nr.value = kInf;
    nr.converged = false;
    nr.tail_rel = 1.0;
    return nr;
}

NormResult from_quad(const GeometricGrid& grid, const QuadResult& q) {
    NormResult nr = result_shell(grid);
    nr.value = q.value;
    nr.tail_rel = q.tail_rel;
    nr.converged = q.converged;
    return nr;
}

double inv_or_zero(double p) { return p == kInf ? 0.0 : 1.0 / p; }

}  // namespace

GrandLorentzProfile::GrandLorentzProfile(const Rearrangement& f, double p, double q,
                                         int sign)
    : grid_(f.grid()), q_(q), sign_(sign) {
    if (!(p > 0.0)) throw InvalidSpec("GrandLorentzProfile: need p > 0");
    if (!(q > 0.0)) throw InvalidSpec("GrandLorentzProfile: need q > 0");
    if (sign != 1 && sign != -1)
        throw InvalidSpec("GrandLorentzProfile: sign must be +1 or -1");
    const double a0 = inv_or_zero(p);
    const double h = grid_.u_step();
    const auto& s = f.samples();
    base_.resize(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        const double g = s[k] * std::exp(-a0 * grid_.u_mid(k));
        base_[k] = (q_ == kInf) ? g : std::pow(g, q_) * h;
    }
}

GrandLorentzProfile::Inner GrandLorentzProfile::inner(double eps) const {
    const double h = grid_.u_step();
    const int M = grid_.octaves();
    const int J = grid_.subdivisions();

    if (q_ == kInf) {
        const double c = sign_ * eps;
        const double rho = std::exp(-c * h);
        double factor = std::sqrt(rho);
        double best = 0.0;
        bool finite = true;
        for (std::size_t k = 0; k < base_.size(); ++k) {
            const double v = base_[k] * factor;
            factor *= rho;
            if (!std::isfinite(v)) {
                finite = false;
                break;
            }
            if (v > best) best = v;
        }
        return {finite ? best : kInf, finite, 0.0};
    }

    const double c = sign_ * eps * q_;
    const double rho = std::exp(-c * h);
    double factor = std::sqrt(rho);
    OctaveTail acc;
    std::size_t i = 0;
    for (int m = 0; m < M; ++m) {
        double oct = 0.0;
        for (int j = 0; j < J; ++j, ++i) {
            const double cell = base_[i] * factor;
            factor *= rho;
            if (!std::isfinite(cell)) acc.finite = false;
            oct += cell;
        }
        acc.push(oct);
    }
    const QuadResult r = finalize_log_integral(acc, q_);
    return {r.value, r.converged, r.tail_rel};
}

NormResult lorentz_norm(const Rearrangement& f, double p, double q) {
    SpaceSpec spec;
    spec.kind = SpaceKind::Lorentz;
    spec.p = p;
    spec.q = q;
    validate(spec);

    WeightedFunctional wf;
    wf.f = &f;
    wf.exponent_a = 1.0 / p;
    wf.outer_q = q;
    const QuadResult r =
        (q == kInf) ? weighted_lorentz_sup(wf) : weighted_lorentz_integral(wf);
    return from_quad(f.grid(), r);
}

NormResult grand_lorentz_norm(const Rearrangement& f, double p, double q, double theta,
                              std::optional<double> eps_max, bool refine) {
    SpaceSpec spec;
    spec.kind = SpaceKind::GrandLorentz;
    spec.p = p;
    spec.q = q;
    spec.theta = theta;
    validate(spec);
    if (theta == 0.0) return lorentz_norm(f, p, q);

    const int sign = theta > 0.0 ? +1 : -1;
    const double emax = eps_max.value_or(theta > 0.0 ? 1.0 : 1.0 / p);
    if (!(emax > 0.0)) throw InvalidSpec("grand_lorentz_norm: need eps_max > 0");

    const GrandLorentzProfile prof(f, p, q, sign);
    EpsilonProblem prob;
    prob.mode = theta > 0.0 ? OptMode::Sup : OptMode::Inf;
    prob.eps_max = emax;
    prob.objective = [&](double eps) -> ObjectiveValue {
        const auto iv = prof.inner(eps);
        if (!iv.usable) return {0.0, false};
        return {std::pow(eps, theta) * iv.value, true};
    };
    const EpsilonResult er = epsilon_optimize(prob, refine);

    if (!er.any_usable) return diverged(f.grid());
    NormResult nr = result_shell(f.grid());
    nr.value = er.value;
    nr.eps_star = er.eps_star;
    nr.eps_on_boundary = er.on_boundary;
    nr.tail_rel = prof.inner(er.eps_star).tail_rel;
    return nr;
}

namespace {

struct DyadicValue {
    double obj = 0.0;
    bool usable = true;
    double tail_rel = 0.0;
};

/// One dyadic objective: k^{-theta} (sum_{m<=0} (2^{m a} f*(2^m))^tau)^{1/tau}
/// with a = 1/p + 1/k (theta > 0) or 1/p - 1/k (theta < 0), the sum truncated
/// at the grid floor with geometric tail extrapolation on the terms.
DyadicValue dyadic_objective(const std::vector<double>& f_dyadic, double k_param,
                             double inv_p, double tau, double theta) {
    const double a =
        theta > 0.0 ? inv_p + 1.0 / k_param : inv_p - 1.0 / k_param;
    const int top = static_cast<int>(f_dyadic.size()) - 1;

    if (tau == kInf) {
        double best = 0.0;
        for (int m = 0; m <= top; ++m) {
            const double v = std::exp2(-m * a) * f_dyadic[m];
            if (v > best) best = v;
        }
        return {std::pow(k_param, -theta) * best, true, 0.0};
    }

    // each dyadic term covers one octave, so the octave tail policy applies
    // to the terms directly
    OctaveTail acc;
    for (int m = 0; m <= top; ++m) {
        const double term = std::pow(std::exp2(-m * a) * f_dyadic[m], tau);
        if (!std::isfinite(term)) acc.finite = false;
        acc.push(term);
    }
    const TailAssessment ta = assess_octave_tail(acc);
    if (!acc.finite || !ta.converged) return {kInf, false, ta.tail_rel};
    if (acc.total == 0.0) return {0.0, true, 0.0};
    return {std::pow(k_param, -theta) * std::pow(acc.total + ta.tail, 1.0 / tau), true,
            ta.tail_rel};
}

}  // namespace

NormResult dyadic_grand_lorentz_norm(const Rearrangement& f, double p, double tau,
                                     double theta) {
    SpaceSpec spec;
    spec.kind = SpaceKind::DyadicGrandLorentz;
    spec.p = p;
    spec.q = tau;
    spec.theta = theta;
    validate(spec);

    const GeometricGrid& grid = f.grid();
    const int M = grid.octaves();
    const double inv_p = inv_or_zero(p);

    std::vector<double> f_dyadic(M + 1);
    for (int m = 0; m <= M; ++m) f_dyadic[m] = f.value_at(std::exp2(-m));

    // The k grid maps onto the eps scanner: sup case k = 1 + eps*2^20 sweeps
    // k - 1 across 2^{-20}..2^20; inf case k = p/eps sweeps p..p*2^40.
    const double kappa_scale = 1048576.0;
    auto k_of_eps = [&](double eps) {
        return theta > 0.0 ? 1.0 + eps * kappa_scale : p / eps;
    };

    EpsilonProblem prob;
    prob.mode = theta > 0.0 ? OptMode::Sup : OptMode::Inf;
    prob.eps_max = 1.0;
    prob.objective = [&](double eps) -> ObjectiveValue {
        const auto dv = dyadic_objective(f_dyadic, k_of_eps(eps), inv_p, tau, theta);
        if (!dv.usable) return {0.0, false};
        return {dv.obj, true};
    };
    const EpsilonResult er = epsilon_optimize(prob);

    if (!er.any_usable) return diverged(grid);
    NormResult nr = result_shell(grid);
    nr.value = er.value;
    nr.eps_star = k_of_eps(er.eps_star);
    nr.eps_on_boundary = er.on_boundary;
    nr.tail_rel =
        dyadic_objective(f_dyadic, k_of_eps(er.eps_star), inv_p, tau, theta).tail_rel;
    return nr;
}

NormResult lorentz_karamata_norm(const Rearrangement& f, double p, double tau,
                                 double theta) {
    SpaceSpec spec;
    spec.kind = SpaceKind::LorentzKaramata;
    spec.p = p;
    spec.q = tau;
    spec.theta = theta;
    validate(spec);

    WeightedFunctional wf;
    wf.f = &f;
    wf.exponent_a = inv_or_zero(p);
    wf.log_theta = theta;
    wf.weight = LogWeight::OneMinusLog;
    wf.outer_q = tau;
    const QuadResult r =
        (tau == kInf) ? weighted_lorentz_sup(wf) : weighted_lorentz_integral(wf);
    return from_quad(f.grid(), r);
}

namespace {

/// sup over cell lower edges s of (1 - ln s)^{-w_theta} times the tail
/// functional (int_s^1 g^tau dt/t)^{1/tau} (tau = inf: running sup of g).
/// The inner integral is proper for every s > 0, so the sup carries no
/// convergence flag; divergence as s -> 0 shows up under grid refinement.
NormResult weighted_suffix_sup(const GeometricGrid& grid, const std::vector<double>& g,
                               double tau, double w_theta) {
    const double h = grid.u_step();
    std::vector<double> cand(g.size());
    if (tau == kInf) {
        double run = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            run = std::max(run, g[k]);
            cand[k] = std::pow(1.0 + (k + 1) * h, -w_theta) * run;
        }
    } else {
        double acc = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            acc += std::pow(g[k], tau) * h;
            cand[k] = std::pow(1.0 + (k + 1) * h, -w_theta) * std::pow(acc, 1.0 / tau);
        }
    }
    QuadResult r = log_cell_sup(grid, cand);
    NormResult nr;
    nr.grid_octaves = grid.octaves();
    nr.grid_subdivisions = grid.subdivisions();
    nr.value = r.value;
    nr.tail_rel = r.tail_rel;
    return nr;
}

}  // namespace

NormResult afh_grand_lorentz_norm(const Rearrangement& f, double p, double tau,
                                  double theta) {
    SpaceSpec spec;
    spec.kind = SpaceKind::AfhGrandLorentz;
    spec.p = p;
    spec.q = tau;
    spec.theta = theta;
    validate(spec);

    const GeometricGrid& grid = f.grid();
    const double a0 = inv_or_zero(p);
    const auto& s = f.samples();
    std::vector<double> g(s.size());
    for (std::size_t k = 0; k < s.size(); ++k)
        g[k] = s[k] * std::exp(-a0 * grid.u_mid(k));
    return weighted_suffix_sup(grid, g, tau, theta);
}

namespace {

/// Plain Lebesgue norm (int_0^1 f*^r dt)^{1/r} on the geometric grid.
QuadResult lebesgue_r(const Rearrangement& f, double r) {
    WeightedFunctional wf;
    wf.f = &f;
    wf.exponent_a = 1.0 / r;
    wf.outer_q = r;
    return weighted_lorentz_integral(wf);
}

NormResult eps_sup_result(const Rearrangement& f, const EpsilonResult& er,
                          const std::function<double(double)>& tail_at) {
    if (!er.any_usable) {
        NormResult nr;
        nr.grid_octaves = f.grid().octaves();
        nr.grid_subdivisions = f.grid().subdivisions();
        nr.value = kInf;
        nr.converged = false;
        nr.tail_rel = 1.0;
        return nr;
    }
    NormResult nr;
    nr.grid_octaves = f.grid().octaves();
    nr.grid_subdivisions = f.grid().subdivisions();
    nr.value = er.value;
    nr.eps_star = er.eps_star;
    nr.eps_on_boundary = er.on_boundary;
    nr.tail_rel = tail_at(er.eps_star);
    return nr;
}

}  // namespace

NormResult grand_lebesgue_norm(const Rearrangement& f, double p, double theta,
                               GrandLebesgueForm form, EpsRange range) {
    SpaceSpec spec;
    spec.kind = SpaceKind::GrandLebesgue;
    spec.p = p;
    spec.theta = theta;
    spec.form = form;
    spec.range = range;
    validate(spec);

    // The rearrangement characterization sup_s (1 - ln s)^{-theta/p}
    // (int_s^1 f*^p dt)^{1/p}: the inner plain-dt integral equals the
    // tail functional with g = t^{1/p} f*, so it is the AFH form at tau = p.
    if (form == GrandLebesgueForm::RearrFormula)
        return afh_grand_lorentz_norm(f, p, p, theta / p);

    if (form == GrandLebesgueForm::GLpTheta) {
        const double emax = range == EpsRange::Full ? 1.0 : 1.0 / p;
        EpsilonProblem prob;
        prob.mode = OptMode::Sup;
        prob.eps_max = emax;
        prob.objective = [&](double eps) -> ObjectiveValue {
            const double r = p / (1.0 + p * eps);  // 1/r = 1/p + eps
            const QuadResult qr = lebesgue_r(f, r);
            if (!qr.converged) return {0.0, false};
            return {std::pow(eps, theta) * qr.value, true};
        };
        return eps_sup_result(f, epsilon_optimize(prob), [&](double eps) {
            return lebesgue_r(f, p / (1.0 + p * eps)).tail_rel;
        });
    }

    // EpsilonSup: sup_{0<eps<=dmax} eps^theta ||f||_{L_{p-eps}}
    auto run = [&](double dmax) {
        EpsilonProblem prob;
        prob.mode = OptMode::Sup;
        prob.eps_max = dmax;
        prob.objective = [&](double eps) -> ObjectiveValue {
            const QuadResult qr = lebesgue_r(f, p - eps);
            if (!qr.converged) return {0.0, false};
            return {std::pow(eps, theta) * qr.value, true};
        };
        return epsilon_optimize(prob);
    };
    const double dmax = range == EpsRange::Full        ? p - 1.0
                        : range == EpsRange::ProofRange ? p / 2.0
                                                        : (p - 1.0) / 2.0;
    const EpsilonResult er = run(dmax);
    NormResult nr = eps_sup_result(
        f, er, [&](double eps) { return lebesgue_r(f, p - eps).tail_rel; });
    const EpsilonResult full = run(p - 1.0);
    const EpsilonResult half = run((p - 1.0) / 2.0);
    nr.value_full = full.any_usable ? full.value : kInf;
    nr.value_restricted = half.any_usable ? half.value : kInf;
    return nr;
}

NormResult small_lebesgue_norm(const Rearrangement& f, double p_prime, double theta) {
    SpaceSpec spec;
    spec.kind = SpaceKind::SmallLebesgue;
    spec.p = p_prime;
    spec.theta = theta;
    validate(spec);

    const GeometricGrid& grid = f.grid();
    const auto& s = f.samples();
    const double h = grid.u_step();
    const int M = grid.octaves();
    const int J = grid.subdivisions();

    // cell masses of the inner integrand f*^{p'} dt/t
    std::vector<double> c(s.size());
    OctaveTail acc;
    {
        std::size_t i = 0;
        for (int m = 0; m < M; ++m) {
            double oct = 0.0;
            for (int j = 0; j < J; ++j, ++i) {
                c[i] = std::pow(s[i], p_prime) * h;
                if (!std::isfinite(c[i])) acc.finite = false;
                oct += c[i];
            }
            acc.push(oct);
        }
    }
    NormResult nr = result_shell(grid);
    if (acc.total == 0.0) return nr;  // zero function

    // The inner integral int_0^s shares one deep tail below t_min with every
    // s; if that tail is not certifiably convergent the norm is +inf for all s.
    const TailAssessment ta = assess_octave_tail(acc);
    const bool inner_conv = acc.finite && ta.converged;
    const double deep_tail = ta.tail;

    // inner integral at s = rep(k) (half of cell k lies below its rep), then
    // the outer integrand in s
    std::vector<double> outer(s.size());
    double suffix = deep_tail;
    for (std::size_t k = s.size(); k-- > 0;) {
        const double inner_val = suffix + 0.5 * c[k];
        outer[k] = std::pow(1.0 + grid.u_mid(k), theta - theta / p_prime - 1.0) *
                   std::pow(inner_val, 1.0 / p_prime);
        suffix += c[k];
    }
    const QuadResult oq = log_cell_integral(grid, outer, 1.0);

    nr.converged = inner_conv && oq.converged;
    nr.tail_rel = std::max(oq.tail_rel, ta.tail_rel);
    nr.value = nr.converged ? oq.value : kInf;
    return nr;
}

NormResult compute_norm(const Rearrangement& f, const SpaceSpec& spec) {
    validate(spec);
    switch (spec.kind) {
        case SpaceKind::Lorentz:
            return lorentz_norm(f, spec.p, spec.q);
        case SpaceKind::GrandLorentz:
            return grand_lorentz_norm(f, spec.p, spec.q, spec.theta);
        case SpaceKind::DyadicGrandLorentz:
            return dyadic_grand_lorentz_norm(f, spec.p, spec.q, spec.theta);
        case SpaceKind::LorentzKaramata:
            return lorentz_karamata_norm(f, spec.p, spec.q, spec.theta);
        case SpaceKind::AfhGrandLorentz:
            return afh_grand_lorentz_norm(f, spec.p, spec.q, spec.theta);
        case SpaceKind::GrandLebesgue:
            return grand_lebesgue_norm(f, spec.p, spec.theta, spec.form, spec.range);
        case SpaceKind::SmallLebesgue:
            return small_lebesgue_norm(f, spec.p, spec.theta);
    }
    throw InvalidSpec("compute_norm: unknown space kind");
}

double log_envelope_weight(double t, double theta, double eps_max) {
    if (!(t > 0.0 && t < 1.0))
        throw std::invalid_argument("log_envelope_weight: need 0 < t < 1");
    if (!(theta > 0.0) || !(eps_max > 0.0))
        throw std::invalid_argument("log_envelope_weight: need theta, eps_max > 0");
    const double u = -std::log(t);
    const double eps_star = theta / u;
    if (eps_star <= eps_max) return std::pow(eps_star, theta) * std::exp(-theta);
    return std::pow(eps_max, theta) * std::pow(t, eps_max);
}

double log_envelope_weight_lower(double t, double theta, double eps_max) {
    if (!(t > 0.0 && t < 1.0))
        throw std::invalid_argument("log_envelope_weight_lower: need 0 < t < 1");
    if (!(theta > 0.0) || !(eps_max > 0.0))
        throw std::invalid_argument("log_envelope_weight_lower: need theta, eps_max > 0");
    const double u = -std::log(t);
    const double eps_star = theta / u;
    if (eps_star <= eps_max) return std::pow(eps_star, -theta) * std::exp(theta);
    return std::pow(eps_max, -theta) * std::pow(t, -eps_max);
}

}  // namespace gll
