#ifndef GLL_CORPUS_HPP
#define GLL_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gll/grid.hpp"
#include "gll/rearrangement.hpp"
#include "gll/step_function.hpp"

namespace gll {

/// Uniform doubles assembled from raw mt19937_64 words (53-bit mantissa),
/// so identical seeds give identical corpora on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }
    double uniform() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double log_uniform(double lo, double hi);
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(raw() % n); }
    /// Uniform pick from a small list.
    template <typename T>
    T pick(std::initializer_list<T> xs) {
        return xs.begin()[index(xs.size())];
    }

private:
    std::mt19937_64 eng_;
};

struct CorpusCounts {
    std::size_t steps = 200;
    std::size_t indicators = 100;
    std::size_t powerlog = 100;
    std::size_t spikes = 100;
};

struct ParamRange {
    double lo = 0.0;
    double hi = 0.0;
};

/// Deterministic corpus recipe.  Values of generated step functions are
/// log-uniform in [1e-3, 1e3]; p_range / theta_range steer the parameter
/// draws of the inequality suites.
struct CorpusSpec {
    std::uint64_t seed = 1729;
    CorpusCounts counts;
    ParamRange p_range{1.25, 4.0};
    ParamRange theta_range{0.25, 2.0};
};

/// One corpus member: a pointwise step realization (absent for analytic
/// power-log profiles, which only exist as rearrangements) plus its
/// decreasing rearrangement on the generating grid.
struct CorpusEntry {
    std::string id;
    std::optional<StepFunction> fn;
    Rearrangement rearr;

    /// Rebuild the rearrangement on another grid (stability reruns).
    Rearrangement realize(const GeometricGrid& grid) const;
};

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec, const GeometricGrid& grid);

/// GLL_SEED (decimal digits) overrides the built-in corpus seed.
std::uint64_t corpus_seed_from_env(std::uint64_t fallback);

}  // namespace gll

#endif
