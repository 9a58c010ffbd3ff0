#include "gll/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace gll {

namespace {

constexpr double kValueLo = 1e-3;
constexpr double kValueHi = 1e3;

// Borderline profiles t^{-1/p} |ln t|^{theta - 1/tau}: finite grand norm
// with exactly divergent unweighted tail, the hardest corpus members.
struct BorderlineParams {
    double p;
    double tau;
    double theta;
};
constexpr BorderlineParams kBorderline[] = {
    {2.0, 1.0, 1.0}, {2.0, 2.0, 1.0}, {1.5, 1.0, 0.5},
    {3.0, 2.0, 2.0}, {4.0, 1.0, 1.0}, {2.0, 1.0, 0.5},
};

StepFunction random_step(Rng& rng) {
    const std::size_t pieces = 2 + rng.index(9);
    std::vector<double> breaks{0.0};
    for (std::size_t i = 0; i + 1 < pieces; ++i) breaks.push_back(rng.uniform(0.0, 1.0));
    breaks.push_back(1.0);
    std::sort(breaks.begin(), breaks.end());
    // collisions are measure-zero but would break strict monotonicity
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::vector<double> values;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        values.push_back(rng.log_uniform(kValueLo, kValueHi));
    return StepFunction(std::move(breaks), std::move(values));
}

StepFunction random_spike_sum(Rng& rng) {
    const std::size_t spikes = 1 + rng.index(4);
    std::vector<double> supports, heights;
    for (std::size_t j = 0; j < spikes; ++j) {
        supports.push_back(rng.log_uniform(1e-6, 0.5));
        heights.push_back(rng.log_uniform(kValueLo, kValueHi));
    }
    std::vector<std::size_t> order(spikes);
    for (std::size_t j = 0; j < spikes; ++j) order[j] = j;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return supports[a] < supports[b]; });

    // sum of scaled indicators chi_(0,s_j): piecewise constant, one drop at
    // each support boundary
    std::vector<double> breaks{0.0};
    std::vector<double> values;
    double running = 0.0;
    for (double h : heights) running += h;
    for (std::size_t j : order) {
        values.push_back(running);
        breaks.push_back(supports[j]);
        running -= heights[j];
    }
    if (breaks.back() < 1.0) {
        values.push_back(0.0);
        breaks.push_back(1.0);
    }
    return StepFunction(std::move(breaks), std::move(values));
}

}  // namespace

double Rng::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

Rearrangement CorpusEntry::realize(const GeometricGrid& grid) const {
    if (fn.has_value()) return decreasing_rearrangement(*fn, grid);
    return analytic_rearrangement(rearr.descriptor(), grid);
}

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec, const GeometricGrid& grid) {
    std::vector<CorpusEntry> out;
    out.reserve(spec.counts.steps + spec.counts.indicators + spec.counts.powerlog +
                spec.counts.spikes);

    // independent family streams: changing one count leaves the others' draws intact
    Rng root(spec.seed);
    Rng step_rng(root.raw());
    Rng ind_rng(root.raw());
    Rng plog_rng(root.raw());
    Rng spike_rng(root.raw());

    for (std::size_t i = 0; i < spec.counts.steps; ++i) {
        StepFunction fn = random_step(step_rng);
        Rearrangement r = decreasing_rearrangement(fn, grid);
        out.push_back(CorpusEntry{"step_" + std::to_string(i), std::move(fn), std::move(r)});
    }
    for (std::size_t i = 0; i < spec.counts.indicators; ++i) {
        const double s = ind_rng.log_uniform(1e-6, 1.0);
        StepFunction fn = StepFunction::indicator(s);
        Rearrangement r = decreasing_rearrangement(fn, grid);
        out.push_back(CorpusEntry{"ind_" + std::to_string(i), std::move(fn), std::move(r)});
    }
    for (std::size_t i = 0; i < spec.counts.powerlog; ++i) {
        PowerLog pl{};
        std::string id;
        const std::size_t borderline_count = sizeof(kBorderline) / sizeof(kBorderline[0]);
        if (i < borderline_count) {
            const auto& b = kBorderline[i];
            pl = PowerLog{b.p, b.theta - 1.0 / b.tau};
            id = "plog_borderline_" + std::to_string(i);
        } else {
            const double a = plog_rng.uniform(0.05, 0.7);
            pl = PowerLog{1.0 / a, plog_rng.uniform(-1.5, 2.0)};
            id = "plog_" + std::to_string(i);
        }
        out.push_back(CorpusEntry{std::move(id), std::nullopt,
                                  analytic_rearrangement(pl, grid)});
    }
    for (std::size_t i = 0; i < spec.counts.spikes; ++i) {
        StepFunction fn = random_spike_sum(spike_rng);
        Rearrangement r = decreasing_rearrangement(fn, grid);
        out.push_back(CorpusEntry{"spike_" + std::to_string(i), std::move(fn), std::move(r)});
    }
    return out;
}

std::uint64_t corpus_seed_from_env(std::uint64_t fallback) {
    const char* s = std::getenv("GLL_SEED");
    if (s == nullptr || *s == '\0') return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0') return fallback;
    return static_cast<std::uint64_t>(v);
}

}  // namespace gll
