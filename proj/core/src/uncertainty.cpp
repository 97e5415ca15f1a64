#include "riposte/uncertainty.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "riposte/rng.hpp"

namespace riposte {

namespace {

/// Builds a scale where each level's (min, max) are the neighbouring
/// levels' modes, clamped at the scale ends.
QuantScale scale_from_modes(
    const std::vector<std::pair<std::string, double>>& modes) {
    QuantScale scale;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        double lo = (i == 0) ? modes[i].second : modes[i - 1].second;
        double hi =
            (i + 1 == modes.size()) ? modes[i].second : modes[i + 1].second;
        scale.levels.push_back({modes[i].first, lo, modes[i].second, hi});
    }
    return scale;
}

}  // namespace

QuantScale default_severity_scale() {
    return scale_from_modes({
        {"negligible", 100.0},
        {"minor", 1000.0},
        {"moderate", 10000.0},
        {"major", 100000.0},
        {"serious", 1000000.0},
        {"catastrophic", 10000000.0},
    });
}

QuantScale default_likelihood_scale() {
    return scale_from_modes({
        {"very-low", 0.5},
        {"low", 1.0},
        {"medium", 4.0},
        {"high", 12.0},
        {"very-high", 52.0},
    });
}

const ScaleLevel& resolve_level(const std::string& label,
                                const QuantScale& scale) {
    if (const auto* level = scale.find(label)) return *level;
    throw UnknownLevel("unknown scale level '" + label + "'");
}

double triangular_sample(double min, double mode, double max, double u) {
    if (!(min <= mode && mode <= max))
        throw InvalidTriangle("triangle parameters must satisfy min <= mode <= max");
    double range = max - min;
    if (range == 0.0) return min;
    double pivot = (mode - min) / range;
    if (u < pivot) return min + std::sqrt(u * range * (mode - min));
    return max - std::sqrt((1.0 - u) * range * (max - mode));
}

namespace {

// Fixed substream component indices; changing them changes every stream.
enum Component : std::uint64_t {
    kLa = 0,
    kLd,
    kLr,
    kLp,
    kLrec,
    kLrpc,
    kOl,
    kCi,
    kAro,
};

struct ResolvedQuantity {
    bool sampled = false;
    double amount = 0.0;        // when fixed
    double min = 0.0, mode = 0.0, max = 0.0;  // when sampled

    double draw(std::uint64_t seed, std::uint64_t iteration,
                std::uint64_t component) const {
        if (!sampled) return amount;
        return triangular_sample(min, mode, max,
                                 substream_u01(seed, iteration, component));
    }
};

ResolvedQuantity resolve(const UncertainQuantity& q, const QuantScale& scale) {
    ResolvedQuantity r;
    if (q.is_level()) {
        const auto& level = resolve_level(q.label(), scale);
        if (!(level.min <= level.mode && level.mode <= level.max))
            throw InvalidTriangle("scale level '" + level.label +
                                  "' must satisfy min <= mode <= max");
        r.sampled = true;
        r.min = level.min;
        r.mode = level.mode;
        r.max = level.max;
    } else {
        r.amount = q.amount();
    }
    return r;
}

/// Nearest-rank quantile of an ascending-sorted sample.
double nearest_rank(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) return 0.0;
    auto n = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(p * n));
    if (rank == 0) rank = 1;
    if (rank > sorted.size()) rank = sorted.size();
    return sorted[rank - 1];
}

}  // namespace

AleDistributionSummary simulate_ale(const AleUncertaintySpec& spec,
                                    const QuantScale& severity,
                                    const QuantScale& likelihood,
                                    unsigned threads, DiagnosticList* diags) {
    if (spec.iterations < 1)
        throw EngineError("iteration count must be at least 1");

    const ResolvedQuantity components[8] = {
        resolve(spec.la, severity),   resolve(spec.ld, severity),
        resolve(spec.lr, severity),   resolve(spec.lp, severity),
        resolve(spec.lrec, severity), resolve(spec.lrpc, severity),
        resolve(spec.ol, severity),   resolve(spec.ci, severity),
    };
    const ResolvedQuantity aro = resolve(spec.aro, likelihood);

    const auto n = static_cast<std::size_t>(spec.iterations);
    std::vector<double> samples(n);
    std::atomic<std::int64_t> clamped{0};

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t iter = begin; iter < end; ++iter) {
            LossBreakdown losses;
            losses.la = components[kLa].draw(spec.seed, iter, kLa);
            losses.ld = components[kLd].draw(spec.seed, iter, kLd);
            losses.lr = components[kLr].draw(spec.seed, iter, kLr);
            losses.lp = components[kLp].draw(spec.seed, iter, kLp);
            losses.lrec = components[kLrec].draw(spec.seed, iter, kLrec);
            losses.lrpc = components[kLrpc].draw(spec.seed, iter, kLrpc);
            losses.ol = components[kOl].draw(spec.seed, iter, kOl);
            losses.ci = components[kCi].draw(spec.seed, iter, kCi);
            double rate = aro.draw(spec.seed, iter, kAro);
            DiagnosticList iteration_diags;
            samples[iter] =
                annual_loss_expectancy(losses, rate, &iteration_diags);
            if (!iteration_diags.empty())
                clamped.fetch_add(1, std::memory_order_relaxed);
        }
    };

    if (threads <= 1 || n < 2) {
        run_range(0, n);
    } else {
        unsigned worker_count = std::min<unsigned>(
            threads, static_cast<unsigned>(n));
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        std::size_t chunk = (n + worker_count - 1) / worker_count;
        for (unsigned w = 0; w < worker_count; ++w) {
            std::size_t begin = static_cast<std::size_t>(w) * chunk;
            std::size_t end = std::min(n, begin + chunk);
            if (begin >= end) break;
            workers.emplace_back(run_range, begin, end);
        }
        for (auto& worker : workers) worker.join();
    }

    if (diags && clamped.load() > 0) {
        std::ostringstream msg;
        msg << clamped.load() << " of " << n
            << " iterations hit the insurance clamp (ALE forced to 0)";
        diags->push_back({Severity::kWarning, "financials.ale", msg.str()});
    }

    // Mean is accumulated in index order so the result does not depend on
    // how iterations were scheduled.
    double sum = 0.0;
    for (double sample : samples) sum += sample;

    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());

    AleDistributionSummary summary;
    summary.mean = sum / static_cast<double>(n);
    summary.p05 = nearest_rank(sorted, 0.05);
    summary.p50 = nearest_rank(sorted, 0.50);
    summary.p95 = nearest_rank(sorted, 0.95);
    summary.iterations = spec.iterations;
    summary.seed = spec.seed;
    summary.generator = std::string(kGeneratorName);
    return summary;
}

}  // namespace riposte
