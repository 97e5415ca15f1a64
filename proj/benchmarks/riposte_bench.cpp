#include <benchmark/benchmark.h>

#include <string>

#include "riposte/protection.hpp"
#include "riposte/scenario.hpp"
#include "riposte/scenario_io.hpp"
#include "riposte/selection.hpp"
#include "riposte/uncertainty.hpp"

namespace {

using namespace riposte;

/// Synthetic scenario with `threats` x `services` fully-applicable pairs,
/// protection on every other pair, and one coverage candidate per threat.
Scenario make_grid_scenario(int threats, int services) {
    Scenario s;
    s.meta = {"bench", "USD"};
    for (int i = 0; i < services; ++i)
        s.services.push_back({"svc-" + std::to_string(i),
                              {i % 6, (i + 2) % 6, (i + 4) % 6}});
    for (int t = 0; t < threats; ++t)
        s.threats.push_back({"threat-" + std::to_string(t),
                             {(t + 1) % 6, (t + 3) % 6, (t + 5) % 6}});
    for (int t = 0; t < threats; ++t) {
        for (int i = 0; i < services; ++i) {
            s.applicability.add(s.threats[t].id, s.services[i].id);
            if ((t + i) % 2 == 0)
                s.protections.upsert({s.threats[t].id, s.services[i].id,
                                      static_cast<double>(20 + (t * 7) % 60),
                                      Coverage::fraction(0.5), true});
        }
    }
    s.financials.target = ThreatServicePair{s.threats[0].id, s.services[0].id};
    s.financials.ale = 100000.0;
    s.financials.aiv = 75000.0;
    for (int t = 0; t < threats; ++t) {
        Candidate c;
        c.id = "cand-" + std::to_string(t);
        c.target = ThreatServicePair{s.threats[t].id, s.services[0].id};
        c.mutations = {{s.threats[t].id, s.services[0].id,
                        MutationAction::kSetCoverage, 0.0,
                        Coverage::fraction(1.0), true}};
        c.arc.ci = 1000.0 + t;
        s.candidates.push_back(std::move(c));
    }
    return s;
}

void BM_DangerMatrices(benchmark::State& state) {
    Scenario s = make_grid_scenario(static_cast<int>(state.range(0)),
                                    static_cast<int>(state.range(1)));
    for (auto _ : state) {
        auto matrices = danger_matrices(s);
        benchmark::DoNotOptimize(matrices);
    }
}
BENCHMARK(BM_DangerMatrices)->Args({10, 5})->Args({100, 50});

void BM_EvaluateAndRank(benchmark::State& state) {
    Scenario s = make_grid_scenario(static_cast<int>(state.range(0)), 10);
    for (auto _ : state) {
        std::vector<Evaluation> evaluations;
        evaluations.reserve(s.candidates.size());
        for (const auto& candidate : s.candidates)
            evaluations.push_back(evaluate_candidate(
                s, candidate, evaluation_target(s, candidate), 100000.0,
                75000.0, RmMode::kExact));
        auto ranked = rank_candidates(std::move(evaluations));
        benchmark::DoNotOptimize(ranked);
    }
}
BENCHMARK(BM_EvaluateAndRank)->Arg(4)->Arg(64);

void BM_SimulateAle(benchmark::State& state) {
    AleUncertaintySpec spec;
    spec.la = UncertainQuantity::level("serious");
    spec.lr = UncertainQuantity::level("minor");
    spec.aro = UncertainQuantity::level("high");
    spec.iterations = state.range(0);
    spec.seed = 42;
    auto severity = default_severity_scale();
    auto likelihood = default_likelihood_scale();
    for (auto _ : state) {
        auto summary = simulate_ale(spec, severity, likelihood);
        benchmark::DoNotOptimize(summary);
    }
}
BENCHMARK(BM_SimulateAle)->Arg(250)->Arg(10000);

void BM_ParseScenario(benchmark::State& state) {
    std::string text =
        serialize_scenario(make_grid_scenario(20, 10));
    for (auto _ : state) {
        auto parsed = parse_scenario(text);
        benchmark::DoNotOptimize(parsed);
    }
}
BENCHMARK(BM_ParseScenario);

void BM_SerializeScenario(benchmark::State& state) {
    Scenario s = make_grid_scenario(20, 10);
    for (auto _ : state) {
        std::string text = serialize_scenario(s);
        benchmark::DoNotOptimize(text);
    }
}
BENCHMARK(BM_SerializeScenario);

}  // namespace

BENCHMARK_MAIN();
