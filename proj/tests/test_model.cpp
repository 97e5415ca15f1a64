#include <doctest.h>

#include <random>

#include "riposte/model.hpp"
#include "riposte/protection.hpp"
#include "riposte/scenario.hpp"
#include "riposte/selection.hpp"
#include "test_helpers.hpp"

using namespace riposte;

TEST_CASE("use case scenario passes validation cleanly") {
    Scenario s = testing::make_usecase_scenario();
    CHECK(validate_scenario(s).empty());
}

TEST_CASE("tables scenario passes validation cleanly") {
    Scenario s = testing::make_tables_scenario();
    CHECK(validate_scenario(s).empty());
}

TEST_CASE("cia score out of range is an error") {
    Scenario s = testing::make_usecase_scenario();
    s.services[0].value.c = 6;
    DiagnosticList diags = validate_model(s.services, s.threats,
                                          s.applicability, s.protections);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].severity == Severity::kError);
    CHECK(diags[0].location == "services[0].value.c");
}

TEST_CASE("protection on a non-applicable pair is a warning") {
    Scenario s = testing::make_usecase_scenario();
    s.protections.upsert(
        {"Web site sabotage", "User service", 50.0, Coverage(), true});
    DiagnosticList diags = validate_model(s.services, s.threats,
                                          s.applicability, s.protections);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].severity == Severity::kWarning);
    CHECK(!has_errors(diags));
}

TEST_CASE("duplicate ids are errors") {
    Scenario s = testing::make_usecase_scenario();
    s.services.push_back(s.services[0]);
    s.threats.push_back(s.threats[0]);
    DiagnosticList diags = validate_model(s.services, s.threats,
                                          s.applicability, s.protections);
    CHECK(diags.size() == 2);
    CHECK(has_errors(diags));
}

TEST_CASE("dangling references are errors") {
    Scenario s = testing::make_usecase_scenario();
    s.applicability.add("No such threat", "User service");
    DiagnosticList diags = validate_model(s.services, s.threats,
                                          s.applicability, s.protections);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("No such threat") != std::string::npos);
}

TEST_CASE("effectiveness and coverage ranges are enforced") {
    Scenario s = testing::make_usecase_scenario();
    s.protections.upsert({"Web site sabotage", "Web services", 101.0,
                          Coverage(), true});
    CHECK(has_errors(validate_model(s.services, s.threats, s.applicability,
                                    s.protections)));

    s = testing::make_usecase_scenario();
    s.protections.upsert({"Web site sabotage", "Web services", 50.0,
                          Coverage::instances(2800, 2700), true});
    CHECK(has_errors(validate_model(s.services, s.threats, s.applicability,
                                    s.protections)));

    s = testing::make_usecase_scenario();
    s.protections.upsert({"Web site sabotage", "Web services", 50.0,
                          Coverage::fraction(1.5), true});
    CHECK(has_errors(validate_model(s.services, s.threats, s.applicability,
                                    s.protections)));
}

TEST_CASE("validation is pure and idempotent") {
    Scenario s = testing::make_usecase_scenario();
    s.services[0].value.a = -1;
    s.protections.upsert(
        {"Web site sabotage", "User service", 10.0, Coverage(), true});
    auto first = validate_model(s.services, s.threats, s.applicability,
                                s.protections);
    auto second = validate_model(s.services, s.threats, s.applicability,
                                 s.protections);
    CHECK(first == second);
    CHECK(!first.empty());
}

TEST_CASE("negative aiv ledger fields are validation errors") {
    Scenario s = testing::make_usecase_scenario();
    AivLedger ledger;
    ledger.ec = -5.0;
    s.financials.aiv = ledger;
    CHECK(has_errors(validate_scenario(s)));
}

TEST_CASE("non-positive aiv total is a warning, not an error") {
    Scenario s = testing::make_usecase_scenario();
    s.financials.aiv = 0.0;
    DiagnosticList diags = validate_scenario(s);
    CHECK(!has_errors(diags));
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].severity == Severity::kWarning);
}

TEST_CASE("rm_override outside [-1, 1] is an error") {
    Scenario s = testing::make_usecase_scenario();
    s.candidates[1].rm_override = 1.5;
    CHECK(has_errors(validate_scenario(s)));
}

TEST_CASE("unknown scale label in the uncertainty spec is an error") {
    Scenario s = testing::make_usecase_scenario();
    AleUncertaintySpec spec;
    spec.la = UncertainQuantity::level("no-such-level");
    spec.aro = UncertainQuantity::level("low");
    s.financials.ale = spec;
    CHECK(has_errors(validate_scenario(s)));
}

TEST_CASE("scenarios that validate cleanly are accepted by every engine") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> score(0, 5);
    std::uniform_int_distribution<int> counts(1, 6);
    std::uniform_real_distribution<double> pct(0.0, 100.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> money(1.0, 1e6);

    for (int trial = 0; trial < 200; ++trial) {
        Scenario s;
        s.meta = {"generated", "EUR"};
        int n_services = counts(rng), n_threats = counts(rng);
        for (int i = 0; i < n_services; ++i)
            s.services.push_back({"svc" + std::to_string(i),
                                  {score(rng), score(rng), score(rng)}});
        for (int i = 0; i < n_threats; ++i)
            s.threats.push_back({"thr" + std::to_string(i),
                                 {score(rng), score(rng), score(rng)}});
        for (const auto& threat : s.threats)
            for (const auto& service : s.services)
                if (unit(rng) < 0.7) s.applicability.add(threat.id, service.id);
        for (const auto& pair : s.applicability.pairs())
            if (unit(rng) < 0.5)
                s.protections.upsert({pair.threat_id, pair.service_id,
                                      pct(rng), Coverage::fraction(unit(rng)),
                                      unit(rng) < 0.9});
        if (s.applicability.pairs().empty())
            s.applicability.add(s.threats[0].id, s.services[0].id);
        s.financials.target = s.applicability.pairs().front();
        s.financials.ale = money(rng);
        s.financials.aiv = money(rng);
        for (int c = 0; c < 3; ++c) {
            Candidate candidate;
            candidate.id = "cand" + std::to_string(c);
            const auto& pair = s.applicability.pairs().front();
            candidate.mutations = {{pair.threat_id, pair.service_id,
                                    MutationAction::kSetCoverage, 0.0,
                                    Coverage::fraction(unit(rng)), true}};
            candidate.arc.ci = money(rng);
            s.candidates.push_back(std::move(candidate));
        }

        REQUIRE(!has_errors(validate_scenario(s)));
        // no range errors downstream of a clean validation
        REQUIRE_NOTHROW(danger_matrices(s));
        REQUIRE_NOTHROW(compute_ale(s));
        double aiv = 0.0;
        REQUIRE_NOTHROW(aiv = compute_aiv(s));
        for (const auto& candidate : s.candidates) {
            REQUIRE_NOTHROW(evaluate_candidate(
                s, candidate, evaluation_target(s, candidate),
                std::get<double>(s.financials.ale), aiv, RmMode::kExact));
        }
    }
}
