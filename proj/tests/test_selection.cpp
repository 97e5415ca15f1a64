#include <doctest.h>

#include <cmath>
#include <random>

#include "riposte/protection.hpp"
#include "riposte/scenario.hpp"
#include "riposte/selection.hpp"
#include "test_helpers.hpp"

using namespace riposte;

namespace {

const ThreatServicePair kUserTarget{"User workstation compromise",
                                    "User service"};

Candidate coverage_candidate(const std::string& id, std::int64_t deployed,
                             std::int64_t total) {
    Candidate c;
    c.id = id;
    c.mutations = {{kUserTarget.threat_id, kUserTarget.service_id,
                    MutationAction::kSetCoverage, 0.0,
                    Coverage::instances(deployed, total), true}};
    return c;
}

}  // namespace

TEST_CASE("apply_candidate rewrites coverage without touching the input") {
    Scenario s = testing::make_usecase_scenario();
    Candidate c = coverage_candidate("X", 2000, 2700);
    ProtectionState before = s.protections;
    ProtectionState next = apply_candidate(s.protections, c);
    CHECK(s.protections == before);

    const auto* assignment = next.find(kUserTarget);
    REQUIRE(assignment != nullptr);
    double ap = assessed_protection(*assignment);
    CHECK(ap == doctest::Approx(100.0 / 2.7));  // 37.04
    CHECK(protection_level(68.0, ap) == doctest::Approx(69.0 + 1.0 / 27.0));

    ProtectionState full =
        apply_candidate(s.protections, coverage_candidate("Y", 2700, 2700));
    const auto* full_assignment = full.find(kUserTarget);
    REQUIRE(full_assignment != nullptr);
    CHECK(assessed_protection(*full_assignment) == doctest::Approx(50.0));
    CHECK(protection_level(68.0, 50.0) == doctest::Approx(82.0));
}

TEST_CASE("an empty mutation list leaves the state unchanged") {
    Scenario s = testing::make_usecase_scenario();
    Candidate noop;
    noop.id = "NOOP";
    CHECK(apply_candidate(s.protections, noop) == s.protections);
}

TEST_CASE("apply_candidate is deterministic and repeatable") {
    Scenario s = testing::make_usecase_scenario();
    Candidate c = coverage_candidate("X", 1500, 2700);
    c.mutations.push_back({kUserTarget.threat_id, kUserTarget.service_id,
                           MutationAction::kSetEffectiveness, 60.0, Coverage(),
                           true});
    CHECK(apply_candidate(s.protections, c) ==
          apply_candidate(s.protections, c));
}

TEST_CASE("mutations creating an assignment start from a blank entry") {
    ProtectionState empty;
    Candidate c;
    c.id = "X";
    c.mutations = {{"t", "s", MutationAction::kSetCoverage, 0.0,
                    Coverage::fraction(0.5), true}};
    ProtectionState next = apply_candidate(empty, c);
    const auto* assignment = next.find("t", "s");
    REQUIRE(assignment != nullptr);
    CHECK(assignment->effectiveness == 0.0);
    CHECK(assignment->coverage.value() == 0.5);
    CHECK(assignment->deployed);
}

TEST_CASE("remove mutations drop the assignment") {
    Scenario s = testing::make_usecase_scenario();
    Candidate c;
    c.id = "strip";
    c.mutations = {{kUserTarget.threat_id, kUserTarget.service_id,
                    MutationAction::kRemove, 0.0, Coverage(), true}};
    ProtectionState next = apply_candidate(s.protections, c);
    CHECK(next.find(kUserTarget) == nullptr);
    // removing a missing entry keeps it a no-op
    CHECK(apply_candidate(next, c) == next);
}

TEST_CASE("out-of-range mutations throw InvalidMutation") {
    Scenario s = testing::make_usecase_scenario();
    Candidate c;
    c.id = "broken";
    c.mutations = {{kUserTarget.threat_id, kUserTarget.service_id,
                    MutationAction::kSetEffectiveness, 150.0, Coverage(),
                    true}};
    CHECK_THROWS_AS(apply_candidate(s.protections, c), InvalidMutation);

    c.mutations = {{kUserTarget.threat_id, kUserTarget.service_id,
                    MutationAction::kSetCoverage, 0.0,
                    Coverage::instances(2800, 2700), true}};
    CHECK_THROWS_AS(apply_candidate(s.protections, c), InvalidMutation);
}

TEST_CASE("paper-rounded evaluation reproduces the published walkthrough") {
    Scenario s = testing::make_usecase_scenario();
    const Candidate& c3 = s.candidates[2];
    Evaluation e = evaluate_candidate(s, c3, kUserTarget, 100000.0, 75000.0,
                                      RmMode::kPaperRounded);
    CHECK(e.pl_current == 49.0);
    CHECK(e.pl_potential == 69.0);
    CHECK(e.rm == doctest::Approx(0.39));
    CHECK(e.arc == doctest::Approx(18700.0));
    CHECK(e.rori == doctest::Approx(21.66).epsilon(0.0005));

    const Candidate& c4 = s.candidates[3];
    Evaluation e4 = evaluate_candidate(s, c4, kUserTarget, 100000.0, 75000.0,
                                       RmMode::kPaperRounded);
    CHECK(e4.pl_potential == 82.0);
    CHECK(e4.rm == doctest::Approx(0.65));
    CHECK(e4.rori == doctest::Approx(21.11).epsilon(0.0005));
}

TEST_CASE("exact evaluation keeps the full-precision chain") {
    Scenario s = testing::make_usecase_scenario();
    const Candidate& c3 = s.candidates[2];
    Evaluation e = evaluate_candidate(s, c3, kUserTarget, 100000.0, 75000.0,
                                      RmMode::kExact);
    double pl_cur = protection_level(68.0, 50.0 * 900.0 / 2700.0);
    double pl_pot = protection_level(68.0, 50.0 * 2000.0 / 2700.0);
    double rm = risk_mitigation(pl_cur, pl_pot);
    CHECK(e.pl_current == doctest::Approx(pl_cur));
    CHECK(e.pl_potential == doctest::Approx(pl_pot));
    CHECK(e.rm == doctest::Approx(rm));
    CHECK(e.rori ==
          doctest::Approx(rori(100000.0, rm, 18700.0, 75000.0)));
}

TEST_CASE("the do-nothing candidate evaluates to exactly zero") {
    Scenario s = testing::make_usecase_scenario();
    for (RmMode mode : {RmMode::kExact, RmMode::kPaperRounded}) {
        Evaluation e = evaluate_candidate(s, s.candidates[0], kUserTarget,
                                          100000.0, 75000.0, mode);
        CHECK(e.rm == 0.0);
        CHECK(e.arc == 0.0);
        CHECK(e.rori == 0.0);
    }
}

TEST_CASE("rm_override pins the mitigation and is flagged") {
    Scenario s = testing::make_usecase_scenario();
    const Candidate& c2 = s.candidates[1];
    Evaluation e = evaluate_candidate(s, c2, kUserTarget, 100000.0, 75000.0,
                                      RmMode::kPaperRounded);
    CHECK(e.rm == 0.01);
    CHECK(e.rori == doctest::Approx(1.31).epsilon(0.005));
    REQUIRE(!e.flags.empty());
    CHECK(e.flags[0] == "rm-override");
}

TEST_CASE("removing protection is flagged as degrading") {
    Scenario s = testing::make_usecase_scenario();
    Candidate strip;
    strip.id = "strip";
    strip.mutations = {{kUserTarget.threat_id, kUserTarget.service_id,
                        MutationAction::kRemove, 0.0, Coverage(), true}};
    Evaluation e = evaluate_candidate(s, strip, kUserTarget, 100000.0, 75000.0,
                                      RmMode::kExact);
    CHECK(e.rm < 0.0);
    CHECK(e.rori < 0.0);
    REQUIRE(!e.flags.empty());
    CHECK(e.flags[0] == "degrading");
}

TEST_CASE("mutations on other pairs surface as side effects") {
    Scenario s = testing::make_usecase_scenario();
    Candidate wide;
    wide.id = "wide";
    wide.mutations = {
        {kUserTarget.threat_id, kUserTarget.service_id,
         MutationAction::kSetCoverage, 0.0, Coverage::instances(2700, 2700),
         true},
        {"Web site sabotage", "Web services",
         MutationAction::kSetEffectiveness, 80.0, Coverage(), true},
    };
    Evaluation e = evaluate_candidate(s, wide, kUserTarget, 100000.0, 75000.0,
                                      RmMode::kExact);
    bool has_side_effect_flag = false;
    for (const auto& flag : e.flags)
        if (flag == "side-effects") has_side_effect_flag = true;
    CHECK(has_side_effect_flag);
}

TEST_CASE("evaluating a non-applicable target is an error") {
    Scenario s = testing::make_usecase_scenario();
    CHECK_THROWS_AS(
        evaluate_candidate(s, s.candidates[0],
                           {"Web site sabotage", "User service"}, 100000.0,
                           75000.0, RmMode::kExact),
        EngineError);
}

TEST_CASE("ranking reproduces the published order") {
    std::vector<Evaluation> evaluations(4);
    evaluations[0].candidate_id = "C1";
    evaluations[0].rori = 0.0;
    evaluations[1].candidate_id = "C2";
    evaluations[1].rori = 1.31;
    evaluations[1].arc = 17.0;
    evaluations[2].candidate_id = "C3";
    evaluations[2].rori = 21.66;
    evaluations[2].arc = 18700.0;
    evaluations[3].candidate_id = "C4";
    evaluations[3].rori = 21.11;
    evaluations[3].arc = 40600.0;
    auto ranked = rank_candidates(evaluations);
    REQUIRE(ranked.size() == 4);
    CHECK(ranked[0].candidate_id == "C3");
    CHECK(ranked[1].candidate_id == "C4");
    CHECK(ranked[2].candidate_id == "C2");
    CHECK(ranked[3].candidate_id == "C1");
}

TEST_CASE("ties break on arc, then rm, then id") {
    std::vector<Evaluation> evaluations(3);
    for (auto& e : evaluations) e.rori = 10.0;
    evaluations[0].candidate_id = "B";
    evaluations[0].arc = 100.0;
    evaluations[1].candidate_id = "A";
    evaluations[1].arc = 100.0;
    evaluations[2].candidate_id = "C";
    evaluations[2].arc = 50.0;
    auto ranked = rank_candidates(evaluations);
    CHECK(ranked[0].candidate_id == "C");  // cheaper wins
    CHECK(ranked[1].candidate_id == "A");  // id lexicographic
    CHECK(ranked[2].candidate_id == "B");

    for (auto& e : evaluations) e.arc = 10.0;
    evaluations[0].rm = 0.2;
    evaluations[1].rm = 0.9;
    evaluations[2].rm = 0.5;
    ranked = rank_candidates(evaluations);
    CHECK(ranked[0].candidate_id == "A");  // higher rm wins
    CHECK(ranked[1].candidate_id == "C");
    CHECK(ranked[2].candidate_id == "B");
}

TEST_CASE("ranking is a permutation and is rescale-invariant") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> money(1.0, 1e6);
    std::uniform_real_distribution<double> fraction(-0.2, 1.0);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    for (int trial = 0; trial < 500; ++trial) {
        double ale = money(rng), aiv = money(rng);
        std::vector<Evaluation> evaluations(6);
        for (int i = 0; i < 6; ++i) {
            evaluations[i].candidate_id = "cand-" + std::to_string(i);
            evaluations[i].rm = fraction(rng);
            evaluations[i].arc = money(rng);
            evaluations[i].rori =
                rori(ale, evaluations[i].rm, evaluations[i].arc, aiv);
        }
        auto ranked = rank_candidates(evaluations);
        REQUIRE(ranked.size() == evaluations.size());

        double k = scale(rng);
        std::vector<Evaluation> rescaled = evaluations;
        for (auto& e : rescaled) {
            e.arc *= k;
            e.rori = rori(ale * k, e.rm, e.arc, aiv * k);
        }
        auto ranked_rescaled = rank_candidates(rescaled);
        for (std::size_t i = 0; i < ranked.size(); ++i)
            REQUIRE(ranked[i].candidate_id == ranked_rescaled[i].candidate_id);
    }
}

TEST_CASE("any candidate ranked above the baseline has positive net benefit") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> money(1.0, 1e6);
    std::uniform_real_distribution<double> fraction(-0.2, 1.0);
    for (int trial = 0; trial < 2000; ++trial) {
        double ale = money(rng), aiv = money(rng);
        double rm = fraction(rng), arc = money(rng);
        double value = rori(ale, rm, arc, aiv);
        if (value > 0.0) REQUIRE(ale * rm > arc);
        if (ale * rm > arc) REQUIRE(value > 0.0);
    }
}
