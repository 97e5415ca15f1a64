#include <doctest.h>

#include <cmath>
#include <random>

#include "riposte/financial.hpp"

using namespace riposte;

TEST_CASE("annual loss expectancy is linear until the insurance clamp") {
    LossBreakdown zero;
    CHECK(annual_loss_expectancy(zero, 12.0) == 0.0);

    LossBreakdown assets;
    assets.la = 1000.0;
    CHECK(annual_loss_expectancy(assets, 12.0) == doctest::Approx(12000.0));

    LossBreakdown insured;
    insured.la = 500.0;
    insured.ci = 1000.0;
    DiagnosticList diags;
    CHECK(annual_loss_expectancy(insured, 1.0, &diags) == 0.0);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].severity == Severity::kWarning);
}

TEST_CASE("ale scales linearly in the occurrence rate") {
    LossBreakdown losses;
    losses.la = 700.0;
    losses.ld = 300.0;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> rate(0.0, 60.0);
    for (int trial = 0; trial < 1000; ++trial) {
        double aro = rate(rng);
        double k = rate(rng) + 0.5;
        double lhs = annual_loss_expectancy(losses, aro * k);
        double rhs = annual_loss_expectancy(losses, aro) * k;
        REQUIRE(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("annual response cost sums the ledger") {
    CHECK(annual_response_cost({}) == 0.0);
    CHECK(annual_response_cost({17.0, 0.0, 0.0, 0.0}) == doctest::Approx(17.0));
    CHECK(annual_response_cost({30600.0, 0.0, 10000.0, 0.0}) ==
          doctest::Approx(40600.0));
}

TEST_CASE("annual infrastructure value subtracts the resell value") {
    CHECK(annual_infrastructure_value({75000.0, 0, 0, 0, 0}) ==
          doctest::Approx(75000.0));
    CHECK(annual_infrastructure_value({50000.0, 30000.0, 0, 0, 5000.0}) ==
          doctest::Approx(75000.0));
    CHECK_THROWS_AS(annual_infrastructure_value({100.0, 0, 0, 0, 100.0}),
                    NonPositiveInfrastructureValue);
}

TEST_CASE("rori reproduces the published index values") {
    CHECK(rori(100000.0, 0.39, 18700.0, 75000.0) ==
          doctest::Approx(21.66).epsilon(0.0005));
    CHECK(rori(100000.0, 0.65, 40600.0, 75000.0) ==
          doctest::Approx(21.11).epsilon(0.0005));
    CHECK(rori(100000.0, 0.01, 17.0, 75000.0) ==
          doctest::Approx(1.31).epsilon(0.005));
    CHECK(rori(123456.0, 0.0, 0.0, 75000.0) == 0.0);
    CHECK_THROWS_AS(rori(100000.0, 0.5, 100.0, 0.0),
                    NonPositiveInfrastructureValue);
}

TEST_CASE("doing nothing always returns exactly zero") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> money(1.0, 1e9);
    for (int trial = 0; trial < 10000; ++trial) {
        REQUIRE(rori(money(rng), 0.0, 0.0, money(rng)) == 0.0);
    }
}

TEST_CASE("rori is monotone in rm and decreasing in aiv") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> money(1.0, 1e7);
    std::uniform_real_distribution<double> fraction(0.0, 1.0);
    for (int trial = 0; trial < 10000; ++trial) {
        double ale = money(rng), arc = money(rng), aiv = money(rng);
        double rm1 = fraction(rng), rm2 = fraction(rng);
        if (rm1 > rm2) std::swap(rm1, rm2);
        REQUIRE(rori(ale, rm1, arc, aiv) <= rori(ale, rm2, arc, aiv));
        if (ale * rm2 > arc)  // positive numerator
            REQUIRE(rori(ale, rm2, arc, aiv * 2.0) <
                    rori(ale, rm2, arc, aiv));
    }
}

TEST_CASE("rori is invariant under uniform currency rescaling") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> money(1.0, 1e7);
    std::uniform_real_distribution<double> fraction(-0.5, 1.0);
    std::uniform_real_distribution<double> scale(0.01, 1000.0);
    for (int trial = 0; trial < 10000; ++trial) {
        double ale = money(rng), arc = money(rng), aiv = money(rng);
        double rm = fraction(rng);
        double k = scale(rng);
        double base = rori(ale, rm, arc, aiv);
        double scaled = rori(ale * k, rm, arc * k, aiv * k);
        REQUIRE(std::abs(base - scaled) <=
                1e-9 * std::max(1.0, std::abs(base)));
        // powers of two rescale exactly
        REQUIRE(rori(ale * 4.0, rm, arc * 4.0, aiv * 4.0) == base);
    }
}

TEST_CASE("roi compares benefits against costs") {
    CHECK(roi(200.0, 100.0) == doctest::Approx(100.0));
    CHECK(roi(100.0, 100.0) == 0.0);
    CHECK(roi(50.0, 100.0) == doctest::Approx(-50.0));
    CHECK_THROWS_AS(roi(50.0, 0.0), ZeroCost);
}

TEST_CASE("rosi compares loss reduction against countermeasure cost") {
    CHECK(rosi(100.0, 40.0, 30.0) == doctest::Approx(100.0));
    CHECK(rosi(100.0, 100.0, 30.0) == doctest::Approx(-100.0));
    CHECK(rosi(100000.0, 35000.0, 18700.0) ==
          doctest::Approx(247.6).epsilon(0.0005));
    CHECK_THROWS_AS(rosi(100.0, 40.0, 0.0), ZeroCost);
}
