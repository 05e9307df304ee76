#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "beamwave/errors.hpp"
#include "beamwave/model.hpp"
#include "beamwave/theta_min.hpp"

using namespace beamwave;

TEST_CASE("theta_min frozen reference values")
{
    // cross-checked against an independent implementation of both the
    // transcendental solve and the shooting construction
    CHECK(theta_min(0.61005).theta_min == doctest::Approx(-29.213505697267564).epsilon(1e-10));
    CHECK(theta_min(0.8).theta_min == doctest::Approx(-19.970741654538216).epsilon(1e-10));
    CHECK(theta_min(1.0).theta_min == doctest::Approx(-12.185744190338536).epsilon(1e-10));
    CHECK(theta_min(1.2).theta_min == doctest::Approx(-6.40257003611047).epsilon(1e-10));
    CHECK(theta_min(1.39).theta_min == doctest::Approx(-1.8185486611457606).epsilon(1e-10));
}

TEST_CASE("theta_min root properties")
{
    for (const double c : {0.05, 0.3, 0.61005, 0.9, 1.2, 1.4}) {
        const ThetaMinSolution sol = theta_min(c);
        CHECK(sol.theta_min < 0.0);
        CHECK(sol.residual <= 1e-12);
        const double wt = linear_rates(c).omega * sol.t_star;
        CHECK(wt > std::numbers::pi);
        CHECK(wt < 2.0 * std::numbers::pi);
        // root bracketing: F changes sign across the root
        const double f_lo = theta_min_equation(c, sol.theta_min - 1e-11);
        const double f_hi = theta_min_equation(c, sol.theta_min + 1e-11);
        CHECK(f_lo * f_hi < 0.0);
    }
}

TEST_CASE("theta_min is increasing in c")
{
    double prev = -1e9;
    for (int i = 0; i < 30; ++i) {
        const double c = 0.05 + (1.40 - 0.05) * i / 29.0;
        const double th = theta_min(c).theta_min;
        CHECK(th > prev);
        prev = th;
    }
}

TEST_CASE("solver agrees with the shooting oracle")
{
    for (int i = 0; i < 20; ++i) {
        const double c = 0.05 + (1.40 - 0.05) * i / 19.0;
        const double solved = theta_min(c).theta_min;
        const double shot = theta_min_oracle(c);
        CHECK(std::abs(solved - shot) <= 1e-8);
    }
}

TEST_CASE("oracle crossing time and step convergence")
{
    const ShootingResult s = theta_min_shoot(0.61005, 1e-4);
    const double wt = linear_rates(0.61005).omega * s.t_star;
    CHECK(wt > std::numbers::pi);
    CHECK(wt < 2.0 * std::numbers::pi);

    // 4th-order scheme: halving the step barely moves the answer
    const double coarse = theta_min_oracle(0.8, 2e-4);
    const double fine = theta_min_oracle(0.8, 1e-4);
    CHECK(std::abs(coarse - fine) < 1e-10);
}

TEST_CASE("theta_min guards")
{
    CHECK_THROWS_AS(theta_min(0.001), std::domain_error);
    CHECK_THROWS_AS(theta_min(1.45), std::domain_error);
    CHECK_THROWS_AS(theta_min_shoot(0.8, -1.0), std::domain_error);
}
