#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "beamwave/counting.hpp"
#include "beamwave/errors.hpp"
#include "beamwave/model.hpp"
#include "beamwave/theta_min.hpp"

using namespace beamwave;

namespace {
const ModelParams kPaperPoint = make_params(0.61005, 0.00065);
}

TEST_CASE("discontinuities: signs and frozen values")
{
    const auto [th1, th2] = theta_discontinuities(kPaperPoint);
    CHECK(th1 == doctest::Approx(-2.031962077427292).epsilon(1e-12));
    CHECK(th2 == doctest::Approx(-1.2759451157028778).epsilon(1e-12));
    CHECK(th2 < 0.0);

    // p -> 1 collapses both onto -2/sqrt(2-c^2); at c=1 that is -2
    const auto [a, b] = theta_discontinuities(make_params(1.0, 1.0 - 1e-6));
    CHECK(a == doctest::Approx(-2.0).epsilon(1e-3));
    CHECK(b == doctest::Approx(-2.0).epsilon(1e-3));

    // theta1 > 0 iff p < p0: p0(1.2) ~ 0.8488 so p = 0.1 puts theta1 right of zero
    const auto [t1pos, t2neg] = theta_discontinuities(make_params(1.2, 0.1));
    CHECK(t1pos == doctest::Approx(1.8567).epsilon(1e-3));
    CHECK(t1pos > 0.0);
    CHECK(t2neg < 0.0);
}

TEST_CASE("theta1 sign flips exactly at p0 across a c grid")
{
    for (int i = 0; i < 12; ++i) {
        const double c = 1.05 + i * 0.025; // p0 > 0 needs c > 1
        const double p_0 = 4.0 * (c * c - 1.0) / (c * c * c * c);
        if (p_0 <= kPMin + 0.02 || p_0 >= kPMax - 0.02)
            continue;
        const auto above = theta_discontinuities(make_params(c, p_0 + 0.01)).first;
        const auto below = theta_discontinuities(make_params(c, p_0 - 0.01)).first;
        CHECK(above < 0.0);
        CHECK(below > 0.0);
    }
}

TEST_CASE("admissible_window branch structure")
{
    const ThetaWindow w = admissible_window(kPaperPoint);
    REQUIRE_FALSE(w.empty);
    REQUIRE(w.branches.size() == 2);
    CHECK(w.theta_min < w.theta1);
    CHECK(w.theta1 < w.theta2);
    CHECK(w.branches[0].lo == w.theta_min);
    CHECK(w.branches[0].hi == w.theta1);
    CHECK(w.branches[1].lo == w.theta1);
    CHECK(w.branches[1].hi == w.theta2);

    const ThetaWindow w2 = admissible_window(make_params(0.99, 0.4));
    REQUIRE_FALSE(w2.empty);
    CHECK(w2.branches.size() == 2);

    // theta1 can fall left of theta_min near c = 1 at small p: single branch
    const ThetaWindow w3 = admissible_window(make_params(0.99, 0.001));
    REQUIRE_FALSE(w3.empty);
    CHECK(w3.branches.size() == 1);
    CHECK(w3.theta1 < w3.theta_min);

    // theta1 positive (p < p0): single branch
    const ThetaWindow w4 = admissible_window(make_params(1.2, 0.1));
    REQUIRE_FALSE(w4.empty);
    CHECK(w4.branches.size() == 1);

    // emptiness is decided by theta_min vs theta2
    CHECK_FALSE(admissible_window(make_params(1.39, 0.9)).empty);
    CHECK(admissible_window(make_params(1.39, 0.99)).empty);
}

TEST_CASE("eval_L frozen value and discontinuity guard")
{
    CHECK(eval_L(kPaperPoint, -5.0) == doctest::Approx(1.6073761502502606).epsilon(1e-12));

    const auto [th1, th2] = theta_discontinuities(kPaperPoint);
    CHECK_THROWS_AS(eval_L(kPaperPoint, th1), discontinuity_error);
    CHECK_THROWS_AS(eval_L(kPaperPoint, th2), discontinuity_error);
}

TEST_CASE("one-sided limits: frozen values and jump identity")
{
    const double thmin = theta_min(0.61005).theta_min;
    const double l_top = eval_L_limit(kPaperPoint, WindowEndpoint::ThetaMinRight, thmin);
    const double l_1m = eval_L_limit(kPaperPoint, WindowEndpoint::Theta1Left, thmin);
    const double l_1p = eval_L_limit(kPaperPoint, WindowEndpoint::Theta1Right, thmin);
    const double l_2m = eval_L_limit(kPaperPoint, WindowEndpoint::Theta2Left, thmin);
    CHECK(l_top == doctest::Approx(6.131688945742056).epsilon(1e-9));
    CHECK(l_1m == doctest::Approx(1.1467704747628815).epsilon(1e-9));
    CHECK(l_1p == doctest::Approx(0.14677047476288152).epsilon(1e-9));
    CHECK(l_2m == doctest::Approx(0.07338651361270365).epsilon(1e-9));
    CHECK(std::abs(l_1m - l_1p - 1.0) <= 1e-6);

    // L(theta2-) lands in (0,1) when p > p0
    CHECK(l_2m > 0.0);
    CHECK(l_2m < 1.0);
    const ModelParams m99 = make_params(0.99, 0.4);
    const double l99 = eval_L_limit(m99, WindowEndpoint::Theta2Left);
    CHECK(l99 > 0.0);
    CHECK(l99 < 1.0);
}

TEST_CASE("one-sided limits agree with nearby evaluation")
{
    // moderate xi keeps the denominator guard quiet at a 1e-9 offset
    const ModelParams m = make_params(0.99, 0.4);
    const auto [th1, th2] = theta_discontinuities(m);
    CHECK(std::abs(eval_L(m, th1 - 1e-9) - eval_L_limit(m, WindowEndpoint::Theta1Left)) <= 1e-6);
    CHECK(std::abs(eval_L(m, th1 + 1e-9) - eval_L_limit(m, WindowEndpoint::Theta1Right)) <= 1e-6);
    CHECK(std::abs(eval_L(m, th2 - 1e-9) - eval_L_limit(m, WindowEndpoint::Theta2Left)) <= 1e-6);
}

TEST_CASE("jump identity at random interior-theta1 points")
{
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> cd(0.05, 1.39);
    std::uniform_real_distribution<double> pd(0.01, 0.99);
    int found = 0;
    while (found < 25) {
        const ModelParams m = make_params(cd(rng), pd(rng));
        const double thmin = theta_min(m.c).theta_min;
        const ThetaWindow w = admissible_window(m, thmin);
        if (w.empty || w.branches.size() != 2)
            continue;
        ++found;
        const double jump = eval_L_limit(m, WindowEndpoint::Theta1Left, thmin) -
                            eval_L_limit(m, WindowEndpoint::Theta1Right, thmin);
        CHECK(std::abs(jump - 1.0) <= 1e-6);
    }
}

TEST_CASE("L is strictly decreasing on each branch")
{
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> cd(0.3, 1.39);
    std::uniform_real_distribution<double> pd(0.01, 0.99);
    int tested = 0;
    while (tested < 20) {
        const ModelParams m = make_params(cd(rng), pd(rng));
        const double thmin = theta_min(m.c).theta_min;
        const ThetaWindow w = admissible_window(m, thmin);
        if (w.empty)
            continue;
        ++tested;
        for (const auto& br : w.branches) {
            const double inset = (br.hi - br.lo) * 1e-6;
            std::uniform_real_distribution<double> td(br.lo + inset, br.hi - inset);
            for (int i = 0; i < 20; ++i) {
                double a = td(rng), b = td(rng);
                if (a == b)
                    continue;
                if (a > b)
                    std::swap(a, b);
                CHECK(eval_L(m, a) > eval_L(m, b));
            }
        }
    }
}

TEST_CASE("eval_L_tilde frozen values")
{
    CHECK(eval_L_tilde(0.8, -5.0) == doctest::Approx(1.9370274224289523).epsilon(1e-12));
    CHECK(eval_L_tilde(0.8, -15.0) == doctest::Approx(4.431992057581498).epsilon(1e-12));
    CHECK(eval_L_tilde(0.61005, -5.0) == doctest::Approx(1.6079506535175254).epsilon(1e-12));
    CHECK(eval_L_tilde(1.2, -2.0) == doctest::Approx(0.7487896362317498).epsilon(1e-12));
    CHECK(eval_L_tilde(1.2, -0.3) == doctest::Approx(0.363777794513676).epsilon(1e-12));
    CHECK(eval_L_tilde(0.5, -2.0) == doctest::Approx(1.0878211426725104).epsilon(1e-12));
    CHECK_THROWS_AS(eval_L_tilde(0.8, 0.5), std::domain_error);
}

TEST_CASE("eval_L converges to eval_L_tilde as p drops")
{
    // the convergence-study pairs: admissible theta for all three p
    const struct {
        double c, theta;
    } pairs[] = {{0.8, -5.0}, {0.8, -2.0}, {0.61005, -2.5}, {1.0, -2.5}, {0.5, -2.0}};
    for (const auto& pr : pairs) {
        const double lt = eval_L_tilde(pr.c, pr.theta);
        double prev = 1e300;
        for (const double p : {1e-2, 1e-4, 1e-6}) {
            const double err = std::abs(eval_L(make_params(pr.c, p), pr.theta) - lt);
            CHECK(err < prev);
            prev = err;
        }
        CHECK(prev < 1e-4); // the p = 1e-6 error is already tiny
    }
}

TEST_CASE("eval_L_tilde is finite across the slope range")
{
    std::mt19937 rng(5);
    for (int i = 0; i < 500; ++i) {
        std::uniform_real_distribution<double> cd(kCMin, kCMax);
        const double c = cd(rng);
        std::uniform_real_distribution<double> td(-40.0, -1e-3);
        const double l = eval_L_tilde(c, td(rng));
        CHECK(std::isfinite(l));
    }
}

TEST_CASE("eval_L_sup: frozen value, positivity, envelope")
{
    CHECK(eval_L_sup(1.0) == doctest::Approx(4.560532960107661).epsilon(1e-10));
    for (int i = 0; i < 50; ++i) {
        const double c = kCMin + (kCMax - kCMin) * i / 49.0;
        CHECK(eval_L_sup(c) > 0.0);
    }

    // L never exceeds its envelope on sampled windows
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> cd(0.3, 1.39);
    std::uniform_real_distribution<double> pd(0.01, 0.99);
    int tested = 0;
    while (tested < 15) {
        const ModelParams m = make_params(cd(rng), pd(rng));
        const double thmin = theta_min(m.c).theta_min;
        const ThetaWindow w = admissible_window(m, thmin);
        if (w.empty)
            continue;
        ++tested;
        const double ls = eval_L_sup(m.c, thmin);
        for (const auto& br : w.branches) {
            const double inset = (br.hi - br.lo) * 1e-6;
            for (int i = 0; i < 50; ++i) {
                const double th = br.lo + inset + (br.hi - br.lo - 2 * inset) * i / 49.0;
                CHECK(eval_L(m, th) <= ls + 1e-9);
            }
        }
    }
}
