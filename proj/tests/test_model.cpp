#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "beamwave/model.hpp"

using namespace beamwave;

TEST_CASE("linear_rates at reference speeds")
{
    const LinearRates r1 = linear_rates(1.0);
    CHECK(r1.lambda == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r1.omega == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));

    // symmetric limit c -> 0+
    const LinearRates r0 = linear_rates(1e-9);
    CHECK(r0.lambda == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(r0.omega == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));

    const LinearRates rc = linear_rates(0.61005);
    CHECK(std::abs(rc.lambda * rc.lambda + rc.omega * rc.omega - 1.0) < 1e-15);
}

TEST_CASE("linear_rates domain")
{
    CHECK_THROWS_AS(linear_rates(0.0), std::domain_error);
    CHECK_THROWS_AS(linear_rates(-0.5), std::domain_error);
    CHECK_THROWS_AS(linear_rates(std::sqrt(2.0)), std::domain_error);
    CHECK_THROWS_AS(linear_rates(2.0), std::domain_error);
}

TEST_CASE("rate identity over the admissible range")
{
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> cd(1e-6, std::sqrt(2.0) - 1e-9);
    for (int i = 0; i < 2000; ++i) {
        const LinearRates r = linear_rates(cd(rng));
        CHECK(std::abs(r.lambda * r.lambda + r.omega * r.omega - 1.0) <= 1e-14);
    }
}

TEST_CASE("make_params derived quantities")
{
    const ModelParams m = make_params(0.61005, 0.00065);
    // figure-caption value xi = 0.0000225069
    CHECK(m.xi == doctest::Approx(2.25069e-5).epsilon(1e-4));

    // degenerate-discriminant limit p -> 1
    const ModelParams md = make_params(1.0, 1.0 - 1e-6);
    CHECK(md.kappa1 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-3));
    CHECK(md.kappa2 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-3));
    CHECK(md.kappa1 <= md.kappa2);

    const ModelParams mr = make_params(1.0, 0.64);
    CHECK(mr.kappa2 / mr.kappa1 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("make_params guards")
{
    CHECK_THROWS_AS(make_params(0.005, 0.5), std::domain_error);
    CHECK_THROWS_AS(make_params(1.41, 0.5), std::domain_error);
    CHECK_THROWS_AS(make_params(0.8, 0.0), std::domain_error);
    CHECK_THROWS_AS(make_params(0.8, 1.0), std::domain_error);
}

TEST_CASE("kappa root-pair identities")
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> cd(kCMin, kCMax);
    std::uniform_real_distribution<double> pd(kPMin, kPMax);
    for (int i = 0; i < 2000; ++i) {
        const ModelParams m = make_params(cd(rng), pd(rng));
        const double c2 = m.c * m.c;
        CHECK(std::abs(m.kappa1 * m.kappa1 + m.kappa2 * m.kappa2 - c2) <= 1e-12 * c2);
        CHECK(std::abs(m.kappa1 * m.kappa1 * m.kappa2 * m.kappa2 - m.xi) <=
              1e-12 * std::max(m.xi, 1e-300));
        CHECK(m.kappa1 > 0.0);
        CHECK(m.kappa1 <= m.kappa2);
    }
}

TEST_CASE("xi/p conversions")
{
    const double xi = xi_from_p(0.61005, 0.00065);
    CHECK(xi == doctest::Approx(2.25069e-5).epsilon(1e-4));
    CHECK(p_from_xi(0.61005, xi) == doctest::Approx(0.00065).epsilon(1e-15));
    CHECK_THROWS_AS(xi_from_p(0.8, 0.0), std::domain_error);
    CHECK_THROWS_AS(xi_from_p(0.8, 1.0), std::domain_error);
    CHECK_THROWS_AS(p_from_xi(0.8, 0.0), std::domain_error);
    CHECK_THROWS_AS(p_from_xi(0.8, 0.8 * 0.8 * 0.8 * 0.8 / 4.0), std::domain_error);
}
