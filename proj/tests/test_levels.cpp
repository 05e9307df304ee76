#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "beamwave/errors.hpp"
#include "beamwave/levels.hpp"
#include "beamwave/theta_min.hpp"

using namespace beamwave;

TEST_CASE("five solutions at the figure point")
{
    const ModelParams m = make_params(0.61005, 0.00065);
    const CountResult r = count_levels(m);
    REQUIRE(r.count == 5);
    REQUIRE(r.candidates.size() == 5);
    CHECK_FALSE(r.window_empty);

    const int expected_k[5] = {2, 3, 4, 5, 6};
    const double expected_theta[5] = {-7.178308496307437, -12.51485677129791,
                                      -17.80112753496256, -23.117699351290927,
                                      -28.4987123811565};
    for (int i = 0; i < 5; ++i) {
        CHECK(r.candidates[i].k == expected_k[i]);
        CHECK(r.candidates[i].theta == doctest::Approx(expected_theta[i]).epsilon(1e-8));
        CHECK(r.candidates[i].residual <= 1e-10);
        CHECK(r.candidates[i].branch == 0);
    }
    CHECK(r.count <= r.lemma_bound);
}

TEST_CASE("zero solutions at (0.99, 0.4)")
{
    const CountResult r = count_levels(make_params(0.99, 0.4));
    CHECK(r.count == 0);
    CHECK_FALSE(r.window_empty);
}

TEST_CASE("empty window gives zero count")
{
    const CountResult r = count_levels(make_params(1.39, 0.99));
    CHECK(r.count == 0);
    CHECK(r.window_empty);
    CHECK(r.candidates.empty());
}

TEST_CASE("solve_level root and bracket failure")
{
    const ModelParams m = make_params(0.61005, 0.00065);
    const double thmin = theta_min(m.c).theta_min;
    const ThetaWindow w = admissible_window(m, thmin);
    REQUIRE(w.branches.size() == 2);

    const SolutionCandidate cand = solve_level(m, 2, w.branches[0].lo, w.branches[0].hi, 0);
    CHECK(cand.residual <= 1e-10);
    CHECK(cand.theta > w.branches[0].lo);
    CHECK(cand.theta < w.branches[0].hi);

    // uniqueness: re-solving on sub-brackets converges to the same root
    const SolutionCandidate left = solve_level(m, 2, w.branches[0].lo, cand.theta + 0.5, 0);
    const SolutionCandidate right = solve_level(m, 2, cand.theta - 0.5, w.branches[0].hi, 0);
    CHECK(std::abs(left.theta - cand.theta) <= 2e-10 * std::abs(cand.theta));
    CHECK(std::abs(right.theta - cand.theta) <= 2e-10 * std::abs(cand.theta));

    // k = 1 is below L(theta1-) = 1.15 on branch 0: monotone range exclusion
    CHECK_THROWS_AS(solve_level(m, 1, w.branches[0].lo, w.branches[0].hi, 0), bracket_error);
    // k = 9 is above L(theta_min+) = 6.13
    CHECK_THROWS_AS(solve_level(m, 9, w.branches[0].lo, w.branches[0].hi, 0), bracket_error);
}

TEST_CASE("candidate ordering within branches")
{
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> cd(0.3, 1.39);
    std::uniform_real_distribution<double> pd(0.005, 0.99);
    int nonempty = 0;
    while (nonempty < 25) {
        const ModelParams m = make_params(cd(rng), pd(rng));
        const CountResult r = count_levels(m);
        if (r.candidates.empty())
            continue;
        ++nonempty;
        for (std::size_t i = 1; i < r.candidates.size(); ++i) {
            const auto& a = r.candidates[i - 1];
            const auto& b = r.candidates[i];
            if (a.branch == b.branch) {
                CHECK(b.k > a.k);          // ascending level
                CHECK(b.theta < a.theta);  // L decreasing: descending theta
            } else {
                CHECK(b.branch > a.branch);
            }
        }
        CHECK(r.count <= r.lemma_bound);
        CHECK(r.count <= 6);
    }
}

TEST_CASE("floor-difference counting equals brute-force sampling")
{
    // independent oracle: dense sampling of L, counting integer crossings
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> cd(0.3, 1.39);
    std::uniform_real_distribution<double> pd(0.01, 0.99);
    int tested = 0;
    while (tested < 25) {
        const ModelParams m = make_params(cd(rng), pd(rng));
        const double thmin = theta_min(m.c).theta_min;
        const ThetaWindow w = admissible_window(m, thmin);
        if (w.empty)
            continue;
        ++tested;
        int brute = 0;
        for (const auto& br : w.branches) {
            const double inset = (br.hi - br.lo) * 1e-6;
            double prev = eval_L(m, br.lo + inset);
            const int n = 2000;
            for (int i = 1; i < n; ++i) {
                const double th =
                    br.lo + inset + (br.hi - br.lo - 2 * inset) * i / (n - 1.0);
                const double cur = eval_L(m, th);
                const double lo = std::min(prev, cur), hi = std::max(prev, cur);
                brute += static_cast<int>(std::floor(hi)) - static_cast<int>(std::floor(lo));
                prev = cur;
            }
        }
        const CountResult r = count_levels(m, thmin);
        CHECK(r.count == brute);
    }
}

TEST_CASE("p0 values")
{
    CHECK(p0(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(p0(std::sqrt(2.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p0(0.61005) < 0.0);
    CHECK(p0(1.2) == doctest::Approx(0.84876543209876532).epsilon(1e-12));
}

TEST_CASE("p_threshold values and monotonicity")
{
    CHECK(p_threshold(2) == doctest::Approx(0.64).epsilon(1e-15));
    CHECK(p_threshold(3) == doctest::Approx(0.36).epsilon(1e-15));
    double prev = 1.0;
    for (int k = 2; k <= 40; ++k) {
        const double pk = p_threshold(k);
        CHECK(pk < prev);
        prev = pk;
    }
    CHECK(p_threshold(1000) < 1e-5);

    // inverse identity: at p = p_k the kappa ratio equals k exactly
    for (int k = 2; k <= 6; ++k) {
        const ModelParams m = make_params(1.0, p_threshold(k));
        CHECK(m.kappa2 / m.kappa1 == doctest::Approx(static_cast<double>(k)).epsilon(1e-12));
    }
}

TEST_CASE("lemma_bound strip values")
{
    // p in (0.64, 1) with p > p0: no solutions possible
    CHECK(lemma_bound(make_params(0.8, 0.7)) == 0);
    CHECK(lemma_bound(make_params(0.5, 0.9)) == 0);
    // p in (0.36, 0.64), p > p0: ratio < 3, at most 2
    CHECK(lemma_bound(make_params(0.8, 0.5)) == 2);
    // p < p0 branch (needs c > 1)
    CHECK(p0(1.3) > 0.2);
    CHECK(lemma_bound(make_params(1.3, 0.2)) == 2);
    // cap at six
    CHECK(lemma_bound(make_params(0.61005, 0.00065)) == 6);

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> cd(kCMin, kCMax);
    std::uniform_real_distribution<double> pd(kPMin, kPMax);
    for (int i = 0; i < 500; ++i) {
        const int b = lemma_bound(make_params(cd(rng), pd(rng)));
        CHECK(b >= 0);
        CHECK(b <= 6);
    }
}

TEST_CASE("theorem_check")
{
    std::vector<double> grid;
    for (int i = 0; i < 100; ++i)
        grid.push_back(0.05 + (1.40 - 0.05) * i / 99.0);
    const TheoremReport rep = theorem_check(grid);
    CHECK(rep.pass);
    CHECK(rep.max_ls < 7.0);
    CHECK(rep.n_points == 100);

    const double single[] = {1.0};
    const TheoremReport one = theorem_check(std::span<const double>(single, 1));
    CHECK(one.pass);
    CHECK(one.max_ls == doctest::Approx(4.560532960107661).epsilon(1e-10));

    const TheoremReport empty = theorem_check(std::span<const double>{});
    CHECK(empty.pass);
    CHECK(std::isinf(empty.max_ls));
    CHECK(empty.max_ls < 0.0);
}
