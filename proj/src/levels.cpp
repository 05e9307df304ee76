#include "beamwave/levels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "beamwave/errors.hpp"
#include "beamwave/theta_min.hpp"

namespace beamwave {

namespace {

constexpr double kLevelTol = 1e-10;
constexpr double kEndpointExclusion = 1e-9;

} // namespace

SolutionCandidate solve_level(const ModelParams& params, int k, double lo, double hi,
                              int branch_index)
{
    if (!(lo < hi))
        throw std::invalid_argument("solve_level: empty branch interval");

    // L is strictly decreasing on the branch: L(m) > k sends the root right.
    double a = lo, b = hi;
    for (int iter = 0; iter < 300; ++iter) {
        const double m = 0.5 * (a + b);
        double lm;
        try {
            lm = eval_L(params, m);
        } catch (const discontinuity_error&) {
            throw bracket_error("solve_level: level " + std::to_string(k) +
                                " drove bisection into a discontinuity; not bracketed");
        }
        const double res = std::abs(lm - static_cast<double>(k));
        if (res <= kLevelTol)
            return {k, m, branch_index, res};
        if (lm > static_cast<double>(k))
            a = m;
        else
            b = m;
        if (b - a <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b)))
            throw bracket_error("solve_level: level " + std::to_string(k) +
                                " not bracketed by (" + std::to_string(lo) + ", " +
                                std::to_string(hi) + ")");
    }
    throw numeric_error("solve_level: bisection failed to converge for k = " + std::to_string(k));
}

CountResult count_levels(const ModelParams& params)
{
    return count_levels(params, theta_min(params.c).theta_min);
}

CountResult count_levels(const ModelParams& params, double theta_min_value)
{
    CountResult result;
    result.params = params;
    result.lemma_bound = lemma_bound(params);
    result.count = 0;

    const ThetaWindow window = admissible_window(params, theta_min_value);
    result.window_empty = window.empty;
    if (window.empty)
        return result;

    for (std::size_t bi = 0; bi < window.branches.size(); ++bi) {
        const auto& br = window.branches[bi];
        const double l_hi = (br.lo == window.theta_min)
                                ? eval_L_limit(params, WindowEndpoint::ThetaMinRight, theta_min_value)
                                : eval_L_limit(params, WindowEndpoint::Theta1Right, theta_min_value);
        const double l_lo = (br.hi == window.theta2)
                                ? eval_L_limit(params, WindowEndpoint::Theta2Left, theta_min_value)
                                : eval_L_limit(params, WindowEndpoint::Theta1Left, theta_min_value);
        if (!(l_lo < l_hi))
            continue; // numerically inverted or degenerate branch

        // every integer strictly between the endpoint limits crosses once
        if (l_hi - l_lo >= 7.0 || l_hi > 8.0)
            throw numeric_error("count_levels: endpoint limits imply >= 7 crossings (L in (" +
                                std::to_string(l_lo) + ", " + std::to_string(l_hi) + "))");

        const int k_first = std::max(1, static_cast<int>(std::floor(l_lo)) + 1);
        for (int k = k_first; static_cast<double>(k) < l_hi; ++k) {
            if (static_cast<double>(k) - l_lo <= kEndpointExclusion ||
                l_hi - static_cast<double>(k) <= kEndpointExclusion)
                continue; // endpoint tie: open-interval semantics
            result.candidates.push_back(
                solve_level(params, k, br.lo, br.hi, static_cast<int>(bi)));
        }
    }
    result.count = static_cast<int>(result.candidates.size());
    if (result.count > 6)
        throw numeric_error("count_levels: more than six crossings found");
    return result;
}

double p0(double c)
{
    if (!(c > 0.0 && c < std::sqrt(2.0)))
        throw std::domain_error("p0: c outside (0, sqrt(2))");
    return 4.0 * (c * c - 1.0) / (c * c * c * c);
}

double p_threshold(int k)
{
    if (k < 2)
        throw std::domain_error("p_threshold: k must be >= 2");
    const double q = (static_cast<double>(k) * k - 1.0) / (static_cast<double>(k) * k + 1.0);
    return 1.0 - q * q;
}

int lemma_bound(const ModelParams& params)
{
    const double ratio = params.kappa2 / params.kappa1;
    // smallest integer k with kappa2/kappa1 < k, ties broken upward
    const int k = static_cast<int>(std::floor(ratio)) + 1;
    int bound;
    if (params.p >= p0(params.c)) {
        bound = 2 * ((k + 1) / 2 - 1); // 2 (ceil(k/2) - 1)
    } else {
        bound = (k + 2) / 2 - 1; // ceil((k+1)/2) - 1
    }
    return std::min(bound, 6);
}

TheoremReport theorem_check(std::span<const double> c_grid)
{
    TheoremReport report;
    report.max_ls = -std::numeric_limits<double>::infinity();
    report.argmax_c = std::numeric_limits<double>::quiet_NaN();
    report.n_points = c_grid.size();
    for (const double c : c_grid) {
        const double ls = eval_L_sup(c);
        if (ls > report.max_ls) {
            report.max_ls = ls;
            report.argmax_c = c;
        }
    }
    report.pass = report.max_ls < 7.0;
    return report;
}

} // namespace beamwave
