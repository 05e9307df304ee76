#include "beamwave/counting.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "beamwave/errors.hpp"
#include "beamwave/theta_min.hpp"

namespace beamwave {

namespace {

constexpr double kDenGuard = 1e-12;

// Shared pieces of the two arctan arguments of L:
//   N_i = kappa_j (-kappa_i^2 + xi (1 + theta r)),  D_i = xi (theta s_i + r),
// with r = sqrt(2-c^2) and s_i = kappa_i^2 + 1 - c^2. D_i vanishes exactly at
// theta_i.
struct ArctanParts {
    double n1, d1, n2, d2;
    double slope1, slope2; // d D_i / d theta = xi s_i
};

ArctanParts arctan_parts(const ModelParams& m, double theta)
{
    const double r = std::sqrt(2.0 - m.c * m.c);
    const double k1sq = m.kappa1 * m.kappa1;
    const double k2sq = m.kappa2 * m.kappa2;
    const double common = m.xi * (1.0 + theta * r);
    ArctanParts a;
    a.n1 = m.kappa2 * (common - k1sq);
    a.n2 = m.kappa1 * (common - k2sq);
    a.slope1 = m.xi * (k1sq + 1.0 - m.c * m.c);
    a.slope2 = m.xi * (k2sq + 1.0 - m.c * m.c);
    a.d1 = theta * a.slope1 + m.xi * r;
    a.d2 = theta * a.slope2 + m.xi * r;
    return a;
}

double sign_of(double v)
{
    return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
}

} // namespace

std::pair<double, double> theta_discontinuities(const ModelParams& params)
{
    const double c2 = params.c * params.c;
    const double r = std::sqrt(2.0 - c2);
    const double s = std::sqrt(1.0 - params.p);
    const double theta1 = -2.0 * r / (2.0 - c2 - c2 * s);
    const double theta2 = -2.0 * r / (2.0 - c2 + c2 * s);
    return {theta1, theta2};
}

ThetaWindow admissible_window(const ModelParams& params)
{
    return admissible_window(params, theta_min(params.c).theta_min);
}

ThetaWindow admissible_window(const ModelParams& params, double theta_min_value)
{
    const auto [theta1, theta2] = theta_discontinuities(params);
    ThetaWindow w;
    w.theta_min = theta_min_value;
    w.theta1 = theta1;
    w.theta2 = theta2;
    w.empty = !(theta_min_value < theta2);
    if (w.empty)
        return w;
    if (theta_min_value < theta1 && theta1 < theta2) {
        w.branches = {{theta_min_value, theta1}, {theta1, theta2}};
    } else {
        w.branches = {{theta_min_value, theta2}};
    }
    return w;
}

double eval_L(const ModelParams& params, double theta)
{
    const ArctanParts a = arctan_parts(params, theta);
    if (std::abs(a.d1) < kDenGuard || std::abs(a.d2) < kDenGuard)
        throw discontinuity_error("eval_L: arctan denominator below guard at theta = " +
                                  std::to_string(theta));
    const double ratio = params.kappa2 / params.kappa1;
    return 0.5 * (1.0 + ratio) + std::atan(a.n1 / a.d1) / std::numbers::pi -
           ratio / std::numbers::pi * std::atan(a.n2 / a.d2);
}

double eval_L_limit(const ModelParams& params, WindowEndpoint endpoint)
{
    if (endpoint == WindowEndpoint::ThetaMinRight)
        return eval_L_limit(params, endpoint, theta_min(params.c).theta_min);
    return eval_L_limit(params, endpoint, 0.0);
}

double eval_L_limit(const ModelParams& params, WindowEndpoint endpoint, double theta_min_value)
{
    const auto [theta1, theta2] = theta_discontinuities(params);
    const double ratio = params.kappa2 / params.kappa1;
    const double half_pi = std::numbers::pi / 2.0;

    switch (endpoint) {
    case WindowEndpoint::ThetaMinRight:
        // regular point of the formula
        return eval_L(params, theta_min_value);
    case WindowEndpoint::Theta1Left:
    case WindowEndpoint::Theta1Right: {
        const ArctanParts a = arctan_parts(params, theta1);
        // D1 crosses zero with slope sign(slope1); approaching from the left
        // the argument runs to -sign(n1) sign(slope1) * inf.
        const double side = endpoint == WindowEndpoint::Theta1Left ? -1.0 : 1.0;
        const double atan1 = side * sign_of(a.n1) * sign_of(a.slope1) * half_pi;
        if (std::abs(a.d2) < kDenGuard)
            throw discontinuity_error("eval_L_limit: theta1 and theta2 coincide");
        return 0.5 * (1.0 + ratio) + atan1 / std::numbers::pi -
               ratio / std::numbers::pi * std::atan(a.n2 / a.d2);
    }
    case WindowEndpoint::Theta2Left: {
        const ArctanParts a = arctan_parts(params, theta2);
        const double atan2v = -sign_of(a.n2) * sign_of(a.slope2) * half_pi;
        if (std::abs(a.d1) < kDenGuard)
            throw discontinuity_error("eval_L_limit: theta1 and theta2 coincide");
        return 0.5 * (1.0 + ratio) + std::atan(a.n1 / a.d1) / std::numbers::pi -
               ratio / std::numbers::pi * atan2v;
    }
    }
    throw std::logic_error("eval_L_limit: bad endpoint");
}

double eval_L_tilde(double c, double theta)
{
    if (!(c >= kCMin && c <= kCMax))
        throw std::domain_error("eval_L_tilde: c outside guarded domain");
    if (!(theta < 0.0))
        throw std::domain_error("eval_L_tilde: theta must be negative");
    const double r = std::sqrt(2.0 - c * c);
    const double np = c * (c * c - 1.0) * theta - c * r;
    const double dp = c * c - 1.0 + c * c * theta * r;
    if (dp == 0.0)
        throw numeric_error("eval_L_tilde: denominator zero at theta = " + std::to_string(theta));
    // the indicator carries the limit of the theta1 jump across branches
    const double offset = (np * dp < 0.0) ? 1.0 : 0.0;
    return std::atan(np / dp) / std::numbers::pi - c / std::numbers::pi * (r + theta) + offset;
}

double eval_L_sup(double c)
{
    return eval_L_sup(c, theta_min(c).theta_min);
}

double eval_L_sup(double c, double theta_min_value)
{
    if (!(c >= kCMin && c <= kCMax))
        throw std::domain_error("eval_L_sup: c outside guarded domain");
    const double r = std::sqrt(2.0 - c * c);
    return 1.0 - c / std::numbers::pi * (r + theta_min_value);
}

} // namespace beamwave
