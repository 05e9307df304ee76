#include "beamwave/theta_min.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "beamwave/errors.hpp"
#include "beamwave/model.hpp"

namespace beamwave {

namespace {

void check_c(const char* who, double c)
{
    if (!(c >= kCMin && c <= kCMax))
        throw std::domain_error(std::string(who) + ": c = " + std::to_string(c) +
                                " outside guarded [0.01, sqrt(2)-0.01]");
}

} // namespace

double theta_min_return_time(double c, double theta)
{
    const LinearRates lr = linear_rates(c);
    return (1.5 * std::numbers::pi - std::atan((lr.lambda * theta + 1.0) / (lr.omega * theta))) /
           lr.omega;
}

double theta_min_equation(double c, double theta)
{
    const LinearRates lr = linear_rates(c);
    const double ts = theta_min_return_time(c, theta);
    return std::exp(2.0 * lr.lambda * ts) - theta * theta - 2.0 * lr.lambda * theta - 1.0;
}

ThetaMinSolution theta_min(double c, double tol)
{
    check_c("theta_min", c);
    const LinearRates lr = linear_rates(c);

    // F < 0 is guaranteed at the analytic left bound, F > 0 near zero; the
    // root is unique in between.
    const double lo_bound = -(lr.lambda + std::exp(2.0 * std::numbers::pi * lr.lambda / lr.omega)) - 1.0;
    const double hi_bound = -1e-3;

    constexpr int kScanPoints = 400;
    double lo = 0.0, hi = 0.0;
    bool bracketed = false;
    double prev_t = lo_bound;
    double prev_f = theta_min_equation(c, prev_t);
    for (int i = 1; i < kScanPoints; ++i) {
        const double t = lo_bound + (hi_bound - lo_bound) * i / (kScanPoints - 1);
        const double f = theta_min_equation(c, t);
        if (prev_f == 0.0) {
            return {prev_t, theta_min_return_time(c, prev_t), 0.0};
        }
        if (prev_f < 0.0 && f >= 0.0) {
            lo = prev_t;
            hi = t;
            bracketed = true;
            break;
        }
        prev_t = t;
        prev_f = f;
    }
    if (!bracketed)
        throw bracket_error("theta_min: no sign change of F on scan range [" +
                            std::to_string(lo_bound) + ", " + std::to_string(hi_bound) +
                            "] at c = " + std::to_string(c));

    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 300; ++iter) {
        mid = 0.5 * (lo + hi);
        const double f = theta_min_equation(c, mid);
        if (std::abs(f) <= tol)
            return {mid, theta_min_return_time(c, mid), std::abs(f)};
        if (f < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    throw numeric_error("theta_min: bisection failed to reach |F| <= " + std::to_string(tol) +
                        " at c = " + std::to_string(c));
}

namespace {

using State = std::array<double, 4>; // z, z', z'', z'''

State rhs(double c2, const State& y)
{
    return {y[1], y[2], y[3], -c2 * y[2] - y[0]};
}

State rk4_step(double c2, const State& y, double h)
{
    const State k1 = rhs(c2, y);
    State t;
    for (int i = 0; i < 4; ++i) t[i] = y[i] + 0.5 * h * k1[i];
    const State k2 = rhs(c2, t);
    for (int i = 0; i < 4; ++i) t[i] = y[i] + 0.5 * h * k2[i];
    const State k3 = rhs(c2, t);
    for (int i = 0; i < 4; ++i) t[i] = y[i] + h * k3[i];
    const State k4 = rhs(c2, t);
    State out;
    for (int i = 0; i < 4; ++i)
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

} // namespace

ShootingResult theta_min_shoot(double c, double step)
{
    check_c("theta_min_shoot", c);
    if (!(step > 0.0))
        throw std::domain_error("theta_min_shoot: step must be positive");

    const LinearRates lr = linear_rates(c);
    const double c2 = c * c;
    const double t_max = 4.0 * std::numbers::pi / lr.omega;

    State y = {-1.0, 0.0, 1.0, std::sqrt(2.0 - c2)};
    double t = 0.0;
    bool left_start = false; // the trajectory rises above -1 before returning
    while (t < t_max) {
        const State prev = y;
        y = rk4_step(c2, y, step);
        t += step;
        if (y[0] > -1.0)
            left_start = true;
        if (left_start && y[0] <= -1.0) {
            // refine the crossing inside the last step: bisection on the
            // substep length, re-integrating from the step's start state
            double a = 0.0, b = step;
            State ym = y;
            for (int i = 0; i < 60; ++i) {
                const double m = 0.5 * (a + b);
                ym = rk4_step(c2, prev, m);
                if (ym[0] > -1.0)
                    a = m;
                else
                    b = m;
            }
            const double m = 0.5 * (a + b);
            ym = rk4_step(c2, prev, m);
            return {ym[1], t - step + m};
        }
    }
    throw numeric_error("theta_min_shoot: no crossing z = -1 within t in (0, 4 pi/omega) at c = " +
                        std::to_string(c));
}

double theta_min_oracle(double c, double step)
{
    return theta_min_shoot(c, step).theta_min;
}

} // namespace beamwave
