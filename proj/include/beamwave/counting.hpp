#ifndef BEAMWAVE_COUNTING_HPP
#define BEAMWAVE_COUNTING_HPP

#include <utility>
#include <vector>

#include "beamwave/model.hpp"

namespace beamwave {

/// Admissible interval (theta_min, theta2) of junction slopes, partitioned at
/// the interior discontinuity theta1 when present.
struct ThetaWindow {
    double theta_min;
    double theta1; ///< may lie outside the window (or be +-inf at p = p0)
    double theta2; ///< always negative
    struct Branch {
        double lo;
        double hi;
    };
    std::vector<Branch> branches; ///< 1 or 2 open subintervals; empty if window empty
    bool empty;                   ///< set when theta_min >= theta2
};

/// Discontinuities of L: theta_{1,2} = -2 sqrt(2-c^2) / (2 - c^2 -+ c^2 sqrt(1-p)).
/// theta1 takes the "-" sign in the denominator, theta2 the "+".
std::pair<double, double> theta_discontinuities(const ModelParams& params);

/// Window from theta_min(c) and the discontinuities. The overload taking
/// theta_min_value skips the transcendental solve (column reuse in scans).
ThetaWindow admissible_window(const ModelParams& params);
ThetaWindow admissible_window(const ModelParams& params, double theta_min_value);

/// The counting function
///   L = 1/2 (1 + k2/k1) + (1/pi) atan(N1/D1) - (k2/(k1 pi)) atan(N2/D2),
///   N_i = k_j (-k_i^2 + xi + xi theta sqrt(2-c^2)),  {i,j} = {1,2},
///   D_i = xi (theta k_i^2 + sqrt(2-c^2) + theta (1 - c^2)).
/// Throws discontinuity_error when an arctan denominator is below 1e-12.
double eval_L(const ModelParams& params, double theta);

enum class WindowEndpoint {
    ThetaMinRight, ///< theta -> theta_min+ (regular point; plain evaluation)
    Theta1Left,
    Theta1Right,
    Theta2Left,
};

/// One-sided limits of L at the window endpoints. At theta1/theta2 the
/// offending arctan is replaced analytically by +-pi/2 (sign from the
/// numerator and the denominator's crossing direction), not by eps-offset
/// evaluation. ThetaMinRight needs theta_min(c); the two-argument overload
/// solves for it, the three-argument one takes it precomputed.
double eval_L_limit(const ModelParams& params, WindowEndpoint endpoint);
double eval_L_limit(const ModelParams& params, WindowEndpoint endpoint, double theta_min_value);

/// Pointwise limit of L as p -> 0 at fixed (c, theta):
///   (1/pi) atan(Np/Dp) - (c/pi)(sqrt(2-c^2) + theta) + [Np Dp < 0],
///   Np = c (c^2-1) theta - c sqrt(2-c^2),  Dp = c^2 - 1 + c^2 theta sqrt(2-c^2).
/// The indicator term carries the limit of the theta1 jump; for c > 1 it
/// cancels the arctan's branch flip, so the limit is continuous there.
/// Throws numeric_error when Dp vanishes exactly.
double eval_L_tilde(double c, double theta);

/// Upper envelope L_s(c) = 1 - (c/pi)(sqrt(2-c^2) + theta_min(c)).
double eval_L_sup(double c);
double eval_L_sup(double c, double theta_min_value);

} // namespace beamwave

#endif
