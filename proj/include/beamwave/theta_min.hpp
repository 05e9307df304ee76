#ifndef BEAMWAVE_THETA_MIN_HPP
#define BEAMWAVE_THETA_MIN_HPP

namespace beamwave {

/// Root of the steepest-slope equation together with its return time.
struct ThetaMinSolution {
    double theta_min; ///< unique negative root
    double t_star;    ///< return time; omega * t_star in (pi, 2 pi)
    double residual;  ///< |F(theta_min)| at the root
};

/// Return time t*(theta) = (1/omega) (3 pi/2 - arctan((lambda theta + 1)/(omega theta))).
double theta_min_return_time(double c, double theta);

/// Residual F(theta) = e^{2 lambda t*(theta)} - theta^2 - 2 lambda theta - 1
/// whose unique negative root is theta_min(c).
double theta_min_equation(double c, double theta);

/// Solves F(theta) = 0 by a 400-point coarse scan of
/// [-(lambda + e^{2 pi lambda/omega}) - 1, -1e-3] followed by bisection to
/// |F| <= tol. The left bound is analytic: theta^2 + 2 lambda theta + 1 =
/// (|theta|-lambda)^2 + omega^2 exceeds e^{2 lambda t*} there since
/// t* < 2 pi / omega. Throws bracket_error if the scan finds no sign change.
ThetaMinSolution theta_min(double c, double tol = 1e-12);

/// Shooting result: slope and crossing time of the trajectory started at the
/// zero-slope contact state.
struct ShootingResult {
    double theta_min;
    double t_star;
};

/// Independent oracle: integrates z'''' + c^2 z'' + z = 0 forward from
/// (z,z',z'',z''') = (-1, 0, 1, sqrt(2-c^2)) with a classical fixed-step
/// 4th-order scheme until the next crossing z = -1 (bisection-refined) and
/// returns z' and t there. Throws numeric_error if no crossing occurs within
/// t in (0, 4 pi/omega).
ShootingResult theta_min_shoot(double c, double step = 1e-4);

/// Convenience wrapper returning only the slope.
double theta_min_oracle(double c, double step = 1e-4);

} // namespace beamwave

#endif
