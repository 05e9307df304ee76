#ifndef BEAMWAVE_MODEL_HPP
#define BEAMWAVE_MODEL_HPP

namespace beamwave {

// Guarded parameter domain for public entry points. The model itself lives on
// the open rectangle (0,sqrt(2)) x (0,1); the near-degenerate edges (lambda->0,
// kappa1->kappa2) are excluded rather than specially handled.
inline constexpr double kCMin = 0.01;
inline constexpr double kCMax = 1.4142135623730951 - 0.01; // sqrt(2) - 0.01
inline constexpr double kPMin = 1e-6;
inline constexpr double kPMax = 1.0 - 1e-6;

struct LinearRates {
    double lambda; ///< outer decay rate, sqrt(2-c^2)/2
    double omega;  ///< outer oscillation rate, sqrt(2+c^2)/2
};

/// Decay/oscillation rates of the outer solution. Requires c in (0, sqrt(2));
/// satisfies lambda^2 + omega^2 = 1.
LinearRates linear_rates(double c);

/// Wave-speed/asymmetry pair with all derived spectral quantities.
///
/// Invariants: xi = p c^4/4, kappa1^2 + kappa2^2 = c^2, kappa1^2 kappa2^2 = xi,
/// 0 < kappa1 <= kappa2.
struct ModelParams {
    double c;      ///< wave-speed parameter, in (0, sqrt(2))
    double p;      ///< asymmetry ratio, in (0, 1)
    double xi;     ///< p c^4 / 4
    double lambda;
    double omega;
    double kappa1; ///< inner low frequency
    double kappa2; ///< inner high frequency
};

/// Builds ModelParams; throws std::domain_error outside the guarded domain.
ModelParams make_params(double c, double p);

/// xi = p c^4/4 for p in the open interval (0,1); boundary values rejected.
double xi_from_p(double c, double p);

/// p = 4 xi / c^4 for xi in the open interval (0, c^4/4); boundary rejected.
double p_from_xi(double c, double xi);

} // namespace beamwave

#endif
