#ifndef BEAMWAVE_WAVE_HPP
#define BEAMWAVE_WAVE_HPP

#include "beamwave/levels.hpp"
#include "beamwave/model.hpp"

namespace beamwave {

/// Decaying outer solution z1(t) = A e^{lambda t} cos(omega t + B), valid for
/// t <= t1 (and mirrored for t >= -t1). A > 0, B in (-pi, pi].
struct OuterSolution {
    double A;
    double B;
    double lambda;
    double omega;

    double z(double t) const;
    double dz(double t) const;
    double d2z(double t) const;
    double d3z(double t) const;
    double d4z(double t) const;
};

/// Even inner solution z2(t) = gamma cos(kappa1 t) + delta cos(kappa2 t) + (1-xi)/xi.
struct InnerSolution {
    double gamma;
    double delta;
    double kappa1;
    double kappa2;
    double plateau; ///< (1-xi)/xi

    double z(double t) const;
    double dz(double t) const;
    double d2z(double t) const;
    double d3z(double t) const;
    double d4z(double t) const;
};

/// Junction time t1 = (1/kappa1) atan(N2/D2) - pi/(2 kappa1), in (-pi/kappa1, 0).
double junction_time(const ModelParams& params, double theta);

struct InnerCoefficients {
    double gamma;
    double delta;
    double t1;
};

/// Solves the 2x2 system pinning (gamma, delta) from the junction values
/// z2(t1) = -1, z2'(t1) = theta, then checks the remaining two matching
/// equations (residuals <= 1e-7) and the closed-form squares (relative 1e-8).
/// Throws consistency_error when theta is not a true root of L = k.
InnerCoefficients recover_inner(const ModelParams& params, double theta);

struct OuterCoefficients {
    double A;
    double B;
};

/// Amplitude/phase with z1(t1) = -1, z1'(t1) = theta; A > 0, B in (-pi, pi].
OuterCoefficients recover_outer(const ModelParams& params, double theta, double t1);

/// Piecewise even travelling wave: outer for t <= t1, inner on [t1, -t1],
/// mirrored outer for t >= -t1. Immutable after construction; samplers are
/// pure and analytic piecewise.
struct WaveProfile {
    ModelParams params;
    int k;
    double theta;
    double t1;
    OuterSolution outer;
    InnerSolution inner;

    double z(double t) const;
    double dz(double t) const;
    double d2z(double t) const;
    double d3z(double t) const;
    double d4z(double t) const;
};

WaveProfile build_wave(const ModelParams& params, const SolutionCandidate& candidate);

struct VerificationReport {
    double junction_residual; ///< max mismatch of z..z''' across t = +-t1
    double ode_residual;      ///< max |z'''' + c^2 z'' + (z+1)^+ - xi (z+1)^- - 1|
    int trough_count;         ///< maximal intervals with z < -1
    int wiggle_count;         ///< local maxima of z in {z <= -1}
    bool decay_ok;
    bool pass;
};

/// Samples the profile on [t1 - 10/lambda, -t1 + 10/lambda] (the junctions
/// plus ten outer decay lengths on each side). Sign tests use a 1e-12 dead
/// band with collapsed sign sequences. pass requires junction and ODE
/// residuals <= tol, exactly one trough, and decay_ok.
VerificationReport verify_wave(const WaveProfile& profile, double tol = 1e-6,
                               int n_samples = 10000);

/// Physical-deflection view u(x, tau) = (z(a^{1/4} x - c a^{1/2} tau) + 1)/a
/// of a profile, for beam stiffness a > 0.
struct PhysicalWave {
    WaveProfile wave;
    double a;
    double b;     ///< implied asymmetric coefficient, xi * a
    double speed; ///< physical wave speed a^{1/4} c

    double u(double x, double tau) const;
};

PhysicalWave to_physical(const WaveProfile& profile, double a);

} // namespace beamwave

#endif
