#include "beamwave/wave.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "beamwave/errors.hpp"

namespace beamwave {

namespace {

constexpr double kDenGuard = 1e-12;
constexpr double kMatchResidualTol = 1e-7;
constexpr double kClosedFormRelTol = 1e-8;
constexpr double kDeadBand = 1e-12;

} // namespace

double OuterSolution::z(double t) const
{
    return A * std::exp(lambda * t) * std::cos(omega * t + B);
}

double OuterSolution::dz(double t) const
{
    const double ph = omega * t + B;
    return A * std::exp(lambda * t) * (lambda * std::cos(ph) - omega * std::sin(ph));
}

double OuterSolution::d2z(double t) const
{
    const double ph = omega * t + B;
    return A * std::exp(lambda * t) *
           ((lambda * lambda - omega * omega) * std::cos(ph) -
            2.0 * lambda * omega * std::sin(ph));
}

double OuterSolution::d3z(double t) const
{
    const double ph = omega * t + B;
    return A * std::exp(lambda * t) *
           ((lambda * lambda * lambda - 3.0 * lambda * omega * omega) * std::cos(ph) +
            (omega * omega * omega - 3.0 * lambda * lambda * omega) * std::sin(ph));
}

double OuterSolution::d4z(double t) const
{
    // real/imaginary parts of (lambda + i omega)^4
    const double l2 = lambda * lambda, w2 = omega * omega;
    const double re = l2 * l2 - 6.0 * l2 * w2 + w2 * w2;
    const double im = 4.0 * lambda * omega * (l2 - w2);
    const double ph = omega * t + B;
    return A * std::exp(lambda * t) * (re * std::cos(ph) - im * std::sin(ph));
}

double InnerSolution::z(double t) const
{
    return gamma * std::cos(kappa1 * t) + delta * std::cos(kappa2 * t) + plateau;
}

double InnerSolution::dz(double t) const
{
    return -gamma * kappa1 * std::sin(kappa1 * t) - delta * kappa2 * std::sin(kappa2 * t);
}

double InnerSolution::d2z(double t) const
{
    return -gamma * kappa1 * kappa1 * std::cos(kappa1 * t) -
           delta * kappa2 * kappa2 * std::cos(kappa2 * t);
}

double InnerSolution::d3z(double t) const
{
    return gamma * kappa1 * kappa1 * kappa1 * std::sin(kappa1 * t) +
           delta * kappa2 * kappa2 * kappa2 * std::sin(kappa2 * t);
}

double InnerSolution::d4z(double t) const
{
    const double k14 = kappa1 * kappa1 * kappa1 * kappa1;
    const double k24 = kappa2 * kappa2 * kappa2 * kappa2;
    return gamma * k14 * std::cos(kappa1 * t) + delta * k24 * std::cos(kappa2 * t);
}

double junction_time(const ModelParams& params, double theta)
{
    const double r = std::sqrt(2.0 - params.c * params.c);
    const double k2sq = params.kappa2 * params.kappa2;
    const double n2 = params.kappa1 * (-k2sq + params.xi + params.xi * theta * r);
    const double d2 = params.xi * (theta * k2sq + r + theta * (1.0 - params.c * params.c));
    if (std::abs(d2) < kDenGuard)
        throw discontinuity_error("junction_time: denominator below guard at theta = " +
                                  std::to_string(theta));
    const double t1 = std::atan(n2 / d2) / params.kappa1 -
                      std::numbers::pi / (2.0 * params.kappa1);
    if (!(t1 > -std::numbers::pi / params.kappa1 && t1 < 0.0))
        throw numeric_error("junction_time: t1 = " + std::to_string(t1) +
                            " outside (-pi/kappa1, 0); inconsistent theta");
    return t1;
}

InnerCoefficients recover_inner(const ModelParams& params, double theta)
{
    const double t1 = junction_time(params, theta);
    const double k1 = params.kappa1, k2 = params.kappa2;
    const double c1 = std::cos(k1 * t1), c2 = std::cos(k2 * t1);
    const double s1 = std::sin(k1 * t1), s2 = std::sin(k2 * t1);

    // z2(t1) = -1 and z2'(t1) = theta pin (gamma, delta)
    const double rhs1 = -1.0 / params.xi;
    const double rhs2 = theta;
    const double det = c1 * (-k2 * s2) - c2 * (-k1 * s1);
    if (std::abs(det) < kDenGuard)
        throw consistency_error("recover_inner: singular junction system (det = " +
                                std::to_string(det) + ")");
    const double gamma = (rhs1 * (-k2 * s2) - c2 * rhs2) / det;
    const double delta = (c1 * rhs2 - rhs1 * (-k1 * s1)) / det;

    // the remaining two matching equations must be satisfied automatically at
    // a true root of L = k; treat them as consistency checks
    const double r = std::sqrt(2.0 - params.c * params.c);
    const double res2 = -gamma * k1 * k1 * c1 - delta * k2 * k2 * c2 - (1.0 + theta * r);
    const double res3 = gamma * k1 * k1 * k1 * s1 + delta * k2 * k2 * k2 * s2 -
                        (r + theta * (1.0 - params.c * params.c));
    if (std::abs(res2) > kMatchResidualTol || std::abs(res3) > kMatchResidualTol)
        throw consistency_error("recover_inner: matching residuals " + std::to_string(res2) +
                                ", " + std::to_string(res3) +
                                " exceed tolerance; theta is not a root");

    // magnitude cross-check against the closed-form squares, rationalising
    // -c^2 + sqrt(c^4 - 4 xi) = -4 xi / (c^2 + sqrt(c^4 - 4 xi))
    const double c2c = params.c * params.c;
    const double disc = c2c * c2c - 4.0 * params.xi;
    const double sq = std::sqrt(disc);
    const double neg_branch = -4.0 * params.xi / (c2c + sq);
    const double g2 = (params.xi - 1.0) * (c2c + sq + 2.0 * theta * theta * params.xi) /
                      (params.xi * disc * neg_branch);
    const double d2 = (params.xi - 1.0) * (neg_branch - 2.0 * theta * theta * params.xi) /
                      (params.xi * disc * (c2c + sq));
    if (std::abs(gamma * gamma - g2) > kClosedFormRelTol * std::abs(g2) ||
        std::abs(delta * delta - d2) > kClosedFormRelTol * std::abs(d2))
        throw consistency_error("recover_inner: closed-form gamma^2/delta^2 mismatch");

    return {gamma, delta, t1};
}

OuterCoefficients recover_outer(const ModelParams& params, double theta, double t1)
{
    if (!(t1 < 0.0))
        throw std::domain_error("recover_outer: t1 must be negative");
    // A e^{lambda t1} cos(omega t1 + B) = -1,
    // A e^{lambda t1} sin(omega t1 + B) = -(lambda + theta)/omega
    const double s = -(params.lambda + theta) / params.omega;
    const double amp = std::hypot(1.0, s);
    const double A = amp * std::exp(-params.lambda * t1);
    double B = std::atan2(s, -1.0) - params.omega * t1;
    B = std::remainder(B, 2.0 * std::numbers::pi);
    if (B <= -std::numbers::pi)
        B += 2.0 * std::numbers::pi;
    return {A, B};
}

WaveProfile build_wave(const ModelParams& params, const SolutionCandidate& candidate)
{
    const InnerCoefficients ic = recover_inner(params, candidate.theta);
    const OuterCoefficients oc = recover_outer(params, candidate.theta, ic.t1);
    WaveProfile w;
    w.params = params;
    w.k = candidate.k;
    w.theta = candidate.theta;
    w.t1 = ic.t1;
    w.outer = {oc.A, oc.B, params.lambda, params.omega};
    w.inner = {ic.gamma, ic.delta, params.kappa1, params.kappa2,
               (1.0 - params.xi) / params.xi};
    return w;
}

// Piecewise dispatch; the mirrored outer piece flips the sign of odd
// derivatives. Evenness of the inner piece is exact (cosines only).
double WaveProfile::z(double t) const
{
    if (t >= t1 && t <= -t1)
        return inner.z(t);
    return t < 0.0 ? outer.z(t) : outer.z(-t);
}

double WaveProfile::dz(double t) const
{
    if (t >= t1 && t <= -t1)
        return inner.dz(t);
    return t < 0.0 ? outer.dz(t) : -outer.dz(-t);
}

double WaveProfile::d2z(double t) const
{
    if (t >= t1 && t <= -t1)
        return inner.d2z(t);
    return t < 0.0 ? outer.d2z(t) : outer.d2z(-t);
}

double WaveProfile::d3z(double t) const
{
    if (t >= t1 && t <= -t1)
        return inner.d3z(t);
    return t < 0.0 ? outer.d3z(t) : -outer.d3z(-t);
}

double WaveProfile::d4z(double t) const
{
    if (t >= t1 && t <= -t1)
        return inner.d4z(t);
    return t < 0.0 ? outer.d4z(t) : outer.d4z(-t);
}

VerificationReport verify_wave(const WaveProfile& profile, double tol, int n_samples)
{
    VerificationReport rep;
    const ModelParams& m = profile.params;
    const double t1 = profile.t1;

    // C3 junction mismatch from the analytic one-sided pieces at both +-t1
    double jr = 0.0;
    const double outer_vals[4] = {profile.outer.z(t1), profile.outer.dz(t1),
                                  profile.outer.d2z(t1), profile.outer.d3z(t1)};
    const double inner_lo[4] = {profile.inner.z(t1), profile.inner.dz(t1),
                                profile.inner.d2z(t1), profile.inner.d3z(t1)};
    const double inner_hi[4] = {profile.inner.z(-t1), profile.inner.dz(-t1),
                                profile.inner.d2z(-t1), profile.inner.d3z(-t1)};
    const double mirror_vals[4] = {profile.outer.z(t1), -profile.outer.dz(t1),
                                   profile.outer.d2z(t1), -profile.outer.d3z(t1)};
    for (int d = 0; d < 4; ++d) {
        jr = std::max(jr, std::abs(outer_vals[d] - inner_lo[d]));
        jr = std::max(jr, std::abs(inner_hi[d] - mirror_vals[d]));
    }
    rep.junction_residual = jr;

    // sampling window: junctions plus ten outer decay lengths on each side
    const double half = -t1 + 10.0 / m.lambda;
    const double lo = -half, hi = half;

    double ode = 0.0;
    std::vector<int> z_signs;
    z_signs.reserve(64);
    int wiggles = 0;
    int prev_dz_sign = 0;
    for (int i = 0; i < n_samples; ++i) {
        const double t = lo + (hi - lo) * i / (n_samples - 1);
        const double z = profile.z(t);
        const double zpp = profile.d2z(t);
        const double z4 = profile.d4z(t);
        const double up = std::max(z + 1.0, 0.0);
        const double um = std::max(-(z + 1.0), 0.0);
        ode = std::max(ode, std::abs(z4 + m.c * m.c * zpp + up - m.xi * um - 1.0));

        const double s = z + 1.0;
        const int zs = s > kDeadBand ? 1 : (s < -kDeadBand ? -1 : 0);
        if (zs != 0 && (z_signs.empty() || z_signs.back() != zs))
            z_signs.push_back(zs);

        const double zp = profile.dz(t);
        const int ds = zp > kDeadBand ? 1 : (zp < -kDeadBand ? -1 : 0);
        if (ds != 0) {
            if (prev_dz_sign == 1 && ds == -1 && z <= -1.0)
                ++wiggles; // local maximum inside the trough region
            prev_dz_sign = ds;
        }
    }
    rep.ode_residual = ode;
    rep.trough_count = 0;
    for (const int s : z_signs)
        if (s < 0)
            ++rep.trough_count;
    rep.wiggle_count = wiggles;

    const double edge = std::max(std::abs(profile.z(lo)), std::abs(profile.z(hi)));
    rep.decay_ok = edge <= 10.0 * std::exp(-10.0) * std::abs(profile.outer.A);

    rep.pass = rep.junction_residual <= tol && rep.ode_residual <= tol &&
               rep.trough_count == 1 && rep.decay_ok;
    return rep;
}

double PhysicalWave::u(double x, double tau) const
{
    const double t = std::pow(a, 0.25) * x - wave.params.c * std::sqrt(a) * tau;
    return (wave.z(t) + 1.0) / a;
}

PhysicalWave to_physical(const WaveProfile& profile, double a)
{
    if (!(a > 0.0))
        throw std::domain_error("to_physical: stiffness a must be positive");
    PhysicalWave pw{profile, a, profile.params.xi * a, std::pow(a, 0.25) * profile.params.c};
    return pw;
}

} // namespace beamwave
