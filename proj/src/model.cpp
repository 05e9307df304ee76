#include "beamwave/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace beamwave {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

LinearRates linear_rates(double c)
{
    if (!(c > 0.0 && c < kSqrt2))
        throw std::domain_error("linear_rates: c = " + std::to_string(c) +
                                " outside (0, sqrt(2))");
    return {std::sqrt(2.0 - c * c) / 2.0, std::sqrt(2.0 + c * c) / 2.0};
}

ModelParams make_params(double c, double p)
{
    if (!(c >= kCMin && c <= kCMax))
        throw std::domain_error("make_params: c = " + std::to_string(c) +
                                " outside guarded [0.01, sqrt(2)-0.01]");
    if (!(p >= kPMin && p <= kPMax))
        throw std::domain_error("make_params: p = " + std::to_string(p) +
                                " outside guarded [1e-6, 1-1e-6]");
    ModelParams m;
    m.c = c;
    m.p = p;
    m.xi = p * c * c * c * c / 4.0;
    const LinearRates lr = linear_rates(c);
    m.lambda = lr.lambda;
    m.omega = lr.omega;
    // kappa1^2 = c^2 (1 - sqrt(1-p))/2 rationalised to avoid cancellation at
    // small p; kappa1^2 kappa2^2 = xi holds exactly in this form.
    const double s = std::sqrt(1.0 - p);
    m.kappa1 = std::sqrt(c * c * p / (2.0 * (1.0 + s)));
    m.kappa2 = std::sqrt(c * c * (1.0 + s) / 2.0);
    return m;
}

double xi_from_p(double c, double p)
{
    if (!(c >= kCMin && c <= kCMax))
        throw std::domain_error("xi_from_p: c outside guarded domain");
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("xi_from_p: p = " + std::to_string(p) +
                                " outside open (0,1)");
    return p * c * c * c * c / 4.0;
}

double p_from_xi(double c, double xi)
{
    if (!(c >= kCMin && c <= kCMax))
        throw std::domain_error("p_from_xi: c outside guarded domain");
    const double cap = c * c * c * c / 4.0;
    if (!(xi > 0.0 && xi < cap))
        throw std::domain_error("p_from_xi: xi = " + std::to_string(xi) +
                                " outside open (0, c^4/4)");
    return 4.0 * xi / (c * c * c * c);
}

} // namespace beamwave
