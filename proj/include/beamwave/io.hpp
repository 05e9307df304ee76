#ifndef BEAMWAVE_IO_HPP
#define BEAMWAVE_IO_HPP

#include <iosfwd>
#include <string>

#include "beamwave/scan.hpp"
#include "beamwave/wave.hpp"

namespace beamwave {

inline constexpr const char* kVersion = "0.1.0";

/// Fixed 17-significant-digit scientific notation (CSV number format).
std::string format_sci17(double v);

enum class XiDirection { PToXi, XiToP };

/// Exact algebraic conversion between p and xi = p c^4/4 (open intervals;
/// boundary values rejected with std::domain_error).
double convert_xi(double c, double value, XiDirection direction);

/// Profile export: '#'-prefixed metadata header with
/// (c, p, xi, k, theta, t1, A, B, gamma, delta), then t,z,zprime records at
/// n_samples points over [t_lo, t_hi].
void write_profile_csv(std::ostream& os, const WaveProfile& profile, double t_lo,
                       double t_hi, int n_samples);

/// Region map CSV: c,p,count,bound,classification,levels ('levels' is
/// ';'-separated).
void write_region_csv(std::ostream& os, const RegionMap& map);

/// JSON sidecar carrying the GridSpec of a region CSV.
std::string gridspec_json(const GridSpec& spec);

const char* cell_class_name(CellClass cls);

} // namespace beamwave

#endif
