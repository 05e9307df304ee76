#ifndef BEAMWAVE_SVG_HPP
#define BEAMWAVE_SVG_HPP

#include <limits>
#include <string>
#include <vector>

#include "beamwave/scan.hpp"
#include "beamwave/wave.hpp"

namespace beamwave {

enum class PlotKind {
    LVsTheta,
    RegionMap,
    WaveProfile,
    ThetaMinCurve,
    BoundCurves,
};

/// Axis ranges are optional (NaN = derive from data). Overlay files hold
/// externally supplied (c,p) CSV curves drawn on top of region maps.
struct PlotSpec {
    PlotKind kind;
    double x_min = std::numeric_limits<double>::quiet_NaN();
    double x_max = std::numeric_limits<double>::quiet_NaN();
    double y_min = std::numeric_limits<double>::quiet_NaN();
    double y_max = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::string> overlay_files;
    int width = 760;
    int height = 520;
};

/// Discrete palette for counts 0..6, declared in the region-map legend.
const char* count_color(int count);

/// L(theta) over the admissible window: one polyline per continuity branch,
/// horizontal integer gridlines f_k, vertical asymptote markers at theta1 and
/// theta2. Throws std::invalid_argument if spec.kind mismatches.
std::string render_l_vs_theta(const PlotSpec& spec, const ModelParams& params,
                              const ThetaWindow& window);

/// Count heatmap over the (c,p) grid with the 7-entry legend; overlay files
/// are drawn as black polylines.
std::string render_region_map(const PlotSpec& spec, const RegionMap& map);

/// z(t) with the z = -1 reference line.
std::string render_wave_profile(const PlotSpec& spec, const WaveProfile& profile);

/// theta_min against c.
std::string render_theta_min_curve(const PlotSpec& spec,
                                   const std::vector<std::pair<double, double>>& points);

/// The boundary-curve set in the (c,p) plane.
std::string render_bound_curves(const PlotSpec& spec, const std::vector<Curve>& curves);

} // namespace beamwave

#endif
