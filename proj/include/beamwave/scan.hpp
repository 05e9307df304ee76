#ifndef BEAMWAVE_SCAN_HPP
#define BEAMWAVE_SCAN_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "beamwave/levels.hpp"

namespace beamwave {

/// Rectangular (c,p) grid; cell values are point samples at the nodes.
struct GridSpec {
    double c_min;
    double c_max;
    double c_step;
    double p_min;
    double p_max;
    double p_step;
};

enum class CellClass {
    EmptyWindow,
    Zero,
    Solutions,
    Error, ///< per-cell failure sentinel; excluded from audits
};

struct RegionCell {
    int count = 0;
    int bound = 0;
    CellClass cls = CellClass::Zero;
    std::vector<int> levels;
};

struct RegionMap {
    GridSpec spec;
    std::vector<double> c_values;
    std::vector<double> p_values;
    std::vector<RegionCell> cells; ///< index ci * p_values.size() + pi

    const RegionCell& at(std::size_t ci, std::size_t pi) const;
    int max_count() const; ///< largest count over non-error cells (0 if none)
};

/// Sweeps the grid; theta_min(c) is solved once per column and reused across
/// p. Columns are independent and may run on a worker pool (n_threads = 0
/// picks the hardware count); results merge deterministically by index.
/// Per-cell failures become CellClass::Error, never abort the scan.
RegionMap scan(const GridSpec& spec, unsigned n_threads = 0);

/// Named polyline in the (c,p) plane.
struct Curve {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

/// Boundary curves behind the region picture: p0(c), the p_k horizontals
/// (k = 2..6), the theta_min = theta1 locus and the empty-window frontier
/// theta_min = theta2 (roots in p per column, by bisection). A curve absent
/// in range comes back as an empty polyline.
std::vector<Curve> boundary_curves(const GridSpec& spec);

struct BoundViolation {
    std::size_t ci;
    std::size_t pi;
    int count;
    int bound;
};

/// Cells with count > bound or count > 6; expected empty.
std::vector<BoundViolation> audit_bounds(const RegionMap& map);

} // namespace beamwave

#endif
