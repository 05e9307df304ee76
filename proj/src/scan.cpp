#include "beamwave/scan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "beamwave/errors.hpp"
#include "beamwave/theta_min.hpp"

namespace beamwave {

namespace {

std::vector<double> grid_values(double lo, double hi, double step)
{
    if (!(step > 0.0))
        throw std::invalid_argument("grid step must be positive");
    if (!(lo <= hi))
        throw std::invalid_argument("grid range is inverted");
    std::vector<double> values;
    // half-step slack so hi itself is included despite rounding
    for (double v = lo; v <= hi + 0.5 * step; v += step)
        values.push_back(std::min(v, hi));
    if (!values.empty() && values.size() >= 2 &&
        values[values.size() - 1] == values[values.size() - 2])
        values.pop_back();
    return values;
}

void validate_spec(const GridSpec& spec)
{
    if (!(spec.c_min >= kCMin && spec.c_max <= kCMax && spec.c_min <= spec.c_max))
        throw std::domain_error("scan: c range outside guarded domain");
    if (!(spec.p_min >= kPMin && spec.p_max <= kPMax && spec.p_min <= spec.p_max))
        throw std::domain_error("scan: p range outside guarded domain");
    if (!(spec.c_step > 0.0 && spec.p_step > 0.0))
        throw std::domain_error("scan: steps must be positive");
}

void fill_column(const std::vector<double>& p_values, double c, RegionCell* out)
{
    double thmin;
    try {
        thmin = theta_min(c).theta_min;
    } catch (const std::exception&) {
        for (std::size_t pi = 0; pi < p_values.size(); ++pi)
            out[pi].cls = CellClass::Error;
        return;
    }
    for (std::size_t pi = 0; pi < p_values.size(); ++pi) {
        RegionCell& cell = out[pi];
        try {
            const ModelParams m = make_params(c, p_values[pi]);
            const CountResult r = count_levels(m, thmin);
            cell.count = r.count;
            cell.bound = r.lemma_bound;
            cell.levels.clear();
            for (const auto& cand : r.candidates)
                cell.levels.push_back(cand.k);
            cell.cls = r.window_empty ? CellClass::EmptyWindow
                                      : (r.count == 0 ? CellClass::Zero : CellClass::Solutions);
        } catch (const std::exception&) {
            cell = RegionCell{};
            cell.cls = CellClass::Error;
        }
    }
}

} // namespace

const RegionCell& RegionMap::at(std::size_t ci, std::size_t pi) const
{
    return cells.at(ci * p_values.size() + pi);
}

int RegionMap::max_count() const
{
    int mx = 0;
    for (const auto& cell : cells)
        if (cell.cls != CellClass::Error)
            mx = std::max(mx, cell.count);
    return mx;
}

RegionMap scan(const GridSpec& spec, unsigned n_threads)
{
    validate_spec(spec);
    RegionMap map;
    map.spec = spec;
    map.c_values = grid_values(spec.c_min, spec.c_max, spec.c_step);
    map.p_values = grid_values(spec.p_min, spec.p_max, spec.p_step);
    map.cells.assign(map.c_values.size() * map.p_values.size(), RegionCell{});

    const std::size_t n_cols = map.c_values.size();
    if (n_threads == 0) {
        n_threads = std::max(1u, std::thread::hardware_concurrency());
    }
    n_threads = static_cast<unsigned>(
        std::min<std::size_t>(n_threads, std::max<std::size_t>(n_cols, 1)));

    if (n_threads <= 1 || n_cols <= 1) {
        for (std::size_t ci = 0; ci < n_cols; ++ci)
            fill_column(map.p_values, map.c_values[ci],
                        map.cells.data() + ci * map.p_values.size());
        return map;
    }

    // columns are independent; workers take strided columns and write into
    // disjoint slices, so the merged result does not depend on scheduling
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned w = 0; w < n_threads; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t ci = w; ci < n_cols; ci += n_threads)
                fill_column(map.p_values, map.c_values[ci],
                            map.cells.data() + ci * map.p_values.size());
        });
    }
    for (auto& t : pool)
        t.join();
    return map;
}

namespace {

// root of f in (lo, hi) by plain bisection; expects f(lo) f(hi) < 0
template <typename F>
double bisect(F f, double lo, double hi)
{
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<Curve> boundary_curves(const GridSpec& spec)
{
    validate_spec(spec);
    const std::vector<double> cs = grid_values(spec.c_min, spec.c_max, spec.c_step);

    std::vector<Curve> curves;
    Curve p0_curve{"p0", {}};
    for (const double c : cs) {
        const double v = p0(c);
        if (v >= spec.p_min && v <= spec.p_max)
            p0_curve.points.emplace_back(c, v);
    }
    curves.push_back(std::move(p0_curve));

    for (int k = 2; k <= 6; ++k) {
        Curve pk{"p_" + std::to_string(k), {}};
        const double v = p_threshold(k);
        if (v >= spec.p_min && v <= spec.p_max) {
            pk.points.emplace_back(spec.c_min, v);
            pk.points.emplace_back(spec.c_max, v);
        }
        curves.push_back(std::move(pk));
    }

    Curve locus{"theta_min_eq_theta1", {}};
    Curve frontier{"empty_window_frontier", {}};
    for (const double c : cs) {
        const double thmin = theta_min(c).theta_min;
        const ModelParams at_lo = make_params(c, spec.p_min);
        const ModelParams at_hi = make_params(c, spec.p_max);

        // theta1 = theta_min locus: theta1 is defined (negative) only for
        // p > p0; restrict the search to that part of the p range
        const double p_lo_1 = std::max(spec.p_min, std::min(spec.p_max, p0(c) + 1e-9));
        const auto theta1_gap = [&](double p) {
            return theta_discontinuities(make_params(c, p)).first - thmin;
        };
        if (p_lo_1 < spec.p_max) {
            const double g_lo = theta1_gap(p_lo_1);
            const double g_hi = theta1_gap(spec.p_max);
            if ((g_lo < 0.0) != (g_hi < 0.0))
                locus.points.emplace_back(c, bisect(theta1_gap, p_lo_1, spec.p_max));
        }

        const auto theta2_gap = [&](double p) {
            return theta_discontinuities(make_params(c, p)).second - thmin;
        };
        const double f_lo = theta_discontinuities(at_lo).second - thmin;
        const double f_hi = theta_discontinuities(at_hi).second - thmin;
        if ((f_lo < 0.0) != (f_hi < 0.0))
            frontier.points.emplace_back(c, bisect(theta2_gap, spec.p_min, spec.p_max));
    }
    curves.push_back(std::move(locus));
    curves.push_back(std::move(frontier));
    return curves;
}

std::vector<BoundViolation> audit_bounds(const RegionMap& map)
{
    std::vector<BoundViolation> violations;
    for (std::size_t ci = 0; ci < map.c_values.size(); ++ci) {
        for (std::size_t pi = 0; pi < map.p_values.size(); ++pi) {
            const RegionCell& cell = map.at(ci, pi);
            if (cell.cls == CellClass::Error)
                continue;
            if (cell.count > cell.bound || cell.count > 6)
                violations.push_back({ci, pi, cell.count, cell.bound});
        }
    }
    return violations;
}

} // namespace beamwave
