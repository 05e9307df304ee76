#include "beamwave/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "beamwave/errors.hpp"

namespace beamwave {

namespace {

// counts 0..6, low to high
const char* kPalette[7] = {"#4575b4", "#91bfdb", "#e0f3f8", "#fee090",
                           "#fc8d59", "#d73027", "#7f0000"};
const char* kEmptyColor = "#c8c8c8";
const char* kErrorColor = "#ff00ff";

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct Canvas {
    std::ostringstream os;
    int width, height;
    double x0, x1, y0, y1; // data ranges
    double ml = 58, mr = 16, mt = 16, mb = 42;

    Canvas(int w, int h, double xa, double xb, double ya, double yb)
        : width(w), height(h), x0(xa), x1(xb), y0(ya), y1(yb)
    {
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
           << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
        os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    }

    double px(double x) const
    {
        return ml + (x - x0) / (x1 - x0) * (width - ml - mr);
    }
    double py(double y) const
    {
        return height - mb - (y - y0) / (y1 - y0) * (height - mt - mb);
    }

    void line(double xa, double ya, double xb, double yb, const char* color,
              double sw = 1.0, const char* dash = nullptr)
    {
        os << "<line x1=\"" << num(xa) << "\" y1=\"" << num(ya) << "\" x2=\"" << num(xb)
           << "\" y2=\"" << num(yb) << "\" stroke=\"" << color << "\" stroke-width=\"" << sw
           << '"';
        if (dash)
            os << " stroke-dasharray=\"" << dash << '"';
        os << "/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const char* color,
                  double sw = 1.4)
    {
        if (pts.empty())
            return;
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << sw
           << "\" points=\"";
        for (const auto& [x, y] : pts)
            os << num(px(x)) << ',' << num(py(y)) << ' ';
        os << "\"/>\n";
    }

    void rect(double xa, double ya, double w, double h, const std::string& fill)
    {
        os << "<rect x=\"" << num(xa) << "\" y=\"" << num(ya) << "\" width=\"" << num(w)
           << "\" height=\"" << num(h) << "\" fill=\"" << fill << "\"/>\n";
    }

    void text(double x, double y, const std::string& s, const char* anchor = "middle",
              int size = 11)
    {
        os << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-family=\"sans-serif\""
           << " font-size=\"" << size << "\" text-anchor=\"" << anchor << "\">" << s
           << "</text>\n";
    }

    void axes(const std::string& xlabel, const std::string& ylabel)
    {
        const char* axis_color = "#202020";
        line(ml, height - mb, width - mr, height - mb, axis_color, 1.2);
        line(ml, mt, ml, height - mb, axis_color, 1.2);
        const int n_ticks = 6;
        for (int i = 0; i <= n_ticks; ++i) {
            const double x = x0 + (x1 - x0) * i / n_ticks;
            const double y = y0 + (y1 - y0) * i / n_ticks;
            line(px(x), height - mb, px(x), height - mb + 4, axis_color);
            text(px(x), height - mb + 16, label(x));
            line(ml - 4, py(y), ml, py(y), axis_color);
            text(ml - 7, py(y) + 4, label(y), "end");
        }
        text((ml + width - mr) / 2.0, height - 8, xlabel);
        text(14, mt + 10, ylabel, "start");
    }

    std::string finish()
    {
        os << "</svg>\n";
        return os.str();
    }
};

void expect_kind(const PlotSpec& spec, PlotKind kind, const char* what)
{
    if (spec.kind != kind)
        throw std::invalid_argument(std::string("render: PlotSpec kind does not match ") + what);
}

double pick(double requested, double fallback)
{
    return std::isnan(requested) ? fallback : requested;
}

std::vector<std::pair<double, double>> read_overlay_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("render: cannot open overlay file " + path);
    std::vector<std::pair<double, double>> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        double a, b;
        if (std::sscanf(line.c_str(), "%lf,%lf", &a, &b) == 2)
            pts.emplace_back(a, b);
    }
    return pts;
}

} // namespace

const char* count_color(int count)
{
    if (count < 0 || count > 6)
        return kErrorColor;
    return kPalette[count];
}

std::string render_l_vs_theta(const PlotSpec& spec, const ModelParams& params,
                              const ThetaWindow& window)
{
    expect_kind(spec, PlotKind::LVsTheta, "L-vs-theta data");
    if (window.empty)
        throw std::invalid_argument("render_l_vs_theta: empty admissible window");

    // sample each continuity branch, staying off the endpoints
    std::vector<std::vector<std::pair<double, double>>> branch_pts;
    double l_min = std::numeric_limits<double>::infinity(), l_max = -l_min;
    for (const auto& br : window.branches) {
        std::vector<std::pair<double, double>> pts;
        const int n = 600;
        const double inset = (br.hi - br.lo) * 1e-6;
        for (int i = 0; i <= n; ++i) {
            const double th = br.lo + inset + (br.hi - br.lo - 2 * inset) * i / n;
            try {
                const double l = eval_L(params, th);
                pts.emplace_back(th, l);
                l_min = std::min(l_min, l);
                l_max = std::max(l_max, l);
            } catch (const discontinuity_error&) {
            }
        }
        branch_pts.push_back(std::move(pts));
    }
    const double x_lo = pick(spec.x_min, window.theta_min);
    const double x_hi = pick(spec.x_max, window.theta2 + 0.05 * (window.theta2 - window.theta_min));
    const double y_lo = pick(spec.y_min, std::floor(std::min(0.0, l_min)));
    const double y_hi = pick(spec.y_max, std::ceil(l_max) + 0.5);

    Canvas cv(spec.width, spec.height, x_lo, x_hi, y_lo, y_hi);
    // integer gridlines f_k
    for (int k = std::max(1, static_cast<int>(std::ceil(y_lo))); k <= y_hi; ++k) {
        cv.line(cv.px(x_lo), cv.py(k), cv.px(x_hi), cv.py(k), "#b0b0b0", 0.8);
        cv.text(cv.px(x_hi) - 4, cv.py(k) - 3, "f_" + std::to_string(k), "end", 10);
    }
    // asymptote markers
    if (window.theta1 > x_lo && window.theta1 < x_hi)
        cv.line(cv.px(window.theta1), cv.py(y_lo), cv.px(window.theta1), cv.py(y_hi),
                "#707070", 1.0, "5,4");
    cv.line(cv.px(window.theta2), cv.py(y_lo), cv.px(window.theta2), cv.py(y_hi), "#707070",
            1.0, "5,4");
    for (const auto& pts : branch_pts)
        cv.polyline(pts, "#1f5fbf", 1.6);
    cv.axes("theta", "L");
    return cv.finish();
}

std::string render_region_map(const PlotSpec& spec, const RegionMap& map)
{
    expect_kind(spec, PlotKind::RegionMap, "region map data");
    if (map.c_values.empty() || map.p_values.empty())
        throw std::invalid_argument("render_region_map: empty map");

    const double x_lo = pick(spec.x_min, map.spec.c_min);
    const double x_hi = pick(spec.x_max, map.spec.c_max);
    const double y_lo = pick(spec.y_min, map.spec.p_min);
    const double y_hi = pick(spec.y_max, map.spec.p_max);
    Canvas cv(spec.width, spec.height, x_lo, x_hi, y_lo, y_hi);

    const double cw = std::max(1.0, (cv.px(x_hi) - cv.px(x_lo)) / map.c_values.size());
    const double ch = std::max(1.0, (cv.py(y_lo) - cv.py(y_hi)) / map.p_values.size());
    for (std::size_t ci = 0; ci < map.c_values.size(); ++ci) {
        for (std::size_t pi = 0; pi < map.p_values.size(); ++pi) {
            const RegionCell& cell = map.at(ci, pi);
            const char* fill = cell.cls == CellClass::Error
                                   ? kErrorColor
                                   : (cell.cls == CellClass::EmptyWindow
                                          ? kEmptyColor
                                          : count_color(cell.count));
            cv.rect(cv.px(map.c_values[ci]) - cw / 2, cv.py(map.p_values[pi]) - ch / 2, cw, ch,
                    fill);
        }
    }
    for (const auto& file : spec.overlay_files) {
        cv.polyline(read_overlay_csv(file), "#000000", 1.6);
    }
    cv.axes("c", "p");
    // legend: the full discrete palette, declared even when a count is absent
    for (int k = 0; k <= 6; ++k) {
        const double lx = cv.px(x_lo) + 8 + 58.0 * k;
        cv.rect(lx, 4, 12, 12, count_color(k));
        cv.text(lx + 16, 14, std::to_string(k), "start", 11);
    }
    cv.rect(cv.px(x_lo) + 8 + 58.0 * 7, 4, 12, 12, kEmptyColor);
    cv.text(cv.px(x_lo) + 8 + 58.0 * 7 + 16, 14, "empty", "start", 11);
    return cv.finish();
}

std::string render_wave_profile(const PlotSpec& spec, const WaveProfile& profile)
{
    expect_kind(spec, PlotKind::WaveProfile, "wave profile data");
    const double half = -profile.t1 + 10.0 / profile.params.lambda;
    const double x_lo = pick(spec.x_min, -half);
    const double x_hi = pick(spec.x_max, half);

    const int n = 2000;
    std::vector<std::pair<double, double>> pts;
    pts.reserve(n + 1);
    double z_min = 0.0, z_max = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double t = x_lo + (x_hi - x_lo) * i / n;
        const double z = profile.z(t);
        pts.emplace_back(t, z);
        z_min = std::min(z_min, z);
        z_max = std::max(z_max, z);
    }
    const double pad = 0.05 * (z_max - z_min + 1.0);
    const double y_lo = pick(spec.y_min, z_min - pad);
    const double y_hi = pick(spec.y_max, z_max + pad);

    Canvas cv(spec.width, spec.height, x_lo, x_hi, y_lo, y_hi);
    if (y_lo < -1.0 && y_hi > -1.0)
        cv.line(cv.px(x_lo), cv.py(-1.0), cv.px(x_hi), cv.py(-1.0), "#b0b0b0", 0.8, "4,3");
    cv.polyline(pts, "#1f5fbf", 1.6);
    cv.axes("t", "z");
    return cv.finish();
}

std::string render_theta_min_curve(const PlotSpec& spec,
                                   const std::vector<std::pair<double, double>>& points)
{
    expect_kind(spec, PlotKind::ThetaMinCurve, "theta_min curve data");
    if (points.empty())
        throw std::invalid_argument("render_theta_min_curve: no points");
    double x_lo = points.front().first, x_hi = points.back().first;
    double y_lo = 0.0, y_hi = -std::numeric_limits<double>::infinity();
    for (const auto& [c, th] : points) {
        y_lo = std::min(y_lo, th);
        y_hi = std::max(y_hi, th);
    }
    Canvas cv(spec.width, spec.height, pick(spec.x_min, x_lo), pick(spec.x_max, x_hi),
              pick(spec.y_min, y_lo * 1.05), pick(spec.y_max, y_hi + 1.0));
    cv.polyline(points, "#1f5fbf", 1.6);
    cv.axes("c", "theta_min");
    return cv.finish();
}

std::string render_bound_curves(const PlotSpec& spec, const std::vector<Curve>& curves)
{
    expect_kind(spec, PlotKind::BoundCurves, "bound curve data");
    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    for (const auto& cu : curves)
        for (const auto& [c, p] : cu.points) {
            x_lo = std::min(x_lo, c);
            x_hi = std::max(x_hi, c);
        }
    if (!std::isfinite(x_lo)) {
        x_lo = 0.0;
        x_hi = 1.0;
    }
    Canvas cv(spec.width, spec.height, pick(spec.x_min, x_lo), pick(spec.x_max, x_hi),
              pick(spec.y_min, 0.0), pick(spec.y_max, 1.0));
    const char* colors[] = {"#808080", "#d73027", "#fc8d59", "#fee090",
                            "#91bfdb", "#4575b4", "#000000", "#e08214"};
    int idx = 0;
    double ly = 14;
    for (const auto& cu : curves) {
        const char* color = colors[idx % 8];
        cv.polyline(cu.points, color, 1.5);
        if (!cu.points.empty()) {
            cv.rect(cv.px(cv.x0) + 8, ly - 9, 12, 4, color);
            cv.text(cv.px(cv.x0) + 24, ly - 3, cu.name, "start", 10);
            ly += 14;
        }
        ++idx;
    }
    cv.axes("c", "p");
    return cv.finish();
}

} // namespace beamwave
