// beamwave: count, locate, build and verify even one-troughed travelling
// waves of the asymmetrically supported beam model, and map their number
// over the (c,p) parameter plane.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "beamwave/counting.hpp"
#include "beamwave/errors.hpp"
#include "beamwave/io.hpp"
#include "beamwave/levels.hpp"
#include "beamwave/model.hpp"
#include "beamwave/scan.hpp"
#include "beamwave/svg.hpp"
#include "beamwave/theta_min.hpp"
#include "beamwave/wave.hpp"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;   // argument validation
constexpr int kExitDomain = 3;  // domain errors raised by the library
constexpr int kExitNumeric = 4; // numeric failures

struct Output {
    std::string path; // empty -> stdout
    std::string format = "json";
};

std::string resolve_path(const std::string& path)
{
    namespace fs = std::filesystem;
    if (path.empty())
        return path;
    fs::path p(path);
    if (p.is_absolute())
        return path;
    if (const char* dir = std::getenv("BEAMWAVE_OUT_DIR"))
        return (fs::path(dir) / p).string();
    return path;
}

void emit(const Output& out, const std::string& payload)
{
    if (out.path.empty()) {
        std::cout << payload;
        return;
    }
    const std::string full = resolve_path(out.path);
    std::ofstream f(full, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file " + full);
    f << payload;
}

json config_json(const json& params)
{
    return json{{"version", beamwave::kVersion}, {"config", params}};
}

void fail(int code, const std::string& message, const json& context)
{
    json err{{"code", code}, {"message", message}, {"context", context}};
    std::cerr << err.dump() << "\n";
    std::exit(code);
}

// CLI-side validation against the guarded domain happens before any
// computation; violations are usage errors, not library domain errors.
void require_domain(bool ok, const std::string& message, const json& context)
{
    if (!ok)
        fail(kExitUsage, message, context);
}

double resolve_p(double c, std::optional<double> p, std::optional<double> xi, const json& ctx)
{
    require_domain(p.has_value() != xi.has_value(), "exactly one of --p/--xi is required", ctx);
    if (p)
        return *p;
    try {
        return beamwave::p_from_xi(c, *xi);
    } catch (const std::domain_error& e) {
        fail(kExitUsage, e.what(), ctx);
    }
    return 0.0;
}

json candidate_json(const beamwave::SolutionCandidate& cand)
{
    return json{{"k", cand.k},
                {"theta", cand.theta},
                {"branch", cand.branch},
                {"residual", cand.residual}};
}

json window_json(const beamwave::ThetaWindow& w)
{
    json branches = json::array();
    for (const auto& br : w.branches)
        branches.push_back(json{{"lo", br.lo}, {"hi", br.hi}});
    return json{{"theta_min", w.theta_min},
                {"theta1", w.theta1},
                {"theta2", w.theta2},
                {"empty", w.empty},
                {"branches", branches}};
}

json report_json(const beamwave::VerificationReport& rep)
{
    return json{{"junction_residual", rep.junction_residual},
                {"ode_residual", rep.ode_residual},
                {"trough_count", rep.trough_count},
                {"wiggle_count", rep.wiggle_count},
                {"decay_ok", rep.decay_ok},
                {"pass", rep.pass}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"even one-troughed travelling waves of the jumping-nonlinearity beam model"};
    app.require_subcommand(1);

    Output out;
    app.add_option("-o,--output", out.path,
                   "output file (default stdout; relative paths join BEAMWAVE_OUT_DIR)");

    // ---- theta-min ----
    double c = 0.0, tol = 1e-12, oracle_step = 1e-4;
    bool with_oracle = false;
    int sweep = 0;
    double c_lo = beamwave::kCMin, c_hi = beamwave::kCMax;
    auto* cmd_tm = app.add_subcommand("theta-min", "steepest admissible junction slope");
    cmd_tm->add_option("--c", c, "wave speed")->required();
    cmd_tm->add_option("--tol", tol, "bisection tolerance on |F|");
    cmd_tm->add_flag("--oracle", with_oracle, "also run the shooting oracle");
    cmd_tm->add_option("--oracle-step", oracle_step, "oracle integration step");
    cmd_tm->add_option("--sweep", sweep, "sample N values over [--c-min, --c-max] instead");
    cmd_tm->add_option("--c-min", c_lo, "sweep start");
    cmd_tm->add_option("--c-max", c_hi, "sweep end");
    cmd_tm->add_option("--format", out.format, "json|csv|svg")->check(CLI::IsMember({"json", "csv", "svg"}));

    // ---- eval-l ----
    std::optional<double> opt_p, opt_xi;
    double theta = 0.0;
    int samples = 0;
    auto* cmd_l = app.add_subcommand("eval-l", "counting function L");
    cmd_l->add_option("--c", c, "wave speed")->required();
    cmd_l->add_option("--p", opt_p, "asymmetry ratio");
    cmd_l->add_option("--xi", opt_xi, "asymmetric coefficient ratio (converted to p)");
    cmd_l->add_option("--theta", theta, "junction slope (single evaluation)");
    cmd_l->add_option("--samples", samples, "sample the whole admissible window instead");
    cmd_l->add_option("--format", out.format, "json|csv|svg")->check(CLI::IsMember({"json", "csv", "svg"}));

    // ---- count ----
    auto* cmd_count = app.add_subcommand("count", "number of even one-troughed waves");
    cmd_count->add_option("--c", c, "wave speed")->required();
    cmd_count->add_option("--p", opt_p, "asymmetry ratio");
    cmd_count->add_option("--xi", opt_xi, "asymmetric coefficient ratio");
    cmd_count->add_option("--format", out.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    // ---- wave ----
    int level = 0, resolution = 2001;
    double t_span = 0.0;
    auto* cmd_wave = app.add_subcommand("wave", "build one travelling-wave profile");
    cmd_wave->add_option("--c", c, "wave speed")->required();
    cmd_wave->add_option("--p", opt_p, "asymmetry ratio");
    cmd_wave->add_option("--xi", opt_xi, "asymmetric coefficient ratio");
    cmd_wave->add_option("--k", level, "level of the counting equation")->required();
    cmd_wave->add_option("--resolution", resolution, "profile samples for csv export");
    cmd_wave->add_option("--t-span", t_span, "half-width of the export window (0 = auto)");
    cmd_wave->add_option("--format", out.format, "csv|json|svg")->check(CLI::IsMember({"json", "csv", "svg"}));

    // ---- scan ----
    beamwave::GridSpec grid{0.02, beamwave::kCMax, 0.005, 0.002, 0.998, 0.002};
    unsigned threads = 0;
    std::vector<std::string> overlays;
    auto* cmd_scan = app.add_subcommand("scan", "classify a rectangle of the (c,p) plane");
    cmd_scan->add_option("--c-min", grid.c_min, "grid c start");
    cmd_scan->add_option("--c-max", grid.c_max, "grid c end");
    cmd_scan->add_option("--c-step", grid.c_step, "grid c step");
    cmd_scan->add_option("--p-min", grid.p_min, "grid p start");
    cmd_scan->add_option("--p-max", grid.p_max, "grid p end");
    cmd_scan->add_option("--p-step", grid.p_step, "grid p step");
    cmd_scan->add_option("--threads", threads, "worker threads (0 = hardware)");
    cmd_scan->add_option("--overlay", overlays, "overlay curve CSV (c,p rows; svg only)");
    cmd_scan->add_option("--format", out.format, "csv|svg")->check(CLI::IsMember({"csv", "svg"}));

    // ---- bounds ----
    bool theorem = false;
    auto* cmd_bounds = app.add_subcommand("bounds", "boundary curves and the sup-bound check");
    cmd_bounds->add_option("--c-min", grid.c_min, "curve c start");
    cmd_bounds->add_option("--c-max", grid.c_max, "curve c end");
    cmd_bounds->add_option("--c-step", grid.c_step, "curve c step");
    cmd_bounds->add_option("--p-min", grid.p_min, "curve p clip start");
    cmd_bounds->add_option("--p-max", grid.p_max, "curve p clip end");
    cmd_bounds->add_flag("--theorem", theorem, "report max L_s over a 1000-point c grid");
    cmd_bounds->add_option("--format", out.format, "csv|json|svg")->check(CLI::IsMember({"json", "csv", "svg"}));

    // ---- verify ----
    int verify_k = 0;
    double verify_tol = 1e-6;
    int verify_samples = 10000;
    auto* cmd_verify = app.add_subcommand("verify", "build and verify candidate waves");
    cmd_verify->add_option("--c", c, "wave speed")->required();
    cmd_verify->add_option("--p", opt_p, "asymmetry ratio");
    cmd_verify->add_option("--xi", opt_xi, "asymmetric coefficient ratio");
    cmd_verify->add_option("--k", verify_k, "verify a single level (default: all)");
    cmd_verify->add_option("--tol", verify_tol, "residual tolerance");
    cmd_verify->add_option("--samples", verify_samples, "verification samples");
    cmd_verify->add_option("--format", out.format, "json")->check(CLI::IsMember({"json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        json ctx{{"argv", std::vector<std::string>(argv + 1, argv + argc)}};
        json err{{"code", kExitUsage}, {"message", e.what()}, {"context", ctx}};
        std::cerr << err.dump() << "\n";
        return kExitUsage;
    }

    json ctx{{"argv", std::vector<std::string>(argv + 1, argv + argc)}};

    try {
        if (*cmd_tm) {
            if (sweep > 1) {
                require_domain(c_lo >= beamwave::kCMin && c_hi <= beamwave::kCMax && c_lo < c_hi,
                               "sweep range outside guarded c domain", ctx);
                std::vector<std::pair<double, double>> pts;
                for (int i = 0; i < sweep; ++i) {
                    const double cv = c_lo + (c_hi - c_lo) * i / (sweep - 1);
                    pts.emplace_back(cv, beamwave::theta_min(cv, tol).theta_min);
                }
                if (out.format == "svg") {
                    beamwave::PlotSpec ps{beamwave::PlotKind::ThetaMinCurve};
                    emit(out, beamwave::render_theta_min_curve(ps, pts));
                } else if (out.format == "csv") {
                    std::ostringstream os;
                    os << "c,theta_min\n";
                    for (const auto& [cv, th] : pts)
                        os << beamwave::format_sci17(cv) << ',' << beamwave::format_sci17(th)
                           << "\n";
                    emit(out, os.str());
                } else {
                    json j = config_json(json{{"sweep", sweep}, {"c_min", c_lo}, {"c_max", c_hi}});
                    j["points"] = json::array();
                    for (const auto& [cv, th] : pts)
                        j["points"].push_back(json{{"c", cv}, {"theta_min", th}});
                    emit(out, j.dump(2) + "\n");
                }
                return 0;
            }
            require_domain(c >= beamwave::kCMin && c <= beamwave::kCMax,
                           "c outside guarded (0, sqrt(2)) domain", ctx);
            const beamwave::ThetaMinSolution sol = beamwave::theta_min(c, tol);
            json j = config_json(json{{"c", c}, {"tol", tol}});
            j["theta_min"] = sol.theta_min;
            j["t_star"] = sol.t_star;
            j["residual"] = sol.residual;
            if (with_oracle) {
                const beamwave::ShootingResult sr = beamwave::theta_min_shoot(c, oracle_step);
                j["oracle"] = {{"theta_min", sr.theta_min},
                               {"t_star", sr.t_star},
                               {"step", oracle_step}};
            }
            if (out.format == "csv") {
                std::ostringstream os;
                os << "c,theta_min,t_star,residual\n"
                   << beamwave::format_sci17(c) << ',' << beamwave::format_sci17(sol.theta_min)
                   << ',' << beamwave::format_sci17(sol.t_star) << ','
                   << beamwave::format_sci17(sol.residual) << "\n";
                emit(out, os.str());
            } else {
                emit(out, j.dump(2) + "\n");
            }
            return 0;
        }

        if (*cmd_l) {
            require_domain(c >= beamwave::kCMin && c <= beamwave::kCMax,
                           "c outside guarded (0, sqrt(2)) domain", ctx);
            const double p = resolve_p(c, opt_p, opt_xi, ctx);
            require_domain(p >= beamwave::kPMin && p <= beamwave::kPMax,
                           "p outside guarded (0,1) domain", ctx);
            const beamwave::ModelParams m = beamwave::make_params(c, p);
            if (samples > 1 || out.format == "svg") {
                const beamwave::ThetaWindow w = beamwave::admissible_window(m);
                if (out.format == "svg") {
                    beamwave::PlotSpec ps{beamwave::PlotKind::LVsTheta};
                    emit(out, beamwave::render_l_vs_theta(ps, m, w));
                    return 0;
                }
                std::ostringstream os;
                os << "branch,theta,L\n";
                const int n = samples > 1 ? samples : 512;
                for (std::size_t bi = 0; bi < w.branches.size(); ++bi) {
                    const auto& br = w.branches[bi];
                    const double inset = (br.hi - br.lo) * 1e-9;
                    for (int i = 0; i < n; ++i) {
                        const double th = br.lo + inset + (br.hi - br.lo - 2 * inset) * i / (n - 1);
                        os << bi << ',' << beamwave::format_sci17(th) << ','
                           << beamwave::format_sci17(beamwave::eval_L(m, th)) << "\n";
                    }
                }
                emit(out, os.str());
                return 0;
            }
            require_domain(theta < 0.0, "theta must be negative", ctx);
            const double l = beamwave::eval_L(m, theta);
            json j = config_json(json{{"c", c}, {"p", p}, {"theta", theta}});
            j["xi"] = m.xi;
            j["L"] = l;
            emit(out, j.dump(2) + "\n");
            return 0;
        }

        if (*cmd_count) {
            require_domain(c >= beamwave::kCMin && c <= beamwave::kCMax,
                           "c outside guarded (0, sqrt(2)) domain", ctx);
            const double p = resolve_p(c, opt_p, opt_xi, ctx);
            require_domain(p >= beamwave::kPMin && p <= beamwave::kPMax,
                           "p outside guarded (0,1) domain", ctx);
            const beamwave::ModelParams m = beamwave::make_params(c, p);
            const beamwave::CountResult r = beamwave::count_levels(m);
            if (out.format == "csv") {
                std::ostringstream os;
                os << "c,p,count,bound,window_empty,levels\n";
                os << beamwave::format_sci17(c) << ',' << beamwave::format_sci17(p) << ','
                   << r.count << ',' << r.lemma_bound << ',' << (r.window_empty ? 1 : 0) << ',';
                for (std::size_t i = 0; i < r.candidates.size(); ++i) {
                    if (i) os << ';';
                    os << r.candidates[i].k;
                }
                os << "\n";
                emit(out, os.str());
                return 0;
            }
            json j = config_json(json{{"c", c}, {"p", p}});
            j["xi"] = m.xi;
            j["count"] = r.count;
            j["lemma_bound"] = r.lemma_bound;
            j["window_empty"] = r.window_empty;
            j["levels"] = json::array();
            j["candidates"] = json::array();
            for (const auto& cand : r.candidates) {
                j["levels"].push_back(cand.k);
                j["candidates"].push_back(candidate_json(cand));
            }
            j["window"] = window_json(beamwave::admissible_window(m));
            emit(out, j.dump(2) + "\n");
            return 0;
        }

        if (*cmd_wave) {
            require_domain(c >= beamwave::kCMin && c <= beamwave::kCMax,
                           "c outside guarded (0, sqrt(2)) domain", ctx);
            const double p = resolve_p(c, opt_p, opt_xi, ctx);
            require_domain(p >= beamwave::kPMin && p <= beamwave::kPMax,
                           "p outside guarded (0,1) domain", ctx);
            require_domain(level >= 1, "--k must be a positive integer", ctx);
            const beamwave::ModelParams m = beamwave::make_params(c, p);
            const beamwave::CountResult r = beamwave::count_levels(m);
            const beamwave::SolutionCandidate* cand = nullptr;
            for (const auto& cc : r.candidates)
                if (cc.k == level)
                    cand = &cc;
            if (!cand)
                throw beamwave::bracket_error("no candidate with k = " + std::to_string(level) +
                                              " at (c, p) = (" + std::to_string(c) + ", " +
                                              std::to_string(p) + ")");
            const beamwave::WaveProfile w = beamwave::build_wave(m, *cand);
            const double half = t_span > 0.0 ? t_span : -w.t1 + 10.0 / m.lambda;
            if (out.format == "csv") {
                std::ostringstream os;
                beamwave::write_profile_csv(os, w, -half, half, resolution);
                emit(out, os.str());
                return 0;
            }
            if (out.format == "svg") {
                beamwave::PlotSpec ps{beamwave::PlotKind::WaveProfile};
                emit(out, beamwave::render_wave_profile(ps, w));
                return 0;
            }
            const beamwave::VerificationReport rep = beamwave::verify_wave(w);
            json j = config_json(json{{"c", c}, {"p", p}, {"k", level}});
            j["xi"] = m.xi;
            j["theta"] = w.theta;
            j["t1"] = w.t1;
            j["A"] = w.outer.A;
            j["B"] = w.outer.B;
            j["gamma"] = w.inner.gamma;
            j["delta"] = w.inner.delta;
            j["verification"] = report_json(rep);
            emit(out, j.dump(2) + "\n");
            return 0;
        }

        if (*cmd_scan) {
            const beamwave::RegionMap map = beamwave::scan(grid, threads);
            if (out.format == "svg") {
                beamwave::PlotSpec ps{beamwave::PlotKind::RegionMap};
                ps.overlay_files = overlays;
                emit(out, beamwave::render_region_map(ps, map));
                return 0;
            }
            std::ostringstream os;
            beamwave::write_region_csv(os, map);
            emit(out, os.str());
            if (!out.path.empty()) {
                // JSON sidecar with the grid specification next to the CSV
                const std::string side = resolve_path(out.path) + ".gridspec.json";
                std::ofstream f(side, std::ios::binary);
                if (f)
                    f << beamwave::gridspec_json(grid);
            }
            return 0;
        }

        if (*cmd_bounds) {
            if (theorem) {
                std::vector<double> grid_c;
                for (int i = 0; i < 1000; ++i)
                    grid_c.push_back(beamwave::kCMin +
                                     (beamwave::kCMax - beamwave::kCMin) * i / 999.0);
                const beamwave::TheoremReport tr = beamwave::theorem_check(grid_c);
                json j = config_json(json{{"grid_points", 1000}});
                j["max_ls"] = tr.max_ls;
                j["argmax_c"] = tr.argmax_c;
                j["pass"] = tr.pass;
                emit(out, j.dump(2) + "\n");
                return 0;
            }
            const std::vector<beamwave::Curve> curves = beamwave::boundary_curves(grid);
            if (out.format == "svg") {
                beamwave::PlotSpec ps{beamwave::PlotKind::BoundCurves};
                emit(out, beamwave::render_bound_curves(ps, curves));
                return 0;
            }
            if (out.format == "csv") {
                std::ostringstream os;
                os << "curve,c,p\n";
                for (const auto& cu : curves)
                    for (const auto& [cv, pv] : cu.points)
                        os << cu.name << ',' << beamwave::format_sci17(cv) << ','
                           << beamwave::format_sci17(pv) << "\n";
                emit(out, os.str());
                return 0;
            }
            json j = config_json(json{{"c_min", grid.c_min}, {"c_max", grid.c_max}});
            j["curves"] = json::array();
            for (const auto& cu : curves) {
                json pts = json::array();
                for (const auto& [cv, pv] : cu.points)
                    pts.push_back(json{{"c", cv}, {"p", pv}});
                j["curves"].push_back(json{{"name", cu.name}, {"points", pts}});
            }
            emit(out, j.dump(2) + "\n");
            return 0;
        }

        if (*cmd_verify) {
            require_domain(c >= beamwave::kCMin && c <= beamwave::kCMax,
                           "c outside guarded (0, sqrt(2)) domain", ctx);
            const double p = resolve_p(c, opt_p, opt_xi, ctx);
            require_domain(p >= beamwave::kPMin && p <= beamwave::kPMax,
                           "p outside guarded (0,1) domain", ctx);
            const beamwave::ModelParams m = beamwave::make_params(c, p);
            const beamwave::CountResult r = beamwave::count_levels(m);
            json j = config_json(json{{"c", c}, {"p", p}, {"tol", verify_tol}});
            j["count"] = r.count;
            j["reports"] = json::array();
            bool all_pass = true;
            for (const auto& cand : r.candidates) {
                if (verify_k != 0 && cand.k != verify_k)
                    continue;
                const beamwave::WaveProfile w = beamwave::build_wave(m, cand);
                const beamwave::VerificationReport rep =
                    beamwave::verify_wave(w, verify_tol, verify_samples);
                json jr = report_json(rep);
                jr["k"] = cand.k;
                jr["theta"] = cand.theta;
                j["reports"].push_back(jr);
                all_pass = all_pass && rep.pass;
            }
            j["all_pass"] = all_pass;
            emit(out, j.dump(2) + "\n");
            return 0;
        }
    } catch (const std::domain_error& e) {
        fail(kExitDomain, e.what(), ctx);
    } catch (const beamwave::numeric_error& e) {
        fail(kExitNumeric, e.what(), ctx);
    } catch (const std::exception& e) {
        fail(kExitNumeric, e.what(), ctx);
    }
    return 0;
}
