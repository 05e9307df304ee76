#include "beamwave/io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace beamwave {

std::string format_sci17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

double convert_xi(double c, double value, XiDirection direction)
{
    return direction == XiDirection::PToXi ? xi_from_p(c, value) : p_from_xi(c, value);
}

void write_profile_csv(std::ostream& os, const WaveProfile& profile, double t_lo,
                       double t_hi, int n_samples)
{
    if (n_samples < 2)
        throw std::invalid_argument("write_profile_csv: need at least 2 samples");
    const ModelParams& m = profile.params;
    os << "# beamwave profile v" << kVersion << "\n";
    os << "# c=" << format_sci17(m.c) << " p=" << format_sci17(m.p)
       << " xi=" << format_sci17(m.xi) << "\n";
    os << "# k=" << profile.k << " theta=" << format_sci17(profile.theta)
       << " t1=" << format_sci17(profile.t1) << "\n";
    os << "# A=" << format_sci17(profile.outer.A) << " B=" << format_sci17(profile.outer.B)
       << " gamma=" << format_sci17(profile.inner.gamma)
       << " delta=" << format_sci17(profile.inner.delta) << "\n";
    os << "t,z,zprime\n";
    for (int i = 0; i < n_samples; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / (n_samples - 1);
        os << format_sci17(t) << ',' << format_sci17(profile.z(t)) << ','
           << format_sci17(profile.dz(t)) << "\n";
    }
}

const char* cell_class_name(CellClass cls)
{
    switch (cls) {
    case CellClass::EmptyWindow: return "EMPTY_WINDOW";
    case CellClass::Zero: return "ZERO";
    case CellClass::Solutions: return "N_SOLUTIONS";
    case CellClass::Error: return "ERROR";
    }
    return "UNKNOWN";
}

void write_region_csv(std::ostream& os, const RegionMap& map)
{
    os << "c,p,count,bound,classification,levels\n";
    for (std::size_t ci = 0; ci < map.c_values.size(); ++ci) {
        for (std::size_t pi = 0; pi < map.p_values.size(); ++pi) {
            const RegionCell& cell = map.at(ci, pi);
            os << format_sci17(map.c_values[ci]) << ',' << format_sci17(map.p_values[pi])
               << ',' << cell.count << ',' << cell.bound << ',' << cell_class_name(cell.cls)
               << ',';
            for (std::size_t i = 0; i < cell.levels.size(); ++i) {
                if (i) os << ';';
                os << cell.levels[i];
            }
            os << "\n";
        }
    }
}

std::string gridspec_json(const GridSpec& spec)
{
    nlohmann::json j;
    j["version"] = kVersion;
    j["gridspec"] = {{"c_min", spec.c_min}, {"c_max", spec.c_max}, {"c_step", spec.c_step},
                     {"p_min", spec.p_min}, {"p_max", spec.p_max}, {"p_step", spec.p_step}};
    return j.dump(2) + "\n";
}

} // namespace beamwave
