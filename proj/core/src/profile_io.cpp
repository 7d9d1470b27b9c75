#include "nliouville/profile_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nliouville {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

void write_profile_csv(std::ostream& os, const RadialProfile& profile) {
    os << "r,U,rUprime,mass_cum\n";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        os << fmt17(profile.grid[i]) << ',' << fmt17(profile.U[i]) << ','
           << fmt17(profile.rUprime[i]) << ',' << fmt17(profile.mass_cum[i])
           << '\n';
    }
}

void write_profile_csv(const std::string& path, const RadialProfile& profile) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_profile_csv(os, profile);
}

RadialProfile read_profile_csv(std::istream& is, const Dimension& dim) {
    RadialProfile p;
    p.dim = dim;
    std::string line;
    if (!std::getline(is, line) || line.rfind("r,U,rUprime,mass_cum", 0) != 0)
        throw std::runtime_error("profile CSV: missing header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        double v[4];
        char comma;
        for (int k = 0; k < 4; ++k) {
            if (!(row >> v[k])) throw std::runtime_error("profile CSV: bad row");
            if (k < 3 && !(row >> comma))
                throw std::runtime_error("profile CSV: bad row");
        }
        p.grid.push_back(v[0]);
        p.U.push_back(v[1]);
        p.rUprime.push_back(v[2]);
        p.mass_cum.push_back(v[3]);
    }
    return p;
}

RadialProfile read_profile_csv(const std::string& path, const Dimension& dim) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_profile_csv(is, dim);
}

std::string report_to_json(const MassReport& report, bool pass) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["omega_n"] = report.omega_n;
    j["gamma_num"] = report.gamma_num;
    j["gamma_inf_num"] = report.gamma_inf_num;
    j["total_mass"] = report.total_mass;
    j["eq921_residual"] = report.eq921_residual;
    j["slope_origin"] = report.slope_origin;
    j["slope_infinity"] = report.slope_infinity;
    j["uncertainties"] = {report.slope_origin_unc, report.slope_infinity_unc};
    j["pass"] = pass;
    return j.dump(2);
}

void write_report_json(const std::string& path, const MassReport& report,
                       bool pass) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << report_to_json(report, pass) << '\n';
}

} // namespace nliouville
