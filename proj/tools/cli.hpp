#pragma once

#include <cstddef>
#include <limits>
#include <iosfwd>
#include <string>
#include <vector>

namespace thermo::cli {

/// Every tunable of every subcommand. NaN marks "derive a default".
struct RunConfig {
    std::string model = "gas";

    // chord, isotopy
    // gas defaults 1, 5, 2; cw defaults 2, 10/3, 1; relax ramps 1 -> 2
    double t0 = std::numeric_limits<double>::quiet_NaN();
    double t1 = std::numeric_limits<double>::quiet_NaN();
    double c = std::numeric_limits<double>::quiet_NaN();
    double b = 1.0;
    double lo = std::numeric_limits<double>::quiet_NaN();
    double hi = std::numeric_limits<double>::quiet_NaN();
    std::size_t nodes = 10000;
    std::size_t samples = 401;

    // isotopy schedule
    double tau = 1.0;
    std::size_t steps = 101;
    std::size_t paths = 31;

    // gibbs, relax
    std::string system;
    std::string densities;
    std::vector<double> q;
    double T = 1.0;
    double t_end = std::numeric_limits<double>::quiet_NaN();
    double dt0 = 1e-2;
    std::size_t stride = 1;

    // stirling
    double tc = 1.0;
    double th = 2.0;
    double vmin = 1.0;
    double vmax = 3.0;

    // reduce
    std::string path;
    std::size_t k = 1;
    std::string frozen;                // "index=value,..."
    std::vector<std::size_t> zeroed;
    double reduce_t0 = std::numeric_limits<double>::quiet_NaN();
    std::string mode = "reduce";       // or "project"

    double slack = 1e-8;
    std::size_t seed = 20261019;
    std::string out;
    std::string format = "csv";
};

/// Runs one subcommand; args exclude the program name. Exit status 0 on
/// success, 1 on validation errors and unknown subcommands, 2 on numerical
/// failures.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thermo::cli
