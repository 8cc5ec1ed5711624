#include "thermo/chords.hpp"

#include "thermo/error.hpp"
#include "thermo/roots.hpp"

#include <algorithm>
#include <cmath>

namespace thermo {

Chord make_chord(double q, double p, double z_start, double z_end) {
    Chord c;
    c.q = q;
    c.p = p;
    c.z_start = z_start;
    c.z_end = z_end;
    c.length = std::abs(z_end - z_start);
    c.direction = z_end >= z_start ? 1 : -1;
    return c;
}

Chord gas_chord(double T0, double T1, double c) {
    require(T0 > 0.0 && T1 > T0, "gas_chord: need T1 > T0 > 0");
    require(c > 0.0, "gas_chord: background pressure jump c must be > 0");
    const double v = (T1 - T0) / c;
    const double P0 = c * T0 / (T1 - T0);
    if (v == 1.0) throw DomainError("gas_chord: degenerate chord (v = 1, zero length)");
    return make_chord(-P0, v, T0 * std::log(v), T1 * std::log(v));
}

Chord cw_chord(double T0, double T1, double c, double b) {
    require(T0 > 0.0 && T1 > T0, "cw_chord: need T1 > T0 > 0");
    require(b > 0.0, "cw_chord: b must be > 0");
    require(std::isfinite(c), "cw_chord: c must be finite");
    const double dT = T1 - T0;
    const double p = std::tanh(c / dT);
    const double q = c * T0 / dT - b * p;
    const double z0 = cw_z(p, q, {T0, 0.0, b});
    const double z1 = cw_z(p, q, {T1, c, b});
    return make_chord(q, p, z0, z1);
}

namespace {

// Golden-section minimization of g on [a, b].
template <class G>
double golden_min(G&& g, double a, double b, int iters = 200) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - r * (b - a);
    double x2 = a + r * (b - a);
    double g1 = g(x1);
    double g2 = g(x2);
    for (int i = 0; i < iters && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++i) {
        if (g1 < g2) {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - r * (b - a);
            g1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + r * (b - a);
            g2 = g(x2);
        }
    }
    return g1 < g2 ? x1 : x2;
}

int sign(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

std::vector<Chord> find_chords(const FrontFunction& f0, const FrontFunction& f1, double lo,
                               double hi, const ChordSearchOptions& opt) {
    require(lo < hi, "find_chords: need lo < hi");
    require(opt.grid_nodes >= 3, "find_chords: grid needs at least 3 nodes");
    require(f0.contains(lo) && f0.contains(hi) && f1.contains(lo) && f1.contains(hi),
            "find_chords: scan interval must lie inside both domains");

    auto dpsi = [&](double x) { return f1.slope(x) - f0.slope(x); };
    const auto x = roots::linspace(lo, hi, opt.grid_nodes);
    std::vector<double> d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = dpsi(x[i]);

    if (std::all_of(d.begin(), d.end(), [&](double v) { return std::abs(v) <= opt.tol; })) {
        throw DomainError("find_chords: degenerate family, the front difference is constant");
    }

    struct Root {
        double x;
        bool tangential;
    };
    std::vector<Root> found;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] == 0.0) {
            const bool crossing = i > 0 && i + 1 < n && sign(d[i - 1]) * sign(d[i + 1]) < 0;
            found.push_back({x[i], !crossing && i > 0 && i + 1 < n});
            continue;
        }
        if (i + 1 < n && d[i + 1] != 0.0 && sign(d[i]) != sign(d[i + 1])) {
            found.push_back({roots::bisect(dpsi, x[i], x[i + 1], d[i], d[i + 1], 0.0), false});
        }
        if (i > 0 && i + 1 < n && sign(d[i - 1]) == sign(d[i]) && sign(d[i]) == sign(d[i + 1]) &&
            std::abs(d[i]) <= std::abs(d[i - 1]) && std::abs(d[i]) <= std::abs(d[i + 1])) {
            const double xm = golden_min([&](double s) { return std::abs(dpsi(s)); }, x[i - 1], x[i + 1]);
            if (std::abs(dpsi(xm)) < opt.tol) found.push_back({xm, true});
        }
    }

    std::vector<Chord> out;
    for (const auto& r : found) {
        if (std::abs(dpsi(r.x)) >= opt.tol) continue;  // pole or jump of psi', not a root
        const double z0 = f0.value(r.x);
        const double z1 = f1.value(r.x);
        if (std::abs(z1 - z0) < opt.trivial_length) continue;
        Chord c = make_chord(r.x, f0.slope(r.x), z0, z1);
        c.tangential = r.tangential;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Chord& a, const Chord& b) { return a.q < b.q; });
    return out;
}

}  // namespace thermo
