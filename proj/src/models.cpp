#include "thermo/models.hpp"

#include "thermo/error.hpp"
#include "thermo/roots.hpp"

#include <algorithm>
#include <cmath>

namespace thermo {

double FrontFunction::value(double x) const {
    if (!contains(x)) throw DomainError("front evaluated outside its domain at x = " + std::to_string(x));
    return f(x);
}

double FrontFunction::slope(double x) const {
    if (!contains(x)) throw DomainError("front slope evaluated outside its domain at x = " + std::to_string(x));
    return df(x);
}

double front_consistency_residual(const FrontFunction& front, double a, double b,
                                  std::size_t samples, double rel_step) {
    require(front.contains(a) && front.contains(b) && a < b,
            "front_consistency_residual: [a, b] must lie inside the domain");
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = a + (b - a) * (static_cast<double>(i) + 0.5) / static_cast<double>(samples);
        const double h = rel_step * std::max(1.0, std::abs(x));
        const double fd = (front.value(x + h) - front.value(x - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(fd - front.slope(x)));
    }
    return worst;
}

Model parse_model(const std::string& name) {
    if (name == "gas") return Model::gas;
    if (name == "cw") return Model::cw;
    throw DomainError("unknown model '" + name + "' (expected gas or cw)");
}

std::string to_string(Model m) { return m == Model::gas ? "gas" : "cw"; }

std::string to_string(Stability s) {
    switch (s) {
        case Stability::global_min: return "global_min";
        case Stability::local_min: return "local_min";
        case Stability::unstable: return "unstable";
    }
    return "unknown";
}

void validate(const IdealGasParams& par) {
    require(par.T > 0.0 && std::isfinite(par.T), "gas: T must be > 0");
    require(std::isfinite(par.P_back), "gas: P_back must be finite");
}

void validate(const CurieWeissParams& par) {
    require(par.T > 0.0 && std::isfinite(par.T), "cw: T must be > 0");
    require(par.b > 0.0 && std::isfinite(par.b), "cw: b must be > 0");
    require(std::isfinite(par.H_back), "cw: H_back must be finite");
}

double gas_phi(double T, double x) {
    require(x < 0.0, "gas_phi: argument must be negative");
    return -T * std::log(-x / T);
}

double gas_dphi(double T, double x) {
    require(x < 0.0, "gas_phi: argument must be negative");
    return -T / x;
}

double cw_phi(double T, double x) {
    const double ax = std::abs(x);
    return ax + T * std::log1p(std::exp(-2.0 * ax / T));
}

double cw_dphi(double T, double x) { return std::tanh(x / T); }

FrontFunction gas_front(const IdealGasParams& par) {
    validate(par);
    FrontFunction fr;
    fr.f = [par](double q) { return gas_phi(par.T, q - par.P_back); };
    fr.df = [par](double q) { return gas_dphi(par.T, q - par.P_back); };
    fr.hi = par.P_back;
    return fr;
}

double gas_q_at_volume(const IdealGasParams& par, double v) {
    validate(par);
    require(v > 0.0, "gas: volume must be > 0");
    return par.P_back - par.T / v;
}

double cw_u(double p) {
    require(std::abs(p) < 1.0, "cw: magnetization must lie in (-1, 1)");
    return std::atanh(p);
}

double cw_z(double p, double q, const CurieWeissParams& par) {
    return cw_phi(par.T, q + par.H_back + par.b * p) - 0.5 * par.b * p * p;
}

double cw_self_consistency_residual(double p, double q, const CurieWeissParams& par) {
    return std::abs(p - std::tanh((q + par.H_back + par.b * p) / par.T));
}

CWBranchPoint cw_point_from_p(double p, const CurieWeissParams& par) {
    validate(par);
    CWBranchPoint pt;
    pt.p = p;
    pt.q = -par.b * p + par.T * cw_u(p) - par.H_back;
    pt.z = cw_z(p, pt.q, par);
    return pt;
}

std::vector<CWBranchPoint> cw_magnetization_roots(double q, const CurieWeissParams& par,
                                                  const RootScanOptions& opt) {
    validate(par);
    require(opt.grid_nodes >= 3, "cw roots: grid needs at least 3 nodes");
    const double field = q + par.H_back;
    auto f = [&](double p) { return p - std::tanh((field + par.b * p) / par.T); };
    // f(-1) < 0 < f(1), so the closed interval brackets every root.
    const auto ps = roots::scan_roots(f, -1.0, 1.0, opt.grid_nodes, opt.tol);

    std::vector<CWBranchPoint> out;
    out.reserve(ps.size());
    for (double p : ps) {
        CWBranchPoint pt;
        pt.p = p;
        pt.q = q;
        pt.z = cw_z(p, q, par);
        pt.stability = 1.0 - (par.b / par.T) * (1.0 - p * p) < 0.0 ? Stability::unstable
                                                                    : Stability::local_min;
        out.push_back(pt);
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < out.size(); ++i) {
        const double tie = 1e-12 * std::max(1.0, std::abs(out[best].z));
        if (out[i].z > out[best].z + tie) {
            best = i;
        } else if (std::abs(out[i].z - out[best].z) <= tie && out[best].p < 0.0 && out[i].p >= 0.0) {
            best = i;
        }
    }
    if (!out.empty()) out[best].stability = Stability::global_min;
    return out;
}

CWBranchPoint cw_equilibrium(double q, const CurieWeissParams& par, const RootScanOptions& opt) {
    for (const auto& r : cw_magnetization_roots(q, par, opt)) {
        if (r.stability == Stability::global_min) return r;
    }
    throw NumericalError("cw: no equilibrium magnetization found");
}

double cw_entropy(double p) {
    require(std::abs(p) < 1.0, "cw_entropy: magnetization must lie in (-1, 1)");
    auto term = [](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; };
    return term(0.5 * (1.0 - p)) + term(0.5 * (1.0 + p));
}

namespace {

// tanh a - tanh b without cancellation when both saturate on the same side
double tanh_difference(double a, double b) {
    if (a < 0.0 && b < 0.0) return -tanh_difference(-a, -b);
    if (a <= 0.0 || b <= 0.0 || std::min(a, b) < 1.0) return std::tanh(a) - std::tanh(b);
    const double ea = std::exp(-2.0 * a), eb = std::exp(-2.0 * b);
    return -2.0 * eb * std::expm1(2.0 * (b - a)) / ((1.0 + ea) * (1.0 + eb));
}

}  // namespace

FrontFunction difference_front(Model model, double T0, double T1, double c) {
    require(T0 > 0.0 && T1 > T0, "difference_front: need T1 > T0 > 0");
    require(std::isfinite(c), "difference_front: c must be finite");
    FrontFunction fr;
    if (model == Model::gas) {
        fr.f = [=](double x) { return gas_phi(T1, x - c) - gas_phi(T0, x); };
        fr.df = [=](double x) {
            require(x < 0.0 && x < c, "gas_phi: argument must be negative");
            return (T0 * (x - c) - T1 * x) / (x * (x - c));
        };
        fr.hi = std::min(0.0, c);
    } else {
        fr.f = [=](double x) { return cw_phi(T1, x + c) - cw_phi(T0, x); };
        fr.df = [=](double x) { return tanh_difference((x + c) / T1, x / T0); };
    }
    return fr;
}

FrontMaximum front_argmax(const FrontFunction& front, double lo, double hi, std::size_t grid_nodes,
                          double tol) {
    require(lo < hi && front.contains(lo) && front.contains(hi),
            "front_argmax: scan interval must lie inside the domain");
    auto df = [&](double x) { return front.slope(x); };
    const auto x = roots::linspace(lo, hi, grid_nodes);
    bool found = false;
    FrontMaximum best;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = df(x[i]);
        const double b = df(x[i + 1]);
        if (!(a > 0.0 && b <= 0.0)) continue;
        const double xm = b == 0.0 ? x[i + 1] : roots::bisect(df, x[i], x[i + 1], a, b, tol);
        const double v = front.value(xm);
        if (!found || v > best.value) best = {xm, v};
        found = true;
    }
    if (!found) throw NumericalError("front_argmax: no interior maximum on the scan interval");

    for (double rel : {1e-4, 1e-3, 1e-2}) {
        const double h = rel * std::max(1.0, std::abs(best.x));
        for (double xs : {best.x - h, best.x + h}) {
            if (front.contains(xs) && front.value(xs) > best.value + 1e-14 * std::max(1.0, std::abs(best.value))) {
                throw NumericalError("front_argmax: critical point is not a local maximum");
            }
        }
    }
    return best;
}

ReducedPoint cw_to_barred(const ReducedPoint& pt, double T0, double b) {
    require(pt.dim() == 1 && pt.q.size() == 1, "cw_to_barred: scalar reduced point expected");
    require(T0 > 0.0 && b > 0.0, "cw_to_barred: need T0 > 0 and b > 0");
    const double p = pt.p[0];
    const double Q = pt.q[0] + b * p;
    ReducedPoint out;
    out.q = Vec::Constant(1, Q);
    out.p = Vec::Constant(1, p - cw_dphi(T0, Q));
    out.z = pt.z - cw_phi(T0, Q) + 0.5 * b * p * p;
    return out;
}

ReducedPoint cw_from_barred(const ReducedPoint& pt, double T0, double b) {
    require(pt.dim() == 1 && pt.q.size() == 1, "cw_from_barred: scalar reduced point expected");
    require(T0 > 0.0 && b > 0.0, "cw_from_barred: need T0 > 0 and b > 0");
    const double Q = pt.q[0];
    const double p = pt.p[0] + cw_dphi(T0, Q);
    ReducedPoint out;
    out.p = Vec::Constant(1, p);
    out.q = Vec::Constant(1, Q - b * p);
    out.z = pt.z + cw_phi(T0, Q) - 0.5 * b * p * p;
    return out;
}

ReducedPoint gas_to_barred(const ReducedPoint& pt, double T0) {
    require(pt.dim() == 1 && pt.q.size() == 1, "gas_to_barred: scalar reduced point expected");
    require(T0 > 0.0, "gas_to_barred: T0 must be > 0");
    const double q = pt.q[0];
    require(q < 0.0, "gas_to_barred: q must be negative");
    ReducedPoint out;
    out.q = pt.q;
    out.p = Vec::Constant(1, pt.p[0] - gas_dphi(T0, q));
    out.z = pt.z - gas_phi(T0, q);
    return out;
}

ReducedPoint gas_from_barred(const ReducedPoint& pt, double T0) {
    require(pt.dim() == 1 && pt.q.size() == 1, "gas_from_barred: scalar reduced point expected");
    require(T0 > 0.0, "gas_from_barred: T0 must be > 0");
    const double q = pt.q[0];
    require(q < 0.0, "gas_from_barred: q must be negative");
    ReducedPoint out;
    out.q = pt.q;
    out.p = Vec::Constant(1, pt.p[0] + gas_dphi(T0, q));
    out.z = pt.z + gas_phi(T0, q);
    return out;
}

CouplingDerivatives cw_coupling_derivatives(double p, double T, double q) {
    require(p > 0.0 && p < 1.0, "cw_coupling_derivatives: p must lie in (0, 1)");
    require(T > 0.0, "cw_coupling_derivatives: T must be > 0");
    const double du = 1.0 / (1.0 - p * p);
    CouplingDerivatives d;
    d.dz_db = 0.5 * p * p;
    d.db_dp = T * ((p * du - cw_u(p)) + q / T) / (p * p);
    return d;
}

double cw_dz_dT(double p, double q, double T, double b) {
    require(std::abs(p) < 1.0, "cw_dz_dT: magnetization must lie in (-1, 1)");
    require(T > 0.0, "cw_dz_dT: T must be > 0");
    const double x = std::abs(q + b * p) / T;
    const double e = std::exp(-2.0 * x);
    return std::log1p(e) + 2.0 * x * e / (1.0 + e);
}

}  // namespace thermo
