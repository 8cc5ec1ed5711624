#include "thermo/acceptance.hpp"

#include "thermo/chords.hpp"
#include "thermo/microstate.hpp"
#include "thermo/models.hpp"
#include "thermo/phase_space.hpp"
#include "thermo/processes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>

namespace thermo::acceptance {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

int uniform_int(Rng& rng, int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

struct RandomSystem {
    MicrostateSpace sp;
    AffineHamiltonian h;
    double T = 1.0;
    Vec q;
};

RandomSystem random_system(Rng& rng, int max_m, int max_n, double energy_scale = 1.0) {
    RandomSystem s;
    const int m = uniform_int(rng, 2, max_m);
    const int n = uniform_int(rng, 1, max_n);
    s.sp = MicrostateSpace::uniform(m);
    for (int i = 0; i < m; ++i) s.sp.weights[i] = uniform(rng, 1.0, 2.0);
    s.h.v_int.resize(m);
    s.h.v_bar.resize(n, m);
    for (int i = 0; i < m; ++i) {
        s.h.v_int[i] = uniform(rng, -energy_scale, energy_scale);
        for (int j = 0; j < n; ++j) s.h.v_bar(j, i) = uniform(rng, -energy_scale, energy_scale);
    }
    s.T = uniform(rng, 0.5, 2.0);
    s.q.resize(n);
    for (int j = 0; j < n; ++j) s.q[j] = uniform(rng, -1.0, 1.0);
    return s;
}

Density random_density(Rng& rng, const MicrostateSpace& sp, bool allow_zeros) {
    Vec r(sp.size());
    for (Eigen::Index i = 0; i < r.size(); ++i) {
        r[i] = std::exp(uniform(rng, -6.0, 3.0));
        if (allow_zeros && uniform(rng, 0.0, 1.0) < 0.2) r[i] = 0.0;
    }
    if (r.maxCoeff() == 0.0) r[0] = 1.0;
    r /= sp.weights.dot(r);
    return {r};
}

FrontFunction zero_section(double lo = -std::numeric_limits<double>::infinity(),
                           double hi = std::numeric_limits<double>::infinity()) {
    return {[](double) { return 0.0; }, [](double) { return 0.0; }, lo, hi};
}

CriterionResult result(int id, std::string name, bool ok, std::string detail) {
    return {id, std::move(name), ok, std::move(detail)};
}

}  // namespace

CriterionResult gas_chord_criterion() {
    const double T0 = 1.0, T1 = 5.0, c = 2.0;
    const Chord ch = gas_chord(T0, T1, c);
    const double P0 = -ch.q;
    const double v = ch.p;
    const double len_err = std::abs(ch.length - 4.0 * std::log(2.0));

    const auto psi = difference_front(Model::gas, T0, T1, c);
    const auto found = find_chords(zero_section(-std::numeric_limits<double>::infinity(), 0.0), psi, -50.0, -1e-3);
    double pos_err = 1.0;
    double unbar_err = 1.0;
    if (found.size() == 1) {
        pos_err = std::abs(found[0].q + 0.5);
        const ReducedPoint end = gas_from_barred({found[0].z_end, Vec::Constant(1, found[0].p), Vec::Constant(1, found[0].q)}, T0);
        unbar_err = std::max({std::abs(end.p[0] - v), std::abs(end.z - ch.z_end), std::abs(found[0].length - ch.length)});
    }
    const bool ok = P0 == 0.5 && v == 2.0 && len_err <= 1e-12 && found.size() == 1 && pos_err <= 1e-8 &&
                    unbar_err <= 1e-8 && ch.direction == 1;
    return result(1, "ideal-gas chord", ok,
                  "P0=" + sci(P0) + " v=" + sci(v) + " |len-4ln2|=" + sci(len_err) + " (<=1e-12), finder chords=" +
                      std::to_string(found.size()) + " |qbar+0.5|=" + sci(pos_err) + " (<=1e-8), unbarred mismatch=" +
                      sci(unbar_err) + " (<=1e-8)");
}

CriterionResult cw_chord_criterion() {
    const double b = 1.0, T0 = 2.0, T1 = 10.0 / 3.0, c = 1.0;
    const Chord ch = cw_chord(T0, T1, c, b);
    const double p_err = std::abs(ch.p - std::tanh(0.75));
    const double Qstar = ch.q + b * ch.p;
    const double Q_err = std::abs(Qstar - 1.5);

    const auto psi = difference_front(Model::cw, T0, T1, c);
    const auto mx = front_argmax(psi, -50.0, 50.0);
    const double max_pos_err = std::abs(mx.x - 1.5);
    const double max_val_err = std::abs(mx.value - ch.length);
    const auto found = find_chords(zero_section(), psi, -50.0, 50.0);
    const double finder_err = found.size() == 1
                                  ? std::max(std::abs(found[0].q - 1.5), std::abs(found[0].length - ch.length))
                                  : 1.0;
    const double asym = std::max(std::abs(psi.value(50.0) - c), std::abs(psi.value(-50.0) + c));

    const bool ok = p_err <= 1e-15 && Q_err <= 1e-12 && max_pos_err <= 1e-8 && max_val_err <= 1e-8 &&
                    finder_err <= 1e-8 && asym <= 1e-6 && ch.direction == 1;
    return result(2, "Curie-Weiss chord", ok,
                  "|p-tanh(0.75)|=" + sci(p_err) + " |Q*-1.5|=" + sci(Q_err) + " argmax err=" + sci(max_pos_err) +
                      " max-vs-length=" + sci(max_val_err) + " finder err=" + sci(finder_err) +
                      " (all <=1e-8), asymptote err=" + sci(asym) + " (<=1e-6)");
}

CriterionResult thermodynamic_identities_criterion(std::uint64_t seed) {
    Rng rng(seed);
    const double h = 1e-5;
    double worst_S = 0.0, worst_p = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = random_system(rng, 64, 3);
        auto Gstar = [&](double T, const Vec& q) { return equilibrium_free_energy(s.sp, s.h, T, q); };
        const auto g = gibbs(s.sp, s.h, s.T, s.q);
        const double S = entropy(s.sp, g.rho_g);
        const Vec p = pressures(s.sp, s.h, g.rho_g);
        const double dGdT = (Gstar(s.T + h, s.q) - Gstar(s.T - h, s.q)) / (2 * h);
        worst_S = std::max(worst_S, std::abs(S + dGdT));
        for (Eigen::Index j = 0; j < s.q.size(); ++j) {
            Vec qp = s.q, qm = s.q;
            qp[j] += h;
            qm[j] -= h;
            const double dGdq = (Gstar(s.T, qp) - Gstar(s.T, qm)) / (2 * h);
            worst_p = std::max(worst_p, std::abs(p[j] + dGdq));
        }
    }
    const bool ok = worst_S < 1e-6 && worst_p < 1e-6;
    return result(3, "thermodynamic identities", ok,
                  "max|S+dG*/dT|=" + sci(worst_S) + " max|p+dG*/dq|=" + sci(worst_p) + " (<1e-6, 100 systems)");
}

CriterionResult gibbs_minimality_criterion(std::uint64_t seed) {
    Rng rng(seed + 1);
    double worst_gap = -std::numeric_limits<double>::infinity();
    double worst_spread = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = random_system(rng, 64, 3);
        const auto g = gibbs(s.sp, s.h, s.T, s.q);
        const double G0 = free_energy(s.sp, s.h, s.T, s.q, g.rho_g);
        for (int k = 0; k < 1000; ++k) {
            const auto d = random_density(rng, s.sp, k % 4 == 0);
            worst_gap = std::max(worst_gap, G0 - free_energy(s.sp, s.h, s.T, s.q, d));
        }
        const Vec var = variational_derivative(s.sp, s.h, s.T, s.q, g.rho_g);
        worst_spread = std::max(worst_spread, var.maxCoeff() - var.minCoeff());
    }
    const bool ok = worst_gap <= 1e-12 && worst_spread < 1e-9;
    return result(4, "Gibbs minimality and stationarity", ok,
                  "max G(rho_G)-G(rho)=" + sci(worst_gap) + " (<=1e-12, 100x1000 densities), variational spread=" +
                      sci(worst_spread) + " (<1e-9)");
}

CriterionResult barred_maps_criterion(std::uint64_t seed) {
    Rng rng(seed + 2);
    const double h = 1e-3;
    double worst_form = 0.0;
    double worst_zero = 0.0;

    // five-point derivative of a scalar along the curve, one Richardson level
    auto d5 = [&](const std::function<double(double)>& f, double s) {
        auto st = [&](double e) { return (f(s - 2 * e) - 8 * f(s - e) + 8 * f(s + e) - f(s + 2 * e)) / (12 * e); };
        return (16.0 * st(0.5 * h) - st(h)) / 15.0;
    };
    // lambda difference along a curve s -> pt(s) and its barred image
    auto form_gap = [&](const std::function<ReducedPoint(double)>& curve,
                        const std::function<ReducedPoint(const ReducedPoint&)>& bar) {
        double worst = 0.0;
        for (int i = 0; i <= 20; ++i) {
            const double s = i / 20.0;
            const auto m = curve(s);
            const auto M = bar(m);
            const double orig = d5([&](double x) { return curve(x).z; }, s) -
                                m.p[0] * d5([&](double x) { return curve(x).q[0]; }, s);
            const double img = d5([&](double x) { return bar(curve(x)).z; }, s) -
                               M.p[0] * d5([&](double x) { return bar(curve(x)).q[0]; }, s);
            worst = std::max(worst, std::abs(img - orig));
        }
        return worst;
    };

    for (int trial = 0; trial < 100; ++trial) {
        const double T0 = uniform(rng, 0.3, 3.0);
        const double b = uniform(rng, 0.2, 2.0);
        double c[9];
        for (double& x : c) x = uniform(rng, -1.0, 1.0);
        const double w1 = uniform(rng, 0.5, 3.0), w2 = uniform(rng, 0.5, 3.0), w3 = uniform(rng, 0.5, 3.0);

        auto cw_curve = [=](double s) {
            return ReducedPoint{c[0] + c[1] * std::sin(w1 * s + c[2]), Vec::Constant(1, 0.9 * std::sin(w2 * s + c[3])),
                                Vec::Constant(1, 2.0 * c[4] + c[5] * std::cos(w3 * s + c[6]))};
        };
        worst_form = std::max(worst_form, form_gap(cw_curve, [=](const ReducedPoint& p) { return cw_to_barred(p, T0, b); }));

        auto gas_curve = [=](double s) {
            return ReducedPoint{c[0] + c[1] * std::sin(w1 * s + c[2]), Vec::Constant(1, 2.0 + c[3] * std::sin(w2 * s)),
                                Vec::Constant(1, -1.5 - c[4] - c[5] * std::cos(w3 * s + c[6]) * 0.4)};
        };
        worst_form = std::max(worst_form, form_gap(gas_curve, [=](const ReducedPoint& p) { return gas_to_barred(p, T0); }));

        // Lambda(T0, 0) onto the zero section
        const CurieWeissParams cw{T0, 0.0, b};
        const auto gas = gas_front({T0, 0.0});
        for (int k = 0; k < 50; ++k) {
            const auto bp = cw_point_from_p(uniform(rng, -0.99, 0.99), cw);
            const auto Z = cw_to_barred({bp.z, Vec::Constant(1, bp.p), Vec::Constant(1, bp.q)}, T0, b);
            worst_zero = std::max({worst_zero, std::abs(Z.z), std::abs(Z.p[0])});
            const double q = -std::exp(uniform(rng, -3.0, 3.0));
            const auto G = gas_to_barred({gas.value(q), Vec::Constant(1, gas.slope(q)), Vec::Constant(1, q)}, T0);
            worst_zero = std::max({worst_zero, std::abs(G.z), std::abs(G.p[0])});
        }
    }
    const bool ok = worst_form < 1e-8 && worst_zero < 1e-10;
    return result(5, "contact-form preservation", ok,
                  "max form residual=" + sci(worst_form) + " (<1e-8, 100 curves per map), zero-section residual=" +
                      sci(worst_zero) + " (<1e-10)");
}

CriterionResult fokker_planck_criterion(std::uint64_t seed) {
    Rng rng(seed + 3);
    double worst_mass = 0.0, worst_G = -std::numeric_limits<double>::infinity();
    double worst_form = std::numeric_limits<double>::infinity(), worst_tv = 0.0;
    double min_rho = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = random_system(rng, 16, 2);
        const double T0 = s.T;
        const double T1 = T0 + uniform(rng, 0.0, 1.5);
        Schedule sched = Schedule::linear(T0, T1, 0.0, 0.0, 1.0, 11);
        const double rate = relaxation_rate_bound(s.sp, s.h, T1, s.q);
        const double t_end = 1.0 + 50.0 / rate;
        const auto rho0 = random_density(rng, s.sp, false);
        RelaxOptions opt;
        opt.dt0 = 0.05;
        opt.record_stride = 16;
        const auto tr = fokker_planck_relax(s.sp, s.h, s.q, sched, rho0, t_end, opt);
        const auto target = gibbs(s.sp, s.h, T1, s.q).rho_g;
        worst_mass = std::max(worst_mass, tr.max_mass_error);
        worst_G = std::max(worst_G, tr.max_G_increase);
        worst_form = std::min(worst_form, tr.min_form_value);
        worst_tv = std::max(worst_tv, total_variation(s.sp, tr.densities.back(), target));
        min_rho = std::min(min_rho, tr.min_density);
    }
    const bool ok = worst_mass <= 1e-10 && worst_G <= 1e-12 && worst_form >= -1e-8 && worst_tv < 1e-6 && min_rho > 0.0;
    return result(6, "Fokker-Planck contract", ok,
                  "mass err=" + sci(worst_mass) + " (<=1e-10), max G increase=" + sci(worst_G) +
                      " (<=1e-12), min lambda=" + sci(worst_form) + " (>=-1e-8), terminal TV=" + sci(worst_tv) +
                      " (<1e-6), min rho=" + sci(min_rho) + ", 50 systems");
}

CriterionResult reduction_soundness_criterion(std::uint64_t seed) {
    Rng rng(seed + 4);
    double worst = std::numeric_limits<double>::infinity();
    double worst_pre = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = uniform_int(rng, 2, 4);
        const int k = uniform_int(rng, 1, n - 1);
        const int n_frozen = uniform_int(rng, 0, n - k);
        ReductionSpec spec;
        spec.k = static_cast<std::size_t>(k);
        spec.T0 = 1.0;
        for (int i = k; i < k + n_frozen; ++i) spec.frozen.push_back({static_cast<std::size_t>(i), 0.0});
        for (int i = k + n_frozen; i < n; ++i) spec.zeroed.push_back(static_cast<std::size_t>(i));

        const double T0 = uniform(rng, 0.5, 2.0);
        double Ta = uniform(rng, 0.0, 1.0), Tb = uniform(rng, 0.0, 1.0);
        const double s0 = uniform(rng, 0.0, 2.0), s1 = uniform(rng, 0.0, 1.0);
        Vec c0(n), c1(n), w(n), ph(n), d0(n), d1(n), kappa(n);
        for (int j = 0; j < n; ++j) {
            c0[j] = uniform(rng, -2.0, 2.0);
            c1[j] = uniform(rng, -1.0, 1.0);
            w[j] = uniform(rng, 0.5, 4.0);
            ph[j] = uniform(rng, 0.0, 6.3);
            d0[j] = uniform(rng, -2.0, 2.0);
            d1[j] = uniform(rng, -1.0, 1.0);
            kappa[j] = uniform(rng, 0.0, 2.0);
        }
        const bool boundary = trial % 5 == 0;  // exactly reversible paths with A = 0
        const double r0 = boundary ? 0.0 : uniform(rng, 0.0, 1.0);
        if (boundary) {
            Ta = Tb = 0.0;
            kappa.setZero();
        }

        for (int i = 0; i <= 32; ++i) {
            const double t = i / 32.0;
            ExtendedPoint pt;
            ExtendedVelocity v;
            pt.T = T0 + Ta * t + Tb * t * t;
            v.dT = Ta + 2 * Tb * t;
            pt.S = s0 + s1 * std::pow(std::sin(3 * t), 2);
            pt.p.resize(n);
            pt.q.resize(n);
            v.dp.resize(n);
            v.dq.resize(n);
            for (int j = 0; j < n; ++j) {
                const bool zeroed = j >= k + n_frozen;
                const bool frozen = j >= k && !zeroed;
                pt.p[j] = zeroed ? 0.0 : c0[j] + c1[j] * std::sin(w[j] * t + ph[j]);
                v.dp[j] = zeroed ? 0.0 : c1[j] * w[j] * std::cos(w[j] * t + ph[j]);
                if (frozen) {
                    pt.q[j] = d0[j] + kappa[j] * (c0[j] * t - c1[j] / w[j] * std::cos(w[j] * t + ph[j]));
                    v.dq[j] = kappa[j] * pt.p[j];
                } else {
                    pt.q[j] = d0[j] + d1[j] * std::cos(w[j] * t);
                    v.dq[j] = -d1[j] * w[j] * std::sin(w[j] * t);
                }
            }
            v.dS = 6 * s1 * std::sin(3 * t) * std::cos(3 * t);
            v.dz = pt.S * v.dT + pt.p.dot(v.dq) + r0 * (1.0 + std::sin(5 * t));
            pt.z = 0.0;

            const double lam_hat = eval_extended_form(pt, v);
            const double A = admissibility_decrement(pt, v, spec);
            worst_pre = std::min({worst_pre, lam_hat + 1e-12, A + 1e-12});
            const double lam = eval_reduced_form(project(pt, spec), project(v, spec));
            worst = std::min(worst, lam);
        }
    }
    const bool ok = worst >= -1e-9 && worst_pre >= 0.0;
    return result(7, "reduction soundness", ok,
                  "min reduced lambda=" + sci(worst) + " (>=-1e-9, 1000 paths x 33 samples), preconditions " +
                      (worst_pre >= 0.0 ? "held" : "violated"));
}

CriterionResult slow_fixed_point_criterion() {
    const double T0 = 1.0, T1 = 5.0, c = 2.0;
    const double p_star = (T1 - T0) / c;
    const double q_star = -c * T0 / (T1 - T0);
    const auto sched = Schedule::linear(T0, T1, 0.0, c, 1.0, 101);

    std::vector<double> xs;
    for (int i = 0; i < 30; ++i) xs.push_back(-3.0 + 2.9 * i / 29.0);
    xs.push_back(q_star);
    const auto tr = run_slow_isotopy(Model::gas, sched, xs);

    double slice_err = 0.0;
    for (std::size_t i = 0; i < sched.t.size(); ++i) {
        const auto front = gas_front({sched.T[i], sched.background[i]});
        slice_err = std::max(slice_err, std::abs(front.slope(q_star) - p_star));
    }
    const auto& chord_path = tr.paths.back();
    double pq_err = 0.0, z_err = 0.0;
    for (std::size_t i = 0; i < chord_path.size(); ++i) {
        const auto& pt = chord_path.points[i];
        pq_err = std::max({pq_err, std::abs(pt.p[0] - p_star), std::abs(pt.q[0] - q_star)});
        z_err = std::max(z_err, std::abs(pt.z - (1.0 + 4.0 * chord_path.times[i]) * std::log(2.0)));
    }
    const bool nonneg = tr.reports.back().verdict == Verdict::nonnegative;
    const bool ok = slice_err <= 1e-9 && pq_err <= 1e-9 && z_err <= 1e-10 && nonneg && tr.max_slice_residual < 1e-8;
    return result(8, "slow-process fixed point", ok,
                  "every slice through (2,-0.5): err=" + sci(slice_err) + ", chord-point path (p,q) err=" + sci(pq_err) +
                      " (<=1e-9), |z-(1+4t)ln2|=" + sci(z_err) + " (<=1e-10), slice residual=" +
                      sci(tr.max_slice_residual) + ", path " + (nonneg ? "non-negative" : "violated"));
}

CriterionResult monotonicity_criterion() {
    const double b = 1.0, p = 0.3;
    double min_val = std::numeric_limits<double>::infinity(), fd_err = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double A = -10.0 + 20.0 * i / 99.0;
        for (int j = 0; j < 100; ++j) {
            const double T = 0.1 + 9.9 * j / 99.0;
            const double q = A - b * p;
            const double val = cw_dz_dT(p, q, T, b);
            const double h = 1e-5 * T;
            const double fd = (cw_z(p, q, {T + h, 0.0, b}) - cw_z(p, q, {T - h, 0.0, b})) / (2 * h);
            min_val = std::min(min_val, val);
            fd_err = std::max(fd_err, std::abs(val - fd));
        }
    }

    double db_err = 0.0;
    for (double T : {0.5, 1.0, 2.0}) {
        for (double bb : {0.5, 1.0, 1.5}) {
            for (double q : {0.1, 0.5, 1.0}) {
                const double h = 1e-5;
                auto z_of_b = [&](double bv) {
                    const auto r = cw_equilibrium(q, {T, 0.0, bv});
                    return r.z;
                };
                const double pe = cw_equilibrium(q, {T, 0.0, bb}).p;
                const double fd = (z_of_b(bb + h) - z_of_b(bb - h)) / (2 * h);
                db_err = std::max(db_err, std::abs(fd - cw_coupling_derivatives(pe, T, q).dz_db));
            }
        }
    }

    double min_deriv = std::numeric_limits<double>::infinity();
    for (int i = 1; i < 100; ++i) {
        const double pp = i / 100.0;
        for (double T : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            for (double q : {0.0, 0.1, 1.0, 10.0}) {
                const auto d = cw_coupling_derivatives(pp, T, q);
                min_deriv = std::min({min_deriv, d.dz_db, d.db_dp});
            }
        }
    }
    const bool ok = min_val > 0.0 && fd_err <= 1e-6 && db_err <= 1e-5 && min_deriv > 0.0;
    return result(9, "monotonicity claims", ok,
                  "min dz/dT=" + sci(min_val) + " (>0), |dz/dT-FD|=" + sci(fd_err) + " (<=1e-6), |dz/db-FD|=" +
                      sci(db_err) + " (<=1e-5), min coupling derivative=" + sci(min_deriv) + " (>0)");
}

CriterionResult chord_existence_criterion(std::uint64_t seed) {
    Rng rng(seed + 5);
    int gas_ok = 0, cw_ok = 0;
    for (int trial = 0; trial < 100; ++trial) {
        {
            const double T0 = uniform(rng, 0.5, 2.0);
            const double T1 = T0 + uniform(rng, 0.5, 5.0);
            const double c = (T1 - T0) * uniform(rng, 0.05, 0.95);  // dilute regime: v > 1
            const auto psi = difference_front(Model::gas, T0, T1, c);
            const auto chords = find_chords(zero_section(-std::numeric_limits<double>::infinity(), 0.0), psi, -100.0, -1e-3);
            if (std::any_of(chords.begin(), chords.end(), [](const Chord& ch) { return ch.direction == 1; })) ++gas_ok;
        }
        {
            const double T0 = uniform(rng, 0.5, 3.0);
            const double T1 = T0 + uniform(rng, 0.2, 3.0);
            const double c = uniform(rng, -3.0, 3.0);
            const auto psi = difference_front(Model::cw, T0, T1, c);
            const auto chords = find_chords(zero_section(), psi, -100.0, 100.0);
            if (std::any_of(chords.begin(), chords.end(), [](const Chord& ch) { return ch.direction == 1; })) ++cw_ok;
        }
    }
    const bool ok = gas_ok == 100 && cw_ok == 100;
    return result(10, "chord existence (direction +1)", ok,
                  "gas " + std::to_string(gas_ok) + "/100, Curie-Weiss " + std::to_string(cw_ok) + "/100");
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    auto guarded = [&](int id, const char* name, const std::function<CriterionResult()>& f) {
        try {
            out.push_back(f());
        } catch (const std::exception& e) {
            out.push_back(result(id, name, false, std::string("exception: ") + e.what()));
        }
    };
    guarded(1, "ideal-gas chord", [] { return gas_chord_criterion(); });
    guarded(2, "Curie-Weiss chord", [] { return cw_chord_criterion(); });
    guarded(3, "thermodynamic identities", [&] { return thermodynamic_identities_criterion(seed); });
    guarded(4, "Gibbs minimality and stationarity", [&] { return gibbs_minimality_criterion(seed); });
    guarded(5, "contact-form preservation", [&] { return barred_maps_criterion(seed); });
    guarded(6, "Fokker-Planck contract", [&] { return fokker_planck_criterion(seed); });
    guarded(7, "reduction soundness", [&] { return reduction_soundness_criterion(seed); });
    guarded(8, "slow-process fixed point", [] { return slow_fixed_point_criterion(); });
    guarded(9, "monotonicity claims", [] { return monotonicity_criterion(); });
    guarded(10, "chord existence (direction +1)", [&] { return chord_existence_criterion(seed); });
    return out;
}

bool print_report(std::ostream& os, const std::vector<CriterionResult>& results) {
    bool all = true;
    for (const auto& r : results) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail << '\n';
        all = all && r.passed;
    }
    os << (all ? "all acceptance criteria passed" : "some acceptance criteria FAILED") << '\n';
    return all;
}

}  // namespace thermo::acceptance
