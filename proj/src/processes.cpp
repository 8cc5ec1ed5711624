#include "thermo/processes.hpp"

#include "thermo/error.hpp"
#include "thermo/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace thermo {

// ---------------------------------------------------------------- schedule

void Schedule::validate() const {
    require(t.size() >= 2, "Schedule: need at least 2 time nodes");
    require(T.size() == t.size() && background.size() == t.size(),
            "Schedule: t, T and background must have equal length");
    for (std::size_t i = 0; i < t.size(); ++i) {
        require(std::isfinite(t[i]) && std::isfinite(background[i]), "Schedule: entries must be finite");
        require(T[i] > 0.0 && std::isfinite(T[i]),
                "Schedule: temperature must be > 0 at node " + std::to_string(i));
        if (i > 0) require(t[i] > t[i - 1], "Schedule: times must be strictly increasing");
    }
}

bool Schedule::temperature_nondecreasing() const {
    return std::is_sorted(T.begin(), T.end());
}

bool Schedule::admissible() const {
    return temperature_nondecreasing() &&
           std::all_of(background.begin(), background.end(),
                       [&](double b) { return b == background.front(); });
}

namespace {

double interpolate(const std::vector<double>& t, const std::vector<double>& y, double time) {
    if (time <= t.front()) return y.front();
    if (time >= t.back()) return y.back();
    const auto it = std::upper_bound(t.begin(), t.end(), time);
    const auto i = static_cast<std::size_t>(it - t.begin());
    const double s = (time - t[i - 1]) / (t[i] - t[i - 1]);
    return y[i - 1] + s * (y[i] - y[i - 1]);
}

}  // namespace

double Schedule::temperature_at(double time) const { return interpolate(t, T, time); }
double Schedule::background_at(double time) const { return interpolate(t, background, time); }

Schedule Schedule::linear(double T0, double T1, double bg0, double bg1, double tau, std::size_t nodes) {
    require(tau > 0.0, "Schedule: duration must be > 0");
    Schedule s;
    s.t = roots::linspace(0.0, tau, nodes);
    for (double ti : s.t) {
        const double r = ti / tau;
        s.T.push_back(T0 + (T1 - T0) * r);
        s.background.push_back(bg0 + (bg1 - bg0) * r);
    }
    s.validate();
    return s;
}

Schedule Schedule::constant_temperature(double T, double tau) { return linear(T, T, 0.0, 0.0, tau, 2); }

// ---------------------------------------------------------------- slow isotopies

namespace {

ReducedPoint scalar_point(double z, double p, double q) {
    return {z, Vec::Constant(1, p), Vec::Constant(1, q)};
}

ReducedPath gas_path(const Schedule& s, double x, double& residual) {
    ReducedPath path;
    path.times = s.t;
    for (std::size_t i = 0; i < s.t.size(); ++i) {
        const IdealGasParams par{s.T[i], s.background[i]};
        if (!(x < par.P_back)) {
            throw DomainError("isotopy: q = " + std::to_string(x) + " leaves the gas domain at time node " +
                              std::to_string(i) + " (t = " + std::to_string(s.t[i]) + ")");
        }
        const auto front = gas_front(par);
        const double p = front.slope(x);
        const double z = front.value(x);
        // (P + P_back) v = T with P = -q
        residual = std::max(residual, std::abs((-x + par.P_back) * p - par.T));
        path.points.push_back(scalar_point(z, p, x));
    }
    return path;
}

ReducedPath cw_path(const Schedule& s, double x, const IsotopyOptions& opt, double& residual) {
    const CurieWeissParams par0{s.T[0], s.background[0], opt.b};
    const auto start = cw_point_from_p(x, par0);
    const double q = start.q;
    ReducedPath path;
    path.times = s.t;
    path.points.push_back(scalar_point(start.z, start.p, q));
    residual = std::max(residual, cw_self_consistency_residual(start.p, q, par0));
    double p_prev = start.p;
    for (std::size_t i = 1; i < s.t.size(); ++i) {
        const CurieWeissParams par{s.T[i], s.background[i], opt.b};
        const auto roots = cw_magnetization_roots(q, par, opt.roots);
        const auto nearest = std::min_element(roots.begin(), roots.end(), [&](const auto& a, const auto& b) {
            return std::abs(a.p - p_prev) < std::abs(b.p - p_prev);
        });
        if (nearest == roots.end() || std::abs(nearest->p - p_prev) > opt.branch_jump) {
            throw NumericalError("isotopy: Curie-Weiss branch from p = " + std::to_string(x) +
                                 " lost at time node " + std::to_string(i) + " (t = " +
                                 std::to_string(s.t[i]) + ")");
        }
        residual = std::max({residual, cw_self_consistency_residual(nearest->p, q, par),
                             std::abs(nearest->z - cw_z(nearest->p, q, par))});
        path.points.push_back(scalar_point(nearest->z, nearest->p, q));
        p_prev = nearest->p;
    }
    return path;
}

}  // namespace

IsotopyTrace run_slow_isotopy(Model model, const Schedule& sched, const std::vector<double>& x_grid,
                              const IsotopyOptions& opt) {
    sched.validate();
    require(!x_grid.empty(), "isotopy: empty x grid");
    if (model == Model::cw) validate(CurieWeissParams{sched.T.front(), sched.background.front(), opt.b});

    IsotopyTrace tr;
    tr.model = model;
    tr.x_grid = x_grid;
    for (double x : x_grid) {
        auto path = model == Model::gas ? gas_path(sched, x, tr.max_slice_residual)
                                        : cw_path(sched, x, opt, tr.max_slice_residual);
        tr.reports.push_back(check_path_nonnegative(path, opt.slack));
        tr.paths.push_back(std::move(path));
    }
    return tr;
}

// ---------------------------------------------------------------- jumps

AffineHamiltonian shifted_hamiltonian(const AffineHamiltonian& h, const Vec& alpha) {
    require(alpha.size() == h.n(), "jump: background jump must have length n");
    AffineHamiltonian out = h;
    out.v_int += h.v_bar.transpose() * alpha;
    return out;
}

JumpRecord ultrafast_jump(const MicrostateSpace& sp, const AffineHamiltonian& h, double T0, double T1,
                          const Vec& q, const Vec& background_jump, double tol) {
    require(T0 > 0.0 && T1 > 0.0, "jump: temperatures must be > 0");
    h.validate(sp);
    ReductionSpec temperature_only;
    temperature_only.k = static_cast<std::size_t>(h.n());

    JumpRecord rec;
    rec.post_jump = shifted_hamiltonian(h, background_jump);
    rec.frozen_density = gibbs(sp, h, T0, q).rho_g;
    rec.before = project(lift_to_extended(sp, h, T0, q, rec.frozen_density), temperature_only);
    rec.after_stage1 = project(lift_to_extended(sp, rec.post_jump, T1, q, rec.frozen_density), temperature_only);
    rec.terminal_gibbs = gibbs(sp, rec.post_jump, T1, q).rho_g;
    rec.terminal_equilibrium =
        project(lift_to_extended(sp, rec.post_jump, T1, q, rec.terminal_gibbs), temperature_only);
    rec.is_ultrafast = (rec.terminal_gibbs.rho - rec.frozen_density.rho).cwiseAbs().maxCoeff() <= tol;
    return rec;
}

// ---------------------------------------------------------------- Fokker-Planck

namespace {

struct FreeEnergyEval {
    const Vec& w;
    const Vec& H;

    double entropy(const Vec& rho) const {
        double s = 0.0;
        for (Eigen::Index i = 0; i < rho.size(); ++i) s -= w[i] * rho[i] * std::log(rho[i]);
        return s;
    }
    double operator()(double T, const Vec& rho) const { return -T * entropy(rho) + w.cwiseProduct(rho).dot(H); }
};

constexpr double kGIncreaseSlack = 1e-13;

}  // namespace

RelaxTrace fokker_planck_relax(const MicrostateSpace& sp, const AffineHamiltonian& h, const Vec& q,
                               const Schedule& temperature, const Density& rho0, double t_end,
                               const RelaxOptions& opt) {
    validate(sp, rho0);
    h.validate(sp);
    temperature.validate();
    require(temperature.temperature_nondecreasing(), "relax: temperature schedule must be non-decreasing");
    require((rho0.rho.array() > 0.0).all(), "relax: initial density must be strictly positive");
    require(opt.dt0 > 0.0 && t_end > 0.0, "relax: dt0 and t_end must be > 0");
    require(opt.record_stride >= 1, "relax: record stride must be >= 1");

    const Vec& w = sp.weights;
    const Vec H = h.energies(q);
    const double wsum = w.sum();
    const FreeEnergyEval G{w, H};
    auto pressures_of = [&](const Vec& rho) -> Vec { return -(h.v_bar * w.cwiseProduct(rho)); };

    RelaxTrace tr;
    double t = 0.0;
    Vec rho = rho0.rho;
    double T = temperature.temperature_at(t);
    double z = -G(T, rho);
    double pending_form_min = std::numeric_limits<double>::infinity();

    auto record = [&]() {
        tr.t_grid.push_back(t);
        tr.temperatures.push_back(T);
        tr.densities.push_back(Density{rho});
        tr.G_values.push_back(-z);
        tr.reduced_path.times.push_back(t);
        tr.reduced_path.points.push_back({z, pressures_of(rho), q});
    };
    record();
    tr.min_form_value = std::numeric_limits<double>::infinity();
    tr.min_density = rho.minCoeff();
    tr.max_mass_error = std::abs(w.dot(rho) - 1.0);
    tr.max_G_increase = -std::numeric_limits<double>::infinity();

    double dt = opt.dt0;
    while (t < t_end) {
        // the linearized generator has spectrum in [0, T / min rho]; stay inside the monotone Euler region
        const double stiff = rho.minCoeff() / T;
        const double step = std::min({dt, stiff, t_end - t});
        const Vec g = (T * (1.0 + rho.array().log())).matrix() + H;
        const double gbar = w.dot(g) / wsum;
        const Vec cand = rho - step * (g.array() - gbar).matrix();
        const double G_old = G(T, rho);
        const bool positive = cand.minCoeff() >= opt.min_density;
        const double G_new = positive ? G(T, cand) : std::numeric_limits<double>::infinity();
        if (!positive || G_new > G_old + kGIncreaseSlack) {
            ++tr.rejected_steps;
            dt = 0.5 * step;
            if (dt < opt.min_dt) {
                throw NumericalError("relax: step size underflow at t = " + std::to_string(t));
            }
            continue;
        }

        const double t_new = step >= t_end - t ? t_end : t + step;
        const double T_new = temperature.temperature_at(t_new);
        const double z_new = -G(T_new, cand);
        const double form = (z_new - z) / (t_new - t);

        tr.max_G_increase = std::max(tr.max_G_increase, G_new - G_old);
        tr.min_form_value = std::min(tr.min_form_value, form);
        pending_form_min = std::min(pending_form_min, form);
        rho = cand;
        t = t_new;
        T = T_new;
        z = z_new;
        ++tr.accepted_steps;
        tr.min_density = std::min(tr.min_density, rho.minCoeff());
        tr.max_mass_error = std::max(tr.max_mass_error, std::abs(w.dot(rho) - 1.0));

        if (tr.accepted_steps % opt.record_stride == 0 || t >= t_end) {
            // With a stride > 1 the recorded value is the smallest over the skipped steps.
            tr.form_values.push_back(pending_form_min);
            pending_form_min = std::numeric_limits<double>::infinity();
            record();
        }
        dt = std::min(opt.dt0, step * opt.growth);
    }
    return tr;
}

double relaxation_rate_bound(const MicrostateSpace& sp, const AffineHamiltonian& h, double T,
                             const Vec& q) {
    return T / gibbs(sp, h, T, q).rho_g.rho.maxCoeff();
}

double estimate_decay_rate(const RelaxTrace& trace) {
    const std::size_t n = trace.G_values.size();
    require(n >= 8, "estimate_decay_rate: trace too short");
    const double G_end = trace.G_values.back();
    double st = 0, sy = 0, stt = 0, sty = 0;
    std::size_t cnt = 0;
    for (std::size_t i = n / 2; i + 1 < n; ++i) {
        const double gap = trace.G_values[i] - G_end;
        if (gap <= 1e-13 * std::max(1.0, std::abs(G_end))) continue;
        const double y = std::log(gap);
        st += trace.t_grid[i];
        sy += y;
        stt += trace.t_grid[i] * trace.t_grid[i];
        sty += trace.t_grid[i] * y;
        ++cnt;
    }
    if (cnt < 3) {
        throw NumericalError("estimate_decay_rate: not enough resolvable free-energy gap");
    }
    const double c = static_cast<double>(cnt);
    const double slope = (c * sty - st * sy) / (c * stt - st * st);
    return -slope;
}

// ---------------------------------------------------------------- Stirling

std::string to_string(FormSign s) {
    switch (s) {
        case FormSign::zero: return "zero";
        case FormSign::positive: return "positive";
        case FormSign::negative: return "negative";
    }
    return "unknown";
}

namespace {

StirlingSegment isotherm(const std::string& name, double T, double v_from, double v_to, std::size_t n) {
    StirlingSegment seg;
    seg.name = name;
    seg.temperature_start = seg.temperature_end = T;
    // geometric spacing in v keeps the samples even along the hyperbola
    const double a = std::log(v_from);
    const double b = std::log(v_to);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = (i + 1 == n) ? v_to : std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
        seg.points.push_back(scalar_point(T * std::log(v), v, -T / v));
    }
    seg.form_sign = FormSign::zero;
    seg.delta_G = -(seg.points.back().z - seg.points.front().z);
    return seg;
}

StirlingSegment corner(const std::string& name, double T_from, double T_to, double v) {
    const double T_lo = std::min(T_from, T_to);
    const double T_hi = std::max(T_from, T_to);
    StirlingSegment seg;
    seg.name = name;
    seg.temperature_start = T_from;
    seg.temperature_end = T_to;
    seg.temperature_decreasing = T_to < T_from;
    seg.background_shift = (T_hi - T_lo) / v;
    seg.points.push_back(scalar_point(T_from * std::log(v), v, -T_from / v));
    seg.points.push_back(scalar_point(T_to * std::log(v), v, -T_to / v));

    // The chord lives in the chart shifted by the background jump, over q = -T_lo / v.
    const double q_chord = -T_lo / v;
    seg.chord = make_chord(q_chord, v, T_from * std::log(v), T_to * std::log(v));
    if (v != 1.0 && !seg.temperature_decreasing) {
        seg.chord = gas_chord(T_lo, T_hi, seg.background_shift);
    }
    const double dz = seg.chord->z_end - seg.chord->z_start;
    seg.form_sign = dz > 0.0 ? FormSign::positive : dz < 0.0 ? FormSign::negative : FormSign::zero;
    seg.delta_G = -dz;
    return seg;
}

}  // namespace

StirlingCycleTrace stirling_cycle(double T_C, double T_H, double v_min, double v_max, std::size_t n_samples) {
    require(T_C > 0.0 && T_H > T_C, "stirling: need T_H > T_C > 0");
    require(v_min > 0.0 && v_max > v_min, "stirling: need v_max > v_min > 0");
    require(n_samples >= 2, "stirling: need at least 2 samples per isotherm");

    StirlingCycleTrace tr;
    tr.segments[0] = isotherm("isotherm_hot", T_H, v_max, v_min, n_samples);
    tr.segments[1] = corner("isochore_cooling", T_H, T_C, v_min);
    tr.segments[2] = isotherm("isotherm_cold", T_C, v_min, v_max, n_samples);
    tr.segments[3] = corner("isochore_heating", T_C, T_H, v_max);

    const auto& first = tr.segments[0].points.front();
    const auto& last = tr.segments[3].points.back();
    tr.closure_residual = std::max((first.p - last.p).cwiseAbs().maxCoeff(), (first.q - last.q).cwiseAbs().maxCoeff());
    for (const auto& s : tr.segments) tr.total_delta_G += s.delta_G;
    return tr;
}

}  // namespace thermo
