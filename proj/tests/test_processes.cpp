#include <doctest.h>

#include "thermo/error.hpp"
#include "thermo/processes.hpp"
#include "thermo/roots.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace thermo;

namespace {

struct Sys {
    MicrostateSpace sp;
    AffineHamiltonian h;
};

Sys random_sys(std::mt19937_64& rng, int m, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Sys s{MicrostateSpace::uniform(m), {}};
    for (int i = 0; i < m; ++i) s.sp.weights[i] = 1.5 + 0.5 * u(rng);
    s.h.v_int = Vec::NullaryExpr(m, [&] { return u(rng); });
    s.h.v_bar = Eigen::MatrixXd::NullaryExpr(n, m, [&] { return u(rng); });
    return s;
}

}  // namespace

TEST_CASE("schedule") {
    const auto s = Schedule::linear(1.0, 5.0, 0.0, 2.0, 1.0, 11);
    CHECK(s.temperature_at(0.5) == doctest::Approx(3.0));
    CHECK(s.background_at(2.0) == 2.0);
    CHECK(s.temperature_nondecreasing());
    CHECK_FALSE(s.admissible());
    CHECK(Schedule::linear(1.0, 2.0, 0.5, 0.5, 1.0, 3).admissible());
    CHECK_FALSE(Schedule::linear(2.0, 1.0, 0.0, 0.0, 1.0, 3).temperature_nondecreasing());
    Schedule bad{{0.0, 0.0}, {1.0, 1.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("slow isotopy through the chord point") {
    const auto sched = Schedule::linear(1.0, 5.0, 0.0, 2.0, 1.0, 101);
    const auto tr = run_slow_isotopy(Model::gas, sched, {-3.0, -1.0, -0.5, -0.2});
    CHECK(tr.max_slice_residual < 1e-8);
    const auto& path = tr.paths[2];
    for (std::size_t i = 0; i < path.size(); ++i) {
        CHECK(path.points[i].p[0] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(path.points[i].q[0] == -0.5);
        CHECK(std::abs(path.points[i].z - (1.0 + 4.0 * path.times[i]) * std::log(2.0)) < 1e-10);
    }
    CHECK(tr.reports[2].verdict == Verdict::nonnegative);
    CHECK_THROWS_AS(run_slow_isotopy(Model::gas, sched, {0.5}), DomainError);
}

TEST_CASE("constant schedule gives constant paths") {
    const auto sched = Schedule::linear(1.5, 1.5, 0.3, 0.3, 1.0, 21);
    for (Model m : {Model::gas, Model::cw}) {
        const auto tr = run_slow_isotopy(m, sched, m == Model::gas ? std::vector<double>{-2.0, -0.5} : std::vector<double>{-0.5, 0.2});
        for (const auto& r : tr.reports) {
            CHECK(r.verdict == Verdict::nonnegative);
            CHECK(std::abs(r.min_form_value) < 1e-12);
        }
    }
}

TEST_CASE("admissible schedules keep dilute-gas and magnet paths non-negative") {
    const auto sched = Schedule::linear(1.0, 3.0, 0.0, 0.0, 1.0, 201);
    // v >= 1 along the way, where the gas entropy 1 + ln v is positive
    const auto gas = run_slow_isotopy(Model::gas, sched, roots::linspace(-1.0, -0.2, 9));
    for (const auto& r : gas.reports) CHECK(r.verdict == Verdict::nonnegative);
    IsotopyOptions opt;
    opt.b = 0.5;
    const auto cw = run_slow_isotopy(Model::cw, sched, roots::linspace(-0.8, 0.8, 9), opt);
    for (const auto& r : cw.reports) CHECK(r.verdict == Verdict::nonnegative);
    CHECK(cw.max_slice_residual < 1e-8);
}

TEST_CASE("spinodal crossing is reported with the time node") {
    // magnet cooled through T = b keeps H_back, the metastable branch vanishes
    const auto sched = Schedule::linear(0.5, 0.5, 0.0, 0.6, 1.0, 51);
    CHECK_THROWS_WITH_AS(run_slow_isotopy(Model::cw, sched, {-0.9}), doctest::Contains("time node"), NumericalError);
}

TEST_CASE("ultrafast jumps") {
    const auto sp = MicrostateSpace::uniform(2);
    AffineHamiltonian h;
    h.v_int = (Vec(2) << 0.0, 1.0).finished();
    h.v_bar = (Eigen::MatrixXd(1, 2) << 1.0, -1.0).finished();
    const Vec q = Vec::Constant(1, 0.2);

    const auto id = ultrafast_jump(sp, h, 1.0, 1.0, q, Vec::Zero(1));
    CHECK(id.is_ultrafast);
    CHECK(id.after_stage1.z == id.before.z);
    CHECK((id.after_stage1.p.array() == id.before.p.array()).all());
    CHECK((id.after_stage1.q.array() == id.before.q.array()).all());

    AffineHamiltonian flat;
    flat.v_int = (Vec(2) << 0.0, 1.0).finished();
    flat.v_bar = (Eigen::MatrixXd(1, 2) << 1.0, 1.0).finished();
    CHECK(ultrafast_jump(sp, flat, 1.0, 1.0, q, Vec::Constant(1, 0.7)).is_ultrafast);

    const auto gen = ultrafast_jump(sp, h, 1.0, 2.0, q, Vec::Constant(1, 0.5));
    CHECK_FALSE(gen.is_ultrafast);
    CHECK((gen.after_stage1.p.array() == gen.before.p.array()).all());
    CHECK((gen.after_stage1.q.array() == gen.before.q.array()).all());

    // stage 2 relaxes to the post-jump equilibrium
    const auto tr = fokker_planck_relax(sp, gen.post_jump, q, Schedule::constant_temperature(2.0), gen.frozen_density,
                                        60.0 / relaxation_rate_bound(sp, gen.post_jump, 2.0, q));
    CHECK(total_variation(sp, tr.densities.back(), gen.terminal_gibbs) < 1e-8);
}

TEST_CASE("relaxation from the Gibbs state is stationary") {
    std::mt19937_64 rng(9);
    const auto s = random_sys(rng, 5, 1);
    const Vec q = Vec::Constant(1, 0.3);
    const auto g = gibbs(s.sp, s.h, 1.2, q);
    const auto tr = fokker_planck_relax(s.sp, s.h, q, Schedule::constant_temperature(1.2), g.rho_g, 2.0);
    CHECK(std::abs(tr.G_values.front() - tr.G_values.back()) < 1e-12);
    CHECK(total_variation(s.sp, tr.densities.back(), g.rho_g) < 1e-12);
}

TEST_CASE("flat hamiltonian relaxes to uniform with decreasing G") {
    const auto sp = MicrostateSpace::uniform(4);
    AffineHamiltonian h;
    h.v_int = Vec::Zero(4);
    h.v_bar = Eigen::MatrixXd::Zero(1, 4);
    const Density rho0{(Vec(4) << 0.55, 0.25, 0.15, 0.05).finished()};
    const auto tr = fokker_planck_relax(sp, h, Vec::Zero(1), Schedule::constant_temperature(1.0), rho0, 60.0);
    for (std::size_t i = 1; i < tr.G_values.size(); ++i) {
        CHECK(tr.G_values[i] <= tr.G_values[i - 1] + 1e-12);
    }
    CHECK(tr.G_values[1] < tr.G_values[0]);
    CHECK((tr.densities.back().rho.array() - 0.25).abs().maxCoeff() < 1e-8);
    // linearized rate of the density is T / rho = 4, G approaches at twice that
    const auto early = fokker_planck_relax(sp, h, Vec::Zero(1), Schedule::constant_temperature(1.0), rho0, 3.0);
    CHECK(estimate_decay_rate(early) > relaxation_rate_bound(sp, h, 1.0, Vec::Zero(1)));
}

TEST_CASE("relaxation under heating keeps the contract") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 10; ++k) {
        const auto s = random_sys(rng, 8, 2);
        const Vec q = (Vec(2) << 0.2, -0.4).finished();
        Density rho0{Vec::Constant(8, 1.0)};
        rho0.rho[k % 8] = 5.0;
        rho0.rho /= s.sp.weights.dot(rho0.rho);
        const auto sched = Schedule::linear(0.8, 1.6, 0.0, 0.0, 1.0, 5);
        const double t_end = 1.0 + 50.0 / relaxation_rate_bound(s.sp, s.h, 1.6, q);
        const auto tr = fokker_planck_relax(s.sp, s.h, q, sched, rho0, t_end);
        CHECK(tr.max_mass_error <= 1e-10);
        CHECK(tr.max_G_increase <= 1e-12);
        CHECK(tr.min_form_value >= -1e-8);
        CHECK(total_variation(s.sp, tr.densities.back(), gibbs(s.sp, s.h, 1.6, q).rho_g) < 1e-6);
        CHECK(check_path_nonnegative(tr.reduced_path, 1e-8).verdict == Verdict::nonnegative);
    }
}

TEST_CASE("stiff relaxation with a coarse dt0 still settles") {
    const auto sp = MicrostateSpace::uniform(4);
    AffineHamiltonian h;
    h.v_int = (Vec(4) << 0.0, 2.0, 5.0, 9.0).finished();
    h.v_bar = Eigen::MatrixXd::Zero(1, 4);
    const Density rho0{Vec::Constant(4, 0.25)};
    RelaxOptions opt;
    opt.dt0 = 0.5;
    const double t_end = 50.0 / relaxation_rate_bound(sp, h, 1.0, Vec::Zero(1));
    const auto tr = fokker_planck_relax(sp, h, Vec::Zero(1), Schedule::constant_temperature(1.0), rho0, t_end, opt);
    CHECK(tr.max_G_increase <= 1e-13);
    CHECK(tr.min_density > 0.0);
    CHECK(total_variation(sp, tr.densities.back(), gibbs(sp, h, 1.0, Vec::Zero(1)).rho_g) < 1e-12);
}

TEST_CASE("rate bound sits below the linearized gap") {
    // (W - w w^T / sum w) y = mu W D y, D = diag(rho_G); mu = 0 is the mass mode
    std::mt19937_64 rng(8);
    for (int k = 0; k < 20; ++k) {
        const auto s = random_sys(rng, 3 + k % 9, 1);
        const Vec q = Vec::Constant(1, 0.3);
        const double T = 0.5 + 0.1 * k;
        const Vec& w = s.sp.weights;
        const Vec rho = gibbs(s.sp, s.h, T, q).rho_g.rho;
        const Eigen::MatrixXd A = Eigen::MatrixXd(w.asDiagonal()) - w * w.transpose() / w.sum();
        const Eigen::MatrixXd B = Eigen::MatrixXd(w.cwiseProduct(rho).asDiagonal());
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(A, B);
        const double gap = T * es.eigenvalues()[1];
        CHECK(std::abs(es.eigenvalues()[0]) < 1e-10);
        CHECK(relaxation_rate_bound(s.sp, s.h, T, q) <= gap * (1.0 + 1e-12));
    }
}

TEST_CASE("fixed-temperature relaxation step: entropy production equals G decrease over T") {
    const auto sp = MicrostateSpace::uniform(3);
    AffineHamiltonian h;
    h.v_int = (Vec(3) << 0.0, 0.5, 1.0).finished();
    h.v_bar = Eigen::MatrixXd::Zero(1, 3);
    const double T = 2.0;
    const Density rho0{(Vec(3) << 0.1, 0.3, 0.6).finished()};
    const auto tr = fokker_planck_relax(sp, h, Vec::Zero(1), Schedule::constant_temperature(T), rho0, 1.0);
    for (std::size_t i = 0; i + 1 < tr.t_grid.size(); ++i) {
        const double dt = tr.t_grid[i + 1] - tr.t_grid[i];
        const double rate = (tr.G_values[i] - tr.G_values[i + 1]) / dt / T;
        const ReducedPoint& a = tr.reduced_path.points[i];
        const ReducedPoint& b = tr.reduced_path.points[i + 1];
        ExtendedPoint pt{a.z, 1.0, T, a.p, a.q};
        ExtendedVelocity v{(b.z - a.z) / dt, 0.0, 0.0, (b.p - a.p) / dt, (b.q - a.q) / dt};
        CHECK(irreversible_entropy_rate(pt, v) == doctest::Approx(rate).epsilon(1e-9));
        CHECK(rate >= 0.0);
    }
}

TEST_CASE("relaxation rejects bad input") {
    const auto sp = MicrostateSpace::uniform(2);
    AffineHamiltonian h;
    h.v_int = Vec::Zero(2);
    h.v_bar = Eigen::MatrixXd::Zero(1, 2);
    const Density bad{(Vec(2) << 0.7, 0.7).finished()};
    CHECK_THROWS_AS(fokker_planck_relax(sp, h, Vec::Zero(1), Schedule::constant_temperature(1.0), bad, 1.0), DomainError);
    const Density ok{(Vec(2) << 0.5, 0.5).finished()};
    CHECK_THROWS_AS(fokker_planck_relax(sp, h, Vec::Zero(1), Schedule::linear(2.0, 1.0, 0, 0, 1.0, 2), ok, 1.0),
                    DomainError);
}

TEST_CASE("stirling cycle") {
    const auto tr = stirling_cycle(1.0, 5.0, 1.0, 2.0, 50);
    CHECK(std::abs(tr.total_delta_G) < 1e-9);
    CHECK(tr.closure_residual < 1e-12);
    const auto& heat = tr.segments[3];
    CHECK(heat.name == "isochore_heating");
    REQUIRE(heat.chord.has_value());
    CHECK(heat.background_shift == doctest::Approx(2.0));
    const auto fig1 = gas_chord(1.0, 5.0, 2.0);
    CHECK(heat.chord->p == fig1.p);
    CHECK(heat.chord->length == doctest::Approx(fig1.length));
    CHECK(heat.form_sign == FormSign::positive);
    CHECK(tr.segments[1].form_sign == FormSign::zero);  // v_min = 1 corner
    CHECK(tr.segments[1].temperature_decreasing);
    CHECK(tr.segments[0].form_sign == FormSign::zero);

    const auto wide = stirling_cycle(1.0, 3.0, 2.0, 4.0, 20);
    CHECK(wide.segments[1].form_sign == FormSign::negative);
    CHECK(std::abs(wide.total_delta_G) < 1e-9);
    CHECK_THROWS_AS(stirling_cycle(2.0, 1.0, 1.0, 2.0, 10), DomainError);
}
