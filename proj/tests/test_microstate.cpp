#include <doctest.h>

#include "thermo/error.hpp"
#include "thermo/microstate.hpp"

#include <cmath>
#include <random>

using namespace thermo;

namespace {

AffineHamiltonian ham(std::initializer_list<double> v_int, std::initializer_list<double> v_bar_row) {
    AffineHamiltonian h;
    h.v_int = Eigen::Map<const Vec>(v_int.begin(), static_cast<Eigen::Index>(v_int.size()));
    h.v_bar = Eigen::Map<const Vec>(v_bar_row.begin(), static_cast<Eigen::Index>(v_bar_row.size())).transpose();
    return h;
}

Density dens(std::initializer_list<double> r) {
    return {Eigen::Map<const Vec>(r.begin(), static_cast<Eigen::Index>(r.size()))};
}

}  // namespace

TEST_CASE("entropy") {
    const auto sp4 = MicrostateSpace::uniform(4);
    CHECK(entropy(sp4, dens({0.25, 0.25, 0.25, 0.25})) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
    CHECK(entropy(sp4, dens({1, 0, 0, 0})) == 0.0);
    CHECK(entropy(MicrostateSpace::uniform(2), dens({0.25, 0.75})) == doctest::Approx(0.562335144618808).epsilon(1e-14));
}

TEST_CASE("entropy bounds") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto sp = MicrostateSpace::uniform(6);
    for (int k = 0; k < 200; ++k) {
        Vec r(6);
        for (int i = 0; i < 6; ++i) r[i] = u(rng);
        r /= r.sum();
        const double S = entropy(sp, {r});
        CHECK(S >= 0.0);
        CHECK(S <= std::log(6.0) + 1e-14);
    }
}

TEST_CASE("internal energy and pressures") {
    const auto sp = MicrostateSpace::uniform(2);
    CHECK(internal_energy(sp, ham({0, 0}, {0, 0}), dens({0.3, 0.7})) == 0.0);
    CHECK(internal_energy(sp, ham({1, 3}, {0, 0}), dens({0.5, 0.5})) == 2.0);
    CHECK(internal_energy(sp, ham({1, 3}, {0, 0}), dens({0, 1})) == 3.0);
    CHECK(pressures(sp, ham({0, 0}, {1, -1}), dens({0.25, 0.75}))[0] == doctest::Approx(0.5));
    CHECK(pressures(sp, ham({0, 0}, {1, -1}), dens({1, 0}))[0] == -1.0);
    CHECK(pressures(sp, ham({0, 0}, {0, 0}), dens({1, 0}))[0] == 0.0);
}

TEST_CASE("free energy") {
    const auto sp = MicrostateSpace::uniform(2);
    const Vec q = Vec::Zero(1);
    CHECK(free_energy(sp, ham({0, 1}, {0, 0}), 1.0, q, dens({0.5, 0.5})) ==
          doctest::Approx(0.5 - std::log(2.0)).epsilon(1e-14));
    CHECK(free_energy(sp, ham({2, 1}, {0, 0}), 1.0, q, dens({1, 0})) == 2.0);
    const auto sp5 = MicrostateSpace::uniform(5);
    AffineHamiltonian zero;
    zero.v_int = Vec::Zero(5);
    zero.v_bar = Eigen::MatrixXd::Zero(1, 5);
    CHECK(free_energy(sp5, zero, 2.0, q, {Vec::Constant(5, 0.2)}) == doctest::Approx(-2.0 * std::log(5.0)));
}

TEST_CASE("two free-energy routes agree") {
    const MicrostateSpace sp{{"a", "b", "c"}, (Vec(3) << 1.0, 2.0, 1.5).finished()};
    AffineHamiltonian h;
    h.v_int = (Vec(3) << 0.3, -0.2, 1.1).finished();
    h.v_bar = (Eigen::MatrixXd(2, 3) << 1, 0.5, -1, 0.2, -0.4, 0.9).finished();
    const Vec q = (Vec(2) << 0.7, -0.3).finished();
    Density d{(Vec(3) << 0.2, 0.15, 0.2).finished()};
    d.rho /= sp.weights.dot(d.rho);
    CHECK(free_energy(sp, h, 1.3, q, d) == doctest::Approx(free_energy_from_parts(sp, h, 1.3, q, d)).epsilon(1e-12));
}

TEST_CASE("gibbs state") {
    const auto sp = MicrostateSpace::uniform(3);
    const auto g = gibbs(sp, ham({0, 0, 0}, {0, 0, 0}), 0.7, Vec::Zero(1));
    CHECK(g.log_z == doctest::Approx(std::log(3.0)));
    CHECK((g.rho_g.rho.array() - 1.0 / 3.0).abs().maxCoeff() < 1e-15);

    const auto sp2 = MicrostateSpace::uniform(2);
    const auto two = gibbs(sp2, ham({0, 1}, {0, 0}), 1.0, Vec::Zero(1));
    CHECK(two.rho_g.rho[0] == doctest::Approx(0.731058578630005).epsilon(1e-14));

    const auto hot = gibbs(sp2, ham({0, 1}, {0, 0}), 1e6, Vec::Zero(1));
    CHECK((hot.rho_g.rho.array() - 0.5).abs().maxCoeff() < 1e-6);

    // no overflow at tiny temperature
    const auto cold = gibbs(sp2, ham({0, 1}, {0, 0}), 1e-4, Vec::Zero(1));
    CHECK(cold.rho_g.rho[0] == 1.0);
    CHECK(std::isfinite(cold.log_z));
}

TEST_CASE("lift to the extended space") {
    const auto sp = MicrostateSpace::uniform(4);
    const auto h = ham({0, 0, 0, 0}, {0, 0, 0, 0});
    const auto pt = lift_to_extended(sp, h, 2.0, Vec::Zero(1), {Vec::Constant(4, 0.25)});
    CHECK(pt.z == doctest::Approx(2.0 * std::log(4.0)));
    CHECK(pt.S == doctest::Approx(std::log(4.0)));
    CHECK(pt.p[0] == 0.0);

    const auto h2 = ham({0.1, 0.4, -0.3, 0.0}, {1.0, -1.0, 0.5, 0.2});
    const Vec q = Vec::Constant(1, 0.3);
    const double T = 0.9, e = 1e-5;
    const auto at = lift_to_extended(sp, h2, T, q, gibbs(sp, h2, T, q).rho_g);
    auto G = [&](double t, double x) { return equilibrium_free_energy(sp, h2, t, Vec::Constant(1, x)); };
    CHECK(at.S == doctest::Approx(-(G(T + e, 0.3) - G(T - e, 0.3)) / (2 * e)).epsilon(1e-6));
    CHECK(at.p[0] == doctest::Approx(-(G(T, 0.3 + e) - G(T, 0.3 - e)) / (2 * e)).epsilon(1e-6));

    CHECK_NOTHROW(validate(lift_to_extended(sp, h2, T, q, {(Vec(4) << 0.7, 0.1, 0.1, 0.1).finished()})));
}

TEST_CASE("validation") {
    const auto sp = MicrostateSpace::uniform(2);
    CHECK_THROWS_AS(validate(sp, dens({0.6, 0.6})), DomainError);
    CHECK_THROWS_AS(validate(sp, dens({1.2, -0.2})), DomainError);
    CHECK_THROWS_AS(validate(sp, dens({1.0})), DomainError);
    MicrostateSpace bad{{"a", "b"}, (Vec(2) << 1.0, 0.0).finished()};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(internal_energy(sp, ham({1, 2, 3}, {0, 0, 0}), dens({0.5, 0.5})), DomainError);
}

TEST_CASE("total variation") {
    const auto sp = MicrostateSpace::uniform(2);
    CHECK(total_variation(sp, dens({1, 0}), dens({0, 1})) == 1.0);
    CHECK(total_variation(sp, dens({0.5, 0.5}), dens({0.5, 0.5})) == 0.0);
}
