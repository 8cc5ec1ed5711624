#include "thermo/microstate.hpp"

#include "thermo/error.hpp"

#include <cmath>

namespace thermo {

void MicrostateSpace::validate() const {
    require(weights.size() >= 1, "MicrostateSpace: need at least one microstate");
    require(labels.empty() || static_cast<Eigen::Index>(labels.size()) == weights.size(),
            "MicrostateSpace: labels and weights lengths differ");
    require((weights.array() > 0.0).all() && weights.allFinite(),
            "MicrostateSpace: weights must be finite and strictly positive");
}

MicrostateSpace MicrostateSpace::uniform(Eigen::Index m) {
    MicrostateSpace sp;
    sp.weights = Vec::Ones(m);
    sp.labels.reserve(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) sp.labels.push_back("m" + std::to_string(i));
    return sp;
}

void validate(const MicrostateSpace& sp, const Density& d, double norm_tol) {
    sp.validate();
    require(d.rho.size() == sp.size(), "Density: length does not match the microstate space");
    require((d.rho.array() >= 0.0).all() && d.rho.allFinite(), "Density: entries must be >= 0");
    const double mass = sp.weights.dot(d.rho);
    require(std::abs(mass - 1.0) <= norm_tol,
            "Density: weighted mass " + std::to_string(mass) + " is not 1");
}

void AffineHamiltonian::validate(const MicrostateSpace& sp) const {
    require(v_int.size() == sp.size(), "AffineHamiltonian: v_int length must equal m");
    require(v_bar.rows() >= 1, "AffineHamiltonian: n must be >= 1");
    require(v_bar.cols() == sp.size(), "AffineHamiltonian: v_bar must be n x m");
    require(v_int.allFinite() && v_bar.allFinite(), "AffineHamiltonian: entries must be finite");
}

Vec AffineHamiltonian::energies(const Vec& q) const {
    require(q.size() == n(), "AffineHamiltonian: q has wrong length");
    return v_int + v_bar.transpose() * q;
}

double entropy(const MicrostateSpace& sp, const Density& d) {
    validate(sp, d);
    double s = 0.0;
    for (Eigen::Index i = 0; i < d.rho.size(); ++i) {
        const double r = d.rho[i];
        if (r > 0.0) s -= sp.weights[i] * r * std::log(r);
    }
    return s;
}

double internal_energy(const MicrostateSpace& sp, const AffineHamiltonian& h, const Density& d) {
    validate(sp, d);
    h.validate(sp);
    return sp.weights.cwiseProduct(d.rho).dot(h.v_int);
}

Vec pressures(const MicrostateSpace& sp, const AffineHamiltonian& h, const Density& d) {
    validate(sp, d);
    h.validate(sp);
    return -(h.v_bar * sp.weights.cwiseProduct(d.rho));
}

double free_energy(const MicrostateSpace& sp, const AffineHamiltonian& h, double T, const Vec& q,
                   const Density& d) {
    require(T > 0.0, "free_energy: T must be > 0");
    h.validate(sp);
    const double s = entropy(sp, d);
    return -T * s + sp.weights.cwiseProduct(d.rho).dot(h.energies(q));
}

double free_energy_from_parts(const MicrostateSpace& sp, const AffineHamiltonian& h, double T,
                              const Vec& q, const Density& d) {
    require(T > 0.0, "free_energy: T must be > 0");
    require(q.size() == h.n(), "free_energy: q has wrong length");
    return internal_energy(sp, h, d) - T * entropy(sp, d) - pressures(sp, h, d).dot(q);
}

GibbsResult gibbs(const MicrostateSpace& sp, const AffineHamiltonian& h, double T, const Vec& q) {
    require(T > 0.0, "gibbs: T must be > 0");
    sp.validate();
    h.validate(sp);
    const Vec a = -h.energies(q) / T;
    // log Z = log sum_i w_i exp(a_i)
    const Vec la = a.array() + sp.weights.array().log();
    const double top = la.maxCoeff();
    const double log_z = top + std::log((la.array() - top).exp().sum());
    GibbsResult g;
    g.log_z = log_z;
    g.rho_g.rho = (a.array() - log_z).exp();
    return g;
}

double equilibrium_free_energy(const MicrostateSpace& sp, const AffineHamiltonian& h, double T,
                               const Vec& q) {
    return -T * gibbs(sp, h, T, q).log_z;
}

Vec variational_derivative(const MicrostateSpace& sp, const AffineHamiltonian& h, double T,
                           const Vec& q, const Density& d) {
    require(T > 0.0, "variational_derivative: T must be > 0");
    require(d.rho.size() == sp.size() && (d.rho.array() > 0.0).all(),
            "variational_derivative: density must be strictly positive");
    return (T * (1.0 + d.rho.array().log())).matrix() + h.energies(q);
}

ExtendedPoint lift_to_extended(const MicrostateSpace& sp, const AffineHamiltonian& h, double T,
                               const Vec& q, const Density& d) {
    ExtendedPoint pt;
    pt.z = -free_energy(sp, h, T, q, d);
    pt.S = entropy(sp, d);
    pt.T = T;
    pt.p = pressures(sp, h, d);
    pt.q = q;
    return pt;
}

double total_variation(const MicrostateSpace& sp, const Density& a, const Density& b) {
    require(a.rho.size() == sp.size() && b.rho.size() == sp.size(),
            "total_variation: density lengths differ");
    return 0.5 * sp.weights.dot((a.rho - b.rho).cwiseAbs());
}

}  // namespace thermo
