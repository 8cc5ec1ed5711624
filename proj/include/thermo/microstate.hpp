#pragma once

#include "thermo/phase_space.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace thermo {

/// Finite microstate set with a strictly positive measure.
struct MicrostateSpace {
    std::vector<std::string> labels;
    Vec weights;

    Eigen::Index size() const { return weights.size(); }
    void validate() const;

    static MicrostateSpace uniform(Eigen::Index m);
};

/// Density with respect to the weights: sum_i w_i rho_i = 1.
struct Density {
    Vec rho;
};

inline constexpr double kNormTol = 1e-12;

void validate(const MicrostateSpace& sp, const Density& d, double norm_tol = kNormTol);

/// H(q, m_i) = v_int_i + sum_j q_j v_bar(j, i).
struct AffineHamiltonian {
    Vec v_int;              // length m
    Eigen::MatrixXd v_bar;  // n x m

    Eigen::Index n() const { return v_bar.rows(); }
    Eigen::Index m() const { return v_int.size(); }
    void validate(const MicrostateSpace& sp) const;

    /// Tabulates H(q, .) over the microstates.
    Vec energies(const Vec& q) const;
};

struct GibbsResult {
    Density rho_g;
    double log_z = 0.0;
};

double entropy(const MicrostateSpace& sp, const Density& d);
double internal_energy(const MicrostateSpace& sp, const AffineHamiltonian& h, const Density& d);
Vec pressures(const MicrostateSpace& sp, const AffineHamiltonian& h, const Density& d);

/// -T S + <H(q, .)>.
double free_energy(const MicrostateSpace& sp, const AffineHamiltonian& h, double T, const Vec& q,
                   const Density& d);

/// U - T S - sum_j p_j q_j; equal to free_energy up to rounding.
double free_energy_from_parts(const MicrostateSpace& sp, const AffineHamiltonian& h, double T,
                              const Vec& q, const Density& d);

/// Boltzmann weights exp(-H/T) normalized against the measure, via log-sum-exp.
GibbsResult gibbs(const MicrostateSpace& sp, const AffineHamiltonian& h, double T, const Vec& q);

/// G(T, q, rho_G) = -T log Z.
double equilibrium_free_energy(const MicrostateSpace& sp, const AffineHamiltonian& h, double T,
                               const Vec& q);

/// Variational derivative T (1 + ln rho_i) + H(q, m_i). Requires rho > 0.
Vec variational_derivative(const MicrostateSpace& sp, const AffineHamiltonian& h, double T,
                           const Vec& q, const Density& d);

/// (-G, S, T, p, q).
ExtendedPoint lift_to_extended(const MicrostateSpace& sp, const AffineHamiltonian& h, double T,
                               const Vec& q, const Density& d);

/// Total variation distance 1/2 sum_i w_i |a_i - b_i|.
double total_variation(const MicrostateSpace& sp, const Density& a, const Density& b);

}  // namespace thermo
