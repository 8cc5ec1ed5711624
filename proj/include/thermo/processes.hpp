#pragma once

#include "thermo/chords.hpp"
#include "thermo/microstate.hpp"
#include "thermo/models.hpp"
#include "thermo/phase_space.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace thermo {

/// Piecewise-linear schedule of temperature and background parameter
/// (P_back for the gas, H_back for the magnet) over increasing times.
struct Schedule {
    std::vector<double> t;
    std::vector<double> T;
    std::vector<double> background;

    void validate() const;
    bool temperature_nondecreasing() const;
    /// Non-decreasing T with a fixed background.
    bool admissible() const;

    /// Linear interpolation, clamped to the end values outside [t.front(), t.back()].
    double temperature_at(double time) const;
    double background_at(double time) const;

    static Schedule linear(double T0, double T1, double bg0, double bg1, double tau, std::size_t nodes);
    static Schedule constant_temperature(double T, double tau = 1.0);
};

/// Per-point paths of a slow process Gamma(x, t).
struct IsotopyTrace {
    Model model = Model::gas;
    std::vector<double> x_grid;
    std::vector<ReducedPath> paths;
    std::vector<NonnegReport> reports;
    double max_slice_residual = 0.0;
};

struct IsotopyOptions {
    double b = 1.0;              // cw coupling
    double slack = 1e-8;
    double branch_jump = 0.1;    // largest allowed |dp| between nodes on a cw branch
    RootScanOptions roots{};
};

/// Follows every x of the initial Legendrian through the scheduled family at
/// fixed q: gas x is q (p = v recomputed), cw x is p (its q held fixed while
/// the magnetization is continued to the nearest root). Throws NumericalError
/// naming the time node when a cw branch disappears.
IsotopyTrace run_slow_isotopy(Model model, const Schedule& sched, const std::vector<double>& x_grid,
                              const IsotopyOptions& opt = {});

/// Abrupt parameter jump alpha: v_int -> v_int + v_bar^T alpha and T0 -> T1,
/// with the density frozen at the initial Gibbs state.
struct JumpRecord {
    ReducedPoint before;
    ReducedPoint after_stage1;
    ReducedPoint terminal_equilibrium;
    Density frozen_density;
    Density terminal_gibbs;
    AffineHamiltonian post_jump;
    bool is_ultrafast = false;
};

inline constexpr double kUltrafastTol = 1e-8;

JumpRecord ultrafast_jump(const MicrostateSpace& sp, const AffineHamiltonian& h, double T0, double T1,
                          const Vec& q, const Vec& background_jump, double tol = kUltrafastTol);

/// Hamiltonian after the jump alpha.
AffineHamiltonian shifted_hamiltonian(const AffineHamiltonian& h, const Vec& alpha);

struct RelaxOptions {
    double dt0 = 1e-2;            // largest step
    double min_density = 1e-14;
    double min_dt = 1e-15;
    double growth = 1.25;         // step growth after an accepted step, capped at dt0
    std::size_t record_stride = 1;
};

struct RelaxTrace {
    std::vector<double> t_grid;
    std::vector<double> temperatures;
    std::vector<Density> densities;
    ReducedPath reduced_path;
    std::vector<double> form_values;  // forward-difference lambda per accepted step
    std::vector<double> G_values;     // G(T(t), q, rho(t))

    // Diagnostics over every accepted step, including unrecorded ones.
    std::size_t accepted_steps = 0;
    std::size_t rejected_steps = 0;
    double min_form_value = 0.0;
    double max_G_increase = 0.0;      // largest G(T_k, rho_{k+1}) - G(T_k, rho_k)
    double max_mass_error = 0.0;
    double min_density = 0.0;
};

/// Gradient flow drho_i/dt = -(g_i - gbar) with g = T(1 + ln rho) + H and
/// gbar the weight-average of g, integrated by explicit Euler. A step is
/// rejected and halved when a density would drop below min_density or G at
/// the current temperature would increase. Throws NumericalError on step
/// underflow.
RelaxTrace fokker_planck_relax(const MicrostateSpace& sp, const AffineHamiltonian& h, const Vec& q,
                               const Schedule& temperature, const Density& rho0, double t_end,
                               const RelaxOptions& opt = {});

/// Lower bound T / max_i rho_G,i of the linearized relaxation rate at (T, q).
double relaxation_rate_bound(const MicrostateSpace& sp, const AffineHamiltonian& h, double T,
                             const Vec& q);

/// Least-squares slope of -ln(G - G_end) over the recorded second half of the
/// trace; an empirical rate of approach to equilibrium.
double estimate_decay_rate(const RelaxTrace& trace);

enum class FormSign { zero, positive, negative };

std::string to_string(FormSign s);

struct StirlingSegment {
    std::string name;
    std::vector<ReducedPoint> points;  // (z, p = v, q = -P)
    double temperature_start = 0.0;
    double temperature_end = 0.0;
    FormSign form_sign = FormSign::zero;
    double delta_G = 0.0;
    std::optional<Chord> chord;        // isochoric corners only
    double background_shift = 0.0;     // c realizing the corner as a chord
    bool temperature_decreasing = false;
};

struct StirlingCycleTrace {
    std::array<StirlingSegment, 4> segments;
    double closure_residual = 0.0;
    double total_delta_G = 0.0;
};

/// Isotherm at T_H (v_max -> v_min), cooling corner at v_min, isotherm at T_C
/// (v_min -> v_max), heating corner at v_max. Corners are chords with
/// c = (T_H - T_C)/v; points are given in the unshifted chart.
StirlingCycleTrace stirling_cycle(double T_C, double T_H, double v_min, double v_max,
                                  std::size_t n_samples);

}  // namespace thermo
