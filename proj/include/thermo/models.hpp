#pragma once

#include "thermo/phase_space.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace thermo {

/// Generating function of a graphical Legendrian {z = f(q), p = f'(q)} on
/// the open interval (lo, hi).
struct FrontFunction {
    std::function<double(double)> f;
    std::function<double(double)> df;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double x) const { return x > lo && x < hi; }
    /// f(x); throws DomainError outside (lo, hi).
    double value(double x) const;
    double slope(double x) const;
};

/// Largest |f' - central FD of f| over `samples` evenly spread interior points.
double front_consistency_residual(const FrontFunction& front, double a, double b,
                                  std::size_t samples = 100, double rel_step = 1e-6);

enum class Model { gas, cw };

Model parse_model(const std::string& name);
std::string to_string(Model m);

struct IdealGasParams {
    double T = 1.0;
    double P_back = 0.0;
};

struct CurieWeissParams {
    double T = 1.0;
    double H_back = 0.0;
    double b = 1.0;
};

void validate(const IdealGasParams& par);
void validate(const CurieWeissParams& par);

/// -T ln(-x/T) on x < 0 and its derivative -T/x.
double gas_phi(double T, double x);
double gas_dphi(double T, double x);

/// T ln(2 cosh(x/T)), evaluated without overflow, and its derivative tanh(x/T).
double cw_phi(double T, double x);
double cw_dphi(double T, double x);

/// Front of the gas Legendrian Lambda(T, P_back): f(q) = gas_phi(T, q - P_back)
/// on q < P_back. With p = v and q = -P, (P + P_back) v = T along it.
FrontFunction gas_front(const IdealGasParams& par);

/// Inverse of the gas front's slope: the q at which f'(q) = v.
double gas_q_at_volume(const IdealGasParams& par, double v);

enum class Stability { global_min, local_min, unstable };

std::string to_string(Stability s);

/// Equilibrium point of the Curie-Weiss Legendrian: p = M, q = H.
struct CWBranchPoint {
    double p = 0.0;
    double q = 0.0;
    double z = 0.0;
    Stability stability = Stability::global_min;
};

/// atanh(p) = 1/2 ln((1+p)/(1-p)).
double cw_u(double p);

/// z = T ln 2cosh((q + H_back + b p)/T) - b p^2/2.
double cw_z(double p, double q, const CurieWeissParams& par);

/// |p - tanh((q + H_back + b p)/T)|.
double cw_self_consistency_residual(double p, double q, const CurieWeissParams& par);

/// Single-chart parameterization by the magnetization:
/// q = -b p + T u(p) - H_back. Stability is left as global_min; use
/// cw_magnetization_roots to classify.
CWBranchPoint cw_point_from_p(double p, const CurieWeissParams& par);

struct RootScanOptions {
    std::size_t grid_nodes = 10000;
    double tol = 1e-12;
};

/// All magnetizations solving p = tanh((q + H_back + b p)/T), sorted by p,
/// with stability labels. The largest z is the global minimum of G; exact
/// ties go to the root with p >= 0.
std::vector<CWBranchPoint> cw_magnetization_roots(double q, const CurieWeissParams& par,
                                                  const RootScanOptions& opt = {});

/// Global free-energy minimizer among the roots (largest z).
CWBranchPoint cw_equilibrium(double q, const CurieWeissParams& par, const RootScanOptions& opt = {});

/// Binary mixing entropy of the magnetization, in (0, ln 2].
double cw_entropy(double p);

/// Barred-picture difference of fronts.
///   gas: psi(x) = gas_phi(T1, x - c) - gas_phi(T0, x) on x < min(0, c)
///   cw:  psi(Q) = cw_phi(T1, Q + c) - cw_phi(T0, Q) on the whole line
FrontFunction difference_front(Model model, double T0, double T1, double c);

struct FrontMaximum {
    double x = 0.0;
    double value = 0.0;
};

/// Maximizer of a front on [lo, hi]: sign changes of f' from + to - on a grid,
/// refined by bisection, keeping the largest value. The neighbourhood is then
/// sampled to confirm a local maximum; throws NumericalError otherwise.
FrontMaximum front_argmax(const FrontFunction& front, double lo, double hi,
                          std::size_t grid_nodes = 10000, double tol = 1e-13);

/// Change of variables of the Curie-Weiss picture:
/// Q = q + b p, P = p - tanh(Q/T0), Z = z - cw_phi(T0, Q) + b p^2/2.
ReducedPoint cw_to_barred(const ReducedPoint& pt, double T0, double b);
ReducedPoint cw_from_barred(const ReducedPoint& pt, double T0, double b);

/// z_bar = z - gas_phi(T0, q), p_bar = p - gas_dphi(T0, q), q_bar = q.
ReducedPoint gas_to_barred(const ReducedPoint& pt, double T0);
ReducedPoint gas_from_barred(const ReducedPoint& pt, double T0);

struct CouplingDerivatives {
    double dz_db = 0.0;
    double db_dp = 0.0;
};

/// Derivatives of the equilibrium along the coupling b at fixed (T, q):
/// dz/db = p^2/2 and db/dp = T ((p u'(p) - u(p)) + q/T) / p^2.
CouplingDerivatives cw_coupling_derivatives(double p, double T, double q);

/// dz/dT at fixed (p, q): ln 2 + ln cosh(A/T) - (A/T) tanh(A/T), A = q + b p.
/// Computed as log1p(e^{-2x}) + 2x e^{-2x}/(1 + e^{-2x}) with x = |A|/T.
double cw_dz_dT(double p, double q, double T, double b);

}  // namespace thermo
