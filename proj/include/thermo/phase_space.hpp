#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace thermo {

using Vec = Eigen::VectorXd;

inline constexpr double kDefaultSlack = 1e-9;
inline constexpr double kDefaultReductionTol = 1e-9;

/// Point of the extended phase space: z = -G, entropy S, temperature T,
/// extensive variables p and intensive variables q.
struct ExtendedPoint {
    double z = 0.0;
    double S = 0.0;
    double T = 1.0;
    Vec p;
    Vec q;

    Eigen::Index dim() const { return p.size(); }
};

/// Tangent vector (time derivative) at an ExtendedPoint.
struct ExtendedVelocity {
    double dz = 0.0;
    double dS = 0.0;
    double dT = 0.0;
    Vec dp;
    Vec dq;
};

/// Point of the reduced phase space J^1 R^k.
struct ReducedPoint {
    double z = 0.0;
    Vec p;
    Vec q;

    Eigen::Index dim() const { return p.size(); }
};

struct ReducedVelocity {
    double dz = 0.0;
    Vec dp;
    Vec dq;
};

/// Throws DomainError unless T > 0, S >= 0 and p, q have equal nonzero length.
void validate(const ExtendedPoint& pt);
void validate(const ReducedPoint& pt);

/// Reduction data. Indices are 0-based: coordinates 0..k-1 are kept,
/// `frozen` lists intensive variables held at fixed values and `zeroed`
/// lists extensive variables forced to zero. Together they must partition
/// 0..n-1. `T0` is set when the temperature is reduced.
struct ReductionSpec {
    std::size_t k = 1;
    std::vector<std::pair<std::size_t, double>> frozen;
    std::vector<std::size_t> zeroed;
    std::optional<double> T0;

    std::size_t total_dim() const { return k + frozen.size() + zeroed.size(); }
    void validate(std::size_t n) const;
};

template <class Point>
struct SampledPath {
    std::vector<double> times;
    std::vector<Point> points;

    std::size_t size() const { return times.size(); }
};

using ExtendedPath = SampledPath<ExtendedPoint>;
using ReducedPath = SampledPath<ReducedPoint>;

/// Checks >= 2 samples, strictly increasing times and one point per time.
template <class Point>
void validate_path(const SampledPath<Point>& path);

enum class Verdict { nonnegative, violated };

struct NonnegReport {
    double min_form_value = 0.0;
    std::vector<std::size_t> violating_indices;
    std::vector<double> per_step_values;
    Verdict verdict = Verdict::nonnegative;
    double slack = kDefaultSlack;
};

/// dz - S dT - sum_j p_j dq_j.
double eval_extended_form(const ExtendedPoint& pt, const ExtendedVelocity& v);

/// dz - sum_j p_j dq_j.
double eval_reduced_form(const ReducedPoint& pt, const ReducedVelocity& v);

/// Finite-difference velocities: three-point central differences inside,
/// three-point one-sided at both ends (two-point when only two samples).
/// Non-uniform grids are handled exactly to second order.
std::vector<ExtendedVelocity> estimate_velocities(const ExtendedPath& path);
std::vector<ReducedVelocity> estimate_velocities(const ReducedPath& path);

/// Evaluates the contact form along the sampled path and flags every sample
/// whose value is below -slack.
NonnegReport check_path_nonnegative(const ExtendedPath& path, double slack = kDefaultSlack);
NonnegReport check_path_nonnegative(const ReducedPath& path, double slack = kDefaultSlack);

/// A = S dT (when T is reduced) + sum over frozen j of p_j dq_j.
double admissibility_decrement(const ExtendedPoint& pt, const ExtendedVelocity& v,
                               const ReductionSpec& spec);

/// Projects a point of the reduction subspace h to (z, p_0..p_{k-1}, q_0..q_{k-1}).
/// Rejects points off h by more than tol, naming the violated constraint.
ReducedPoint reduce(const ExtendedPoint& pt, const ReductionSpec& spec,
                    double tol = kDefaultReductionTol);
ReducedPath reduce(const ExtendedPath& path, const ReductionSpec& spec,
                   double tol = kDefaultReductionTol);

/// Coordinate projection used for processes that move T and the frozen q's
/// (the setting of the admissibility assumption). Only p_e = 0 on the zeroed
/// indices is enforced.
ReducedPoint project(const ExtendedPoint& pt, const ReductionSpec& spec,
                     double tol = kDefaultReductionTol);
ReducedVelocity project(const ExtendedVelocity& v, const ReductionSpec& spec);
ReducedPath project(const ExtendedPath& path, const ReductionSpec& spec,
                    double tol = kDefaultReductionTol);

/// T d_irr S = extended form value, so the rate is that value over T.
double irreversible_entropy_rate(const ExtendedPoint& pt, const ExtendedVelocity& v);

}  // namespace thermo
