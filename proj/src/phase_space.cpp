#include "thermo/phase_space.hpp"

#include "thermo/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace thermo {

namespace {

void check_same_dim(Eigen::Index n, const Vec& a, const Vec& b, const char* what) {
    if (a.size() != n || b.size() != n) {
        throw DomainError(std::string(what) + ": dimension mismatch (point has n=" +
                          std::to_string(n) + ")");
    }
}

// Weights of a three-point derivative stencil on a possibly non-uniform grid.
struct Stencil {
    std::size_t i0, i1, i2;
    double w0, w1, w2;
};

Stencil stencil_at(const std::vector<double>& t, std::size_t i) {
    const std::size_t n = t.size();
    if (n == 2) {
        const double h = t[1] - t[0];
        return {0, 1, 1, -1.0 / h, 1.0 / h, 0.0};
    }
    if (i == 0) {
        const double h1 = t[1] - t[0];
        const double h2 = t[2] - t[1];
        return {0, 1, 2, -(2.0 * h1 + h2) / (h1 * (h1 + h2)), (h1 + h2) / (h1 * h2),
                -h1 / (h2 * (h1 + h2))};
    }
    if (i == n - 1) {
        const double h1 = t[n - 2] - t[n - 3];
        const double h2 = t[n - 1] - t[n - 2];
        return {n - 3, n - 2, n - 1, h2 / (h1 * (h1 + h2)), -(h1 + h2) / (h1 * h2),
                (h1 + 2.0 * h2) / (h2 * (h1 + h2))};
    }
    const double h1 = t[i] - t[i - 1];
    const double h2 = t[i + 1] - t[i];
    return {i - 1, i, i + 1, -h2 / (h1 * (h1 + h2)), (h2 - h1) / (h1 * h2),
            h1 / (h2 * (h1 + h2))};
}

ExtendedVelocity combine(const Stencil& s, const std::vector<ExtendedPoint>& pts) {
    const auto& a = pts[s.i0];
    const auto& b = pts[s.i1];
    const auto& c = pts[s.i2];
    ExtendedVelocity v;
    v.dz = s.w0 * a.z + s.w1 * b.z + s.w2 * c.z;
    v.dS = s.w0 * a.S + s.w1 * b.S + s.w2 * c.S;
    v.dT = s.w0 * a.T + s.w1 * b.T + s.w2 * c.T;
    v.dp = s.w0 * a.p + s.w1 * b.p + s.w2 * c.p;
    v.dq = s.w0 * a.q + s.w1 * b.q + s.w2 * c.q;
    return v;
}

ReducedVelocity combine(const Stencil& s, const std::vector<ReducedPoint>& pts) {
    const auto& a = pts[s.i0];
    const auto& b = pts[s.i1];
    const auto& c = pts[s.i2];
    ReducedVelocity v;
    v.dz = s.w0 * a.z + s.w1 * b.z + s.w2 * c.z;
    v.dp = s.w0 * a.p + s.w1 * b.p + s.w2 * c.p;
    v.dq = s.w0 * a.q + s.w1 * b.q + s.w2 * c.q;
    return v;
}

template <class Point>
auto estimate(const SampledPath<Point>& path) {
    validate_path(path);
    using V = decltype(combine(std::declval<Stencil>(), path.points));
    std::vector<V> out;
    out.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) out.push_back(combine(stencil_at(path.times, i), path.points));
    return out;
}

template <class Point, class Form>
NonnegReport check(const SampledPath<Point>& path, double slack, Form form) {
    require(slack >= 0.0, "check_path_nonnegative: slack must be >= 0");
    const auto vel = estimate_velocities(path);
    NonnegReport r;
    r.slack = slack;
    r.min_form_value = std::numeric_limits<double>::infinity();
    r.per_step_values.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
        const double val = form(path.points[i], vel[i]);
        r.per_step_values.push_back(val);
        r.min_form_value = std::min(r.min_form_value, val);
        if (val < -slack) r.violating_indices.push_back(i);
    }
    r.verdict = r.violating_indices.empty() ? Verdict::nonnegative : Verdict::violated;
    return r;
}

}  // namespace

void validate(const ExtendedPoint& pt) {
    require(pt.p.size() >= 1, "ExtendedPoint: n must be >= 1");
    require(pt.p.size() == pt.q.size(), "ExtendedPoint: p and q lengths differ");
    require(pt.T > 0.0 && std::isfinite(pt.T), "ExtendedPoint: T must be > 0");
    require(pt.S >= 0.0, "ExtendedPoint: S must be >= 0");
}

void validate(const ReducedPoint& pt) {
    require(pt.p.size() >= 1, "ReducedPoint: k must be >= 1");
    require(pt.p.size() == pt.q.size(), "ReducedPoint: p and q lengths differ");
}

void ReductionSpec::validate(std::size_t n) const {
    require(k >= 1, "ReductionSpec: k must be >= 1");
    require(total_dim() == n, "ReductionSpec: kept, frozen and zeroed indices must partition 0..n-1");
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < k; ++i) seen[i] = true;
    auto claim = [&](std::size_t i) {
        require(i < n, "ReductionSpec: index " + std::to_string(i) + " out of range");
        require(!seen[i], "ReductionSpec: index " + std::to_string(i) + " used twice");
        seen[i] = true;
    };
    for (const auto& [i, val] : frozen) {
        claim(i);
        require(std::isfinite(val), "ReductionSpec: frozen value must be finite");
    }
    for (auto e : zeroed) claim(e);
    if (T0) require(*T0 > 0.0, "ReductionSpec: T0 must be > 0");
}

template <class Point>
void validate_path(const SampledPath<Point>& path) {
    require(path.times.size() >= 2, "SampledPath: need at least 2 samples");
    require(path.times.size() == path.points.size(), "SampledPath: times/points length mismatch");
    for (std::size_t i = 1; i < path.times.size(); ++i) {
        require(path.times[i] > path.times[i - 1], "SampledPath: times must be strictly increasing");
    }
    const auto n = path.points.front().p.size();
    for (const auto& pt : path.points) {
        require(pt.p.size() == n && pt.q.size() == n, "SampledPath: inconsistent point dimensions");
    }
}

template void validate_path(const ExtendedPath&);
template void validate_path(const ReducedPath&);

double eval_extended_form(const ExtendedPoint& pt, const ExtendedVelocity& v) {
    check_same_dim(pt.dim(), v.dp, v.dq, "eval_extended_form");
    require(pt.q.size() == pt.dim(), "eval_extended_form: p and q lengths differ");
    return v.dz - pt.S * v.dT - pt.p.dot(v.dq);
}

double eval_reduced_form(const ReducedPoint& pt, const ReducedVelocity& v) {
    check_same_dim(pt.dim(), v.dp, v.dq, "eval_reduced_form");
    require(pt.q.size() == pt.dim(), "eval_reduced_form: p and q lengths differ");
    return v.dz - pt.p.dot(v.dq);
}

std::vector<ExtendedVelocity> estimate_velocities(const ExtendedPath& path) { return estimate(path); }
std::vector<ReducedVelocity> estimate_velocities(const ReducedPath& path) { return estimate(path); }

NonnegReport check_path_nonnegative(const ExtendedPath& path, double slack) {
    return check(path, slack, eval_extended_form);
}

NonnegReport check_path_nonnegative(const ReducedPath& path, double slack) {
    return check(path, slack, eval_reduced_form);
}

double admissibility_decrement(const ExtendedPoint& pt, const ExtendedVelocity& v,
                               const ReductionSpec& spec) {
    spec.validate(static_cast<std::size_t>(pt.dim()));
    check_same_dim(pt.dim(), v.dp, v.dq, "admissibility_decrement");
    double a = spec.T0 ? pt.S * v.dT : 0.0;
    for (const auto& [j, val] : spec.frozen) a += pt.p[j] * v.dq[j];
    return a;
}

ReducedPoint project(const ExtendedPoint& pt, const ReductionSpec& spec, double tol) {
    spec.validate(static_cast<std::size_t>(pt.dim()));
    for (auto e : spec.zeroed) {
        if (std::abs(pt.p[e]) > tol) {
            throw DomainError("reduce: extensive variable p_" + std::to_string(e) + " = " +
                              std::to_string(pt.p[e]) + " must vanish");
        }
    }
    const auto k = static_cast<Eigen::Index>(spec.k);
    return {pt.z, pt.p.head(k), pt.q.head(k)};
}

ReducedVelocity project(const ExtendedVelocity& v, const ReductionSpec& spec) {
    require(v.dp.size() == v.dq.size(), "project: dp and dq lengths differ");
    spec.validate(static_cast<std::size_t>(v.dp.size()));
    const auto k = static_cast<Eigen::Index>(spec.k);
    return {v.dz, v.dp.head(k), v.dq.head(k)};
}

ReducedPoint reduce(const ExtendedPoint& pt, const ReductionSpec& spec, double tol) {
    spec.validate(static_cast<std::size_t>(pt.dim()));
    if (spec.T0 && std::abs(pt.T - *spec.T0) > tol) {
        throw DomainError("reduce: temperature T = " + std::to_string(pt.T) + " differs from T0 = " +
                          std::to_string(*spec.T0));
    }
    for (const auto& [i, val] : spec.frozen) {
        if (std::abs(pt.q[i] - val) > tol) {
            throw DomainError("reduce: intensive variable q_" + std::to_string(i) + " = " +
                              std::to_string(pt.q[i]) + " differs from frozen value " +
                              std::to_string(val));
        }
    }
    return project(pt, spec, tol);
}

ReducedPath reduce(const ExtendedPath& path, const ReductionSpec& spec, double tol) {
    validate_path(path);
    ReducedPath out;
    out.times = path.times;
    out.points.reserve(path.size());
    for (const auto& pt : path.points) out.points.push_back(reduce(pt, spec, tol));
    return out;
}

ReducedPath project(const ExtendedPath& path, const ReductionSpec& spec, double tol) {
    validate_path(path);
    ReducedPath out;
    out.times = path.times;
    out.points.reserve(path.size());
    for (const auto& pt : path.points) out.points.push_back(project(pt, spec, tol));
    return out;
}

double irreversible_entropy_rate(const ExtendedPoint& pt, const ExtendedVelocity& v) {
    require(pt.T > 0.0, "irreversible_entropy_rate: T must be > 0");
    return eval_extended_form(pt, v) / pt.T;
}

}  // namespace thermo
