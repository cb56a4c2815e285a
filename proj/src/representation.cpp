#include "shapmin/representation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace shapmin {

std::vector<Vector> DualSet::vertices(const Tolerance& tol) const {
    if (kind == DualSetKind::Simplex) {
        std::vector<Vector> v;
        const std::size_t n = static_cast<std::size_t>(dimension);
        for (std::size_t j = 0; j < n; ++j) v.push_back(unit_vector(n, j));
        return v;
    }
    return halfspace_simplex_extremes(constraint, tol);
}

DualSet simplex(int n) {
    if (n < 1) throw std::invalid_argument("simplex: dimension must be >= 1");
    return DualSet{DualSetKind::Simplex, n, {}};
}

DualSet simplex_halfspace(Vector a) {
    if (a.empty()) throw std::invalid_argument("simplex_halfspace: empty constraint");
    require_finite(a, "simplex_halfspace constraint");
    return DualSet{DualSetKind::SimplexHalfspace, static_cast<int>(a.size()), std::move(a)};
}

std::vector<Vector> halfspace_simplex_extremes(const Vector& a, const Tolerance& tol) {
    if (a.empty()) throw std::invalid_argument("halfspace_simplex_extremes: empty input");
    for (double v : a)
        if (!std::isfinite(v))
            throw std::invalid_argument("halfspace_simplex_extremes: non-finite entry");

    const std::size_t n = a.size();
    std::vector<Vector> out;

    // Simplex vertices that satisfy the constraint. a_j within tol of zero
    // counts as boundary-feasible so the matching pair points below stay
    // suppressed (they would duplicate e_j).
    for (std::size_t j = 0; j < n; ++j)
        if (a[j] <= tol.abs_tol) out.push_back(unit_vector(n, j));

    // Edge intersections with the hyperplane <p, a> = 0, one per strict
    // sign pair. Both entries of the edge point are positive by construction.
    for (std::size_t j = 0; j < n; ++j) {
        if (!(a[j] < -tol.abs_tol)) continue;
        for (std::size_t k = 0; k < n; ++k) {
            if (!(a[k] > tol.abs_tol)) continue;
            Vector p(n, 0.0);
            p[j] = a[k] / (a[k] - a[j]);
            p[k] = -a[j] / (a[k] - a[j]);
            out.push_back(std::move(p));
        }
    }

    // Deduplicate by tolerance; construction rarely collides but inputs with
    // repeated coordinates can.
    std::vector<Vector> unique;
    for (const Vector& p : out) {
        bool seen = false;
        for (const Vector& u : unique)
            if (approx_equal(p, u, tol.abs_tol)) { seen = true; break; }
        if (!seen) unique.push_back(p);
    }
    return unique;
}

Vector zero_level_project(const OperatorHandle& f, const Vector& y, const Tolerance& tol) {
    const double fy = eval_scalar(f, y);
    const Vector a = add_constant(y, -fy);
    const double residual = std::abs(eval_scalar(f, a));
    if (residual > tol.abs_tol)
        throw contract_error("zero_level_project: '" + f.label +
                                 "' is not additively homogeneous at y = " + to_string(y) +
                                 " (residual " + std::to_string(residual) + ")",
                             residual);
    return a;
}

YNet normalize_ynet(const OperatorHandle& f, const YNet& net, const Tolerance& tol) {
    YNet out;
    out.normalized = true;
    out.points.reserve(net.points.size());
    for (const Vector& y : net.points) out.points.push_back(zero_level_project(f, y, tol));
    return out;
}

namespace {

void require_net(const YNet& net, const char* who) {
    if (net.points.empty())
        throw std::invalid_argument(std::string(who) + ": empty ynet");
}

double min_coordinate_gap(const Vector& x, const Vector& y) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.size(); ++i) m = std::min(m, x[i] - y[i]);
    return m;
}

} // namespace

double minimax_eval(const OperatorHandle& f, const YNet& net, const Vector& x) {
    require_net(net, "minimax_eval");
    double best = std::numeric_limits<double>::infinity();
    for (const Vector& y : net.points)
        best = std::min(best, top(sub(x, y)) + eval_scalar(f, y));
    return best;
}

double maximin_eval(const OperatorHandle& f, const YNet& net, const Vector& x) {
    require_net(net, "maximin_eval");
    double best = -std::numeric_limits<double>::infinity();
    for (const Vector& y : net.points)
        best = std::max(best, min_coordinate_gap(x, y) + eval_scalar(f, y));
    return best;
}

double homogeneous_minimax_eval(const OperatorHandle& f, const YNet& net, const Vector& x) {
    return homogeneous_minimax_eval_traced(f, net, x).value;
}

RepresentationValue minimax_eval_traced(const OperatorHandle& f, const YNet& net,
                                        const Vector& x) {
    require_net(net, "minimax_eval");
    RepresentationValue out;
    out.x = x;
    out.value = std::numeric_limits<double>::infinity();
    for (const Vector& y : net.points) {
        const Vector d = sub(x, y);
        const double term = top(d) + eval_scalar(f, y);
        if (term < out.value) {
            out.value = term;
            out.argmin_y = y;
            // Inner argmax over the simplex is the unit vector of the top
            // coordinate, lowest index on ties.
            std::size_t jbest = 0;
            for (std::size_t j = 1; j < d.size(); ++j)
                if (d[j] > d[jbest]) jbest = j;
            out.argmax_p = unit_vector(d.size(), jbest);
        }
    }
    return out;
}

RepresentationValue homogeneous_minimax_eval_traced(const OperatorHandle& f, const YNet& net,
                                                    const Vector& x) {
    require_net(net, "homogeneous_minimax_eval");
    const Tolerance tol;
    const double f0 = eval_scalar(f, constant_vector(x.size(), 0.0));
    if (std::abs(f0) > tol.abs_tol)
        throw contract_error("homogeneous_minimax_eval: '" + f.label + "' has f(0) = " +
                                 std::to_string(f0) + ", expected 0",
                             std::abs(f0));

    RepresentationValue out;
    out.x = x;
    out.value = std::numeric_limits<double>::infinity();
    for (const Vector& y : net.points) {
        const double fy = eval_scalar(f, y);
        const std::vector<Vector> verts = halfspace_simplex_extremes(add_constant(y, -fy), tol);
        if (verts.empty())
            throw contract_error("homogeneous_minimax_eval: empty dual slice at y = " +
                                     to_string(y) + " (f(y) = " + std::to_string(fy) +
                                     " below min coordinate; '" + f.label +
                                     "' is not monotone additively homogeneous)",
                                 fy);
        double inner = -std::numeric_limits<double>::infinity();
        const Vector* argmax = nullptr;
        for (const Vector& p : verts) {
            const double v = dot(p, x);
            if (v > inner) {
                inner = v;
                argmax = &p;
            }
        }
        if (inner < out.value) {
            out.value = inner;
            out.argmin_y = y;
            out.argmax_p = *argmax;
        }
    }
    return out;
}

MoreauReport moreau_identity_check(const OperatorHandle& f, const WeakNorm& q, const YNet& net,
                                   const std::vector<Vector>& xs, const Tolerance& tol) {
    require_net(net, "moreau_identity_check");
    MoreauReport report;
    for (const Vector& x : xs) {
        MoreauEntry e;
        e.x = x;
        e.f_x = eval_scalar(f, x);
        e.min_envelope = std::numeric_limits<double>::infinity();
        e.max_envelope = -std::numeric_limits<double>::infinity();
        for (const Vector& y : net.points) {
            const double fy = eval_scalar(f, y);
            e.min_envelope = std::min(e.min_envelope, weak_norm_eval(q, sub(x, y)) + fy);
            e.max_envelope = std::max(e.max_envelope, -weak_norm_eval(q, sub(y, x)) + fy);
            if (!e.x_in_net && approx_equal(x, y, tol.abs_tol)) e.x_in_net = true;
        }
        const bool sandwiched =
            e.min_envelope >= e.f_x - tol.abs_tol && e.max_envelope <= e.f_x + tol.abs_tol;
        const bool exact = std::abs(e.min_envelope - e.f_x) <= tol.abs_tol &&
                           std::abs(e.max_envelope - e.f_x) <= tol.abs_tol;
        e.violated = !sandwiched || (e.x_in_net && !exact);
        report.all_sandwiched = report.all_sandwiched && sandwiched;
        if (e.x_in_net) report.exact_at_net_points = report.exact_at_net_points && exact;
        report.entries.push_back(std::move(e));
    }
    return report;
}

double one_player_eval(const OperatorHandle& f, const std::vector<Vector>& pgrid,
                       const YNet& net, const Vector& x) {
    if (pgrid.empty()) throw std::invalid_argument("one_player_eval: empty pgrid");
    require_net(net, "one_player_eval");

    double best = -std::numeric_limits<double>::infinity();
    for (const Vector& p : pgrid) {
        double conjugate = -std::numeric_limits<double>::infinity();
        for (const Vector& y : net.points)
            conjugate = std::max(conjugate, dot(p, y) - eval_scalar(f, y));
        best = std::max(best, dot(p, x) - conjugate);
    }
    return best;
}

} // namespace shapmin
