#pragma once

#include <string>
#include <vector>

#include "shapmin/core.hpp"

namespace shapmin {

/// The top map t(z) = max_i z_i. Signed: all-negative inputs stay negative.
double top(const Vector& x);

/// t+(z) = max(t(z), 0).
double top_plus(const Vector& x);

enum class NormKind { Top, TopPlus, Sup, Polyhedral };

/**
 * Weak Minkowski norm: convex and positively homogeneous, not necessarily
 * symmetric or coercive. Built-in kinds evaluate in closed form; Polyhedral
 * evaluates as the support function max_p <p, x> of its finite generator set.
 *
 * The implicit generator sets of the built-ins are the standard simplex
 * (Top), the simplex plus the origin (TopPlus), and the signed unit vectors
 * (Sup); none of them is ever materialized for evaluation.
 */
struct WeakNorm {
    NormKind kind = NormKind::Top;
    int dimension = 0;
    std::vector<Vector> generators; // Polyhedral only

    static WeakNorm top(int n);
    static WeakNorm top_plus(int n);
    static WeakNorm sup(int n);
    static WeakNorm polyhedral(std::vector<Vector> generators);

    void validate() const;
};

/// Support-function value of q at x. Dimension mismatch throws.
double weak_norm_eval(const WeakNorm& q, const Vector& x);

/**
 * Extreme points of the convex hull of q's generator set. Evaluating the
 * norm over the returned set gives the same value as over the full set.
 * Built-ins return their closed-form vertex lists; polyhedral inputs are
 * reduced by the brute-force hull-membership oracle and are rejected above
 * dimension 6.
 */
std::vector<Vector> extreme_points(const WeakNorm& q, const Tolerance& tol = {});

/// What an EpsNet covers.
enum class NetTarget { Box, SupSphere };

/**
 * Finite eps-net: every point of the target set lies within sup-distance
 * < epsilon of some net point. The sup-distance dominates the symmetrized
 * distance of t, t+ and the sup-norm itself, so one net serves all three.
 */
struct EpsNet {
    std::vector<Vector> points;
    double epsilon = 0.0;
    NetTarget target = NetTarget::Box;
    Vector box_lo; // Box targets only
    Vector box_hi;

    std::string target_description() const;
};

/// Axis-aligned grid of cell centers covering [lo, hi]; covering radius
/// is half a cell, strictly below epsilon.
EpsNet epsilon_net_box(const Vector& lo, const Vector& hi, double epsilon);

/// Face-by-face grid on the unit sup-sphere {x : ||x||_inf = 1} of R^n.
EpsNet epsilon_net_sup_sphere(int n, double epsilon);

} // namespace shapmin
