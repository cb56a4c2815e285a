#pragma once

#include <optional>
#include <vector>

#include "shapmin/axioms.hpp"
#include "shapmin/core.hpp"
#include "shapmin/norms.hpp"

namespace shapmin {

enum class DualSetKind { Simplex, SimplexHalfspace };

/**
 * Polyhedral dual set over which the inner maxima of the representation
 * formulas range: the standard simplex, or its intersection with the
 * half-space {p : <p, a> <= 0}.
 */
struct DualSet {
    DualSetKind kind = DualSetKind::Simplex;
    int dimension = 0;
    Vector constraint; // the vector a, SimplexHalfspace only

    /// Vertex list (unit vectors for the simplex, the closed-form extreme
    /// points for the half-space section). Computed on demand.
    std::vector<Vector> vertices(const Tolerance& tol = {}) const;
};

/// Standard simplex of R^n.
DualSet simplex(int n);

/// {p in simplex | <p, a> <= 0}.
DualSet simplex_halfspace(Vector a);

/**
 * Extreme points of {p in Delta_n | <p, a> <= 0}: the unit vectors e_j with
 * a_j <= 0, plus one edge point (a_k e_j - a_j e_k) / (a_k - a_j) for every
 * strict sign pair a_j < 0 < a_k. Every returned point is stochastic, lies
 * on or below the constraint, and has at most two positive entries. Empty
 * iff a is strictly positive.
 */
std::vector<Vector> halfspace_simplex_extremes(const Vector& a, const Tolerance& tol = {});

/// Finite outer-minimization set for the minimax evaluators.
struct YNet {
    std::vector<Vector> points;
    bool normalized = false; // true once projected to the zero level of some f
};

/**
 * a = y - f(y) e, which lies on the zero level of any additively homogeneous
 * scalar f. The projection is verified post hoc; a residual above tol
 * signals that f is not additively homogeneous and raises contract_error.
 */
Vector zero_level_project(const OperatorHandle& f, const Vector& y, const Tolerance& tol = {});

/// Applies zero_level_project to every net point and marks the net normalized.
YNet normalize_ynet(const OperatorHandle& f, const YNet& net, const Tolerance& tol = {});

/**
 * min over the net of { t(x - y) + f(y) }, the polyhedral instance of the
 * minimax representation with the inner maximum over the simplex taken in
 * closed form. For t-nonexpansive f this is an upper envelope of f, exact
 * whenever x is a net point; a finite net cannot certify more.
 */
double minimax_eval(const OperatorHandle& f, const YNet& net, const Vector& x);

/// Dual maximin form: max over the net of { min_i (x_i - y_i) + f(y) }.
/// Lower envelope of f under the same hypotheses.
double maximin_eval(const OperatorHandle& f, const YNet& net, const Vector& x);

/**
 * min over the net of max over the vertices of Delta_y of <p, x>, where
 * Delta_y = {p in simplex | <p, y> <= f(y)} is realized through
 * halfspace_simplex_extremes(y - f(y) e). Requires f(0) = 0. An empty
 * Delta_y signals f(y) < min_i y_i (f not monotone additively homogeneous)
 * and raises contract_error naming the offending y.
 */
double homogeneous_minimax_eval(const OperatorHandle& f, const YNet& net, const Vector& x);

/// Evaluation detail for representation results emitted over the CLI.
struct RepresentationValue {
    Vector x;
    double value = 0.0;
    Vector argmin_y;
    Vector argmax_p;
};

RepresentationValue minimax_eval_traced(const OperatorHandle& f, const YNet& net, const Vector& x);
RepresentationValue homogeneous_minimax_eval_traced(const OperatorHandle& f, const YNet& net,
                                                    const Vector& x);

/// One tested point of a Moreau-conjugacy check.
struct MoreauEntry {
    Vector x;
    double f_x = 0.0;
    double min_envelope = 0.0; // min_y q(x-y) + f(y), >= f(x) for nonexpansive f
    double max_envelope = 0.0; // max_y -q(y-x) + f(y), <= f(x)
    bool x_in_net = false;
    bool violated = false;
};

struct MoreauReport {
    std::vector<MoreauEntry> entries;
    bool all_sandwiched = true;     // envelopes bracket f everywhere
    bool exact_at_net_points = true; // both residuals vanish when x is a net point
};

/**
 * Computes both one-sided Moreau envelopes of f over the net at each test
 * point. For q-nonexpansive f the min form dominates f and the max form is
 * dominated by it, with equality at net points; violations mark entries
 * rather than throwing.
 */
MoreauReport moreau_identity_check(const OperatorHandle& f, const WeakNorm& q, const YNet& net,
                                   const std::vector<Vector>& xs, const Tolerance& tol = {});

/**
 * One-player (convex-conjugate) form: max over pgrid of
 * { <p, x> - f*(p) } with f*(p) estimated as max over the net of
 * { <p, y> - f(y) }. For x inside the net the result never exceeds f(x);
 * for convex t-nonexpansive f it converges to f(x) as both grids refine.
 * Without convexity neither bound survives.
 */
double one_player_eval(const OperatorHandle& f, const std::vector<Vector>& pgrid,
                       const YNet& net, const Vector& x);

} // namespace shapmin
