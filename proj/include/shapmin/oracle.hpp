#pragma once

#include <vector>

#include "shapmin/axioms.hpp"
#include "shapmin/core.hpp"
#include "shapmin/games.hpp"

namespace shapmin {

// Ground-truth validators for the fast paths. Everything here is written to
// be obviously correct rather than fast, and shares no code with the
// constructions it checks.
namespace oracle {

/**
 * All extreme points of {p in Delta_n | <p, a> <= 0}, found by enumerating
 * every candidate basic solution (simplex vertices and two-coordinate edge
 * intersections with the hyperplane), filtering by feasibility, and discarding
 * any candidate that is a strict convex combination of two others. Canonical
 * output: lexicographically sorted, deduplicated by tolerance. Rejects n > 6.
 */
std::vector<Vector> vertex_enumeration_simplex_halfspace(const Vector& a,
                                                         const Tolerance& tol = {});

struct GridMinResult {
    Vector argmin;
    double value = 0.0;
};

/**
 * Exhaustive minimization of a scalar operator over an axis-aligned grid of
 * the given spacing (grid size capped at 1e7 points). Lowest linear index
 * wins ties, last coordinate varying fastest.
 */
GridMinResult grid_minimize(const OperatorHandle& f, const Vector& lo, const Vector& hi,
                            double resolution);

/**
 * Shapley operator value by explicit enumeration of every action pair, with
 * no pruning and the same lowest-index tie rule as the fast path; the two
 * must agree bit for bit. Per-state action combinations are capped at 1e6.
 */
Vector exhaustive_minimax(const GameSpec& spec, const Vector& x, EvalTrace* trace = nullptr);

/**
 * Membership of p in the convex hull of a finite point set, decided by a
 * phase-1 simplex on { lambda >= 0, sum lambda = 1, sum lambda_i q_i = p }.
 * Used by the extreme-point reduction of polyhedral norms.
 */
bool in_convex_hull(const Vector& p, const std::vector<Vector>& points,
                    const Tolerance& tol = {});

} // namespace oracle
} // namespace shapmin
