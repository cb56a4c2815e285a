#include "shapmin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace shapmin {
namespace oracle {

namespace {

bool lex_less(const Vector& a, const Vector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Is c a strict convex combination of u and v (strictly inside the segment)?
bool strictly_between(const Vector& c, const Vector& u, const Vector& v, double tol) {
    // Pick the coordinate where u and v differ most to solve for lambda.
    std::size_t j = 0;
    double spread = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        const double d = std::abs(u[k] - v[k]);
        if (d > spread) {
            spread = d;
            j = k;
        }
    }
    if (spread <= tol) return false; // u == v, no strict interior
    const double lambda = (c[j] - v[j]) / (u[j] - v[j]);
    if (lambda <= tol || lambda >= 1.0 - tol) return false;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (std::abs(lambda * u[k] + (1.0 - lambda) * v[k] - c[k]) > tol) return false;
    return true;
}

} // namespace

std::vector<Vector> vertex_enumeration_simplex_halfspace(const Vector& a, const Tolerance& tol) {
    if (a.empty())
        throw std::invalid_argument("vertex_enumeration_simplex_halfspace: empty input");
    if (a.size() > 6)
        throw std::invalid_argument("vertex_enumeration_simplex_halfspace: n > 6 unsupported");
    for (double v : a)
        if (!std::isfinite(v))
            throw std::invalid_argument("vertex_enumeration_simplex_halfspace: non-finite entry");

    const std::size_t n = a.size();
    std::vector<Vector> candidates;

    // Simplex vertices.
    for (std::size_t j = 0; j < n; ++j) candidates.push_back(unit_vector(n, j));

    // Edge points with exactly two nonzero coordinates solving
    // p_j a_j + p_k a_k = 0, p_j + p_k = 1 in the open segment.
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            const double denom = a[k] - a[j];
            if (std::abs(denom) <= tol.abs_tol) continue;
            const double pj = a[k] / denom;
            const double pk = -a[j] / denom;
            if (pj <= tol.abs_tol || pk <= tol.abs_tol) continue;
            Vector p(n, 0.0);
            p[j] = pj;
            p[k] = pk;
            candidates.push_back(std::move(p));
        }
    }

    // Feasibility filter.
    std::vector<Vector> feasible;
    for (Vector& p : candidates) {
        double ip = 0.0;
        for (std::size_t j = 0; j < n; ++j) ip += p[j] * a[j];
        if (ip <= tol.abs_tol) feasible.push_back(std::move(p));
    }

    // Deduplicate.
    std::vector<Vector> unique;
    for (const Vector& p : feasible) {
        bool seen = false;
        for (const Vector& u : unique)
            if (approx_equal(p, u, tol.abs_tol)) { seen = true; break; }
        if (!seen) unique.push_back(p);
    }

    // Drop candidates strictly between two others. By the two-positive-entry
    // structure of this polytope, that test is complete.
    std::vector<Vector> extreme;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        bool interior = false;
        for (std::size_t u = 0; u < unique.size() && !interior; ++u) {
            if (u == i) continue;
            for (std::size_t v = u + 1; v < unique.size() && !interior; ++v) {
                if (v == i) continue;
                interior = strictly_between(unique[i], unique[u], unique[v], tol.abs_tol);
            }
        }
        if (!interior) extreme.push_back(unique[i]);
    }

    std::sort(extreme.begin(), extreme.end(), lex_less);
    return extreme;
}

GridMinResult grid_minimize(const OperatorHandle& f, const Vector& lo, const Vector& hi,
                            double resolution) {
    if (!(resolution > 0.0)) throw std::invalid_argument("grid_minimize: resolution must be > 0");
    if (lo.empty() || lo.size() != hi.size())
        throw std::invalid_argument("grid_minimize: malformed box");

    const std::size_t n = lo.size();
    std::vector<std::size_t> counts(n);
    double total = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (lo[j] > hi[j]) throw std::invalid_argument("grid_minimize: lower > upper");
        counts[j] = static_cast<std::size_t>(std::floor((hi[j] - lo[j]) / resolution + 1e-12)) + 1;
        total *= static_cast<double>(counts[j]);
    }
    if (total > 1e7) throw std::invalid_argument("grid_minimize: grid exceeds 1e7 points");

    GridMinResult best;
    best.value = std::numeric_limits<double>::infinity();
    Vector point(n);
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        for (std::size_t j = 0; j < n; ++j)
            point[j] = lo[j] + static_cast<double>(idx[j]) * resolution;
        const double v = eval_scalar(f, point);
        if (v < best.value) {
            best.value = v;
            best.argmin = point;
        }
        // Advance mixed-radix counter, last coordinate fastest.
        std::size_t j = n;
        while (j > 0) {
            --j;
            if (++idx[j] < counts[j]) break;
            idx[j] = 0;
            if (j == 0) return best;
        }
    }
}

Vector exhaustive_minimax(const GameSpec& spec, const Vector& x, EvalTrace* trace) {
    if (static_cast<int>(x.size()) != spec.n)
        throw std::invalid_argument("exhaustive_minimax: dimension mismatch");
    if (trace) {
        trace->argmin_a.assign(spec.states.size(), -1);
        trace->argmax_b.assign(spec.states.size(), -1);
    }

    Vector out(spec.states.size());
    for (std::size_t i = 0; i < spec.states.size(); ++i) {
        const GameState& state = spec.states[i];
        std::size_t combos = 0;
        for (const OuterAction& a : state.actions) combos += a.inner.size();
        if (combos > 1000000)
            throw std::invalid_argument("exhaustive_minimax: more than 1e6 action pairs in state " +
                                        std::to_string(i));

        // Full table of every (a, b) value, no pruning.
        std::vector<std::vector<double>> table(state.actions.size());
        for (std::size_t ai = 0; ai < state.actions.size(); ++ai) {
            table[ai].resize(state.actions[ai].inner.size());
            for (std::size_t bi = 0; bi < state.actions[ai].inner.size(); ++bi) {
                const InnerAction& b = state.actions[ai].inner[bi];
                double v = b.payoff;
                for (std::size_t j = 0; j < b.row.size(); ++j) v += b.row[j] * x[j];
                table[ai][bi] = v;
            }
        }

        double outer = std::numeric_limits<double>::infinity();
        int best_a = -1, best_b = -1;
        for (std::size_t ai = 0; ai < table.size(); ++ai) {
            double inner = -std::numeric_limits<double>::infinity();
            int arg_b = -1;
            for (std::size_t bi = 0; bi < table[ai].size(); ++bi) {
                if (table[ai][bi] > inner) {
                    inner = table[ai][bi];
                    arg_b = static_cast<int>(bi);
                }
            }
            if (inner < outer) {
                outer = inner;
                best_a = static_cast<int>(ai);
                best_b = arg_b;
            }
        }
        out[i] = outer;
        if (trace) {
            trace->argmin_a[i] = best_a;
            trace->argmax_b[i] = best_b;
        }
    }
    return out;
}

bool in_convex_hull(const Vector& p, const std::vector<Vector>& points, const Tolerance& tol) {
    if (points.empty()) return false;
    const std::size_t n = p.size();
    for (const Vector& q : points)
        if (q.size() != n) throw std::invalid_argument("in_convex_hull: dimension mismatch");

    // Phase-1 simplex on [A | I] [lambda; art] = b with b >= 0 after sign
    // normalization; p is a member iff the artificials can be driven to zero.
    const std::size_t rows = n + 1;
    const std::size_t m = points.size();
    const std::size_t cols = m + rows + 1; // lambdas, artificials, rhs
    const double pivot_tol = 1e-11;

    std::vector<std::vector<double>> T(rows, std::vector<double>(cols, 0.0));
    for (std::size_t r = 0; r < rows; ++r) {
        const double rhs = (r < n) ? p[r] : 1.0;
        const double sign = rhs < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < m; ++j)
            T[r][j] = sign * ((r < n) ? points[j][r] : 1.0);
        T[r][m + r] = 1.0;
        T[r][cols - 1] = sign * rhs;
    }

    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;

    // Reduced costs for phase-1 objective (artificial cost 1, basis = I).
    std::vector<double> rc(cols - 1, 0.0);
    double objective = 0.0;
    for (std::size_t j = 0; j < cols - 1; ++j) {
        double colsum = 0.0;
        for (std::size_t r = 0; r < rows; ++r) colsum += T[r][j];
        rc[j] = (j >= m ? 1.0 : 0.0) - colsum;
    }
    for (std::size_t r = 0; r < rows; ++r) objective += T[r][cols - 1];

    for (int iter = 0; iter < 10000; ++iter) {
        // Bland: entering column is the lowest index with negative reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols - 1; ++j) {
            if (rc[j] < -pivot_tol) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        // Bland: leaving row is the min-ratio row with the lowest basis index.
        std::size_t leave = rows;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < rows; ++r) {
            if (T[r][enter] > pivot_tol) {
                const double ratio = T[r][cols - 1] / T[r][enter];
                if (ratio < best_ratio - pivot_tol ||
                    (std::abs(ratio - best_ratio) <= pivot_tol &&
                     (leave == rows || basis[r] < basis[leave]))) {
                    best_ratio = ratio;
                    leave = r;
                }
            }
        }
        // Phase-1 is bounded below by zero, so a missing ratio row means the
        // tableau degenerated numerically; the objective test below then
        // reports non-membership.
        if (leave == rows) break;

        const double pivot = T[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) T[leave][j] /= pivot;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave) continue;
            const double factor = T[r][enter];
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j < cols; ++j) T[r][j] -= factor * T[leave][j];
        }
        const double rc_factor = rc[enter];
        for (std::size_t j = 0; j < cols - 1; ++j) rc[j] -= rc_factor * T[leave][j];
        objective += rc_factor * T[leave][cols - 1];
        basis[leave] = enter;
    }

    return objective <= tol.abs_tol;
}

} // namespace oracle
} // namespace shapmin
