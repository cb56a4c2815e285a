#pragma once

#include <string>
#include <vector>

#include "shapmin/axioms.hpp"
#include "shapmin/core.hpp"
#include "shapmin/representation.hpp"

namespace shapmin {

/// One choice of the inner (maximizing) player: a stage payoff and the
/// transition row it triggers.
struct InnerAction {
    double payoff = 0.0;
    Vector row;
};

/// One choice of the outer (minimizing) player with the inner replies it allows.
struct OuterAction {
    std::string name;
    std::vector<InnerAction> inner;
};

struct GameState {
    std::vector<OuterAction> actions;
};

/**
 * Finite zero-sum game with perfect information: per state, the outer player
 * picks an action, the inner player replies, a payoff is collected and the
 * state moves by the chosen stochastic row. The associated dynamic
 * programming operator is evaluated by shapley_eval.
 *
 * Rows must be stochastic within tolerance, or substochastic when the
 * subprobability flag is set (the additively subhomogeneous regime).
 */
struct GameSpec {
    int n = 0;
    bool subprobability = false;
    std::vector<GameState> states;

    void validate(const Tolerance& tol = {}) const;
    /// Largest |payoff| over the whole spec; bounds the recession error.
    double max_abs_payoff() const;
};

/// Chosen outer/inner indices per state, lowest index on ties.
struct EvalTrace {
    std::vector<int> argmin_a;
    std::vector<int> argmax_b;
};

/**
 * The dynamic programming operator: coordinate i is
 * min over outer actions of max over inner actions of { r + <row, x> }.
 */
Vector shapley_eval(const GameSpec& spec, const Vector& x, EvalTrace* trace = nullptr);

/// Same spec with every payoff zeroed; its operator is monotone, additively
/// and positively homogeneous.
GameSpec payment_free_from_spec(GameSpec spec);

/// (x0, F(x0), ..., F^k(x0)).
std::vector<Vector> value_iteration(const GameSpec& spec, const Vector& x0, int k);

/**
 * Recession operator lim_{s->inf} F(s x) / s, computed by doubling s until
 * two successive values agree within tol.abs_tol. For finite specs the limit
 * is the payment-free operator of the same spec, reached with error at most
 * max|r| / s. Failure to converge within 60 doublings throws.
 */
Vector recession_operator(const GameSpec& spec, const Vector& x, const Tolerance& tol = {});

/// Operator handle evaluating the spec. The spec is validated once up front.
OperatorHandle make_operator(const GameSpec& spec, const Tolerance& tol = {});

/// One outer action of a payment-free representation: a point of the zero
/// level and the vertex set of its simplex slice.
struct RepAction {
    Vector outer_point;
    std::vector<Vector> vertices;
};

/**
 * Minimax representation data of a payment-free operator: per state, outer
 * actions paired with extreme-point sets in which every stochastic vector
 * has at most two positive coordinates.
 */
struct PaymentFreeRep {
    int n = 0;
    std::vector<std::vector<RepAction>> states;

    void validate(const Tolerance& tol = {}) const;
};

/// Outer points discarded per state because their dual slice was empty.
struct RepDiagnostics {
    std::vector<int> dropped_points;
};

/**
 * Builds the representation of a payment-free operator F from a finite net:
 * every net point is projected to the zero level of each coordinate map,
 * its half-space slice vertices are computed, and empty slices are dropped
 * (counted in diagnostics). Evaluating the result reproduces F exactly at
 * the net points. Throws when some coordinate retains no outer action at all.
 */
PaymentFreeRep build_payment_free_representation(const OperatorHandle& F, const YNet& ynet,
                                                 const Tolerance& tol = {},
                                                 RepDiagnostics* diag = nullptr);

/// min over outer actions of max over vertices of <p, x>, per state.
Vector eval_payment_free_rep(const PaymentFreeRep& rep, const Vector& x);

/// Operator handle evaluating the representation.
OperatorHandle make_operator(const PaymentFreeRep& rep);

/**
 * Seeded random spec for the test suites: payoffs uniform in [-3, 3], rows
 * drawn as normalized exponentials (strictly positive, so ties are absent
 * almost surely). Substochastic variants scale each row by a uniform factor
 * in [0.3, 0.95].
 */
GameSpec random_game_spec(std::uint64_t seed, int n, int max_outer, int max_inner,
                          bool subprobability = false);

} // namespace shapmin
