#include "shapmin/games.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace shapmin {

void GameSpec::validate(const Tolerance& tol) const {
    if (n < 1) throw std::invalid_argument("GameSpec: state count must be >= 1");
    if (static_cast<int>(states.size()) != n)
        throw std::invalid_argument("GameSpec: expected " + std::to_string(n) + " states, got " +
                                    std::to_string(states.size()));
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].actions.empty())
            throw std::invalid_argument("GameSpec: state " + std::to_string(i) +
                                        " has no outer actions");
        for (const OuterAction& a : states[i].actions) {
            if (a.inner.empty())
                throw std::invalid_argument("GameSpec: state " + std::to_string(i) +
                                            " has an outer action with no inner actions");
            for (const InnerAction& b : a.inner) {
                if (!std::isfinite(b.payoff))
                    throw std::invalid_argument("GameSpec: non-finite payoff in state " +
                                                std::to_string(i));
                if (static_cast<int>(b.row.size()) != n)
                    throw std::invalid_argument("GameSpec: transition row of wrong dimension in state " +
                                                std::to_string(i));
                const bool ok = subprobability ? is_substochastic(b.row, tol)
                                               : is_stochastic(b.row, tol);
                if (!ok)
                    throw std::invalid_argument(
                        "GameSpec: row " + to_string(b.row) + " in state " + std::to_string(i) +
                        (subprobability ? " is not substochastic" : " is not stochastic"));
            }
        }
    }
}

double GameSpec::max_abs_payoff() const {
    double m = 0.0;
    for (const GameState& s : states)
        for (const OuterAction& a : s.actions)
            for (const InnerAction& b : a.inner) m = std::max(m, std::abs(b.payoff));
    return m;
}

Vector shapley_eval(const GameSpec& spec, const Vector& x, EvalTrace* trace) {
    if (static_cast<int>(x.size()) != spec.n)
        throw std::invalid_argument("shapley_eval: dimension mismatch");
    if (trace) {
        trace->argmin_a.assign(spec.states.size(), -1);
        trace->argmax_b.assign(spec.states.size(), -1);
    }

    Vector out(spec.states.size());
    for (std::size_t i = 0; i < spec.states.size(); ++i) {
        const GameState& state = spec.states[i];
        if (state.actions.empty())
            throw std::invalid_argument("shapley_eval: state " + std::to_string(i) +
                                        " has no actions");
        double outer = std::numeric_limits<double>::infinity();
        int best_a = -1, best_b = -1;
        for (std::size_t a = 0; a < state.actions.size(); ++a) {
            const auto& inner_actions = state.actions[a].inner;
            if (inner_actions.empty())
                throw std::invalid_argument("shapley_eval: empty inner action set in state " +
                                            std::to_string(i));
            double inner = -std::numeric_limits<double>::infinity();
            int arg_b = -1;
            for (std::size_t b = 0; b < inner_actions.size(); ++b) {
                // Accumulate from the payoff, in row order: the exhaustive
                // oracle does the same so the two agree bit for bit.
                double v = inner_actions[b].payoff;
                const Vector& row = inner_actions[b].row;
                for (std::size_t j = 0; j < row.size(); ++j) v += row[j] * x[j];
                if (v > inner) {
                    inner = v;
                    arg_b = static_cast<int>(b);
                }
            }
            if (inner < outer) {
                outer = inner;
                best_a = static_cast<int>(a);
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

GameSpec payment_free_from_spec(GameSpec spec) {
    for (GameState& s : spec.states)
        for (OuterAction& a : s.actions)
            for (InnerAction& b : a.inner) b.payoff = 0.0;
    return spec;
}

std::vector<Vector> value_iteration(const GameSpec& spec, const Vector& x0, int k) {
    if (k < 0) throw std::invalid_argument("value_iteration: negative step count");
    std::vector<Vector> iterates;
    iterates.reserve(static_cast<std::size_t>(k) + 1);
    iterates.push_back(x0);
    for (int j = 0; j < k; ++j) iterates.push_back(shapley_eval(spec, iterates.back()));
    return iterates;
}

Vector recession_operator(const GameSpec& spec, const Vector& x, const Tolerance& tol) {
    if (static_cast<int>(x.size()) != spec.n)
        throw std::invalid_argument("recession_operator: dimension mismatch");

    Vector scaled(x.size());
    double s = 2.0;
    Vector prev;
    for (int doubling = 0; doubling < 60; ++doubling, s *= 2.0) {
        for (std::size_t j = 0; j < x.size(); ++j) scaled[j] = s * x[j];
        Vector cur = shapley_eval(spec, scaled);
        for (double& v : cur) v /= s;
        if (!prev.empty() && approx_equal(cur, prev, tol.abs_tol)) return cur;
        prev = std::move(cur);
    }
    throw std::runtime_error("recession_operator: no convergence after 60 doublings at x = " +
                             to_string(x));
}

OperatorHandle make_operator(const GameSpec& spec, const Tolerance& tol) {
    spec.validate(tol);
    auto shared = std::make_shared<const GameSpec>(spec);
    OperatorHandle h;
    h.input_dim = spec.n;
    h.output_dim = spec.n;
    h.label = "shapley(n=" + std::to_string(spec.n) + ")";
    h.eval = [shared](const Vector& x) { return shapley_eval(*shared, x); };
    return h;
}

void PaymentFreeRep::validate(const Tolerance& tol) const {
    if (n < 1) throw std::invalid_argument("PaymentFreeRep: dimension must be >= 1");
    if (static_cast<int>(states.size()) != n)
        throw std::invalid_argument("PaymentFreeRep: state count mismatch");
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].empty())
            throw std::invalid_argument("PaymentFreeRep: state " + std::to_string(i) +
                                        " has no outer actions");
        for (const RepAction& a : states[i]) {
            if (static_cast<int>(a.outer_point.size()) != n)
                throw std::invalid_argument("PaymentFreeRep: outer point of wrong dimension");
            if (a.vertices.empty())
                throw std::invalid_argument("PaymentFreeRep: outer action with no vertices");
            for (const Vector& p : a.vertices) {
                if (!is_stochastic(p, tol))
                    throw std::invalid_argument("PaymentFreeRep: vertex " + to_string(p) +
                                                " is not stochastic");
                if (dot(p, a.outer_point) > tol.abs_tol)
                    throw std::invalid_argument("PaymentFreeRep: vertex violates its half-space");
            }
        }
    }
}

PaymentFreeRep build_payment_free_representation(const OperatorHandle& F, const YNet& ynet,
                                                 const Tolerance& tol, RepDiagnostics* diag) {
    if (!F.square())
        throw std::invalid_argument("build_payment_free_representation: operator must be square");
    if (ynet.points.empty())
        throw std::invalid_argument("build_payment_free_representation: empty ynet");

    PaymentFreeRep rep;
    rep.n = F.input_dim;
    rep.states.resize(static_cast<std::size_t>(F.input_dim));
    if (diag) diag->dropped_points.assign(static_cast<std::size_t>(F.input_dim), 0);

    // F(y) once per net point serves every coordinate.
    std::vector<Vector> values;
    values.reserve(ynet.points.size());
    for (const Vector& y : ynet.points) values.push_back(F(y));

    for (std::size_t i = 0; i < rep.states.size(); ++i) {
        for (std::size_t l = 0; l < ynet.points.size(); ++l) {
            const Vector a = add_constant(ynet.points[l], -values[l][i]);
            const double residual = std::abs(F(a)[i]);
            if (residual > tol.abs_tol)
                throw contract_error("build_payment_free_representation: coordinate " +
                                         std::to_string(i) + " of '" + F.label +
                                         "' is not additively homogeneous at y = " +
                                         to_string(ynet.points[l]) + " (residual " +
                                         std::to_string(residual) + ")",
                                     residual);
            std::vector<Vector> verts = halfspace_simplex_extremes(a, tol);
            if (verts.empty()) {
                if (diag) ++diag->dropped_points[i];
                continue;
            }
            rep.states[i].push_back(RepAction{a, std::move(verts)});
        }
        if (rep.states[i].empty())
            throw contract_error("build_payment_free_representation: every outer point of "
                                 "coordinate " + std::to_string(i) +
                                 " has an empty dual slice; '" + F.label +
                                 "' looks unbounded below on the net",
                                 0.0);
    }
    return rep;
}

Vector eval_payment_free_rep(const PaymentFreeRep& rep, const Vector& x) {
    if (static_cast<int>(x.size()) != rep.n)
        throw std::invalid_argument("eval_payment_free_rep: dimension mismatch");
    Vector out(rep.states.size());
    for (std::size_t i = 0; i < rep.states.size(); ++i) {
        if (rep.states[i].empty())
            throw std::invalid_argument("eval_payment_free_rep: state " + std::to_string(i) +
                                        " has no outer actions");
        double outer = std::numeric_limits<double>::infinity();
        for (const RepAction& a : rep.states[i]) {
            double inner = -std::numeric_limits<double>::infinity();
            for (const Vector& p : a.vertices) inner = std::max(inner, dot(p, x));
            outer = std::min(outer, inner);
        }
        out[i] = outer;
    }
    return out;
}

OperatorHandle make_operator(const PaymentFreeRep& rep) {
    auto shared = std::make_shared<const PaymentFreeRep>(rep);
    OperatorHandle h;
    h.input_dim = rep.n;
    h.output_dim = rep.n;
    h.label = "payment-free-rep(n=" + std::to_string(rep.n) + ")";
    h.eval = [shared](const Vector& x) { return eval_payment_free_rep(*shared, x); };
    return h;
}

GameSpec random_game_spec(std::uint64_t seed, int n, int max_outer, int max_inner,
                          bool subprobability) {
    if (n < 1 || max_outer < 1 || max_inner < 1)
        throw std::invalid_argument("random_game_spec: counts must be >= 1");

    SplitMix64 gen(seed);
    auto draw_count = [&](int max_count) {
        return 1 + static_cast<int>(gen.next_u64() % static_cast<std::uint64_t>(max_count));
    };

    GameSpec spec;
    spec.n = n;
    spec.subprobability = subprobability;
    spec.states.resize(static_cast<std::size_t>(n));
    for (GameState& state : spec.states) {
        const int na = draw_count(max_outer);
        for (int a = 0; a < na; ++a) {
            OuterAction outer;
            outer.name = "a" + std::to_string(a);
            const int nb = draw_count(max_inner);
            for (int b = 0; b < nb; ++b) {
                InnerAction inner;
                inner.payoff = gen.next_in(-3.0, 3.0);
                inner.row.resize(static_cast<std::size_t>(n));
                double sum = 0.0;
                for (double& v : inner.row) {
                    v = -std::log(1.0 - gen.next_double());
                    sum += v;
                }
                for (double& v : inner.row) v /= sum;
                if (subprobability) {
                    const double scale = gen.next_in(0.3, 0.95);
                    for (double& v : inner.row) v *= scale;
                }
                outer.inner.push_back(std::move(inner));
            }
            state.actions.push_back(std::move(outer));
        }
    }
    return spec;
}

} // namespace shapmin
