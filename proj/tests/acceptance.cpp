// Acceptance suite: property-based checks with stated sampling power, one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "shapmin/approximation.hpp"
#include "shapmin/axioms.hpp"
#include "shapmin/games.hpp"
#include "shapmin/json_io.hpp"
#include "shapmin/kernels.hpp"
#include "shapmin/norms.hpp"
#include "shapmin/oracle.hpp"
#include "shapmin/representation.hpp"
#include "shapmin/risk.hpp"

using namespace shapmin;

namespace {

constexpr double kTol = 1e-9;

struct Failure {
    bool failed = false;
    std::string detail;

    void record(const std::string& what) {
        if (!failed) detail = what;
        failed = true;
    }
};

bool set_equal(const std::vector<Vector>& a, const std::vector<Vector>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (const Vector& x : a) {
        bool found = false;
        for (const Vector& y : b)
            if (approx_equal(x, y, tol)) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

OperatorHandle top_operator(int n) {
    return scalar_operator(n, "top", [](const Vector& x) { return top(x); });
}

OperatorHandle min_operator(int n) {
    return scalar_operator(n, "coordinate-min", [](const Vector& x) {
        double m = x[0];
        for (double v : x) m = std::min(m, v);
        return m;
    });
}

// ---------------------------------------------------------------------------
// 1. Axiom equivalences: 100 stochastic specs pass M, AH, Nt on 1e4 pairs
//    each; 100 substochastic specs pass M, ASH, Nt+; no side disagreements.
bool criterion_axiom_equivalences(std::string& detail) {
    Failure fail;
    for (int kind = 0; kind < 2 && !fail.failed; ++kind) {
        const bool sub = kind == 1;
        for (std::uint64_t i = 0; i < 100 && !fail.failed; ++i) {
            const int n = 1 + static_cast<int>(i % 4);
            const GameSpec spec =
                random_game_spec(derived_seed(sub ? 20000 : 10000, i), n, 3, 3, sub);
            const OperatorHandle F = make_operator(spec);
            const SuiteReport suite = equivalence_suite(
                F, sub ? Suite::SubhomogeneousGK : Suite::GunawardenaKeane,
                SampleConfig::uniform(derived_seed(sub ? 21000 : 11000, i), 10000, n));
            for (const AxiomReport& r : suite.reports)
                if (!r.holds)
                    fail.record(std::string(sub ? "substochastic" : "stochastic") + " spec " +
                                std::to_string(i) + " violates " + axiom_name(r.axiom) +
                                " by " + std::to_string(r.max_violation));
            if (!suite.consistent) fail.record("equivalence sides disagree");
        }
    }
    detail = fail.detail;
    return !fail.failed;
}

// ---------------------------------------------------------------------------
// 2. halfspace_simplex_extremes set-equals the oracle enumeration on 200
//    random constraints per n in {2..5}; every vertex has <= 2 positive
//    entries.
bool criterion_extreme_points(std::string& detail) {
    Failure fail;
    for (int n = 2; n <= 5 && !fail.failed; ++n) {
        SplitMix64 gen(derived_seed(30000, static_cast<std::uint64_t>(n)));
        for (int trial = 0; trial < 200 && !fail.failed; ++trial) {
            Vector a(static_cast<std::size_t>(n));
            for (double& v : a) v = gen.next_in(-2.0, 2.0);
            const auto fast = halfspace_simplex_extremes(a);
            const auto slow = oracle::vertex_enumeration_simplex_halfspace(a);
            if (!set_equal(fast, slow, kTol))
                fail.record("vertex sets differ at n=" + std::to_string(n) + ", a=" +
                            to_string(a));
            for (const Vector& p : fast) {
                int positive = 0;
                for (double v : p)
                    if (v > kTol) ++positive;
                if (positive > 2) fail.record("vertex with more than two positive entries");
                if (!is_stochastic(p)) fail.record("non-stochastic vertex");
            }
        }
    }
    detail = fail.detail;
    return !fail.failed;
}

// ---------------------------------------------------------------------------
// 3. Representation exactness at net points for top, coordinate-min and ten
//    payment-free coordinates; minimax >= f >= maximin off the net.
bool criterion_representation_exactness(std::string& detail) {
    Failure fail;
    const int n = 3;
    std::vector<OperatorHandle> ops = {top_operator(n), min_operator(n)};
    for (std::uint64_t k = 0; k < 10; ++k) {
        const GameSpec pf = payment_free_from_spec(
            random_game_spec(derived_seed(40000, k), n, 3, 3));
        ops.push_back(coordinate_operator(make_operator(pf), static_cast<int>(k % n)));
    }

    const auto base = sample_points(SampleConfig::uniform(41000, 5, n));
    YNet base_net;
    base_net.points = base;

    for (std::size_t op = 0; op < ops.size() && !fail.failed; ++op) {
        const OperatorHandle& f = ops[op];
        const auto exact_xs =
            sample_points(SampleConfig::uniform(derived_seed(42000, op), 1000, n));
        for (const Vector& x : exact_xs) {
            YNet net = base_net;
            net.points.push_back(x);
            const double fx = eval_scalar(f, x);
            if (std::abs(minimax_eval(f, net, x) - fx) > kTol)
                fail.record("minimax not exact at a net point for " + f.label);
            if (std::abs(maximin_eval(f, net, x) - fx) > kTol)
                fail.record("maximin not exact at a net point for " + f.label);
            if (std::abs(homogeneous_minimax_eval(f, net, x) - fx) > kTol)
                fail.record("homogeneous minimax not exact at a net point for " + f.label);
            if (fail.failed) break;
        }
        if (fail.failed) break;

        const auto off_xs =
            sample_points(SampleConfig::uniform(derived_seed(43000, op), 10000, n));
        for (const Vector& x : off_xs) {
            const double fx = eval_scalar(f, x);
            if (minimax_eval(f, base_net, x) < fx - kTol)
                fail.record("minimax undershoots " + f.label);
            if (maximin_eval(f, base_net, x) > fx + kTol)
                fail.record("maximin overshoots " + f.label);
            if (fail.failed) break;
        }
    }
    detail = fail.detail;
    return !fail.failed;
}

// ---------------------------------------------------------------------------
// 4. Smoothing sandwich f <= g <= f + 2 eps on [-1,1]^n for top and ten
//    seeded t-nonexpansive maps, eps in {0.5, 0.25, 0.1}, 1e4 samples each.
bool criterion_smoothing_sandwich(std::string& detail) {
    Failure fail;
    std::vector<OperatorHandle> ops;
    std::vector<int> dims;
    ops.push_back(top_operator(3));
    dims.push_back(3);
    for (std::uint64_t k = 0; k < 10; ++k) {
        const int n = 1 + static_cast<int>(k % 3);
        const GameSpec spec = random_game_spec(derived_seed(50000, k), n, 3, 3);
        ops.push_back(coordinate_operator(make_operator(spec), 0));
        dims.push_back(n);
    }

    for (std::size_t op = 0; op < ops.size() && !fail.failed; ++op) {
        const int n = dims[op];
        const OperatorHandle& f = ops[op];
        for (double eps : {0.5, 0.25, 0.1}) {
            const EpsNet net =
                epsilon_net_box(constant_vector(static_cast<std::size_t>(n), -1.0),
                                constant_vector(static_cast<std::size_t>(n), 1.0), eps);
            const SmoothedMap g = net_smoothing(f, WeakNorm::top(n), net);
            const auto xs = sample_points(
                SampleConfig::cube(derived_seed(51000, op), 10000, static_cast<std::size_t>(n),
                                   -1.0, 1.0));
            const ScanResult worst = kernels::scan_max(xs.size(), [&](std::size_t i) {
                const double fx = eval_scalar(f, xs[i]);
                const double gx = g(xs[i]);
                return std::max(fx - gx, gx - fx - 2.0 * eps);
            });
            if (worst.max_value > kTol) {
                fail.record("sandwich violated by " + std::to_string(worst.max_value) +
                            " for " + f.label + " at eps=" + std::to_string(eps));
                break;
            }
        }
    }
    detail = fail.detail;
    return !fail.failed;
}

// ---------------------------------------------------------------------------
// 5. Polyhedral approximation: 0 <= G - F <= eps ||x||_inf on 1e4 samples for
//    ten payment-free operators and eps in {0.5, 0.25}; G passes the axioms
//    suite; the measured excess never grows when eps halves.
bool criterion_polyhedral_approximation(std::string& detail) {
    Failure fail;
    for (std::uint64_t k = 0; k < 10 && !fail.failed; ++k) {
        const int n = 1 + static_cast<int>(k % 3);
        const GameSpec pf = payment_free_from_spec(
            random_game_spec(derived_seed(60000, k), n, 3, 3));
        const OperatorHandle F = make_operator(pf);

        double previous_excess = 1e300;
        for (double eps : {0.5, 0.25}) {
            const PaymentFreeRep G = approximate_payment_free(F, eps);
            const SandwichReport report = verify_sandwich(
                F, G, eps,
                SampleConfig::uniform(derived_seed(61000, k), 10000,
                                      static_cast<std::size_t>(n)));
            if (report.max_lower_violation > kTol)
                fail.record("lower sandwich violated by " +
                            std::to_string(report.max_lower_violation));
            if (report.max_upper_excess > eps + kTol)
                fail.record("upper sandwich violated: excess " +
                            std::to_string(report.max_upper_excess) + " at eps=" +
                            std::to_string(eps));
            if (report.max_upper_excess > previous_excess + 1e-12)
                fail.record("excess grew when eps halved");
            previous_excess = report.max_upper_excess;

            const OperatorHandle gop = make_operator(G);
            for (Axiom a : {Axiom::M, Axiom::AH, Axiom::H, Axiom::Nt}) {
                const AxiomReport r = check_axiom(
                    gop, a,
                    SampleConfig::uniform(derived_seed(62000, k), 10000,
                                          static_cast<std::size_t>(n)));
                if (!r.holds)
                    fail.record("approximant violates " + std::string(axiom_name(a)));
            }
            if (fail.failed) break;
        }
    }
    detail = fail.detail;
    return !fail.failed;
}

// ---------------------------------------------------------------------------
// 6. Recession consistency: ||F(sx)/s - rec(x)||_inf <= 3/s at s = 2^20 and
//    rec matches the payment-free operator within 1e-6, for 20 seeded specs
//    and 1e3 sampled points each.
bool criterion_recession(std::string& detail) {
    Failure fail;
    const double s = static_cast<double>(1u << 20);
    const Tolerance tight{1e-12, 1e-12};
    for (std::uint64_t k = 0; k < 20 && !fail.failed; ++k) {
        const int n = 1 + static_cast<int>(k % 4);
        const GameSpec spec = random_game_spec(derived_seed(70000, k), n, 3, 3);
        const GameSpec pf = payment_free_from_spec(spec);
        const auto xs = sample_points(
            SampleConfig::uniform(derived_seed(71000, k), 1000, static_cast<std::size_t>(n)));
        for (const Vector& x : xs) {
            const Vector rec = recession_operator(spec, x, tight);
            Vector scaled = x;
            for (double& v : scaled) v *= s;
            Vector at_scale = shapley_eval(spec, scaled);
            for (double& v : at_scale) v /= s;
            if (sup_norm(sub(at_scale, rec)) > 3.0 / s) {
                fail.record("scaled operator strays from the recession at x = " + to_string(x));
                break;
            }
            if (sup_norm(sub(rec, shapley_eval(pf, x))) > 1e-6) {
                fail.record("recession differs from the payment-free operator at x = " +
                            to_string(x));
                break;
            }
        }
    }
    detail = fail.detail;
    return !fail.failed;
}

// ---------------------------------------------------------------------------
// 7. Risk representations reproduce the worst-case, expectation and a
//    nonconvex composite measure at 1e3 positions when the normalized net
//    contains X + mu(X)e, and never undershoot otherwise.
bool criterion_risk_representation(std::string& detail) {
    Failure fail;
    const int n = 3;
    RiskSpace space;
    for (int i = 0; i < n; ++i) {
        space.atoms.push_back("w" + std::to_string(i));
        space.weights.push_back(1.0 / n);
    }
    std::vector<RiskMeasure> measures = {worst_case_measure(n), expectation_measure(space)};
    measures.push_back(risk_from_operator(scalar_operator(n, "min-max-composite", [](const Vector& x) {
        return std::min(x[0], std::max(x[1], x[2]));
    })));

    const auto random_net = sample_points(SampleConfig::uniform(81000, 10, n));
    for (const RiskMeasure& mu : measures) {
        const auto xs = sample_points(SampleConfig::uniform(80000, 1000, n));
        for (const Vector& X : xs) {
            const double value = mu(X);
            std::vector<Vector> net_with = random_net;
            net_with.push_back(X); // normalization lands on X + mu(X)e
            if (std::abs(risk_minimax_eval(mu, net_with, X) - value) > kTol)
                fail.record("risk minimax not exact for " + mu.label);
            if (std::abs(homogeneous_risk_minimax_eval(mu, net_with, X) - value) > kTol)
                fail.record("homogeneous risk minimax not exact for " + mu.label);
            if (risk_minimax_eval(mu, random_net, X) < value - kTol)
                fail.record("risk minimax undershoots for " + mu.label);
            if (homogeneous_risk_minimax_eval(mu, random_net, X) < value - kTol)
                fail.record("homogeneous risk minimax undershoots for " + mu.label);
            if (fail.failed) break;
        }
        if (fail.failed) break;
    }
    detail = fail.detail;
    return !fail.failed;
}

// ---------------------------------------------------------------------------
// 8. shapley_eval and the exhaustive oracle agree bit for bit, including the
//    recorded action indices, on 100 specs x 100 points.
bool criterion_oracle_agreement(std::string& detail) {
    Failure fail;
    for (std::uint64_t k = 0; k < 100 && !fail.failed; ++k) {
        const int n = 1 + static_cast<int>(k % 4);
        const GameSpec spec = random_game_spec(derived_seed(90000, k), n, 3, 3);
        const auto xs = sample_points(
            SampleConfig::uniform(derived_seed(91000, k), 100, static_cast<std::size_t>(n)));
        for (const Vector& x : xs) {
            EvalTrace fast_trace, slow_trace;
            const Vector fast = shapley_eval(spec, x, &fast_trace);
            const Vector slow = oracle::exhaustive_minimax(spec, x, &slow_trace);
            if (fast != slow || fast_trace.argmin_a != slow_trace.argmin_a ||
                fast_trace.argmax_b != slow_trace.argmax_b) {
                fail.record("disagreement on spec " + std::to_string(k) + " at x = " +
                            to_string(x));
                break;
            }
        }
    }
    detail = fail.detail;
    return !fail.failed;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "axiom equivalences on 100+100 seeded specs, 1e4 pairs each",
         criterion_axiom_equivalences},
        {2, "extreme points of simplex/half-space sections vs oracle, 200 x {2..5}",
         criterion_extreme_points},
        {3, "representation exactness at net points and sandwich off-net",
         criterion_representation_exactness},
        {4, "smoothing sandwich f <= g <= f + 2eps on 1e4 samples",
         criterion_smoothing_sandwich},
        {5, "polyhedral approximation sandwich, axioms and excess monotonicity",
         criterion_polyhedral_approximation},
        {6, "recession operator consistency at s = 2^20",
         criterion_recession},
        {7, "risk minimax representations, exactness and one-sidedness",
         criterion_risk_representation},
        {8, "shapley_eval equals exhaustive enumeration bit for bit",
         criterion_oracle_agreement},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (ok) {
            std::printf("[PASS] criterion %d: %s\n", c.id, c.title);
        } else {
            std::printf("[FAIL] criterion %d: %s -- %s\n", c.id, c.title, detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
