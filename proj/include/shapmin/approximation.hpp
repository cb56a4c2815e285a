#pragma once

#include <utility>
#include <vector>

#include "shapmin/axioms.hpp"
#include "shapmin/core.hpp"
#include "shapmin/games.hpp"
#include "shapmin/norms.hpp"

namespace shapmin {

/**
 * Smoothed envelope g(x) = min over net points of { f(y) + q(x - y) }.
 * For f nonexpansive with respect to q and a net of radius eps covering K,
 * f <= g <= f + 2 eps on K, with g(y) = f(y) at every net point.
 */
class SmoothedMap {
public:
    SmoothedMap(std::vector<std::pair<Vector, double>> base, WeakNorm q, double epsilon,
                std::string target);

    double operator()(const Vector& x) const;

    double epsilon() const { return epsilon_; }
    const WeakNorm& norm() const { return q_; }
    const std::vector<std::pair<Vector, double>>& base() const { return base_; }
    const std::string& target() const { return target_; }

private:
    std::vector<std::pair<Vector, double>> base_; // (y_l, f(y_l))
    WeakNorm q_;
    double epsilon_;
    std::string target_;
};

/**
 * Builds the smoothed map of f over the net. Nonexpansiveness of f with
 * respect to q is spot-checked by sampling before the build; a violation
 * aborts with contract_error carrying the worst residual.
 */
SmoothedMap net_smoothing(const OperatorHandle& f, const WeakNorm& q, const EpsNet& net,
                          std::uint64_t precheck_seed = 42, std::size_t precheck_samples = 2000,
                          const Tolerance& tol = {});

/**
 * Polyhedral approximation of a payment-free operator: an eps/2-net of the
 * unit sup-sphere is built, the full representation over the projected net
 * serves as the candidate pool, and per (coordinate, net point) the
 * minimizing outer action is kept. The result G satisfies
 * F <= G <= F + eps ||x||_inf with equality at the net points.
 * M, AH and H are spot-checked before construction.
 */
PaymentFreeRep approximate_payment_free(const OperatorHandle& F, double epsilon,
                                        std::uint64_t precheck_seed = 42,
                                        std::size_t precheck_samples = 2000,
                                        const Tolerance& tol = {});

/// Sampled verification of the approximation sandwich.
struct SandwichReport {
    double epsilon = 0.0;
    double max_lower_violation = 0.0; // max of F_i(x) - G_i(x), want <= tol
    double max_upper_excess = 0.0;    // max of (G_i(x) - F_i(x)) / ||x||_inf
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    bool holds(const Tolerance& tol = {}) const {
        return max_lower_violation <= tol.abs_tol && max_upper_excess <= epsilon + tol.abs_tol;
    }
};

/**
 * Samples cfg.count points and measures both sides of
 * F_i(x) <= G_i(x) <= F_i(x) + eps ||x||_inf. Deterministic under cfg.seed;
 * points with ||x||_inf below tolerance are skipped for the normalized
 * upper excess.
 */
SandwichReport verify_sandwich(const OperatorHandle& F, const PaymentFreeRep& G, double epsilon,
                               const SampleConfig& cfg, const Tolerance& tol = {});

} // namespace shapmin
