#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shapmin/axioms.hpp"
#include "shapmin/core.hpp"

namespace shapmin {

/**
 * Finite probability space: labeled atoms with strictly positive weights.
 * Full support keeps the almost-sure order equal to the coordinatewise
 * order, so positions live in plain R^n.
 */
struct RiskSpace {
    std::vector<std::string> atoms;
    Vector weights;

    std::size_t size() const { return atoms.size(); }
    void validate(const Tolerance& tol = {}) const;
};

/**
 * Risk measure on positions of R^n: antitone and cash-additive,
 * mu(X + l e) = mu(X) - l. The flags record sampled classifications, not
 * proofs.
 */
struct RiskMeasure {
    int n = 0;
    std::string label;
    std::function<double(const Vector&)> eval;
    bool coherent = false;
    bool positively_homogeneous = false;

    double operator()(const Vector& X) const;
};

/**
 * mu(X) = f(-X) for a monotone additively homogeneous scalar f. Both axioms
 * are spot-checked before wrapping (failures raise contract_error); positive
 * homogeneity and midpoint convexity are sampled to set the flags.
 */
RiskMeasure risk_from_operator(const OperatorHandle& f, std::uint64_t precheck_seed = 42,
                               std::size_t precheck_samples = 2000, const Tolerance& tol = {});

/// Worst-case measure mu(X) = -min_i X_i.
RiskMeasure worst_case_measure(int n);

/// mu(X) = -E_P[X] under the space's reference weights.
RiskMeasure expectation_measure(const RiskSpace& space);

/// Coherent value sup over the scenario set of E_p[-X].
double coherent_eval(const std::vector<Vector>& pset, const Vector& X);

/// Coherent measure built from a finite scenario set of stochastic vectors.
RiskMeasure coherent_measure(std::vector<Vector> pset, std::string label = "coherent");

/// Y + mu(Y) e, the projection onto the zero level {mu = 0}. Idempotent.
Vector risk_normalize(const RiskMeasure& mu, const Vector& Y);

/**
 * Minimax representation value: min over the normalized net of t(Y - X).
 * Upper bound of mu(X) for genuine risk measures, exact whenever the
 * normalized net contains X + mu(X) e.
 */
double risk_minimax_eval(const RiskMeasure& mu, const std::vector<Vector>& ynet, const Vector& X);

/**
 * Positively homogeneous variant: min over the normalized net of the maximum
 * of E_p[-X] over {p in simplex | E_p[Y] >= 0}, the inner maximum running
 * over the closed-form vertex set. Net points whose slice is empty are
 * skipped; if every slice is empty the net is incompatible with the level
 * set of mu and contract_error is raised.
 */
double homogeneous_risk_minimax_eval(const RiskMeasure& mu, const std::vector<Vector>& ynet,
                                     const Vector& X, const Tolerance& tol = {});

} // namespace shapmin
