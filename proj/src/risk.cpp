#include "shapmin/risk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "shapmin/norms.hpp"
#include "shapmin/representation.hpp"

namespace shapmin {

void RiskSpace::validate(const Tolerance& tol) const {
    if (atoms.empty()) throw std::invalid_argument("RiskSpace: no atoms");
    if (atoms.size() != weights.size())
        throw std::invalid_argument("RiskSpace: atom/weight count mismatch");
    if (!is_stochastic(weights, tol))
        throw std::invalid_argument("RiskSpace: weights are not stochastic");
    for (double w : weights)
        if (w <= tol.abs_tol)
            throw std::invalid_argument("RiskSpace: zero-weight atom breaks full support");
}

double RiskMeasure::operator()(const Vector& X) const {
    if (static_cast<int>(X.size()) != n)
        throw std::invalid_argument("RiskMeasure '" + label + "': dimension mismatch");
    const double v = eval(X);
    if (!std::isfinite(v))
        throw evaluation_error("RiskMeasure '" + label + "' returned non-finite value at X = " +
                               to_string(X));
    return v;
}

namespace {

// Midpoint convexity of mu, sampled; used only to set the coherent flag.
bool sampled_midpoint_convex(const std::function<double(const Vector&)>& mu, std::size_t n,
                             std::uint64_t seed, std::size_t count, const Tolerance& tol) {
    SplitMix64 gen(seed);
    Vector x(n), y(n), mid(n);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            x[j] = gen.next_in(-10.0, 10.0);
            y[j] = gen.next_in(-10.0, 10.0);
            mid[j] = 0.5 * (x[j] + y[j]);
        }
        if (mu(mid) > 0.5 * (mu(x) + mu(y)) + tol.abs_tol) return false;
    }
    return true;
}

} // namespace

RiskMeasure risk_from_operator(const OperatorHandle& f, std::uint64_t precheck_seed,
                               std::size_t precheck_samples, const Tolerance& tol) {
    if (f.output_dim != 1)
        throw std::invalid_argument("risk_from_operator: operator must be scalar");

    const std::size_t n = static_cast<std::size_t>(f.input_dim);
    for (std::size_t k = 0; k < 2; ++k) {
        const Axiom axiom = k == 0 ? Axiom::M : Axiom::AH;
        const AxiomReport report = check_axiom(
            f, axiom, SampleConfig::uniform(derived_seed(precheck_seed, k), precheck_samples, n),
            tol);
        if (!report.holds)
            throw contract_error("risk_from_operator: '" + f.label + "' fails axiom " +
                                     std::string(axiom_name(axiom)) + " (violation " +
                                     std::to_string(report.max_violation) + ")",
                                 report.max_violation);
    }
    const AxiomReport homogeneous = check_axiom(
        f, Axiom::H, SampleConfig::uniform(derived_seed(precheck_seed, 2), precheck_samples, n),
        tol);

    RiskMeasure mu;
    mu.n = f.input_dim;
    mu.label = "risk(" + f.label + ")";
    mu.eval = [f](const Vector& X) {
        Vector neg(X.size());
        for (std::size_t j = 0; j < X.size(); ++j) neg[j] = -X[j];
        return eval_scalar(f, neg);
    };
    mu.positively_homogeneous = homogeneous.holds;
    mu.coherent = homogeneous.holds &&
                  sampled_midpoint_convex(mu.eval, n, derived_seed(precheck_seed, 3),
                                          precheck_samples, tol);
    return mu;
}

RiskMeasure worst_case_measure(int n) {
    if (n < 1) throw std::invalid_argument("worst_case_measure: dimension must be >= 1");
    RiskMeasure mu;
    mu.n = n;
    mu.label = "worst-case";
    mu.eval = [](const Vector& X) {
        double m = -X[0];
        for (double v : X) m = std::max(m, -v);
        return m;
    };
    mu.coherent = true;
    mu.positively_homogeneous = true;
    return mu;
}

RiskMeasure expectation_measure(const RiskSpace& space) {
    space.validate();
    RiskMeasure mu;
    mu.n = static_cast<int>(space.size());
    mu.label = "expectation";
    mu.eval = [w = space.weights](const Vector& X) { return -dot(w, X); };
    mu.coherent = true;
    mu.positively_homogeneous = true;
    return mu;
}

double coherent_eval(const std::vector<Vector>& pset, const Vector& X) {
    if (pset.empty()) throw std::invalid_argument("coherent_eval: empty scenario set");
    double best = -std::numeric_limits<double>::infinity();
    for (const Vector& p : pset) best = std::max(best, -dot(p, X));
    return best;
}

RiskMeasure coherent_measure(std::vector<Vector> pset, std::string label) {
    if (pset.empty()) throw std::invalid_argument("coherent_measure: empty scenario set");
    const Tolerance tol;
    for (const Vector& p : pset)
        if (!is_stochastic(p, tol))
            throw std::invalid_argument("coherent_measure: scenario " + to_string(p) +
                                        " is not stochastic");
    RiskMeasure mu;
    mu.n = static_cast<int>(pset[0].size());
    mu.label = std::move(label);
    mu.eval = [set = std::move(pset)](const Vector& X) { return coherent_eval(set, X); };
    mu.coherent = true;
    mu.positively_homogeneous = true;
    return mu;
}

Vector risk_normalize(const RiskMeasure& mu, const Vector& Y) {
    return add_constant(Y, mu(Y));
}

double risk_minimax_eval(const RiskMeasure& mu, const std::vector<Vector>& ynet, const Vector& X) {
    if (ynet.empty()) throw std::invalid_argument("risk_minimax_eval: empty ynet");
    double best = std::numeric_limits<double>::infinity();
    for (const Vector& y : ynet) {
        const Vector z = risk_normalize(mu, y);
        best = std::min(best, top(sub(z, X)));
    }
    return best;
}

double homogeneous_risk_minimax_eval(const RiskMeasure& mu, const std::vector<Vector>& ynet,
                                     const Vector& X, const Tolerance& tol) {
    if (ynet.empty()) throw std::invalid_argument("homogeneous_risk_minimax_eval: empty ynet");

    double best = std::numeric_limits<double>::infinity();
    bool any_slice = false;
    for (const Vector& y : ynet) {
        const Vector z = risk_normalize(mu, y);
        // {p : E_p[z] >= 0} as a half-space slice in the <=-convention.
        Vector neg(z.size());
        for (std::size_t j = 0; j < z.size(); ++j) neg[j] = -z[j];
        const std::vector<Vector> verts = halfspace_simplex_extremes(neg, tol);
        if (verts.empty()) continue;
        any_slice = true;
        double inner = -std::numeric_limits<double>::infinity();
        for (const Vector& p : verts) inner = std::max(inner, -dot(p, X));
        best = std::min(best, inner);
    }
    if (!any_slice)
        throw contract_error("homogeneous_risk_minimax_eval: every net point has an empty "
                             "scenario slice; the net is incompatible with the zero level of '" +
                                 mu.label + "'",
                             0.0);
    return best;
}

} // namespace shapmin
