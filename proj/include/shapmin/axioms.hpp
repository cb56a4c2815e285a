#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shapmin/core.hpp"

namespace shapmin {

/**
 * A total, deterministic map from R^n to R^m handed to the checkers and
 * representation evaluators. Scalar functions are handles with m = 1.
 */
struct OperatorHandle {
    int input_dim = 0;
    int output_dim = 0;
    std::string label;
    std::function<Vector(const Vector&)> eval;

    /// Evaluates with dimension checks; failures of eval are wrapped in
    /// evaluation_error with the input attached.
    Vector operator()(const Vector& x) const;

    bool square() const { return input_dim == output_dim; }
};

/// Handle around a scalar function.
OperatorHandle scalar_operator(int n, std::string label,
                               std::function<double(const Vector&)> fn);

/// Scalar evaluation; requires output_dim == 1.
double eval_scalar(const OperatorHandle& f, const Vector& x);

/// Scalar handle for coordinate i of a square operator.
OperatorHandle coordinate_operator(const OperatorHandle& F, int i);

/// The defining properties of the operator class, plus the two weak-norm
/// nonexpansiveness variants tied to the top map.
enum class Axiom { M, AH, ASH, N, H, Nt, NtPlus };

const char* axiom_name(Axiom a);
Axiom axiom_from_name(const std::string& name);

struct Counterexample {
    Vector x;         // first input fed to f
    Vector y;         // second input fed to f (ordered point, shift, or scaling)
    double violation; // measured excess beyond the defining inequality
};

struct AxiomReport {
    Axiom axiom = Axiom::M;
    bool holds = true;
    std::optional<Counterexample> counterexample;
    std::size_t samples_used = 0;
    double max_violation = 0.0;
};

/**
 * Samples the defining inequality of `axiom` on cfg.count inputs and reports
 * the worst violation. Ordered pairs for (M) are built directly as
 * (x, x + |g|); shifts and scalings draw lambda uniformly in [0, 10]; the
 * remaining axioms test sampled pairs.
 *
 * A sampled checker can only falsify: holds == true means no violation
 * beyond tol.abs_tol was found in samples_used draws.
 */
AxiomReport check_axiom(const OperatorHandle& f, Axiom axiom, const SampleConfig& cfg,
                        const Tolerance& tol = {});

/// The equivalences of Crandall-Tartar and Gunawardena-Keane, run as paired
/// sampled checks.
enum class Suite { CrandallTartar, GunawardenaKeane, SubhomogeneousGK };

const char* suite_name(Suite s);
Suite suite_from_name(const std::string& name);

struct SuiteReport {
    Suite suite = Suite::GunawardenaKeane;
    std::vector<AxiomReport> reports;
    bool left_holds = false;  // e.g. (M) and (AH)
    bool right_holds = false; // e.g. (Nt)
    /// Both sides agree within sampling power. A sampled suite can witness
    /// disagreement but never certify equivalence.
    bool consistent = false;
};

SuiteReport equivalence_suite(const OperatorHandle& f, Suite suite, const SampleConfig& cfg,
                              const Tolerance& tol = {});

} // namespace shapmin
