#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shapmin {

/// Dense point of R^n. All entries are required to be finite; the dimension
/// is fixed by context and must be positive.
using Vector = std::vector<double>;

/**
 * Comparison tolerances shared by every module. All equality checks in the
 * library are absolute by default; rel_tol is only consulted where a caller
 * opts into scale-aware comparison.
 */
struct Tolerance {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;

    /// Throws std::invalid_argument unless both tolerances lie in (0, 1e-3].
    void validate() const;
};

/// Raised when a caller-asserted contract (additive homogeneity,
/// nonexpansiveness, ...) is found violated post hoc. Carries the measured
/// residual so reports can quote it.
class contract_error : public std::runtime_error {
public:
    contract_error(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Wraps a failure thrown by a user-supplied operator, with the offending
/// input attached to the message.
class evaluation_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Deterministic 64-bit generator (splitmix64). The update recurrence is
 * fixed so independent implementations reproduce the same streams:
 *
 *   state <- state + 0x9e3779b97f4a7c15
 *   z <- state
 *   z <- (z xor (z >> 30)) * 0xbf58476d1ce4e5b9
 *   z <- (z xor (z >> 27)) * 0x94d049bb133111eb
 *   output <- z xor (z >> 31)
 *
 * Doubles are derived as (output >> 11) * 2^-53, uniform on [0, 1).
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform draw in [0, 1).
    double next_double();

    /// Uniform draw in [lo, hi).
    double next_in(double lo, double hi);

private:
    std::uint64_t state_;
};

/// Deterministic child seed for sub-task k of a run seeded with `seed`.
std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t k);

/**
 * Configuration of a seeded sampling run: `count` points drawn uniformly in
 * the axis-aligned box [box_lo, box_hi].
 */
struct SampleConfig {
    std::uint64_t seed = 42;
    std::size_t count = 0;
    Vector box_lo;
    Vector box_hi;

    std::size_t dimension() const { return box_lo.size(); }
    void validate() const;

    /// count points in [-10, 10]^n, the default box used by the axiom checkers.
    static SampleConfig uniform(std::uint64_t seed, std::size_t count, std::size_t n);
    /// count points in [lo, hi]^n.
    static SampleConfig cube(std::uint64_t seed, std::size_t count, std::size_t n,
                             double lo, double hi);
};

/// max_i |x_i|. Throws on empty input or non-finite entries.
double sup_norm(const Vector& x);

/// True iff every entry >= -tol.abs_tol and the entries sum to 1 within
/// tol.abs_tol. Pure predicate; never throws on finite input.
bool is_stochastic(const Vector& p, const Tolerance& tol = {});

/// Row-sum <= 1 variant used by subprobability game specs.
bool is_substochastic(const Vector& p, const Tolerance& tol = {});

/**
 * Clamps entries in [-tol.abs_tol, 0) to zero and renormalizes the sum to 1.
 * Entries below -tol.abs_tol are rejected. Extreme-point arithmetic produces
 * tiny negatives; this is the canonicalization applied to its outputs.
 */
Vector clamp_stochastic(Vector p, const Tolerance& tol = {});

/**
 * The cfg.count points of the seeded stream, drawn coordinatewise in
 * cfg's box. Equal configs produce bit-identical sequences.
 */
std::vector<Vector> sample_points(const SampleConfig& cfg);

/// Standard inner product; dimensions must agree.
double dot(const Vector& a, const Vector& b);

/// a - b.
Vector sub(const Vector& a, const Vector& b);

/// x + c * (1,...,1).
Vector add_constant(Vector x, double c);

/// (c,...,c) of dimension n.
Vector constant_vector(std::size_t n, double c);

/// j-th unit vector of dimension n.
Vector unit_vector(std::size_t n, std::size_t j);

/// Coordinatewise |a - b| <= tol everywhere.
bool approx_equal(const Vector& a, const Vector& b, double tol);

/// Throws evaluation_error unless all entries are finite.
void require_finite(const Vector& x, const char* what);

/// Compact "[a, b, c]" rendering for error messages.
std::string to_string(const Vector& x);

} // namespace shapmin
