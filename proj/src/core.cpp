#include "shapmin/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace shapmin {

void Tolerance::validate() const {
    if (!(abs_tol > 0.0) || !(abs_tol <= 1e-3))
        throw std::invalid_argument("Tolerance: abs_tol must lie in (0, 1e-3]");
    if (!(rel_tol > 0.0) || !(rel_tol <= 1e-3))
        throw std::invalid_argument("Tolerance: rel_tol must lie in (0, 1e-3]");
}

std::uint64_t SplitMix64::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_in(double lo, double hi) {
    return lo + next_double() * (hi - lo);
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t k) {
    SplitMix64 g(seed + k * 0x9e3779b97f4a7c15ULL);
    return g.next_u64();
}

void SampleConfig::validate() const {
    if (count < 1) throw std::invalid_argument("SampleConfig: count must be >= 1");
    if (box_lo.empty() || box_lo.size() != box_hi.size())
        throw std::invalid_argument("SampleConfig: box corners must be nonempty and of equal dimension");
    for (std::size_t j = 0; j < box_lo.size(); ++j) {
        if (!std::isfinite(box_lo[j]) || !std::isfinite(box_hi[j]))
            throw std::invalid_argument("SampleConfig: box corners must be finite");
        if (box_lo[j] > box_hi[j])
            throw std::invalid_argument("SampleConfig: degenerate box, lower > upper");
    }
}

SampleConfig SampleConfig::uniform(std::uint64_t seed, std::size_t count, std::size_t n) {
    return cube(seed, count, n, -10.0, 10.0);
}

SampleConfig SampleConfig::cube(std::uint64_t seed, std::size_t count, std::size_t n,
                                double lo, double hi) {
    SampleConfig cfg;
    cfg.seed = seed;
    cfg.count = count;
    cfg.box_lo = constant_vector(n, lo);
    cfg.box_hi = constant_vector(n, hi);
    return cfg;
}

double sup_norm(const Vector& x) {
    if (x.empty()) throw std::invalid_argument("sup_norm: empty vector");
    double m = 0.0;
    for (double v : x) {
        if (!std::isfinite(v)) throw std::invalid_argument("sup_norm: non-finite entry");
        m = std::max(m, std::abs(v));
    }
    return m;
}

bool is_stochastic(const Vector& p, const Tolerance& tol) {
    if (p.empty()) return false;
    double sum = 0.0;
    for (double v : p) {
        if (v < -tol.abs_tol) return false;
        sum += v;
    }
    return std::abs(sum - 1.0) <= tol.abs_tol;
}

bool is_substochastic(const Vector& p, const Tolerance& tol) {
    if (p.empty()) return false;
    double sum = 0.0;
    for (double v : p) {
        if (v < -tol.abs_tol) return false;
        sum += v;
    }
    return sum <= 1.0 + tol.abs_tol;
}

Vector clamp_stochastic(Vector p, const Tolerance& tol) {
    double sum = 0.0;
    for (double& v : p) {
        if (v < -tol.abs_tol)
            throw std::invalid_argument("clamp_stochastic: entry below -abs_tol in " + to_string(p));
        if (v < 0.0) v = 0.0;
        sum += v;
    }
    if (sum <= tol.abs_tol)
        throw std::invalid_argument("clamp_stochastic: entries sum to zero");
    for (double& v : p) v /= sum;
    return p;
}

std::vector<Vector> sample_points(const SampleConfig& cfg) {
    cfg.validate();
    SplitMix64 gen(cfg.seed);
    const std::size_t n = cfg.dimension();
    std::vector<Vector> out(cfg.count, Vector(n));
    for (std::size_t i = 0; i < cfg.count; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i][j] = gen.next_in(cfg.box_lo[j], cfg.box_hi[j]);
    return out;
}

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector add_constant(Vector x, double c) {
    for (double& v : x) v += c;
    return x;
}

Vector constant_vector(std::size_t n, double c) { return Vector(n, c); }

Vector unit_vector(std::size_t n, std::size_t j) {
    Vector e(n, 0.0);
    e.at(j) = 1.0;
    return e;
}

bool approx_equal(const Vector& a, const Vector& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

void require_finite(const Vector& x, const char* what) {
    for (double v : x)
        if (!std::isfinite(v))
            throw evaluation_error(std::string(what) + ": non-finite entry in " + to_string(x));
}

std::string to_string(const Vector& x) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) os << ", ";
        os << x[i];
    }
    os << "]";
    return os.str();
}

} // namespace shapmin
