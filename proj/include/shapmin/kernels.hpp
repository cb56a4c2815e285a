#pragma once

#include <cstddef>
#include <functional>

#include "shapmin/core.hpp"

namespace shapmin {

/// Result of a max-scan over an index space. argmax is the lowest index
/// attaining the maximum; -1 when the scan is empty.
struct ScanResult {
    double max_value = 0.0;
    std::ptrdiff_t argmax = -1;
};

namespace kernels {

// Data-parallel kernels used by the sampled checkers and the net-based
// evaluators. OpenMP-parallel when compiled with it, and deterministic
// either way: the result never depends on the thread count. Exceptions
// thrown by the callback are re-thrown for the lowest failing index.

/// max over i in [0, count) of value_at(i), ties resolved to the lowest index.
ScanResult scan_max(std::size_t count, const std::function<double(std::size_t)>& value_at);

/// out[i] = fn(i) for i in [0, count); evaluations run in parallel.
std::vector<Vector> map_indexed(std::size_t count,
                                const std::function<Vector(std::size_t)>& fn);

/// Convenience wrapper: evaluate one vector-valued map on a batch of points.
std::vector<Vector> eval_batch(const std::function<Vector(const Vector&)>& f,
                               const std::vector<Vector>& points);

} // namespace kernels

namespace serial {

// Reference implementations: one plain loop each, no OpenMP. Kept so the
// parallel kernels can be checked for exact output equality, and timed
// against in the bench target.

ScanResult scan_max(std::size_t count, const std::function<double(std::size_t)>& value_at);

std::vector<Vector> map_indexed(std::size_t count,
                                const std::function<Vector(std::size_t)>& fn);

std::vector<Vector> eval_batch(const std::function<Vector(const Vector&)>& f,
                               const std::vector<Vector>& points);

} // namespace serial
} // namespace shapmin
