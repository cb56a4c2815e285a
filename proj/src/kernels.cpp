#include "shapmin/kernels.hpp"

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shapmin {

namespace serial {

ScanResult serial_scan_range(std::size_t first, std::size_t last,
                             const std::function<double(std::size_t)>& value_at) {
    ScanResult r;
    for (std::size_t i = first; i < last; ++i) {
        const double v = value_at(i);
        if (r.argmax < 0 || v > r.max_value) {
            r.max_value = v;
            r.argmax = static_cast<std::ptrdiff_t>(i);
        }
    }
    return r;
}

ScanResult scan_max(std::size_t count, const std::function<double(std::size_t)>& value_at) {
    return serial_scan_range(0, count, value_at);
}

std::vector<Vector> map_indexed(std::size_t count,
                                const std::function<Vector(std::size_t)>& fn) {
    std::vector<Vector> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
}

std::vector<Vector> eval_batch(const std::function<Vector(const Vector&)>& f,
                               const std::vector<Vector>& points) {
    std::vector<Vector> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = f(points[i]);
    return out;
}

} // namespace serial

namespace kernels {

namespace {

// Bookkeeping for exceptions raised inside a parallel region. The lowest
// failing index wins so reruns with different thread counts agree.
struct FirstError {
    std::ptrdiff_t index = -1;
    std::exception_ptr error;

    void merge(std::ptrdiff_t i, std::exception_ptr e) {
        if (index < 0 || i < index) {
            index = i;
            error = e;
        }
    }
    void rethrow_if_set() const {
        if (error) std::rethrow_exception(error);
    }
};

} // namespace

ScanResult scan_max(std::size_t count, const std::function<double(std::size_t)>& value_at) {
#ifdef _OPENMP
    if (count == 0) return {};
    const int threads = omp_get_max_threads();
    std::vector<ScanResult> partial(threads);
    std::vector<FirstError> errors(threads);

#pragma omp parallel num_threads(threads)
    {
        const int t = omp_get_thread_num();
        ScanResult local;
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
            if (errors[t].index >= 0) continue;
            try {
                const double v = value_at(static_cast<std::size_t>(i));
                if (local.argmax < 0 || v > local.max_value) {
                    local.max_value = v;
                    local.argmax = i;
                }
            } catch (...) {
                errors[t].merge(i, std::current_exception());
            }
        }
        partial[t] = local;
    }

    FirstError first;
    for (const auto& e : errors)
        if (e.index >= 0) first.merge(e.index, e.error);
    first.rethrow_if_set();

    // Merge per-thread results in argmax order so the lowest index wins ties.
    ScanResult result;
    for (int pass = 0; pass < threads; ++pass) {
        std::ptrdiff_t best_t = -1;
        for (int t = 0; t < threads; ++t) {
            if (partial[t].argmax < 0) continue;
            if (best_t < 0 || partial[t].argmax < partial[best_t].argmax) best_t = t;
        }
        if (best_t < 0) break;
        const ScanResult& cand = partial[best_t];
        if (result.argmax < 0 || cand.max_value > result.max_value) {
            result.max_value = cand.max_value;
            result.argmax = cand.argmax;
        }
        partial[best_t].argmax = -1;
    }
    return result;
#else
    return serial::scan_max(count, value_at);
#endif
}

std::vector<Vector> map_indexed(std::size_t count,
                                const std::function<Vector(std::size_t)>& fn) {
#ifdef _OPENMP
    std::vector<Vector> out(count);
    const int threads = omp_get_max_threads();
    std::vector<FirstError> errors(threads);

#pragma omp parallel num_threads(threads)
    {
        const int t = omp_get_thread_num();
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
            if (errors[t].index >= 0) continue;
            try {
                out[i] = fn(static_cast<std::size_t>(i));
            } catch (...) {
                errors[t].merge(i, std::current_exception());
            }
        }
    }

    FirstError first;
    for (const auto& e : errors)
        if (e.index >= 0) first.merge(e.index, e.error);
    first.rethrow_if_set();
    return out;
#else
    return serial::map_indexed(count, fn);
#endif
}

std::vector<Vector> eval_batch(const std::function<Vector(const Vector&)>& f,
                               const std::vector<Vector>& points) {
    return map_indexed(points.size(), [&](std::size_t i) { return f(points[i]); });
}

} // namespace kernels
} // namespace shapmin
