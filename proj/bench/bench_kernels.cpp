// Times the OpenMP kernels against their serial reference implementations on
// representative workloads and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>

#include "shapmin/approximation.hpp"
#include "shapmin/axioms.hpp"
#include "shapmin/games.hpp"
#include "shapmin/kernels.hpp"
#include "shapmin/norms.hpp"

using namespace shapmin;

namespace {

double seconds(const std::function<void()>& work) {
    const auto start = std::chrono::steady_clock::now();
    work();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-34s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name,
                serial_s, parallel_s, serial_s / parallel_s,
                identical ? "results identical" : "RESULTS DIFFER");
}

} // namespace

int main() {
    const int n = 48;
    const GameSpec spec = random_game_spec(7, n, 8, 8);
    const OperatorHandle F = make_operator(spec);

    // Violation scan of the Nt axiom over a large sample set.
    {
        const std::size_t count = 50000;
        const auto xs = sample_points(SampleConfig::uniform(1, count, n));
        const auto ys = sample_points(SampleConfig::uniform(2, count, n));
        auto violation = [&](std::size_t i) {
            return top(sub(F(xs[i]), F(ys[i]))) - top(sub(xs[i], ys[i]));
        };
        ScanResult a, b;
        const double ts = seconds([&] { a = serial::scan_max(count, violation); });
        const double tp = seconds([&] { b = kernels::scan_max(count, violation); });
        report("axiom violation scan", ts, tp,
               a.max_value == b.max_value && a.argmax == b.argmax);
    }

    // Batch evaluation of the operator.
    {
        const auto xs = sample_points(SampleConfig::uniform(3, 50000, n));
        auto f = [&](const Vector& x) { return F(x); };
        std::vector<Vector> a, b;
        const double ts = seconds([&] { a = serial::eval_batch(f, xs); });
        const double tp = seconds([&] { b = kernels::eval_batch(f, xs); });
        report("shapley operator batch eval", ts, tp, a == b);
    }

    // Smoothed-map evaluation over a dense net.
    {
        const GameSpec small = random_game_spec(11, 3, 3, 3);
        const OperatorHandle f = coordinate_operator(make_operator(small), 0);
        const EpsNet net = epsilon_net_box(constant_vector(3, -1.0), constant_vector(3, 1.0), 0.05);
        const SmoothedMap g = net_smoothing(f, WeakNorm::top(3), net);
        const auto xs = sample_points(SampleConfig::cube(4, 20000, 3, -1.0, 1.0));
        auto value = [&](std::size_t i) { return g(xs[i]); };
        ScanResult a, b;
        const double ts = seconds([&] { a = serial::scan_max(xs.size(), value); });
        const double tp = seconds([&] { b = kernels::scan_max(xs.size(), value); });
        report("smoothed map scan (64k-term net)", ts, tp,
               a.max_value == b.max_value && a.argmax == b.argmax);
    }

    return 0;
}
