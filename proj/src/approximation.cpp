#include "shapmin/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "shapmin/kernels.hpp"
#include "shapmin/representation.hpp"

namespace shapmin {

SmoothedMap::SmoothedMap(std::vector<std::pair<Vector, double>> base, WeakNorm q, double epsilon,
                         std::string target)
    : base_(std::move(base)), q_(std::move(q)), epsilon_(epsilon), target_(std::move(target)) {
    if (base_.empty()) throw std::invalid_argument("SmoothedMap: empty base");
}

double SmoothedMap::operator()(const Vector& x) const {
    if (static_cast<int>(x.size()) != q_.dimension)
        throw std::invalid_argument("SmoothedMap: dimension mismatch");
    // The inner loops run once per net point per query; closed forms keep
    // them free of temporaries.
    const std::size_t n = x.size();
    double best = std::numeric_limits<double>::infinity();
    switch (q_.kind) {
    case NormKind::Top:
        for (const auto& [y, fy] : base_) {
            double m = x[0] - y[0];
            for (std::size_t j = 1; j < n; ++j) m = std::max(m, x[j] - y[j]);
            best = std::min(best, fy + m);
        }
        return best;
    case NormKind::TopPlus:
        for (const auto& [y, fy] : base_) {
            double m = 0.0;
            for (std::size_t j = 0; j < n; ++j) m = std::max(m, x[j] - y[j]);
            best = std::min(best, fy + m);
        }
        return best;
    case NormKind::Sup:
        for (const auto& [y, fy] : base_) {
            double m = 0.0;
            for (std::size_t j = 0; j < n; ++j) m = std::max(m, std::abs(x[j] - y[j]));
            best = std::min(best, fy + m);
        }
        return best;
    case NormKind::Polyhedral:
        for (const auto& [y, fy] : base_) {
            double m = -std::numeric_limits<double>::infinity();
            for (const Vector& p : q_.generators) {
                double s = 0.0;
                for (std::size_t j = 0; j < n; ++j) s += p[j] * (x[j] - y[j]);
                m = std::max(m, s);
            }
            best = std::min(best, fy + m);
        }
        return best;
    }
    throw std::logic_error("SmoothedMap: unknown norm kind");
}

SmoothedMap net_smoothing(const OperatorHandle& f, const WeakNorm& q, const EpsNet& net,
                          std::uint64_t precheck_seed, std::size_t precheck_samples,
                          const Tolerance& tol) {
    if (net.points.empty()) throw std::invalid_argument("net_smoothing: empty net");
    if (f.output_dim != 1)
        throw std::invalid_argument("net_smoothing: operator must be scalar");
    if (q.dimension != f.input_dim)
        throw std::invalid_argument("net_smoothing: norm dimension mismatch");

    // Spot-check q-nonexpansiveness on sampled pairs over the covered set's
    // bounding box before trusting the envelope.
    SampleConfig cfg;
    cfg.seed = precheck_seed;
    cfg.count = precheck_samples;
    if (net.target == NetTarget::Box) {
        cfg.box_lo = net.box_lo;
        cfg.box_hi = net.box_hi;
    } else {
        cfg.box_lo = constant_vector(static_cast<std::size_t>(f.input_dim), -1.0);
        cfg.box_hi = constant_vector(static_cast<std::size_t>(f.input_dim), 1.0);
    }
    SplitMix64 gen(derived_seed(precheck_seed, 1));
    std::vector<std::pair<Vector, Vector>> pairs(precheck_samples);
    {
        const std::vector<Vector> xs = sample_points(cfg);
        for (std::size_t i = 0; i < precheck_samples; ++i) {
            Vector y(xs[i].size());
            for (std::size_t j = 0; j < y.size(); ++j)
                y[j] = gen.next_in(cfg.box_lo[j], cfg.box_hi[j]);
            pairs[i] = {xs[i], std::move(y)};
        }
    }
    const ScanResult worst = kernels::scan_max(pairs.size(), [&](std::size_t i) {
        const auto& [x, y] = pairs[i];
        return eval_scalar(f, x) - eval_scalar(f, y) - weak_norm_eval(q, sub(x, y));
    });
    if (worst.max_value > tol.abs_tol)
        throw contract_error("net_smoothing: '" + f.label +
                                 "' is not nonexpansive for the given norm (violation " +
                                 std::to_string(worst.max_value) + ")",
                             worst.max_value);

    std::vector<std::pair<Vector, double>> base;
    base.reserve(net.points.size());
    for (const Vector& y : net.points) base.emplace_back(y, eval_scalar(f, y));
    return SmoothedMap(std::move(base), q, net.epsilon, net.target_description());
}

PaymentFreeRep approximate_payment_free(const OperatorHandle& F, double epsilon,
                                        std::uint64_t precheck_seed,
                                        std::size_t precheck_samples, const Tolerance& tol) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("approximate_payment_free: epsilon must be positive");
    if (!F.square())
        throw std::invalid_argument("approximate_payment_free: operator must be square");

    const std::size_t n = static_cast<std::size_t>(F.input_dim);
    for (std::size_t k = 0; k < 3; ++k) {
        const Axiom axiom = k == 0 ? Axiom::M : (k == 1 ? Axiom::AH : Axiom::H);
        const AxiomReport report = check_axiom(
            F, axiom, SampleConfig::uniform(derived_seed(precheck_seed, k), precheck_samples, n),
            tol);
        if (!report.holds)
            throw contract_error("approximate_payment_free: '" + F.label + "' fails axiom " +
                                     std::string(axiom_name(axiom)) + " (violation " +
                                     std::to_string(report.max_violation) + ")",
                                 report.max_violation);
    }

    // eps/2-net of the unit sup-sphere; the projected net points double as
    // the candidate pool of outer actions.
    const EpsNet sphere = epsilon_net_sup_sphere(static_cast<int>(n), epsilon / 2.0);
    YNet ynet;
    ynet.points = sphere.points;
    const PaymentFreeRep pool = build_payment_free_representation(F, ynet, tol);

    PaymentFreeRep out;
    out.n = static_cast<int>(n);
    out.states.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<RepAction>& candidates = pool.states[i];
        // Per net point, the lowest-index candidate attaining the minimum.
        const std::vector<Vector> picks =
            kernels::map_indexed(sphere.points.size(), [&](std::size_t l) {
                const Vector& z = sphere.points[l];
                double best = std::numeric_limits<double>::infinity();
                std::size_t arg = 0;
                for (std::size_t c = 0; c < candidates.size(); ++c) {
                    double inner = -std::numeric_limits<double>::infinity();
                    for (const Vector& p : candidates[c].vertices)
                        inner = std::max(inner, dot(p, z));
                    if (inner < best) {
                        best = inner;
                        arg = c;
                    }
                }
                return Vector{static_cast<double>(arg)};
            });
        std::vector<char> selected(candidates.size(), 0);
        for (const Vector& pick : picks) selected[static_cast<std::size_t>(pick[0])] = 1;
        for (std::size_t c = 0; c < candidates.size(); ++c)
            if (selected[c]) out.states[i].push_back(candidates[c]);
    }
    return out;
}

SandwichReport verify_sandwich(const OperatorHandle& F, const PaymentFreeRep& G, double epsilon,
                               const SampleConfig& cfg, const Tolerance& tol) {
    cfg.validate();
    if (static_cast<int>(cfg.dimension()) != F.input_dim || G.n != F.input_dim)
        throw std::invalid_argument("verify_sandwich: dimension mismatch");

    const std::vector<Vector> xs = sample_points(cfg);
    // Heavy evaluations in parallel, reduction serial so the report is
    // independent of the thread count.
    const std::vector<Vector> stats = kernels::map_indexed(xs.size(), [&](std::size_t i) {
        const Vector fx = F(xs[i]);
        const Vector gx = eval_payment_free_rep(G, xs[i]);
        double lower = -std::numeric_limits<double>::infinity();
        double upper = -std::numeric_limits<double>::infinity();
        const double scale = sup_norm(xs[i]);
        for (std::size_t j = 0; j < fx.size(); ++j) {
            lower = std::max(lower, fx[j] - gx[j]);
            if (scale > tol.abs_tol) upper = std::max(upper, (gx[j] - fx[j]) / scale);
        }
        return Vector{lower, upper};
    });

    SandwichReport report;
    report.epsilon = epsilon;
    report.samples = xs.size();
    report.seed = cfg.seed;
    double lower = 0.0, upper = 0.0;
    for (const Vector& s : stats) {
        lower = std::max(lower, s[0]);
        upper = std::max(upper, s[1]);
    }
    report.max_lower_violation = lower;
    report.max_upper_excess = upper;
    return report;
}

} // namespace shapmin
