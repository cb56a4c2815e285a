#include "shapmin/axioms.hpp"

#include <algorithm>
#include <cmath>

#include "shapmin/kernels.hpp"
#include "shapmin/norms.hpp"

namespace shapmin {

Vector OperatorHandle::operator()(const Vector& x) const {
    if (static_cast<int>(x.size()) != input_dim)
        throw std::invalid_argument("operator '" + label + "': expected dimension " +
                                    std::to_string(input_dim) + ", got " +
                                    std::to_string(x.size()));
    Vector out;
    try {
        out = eval(x);
    } catch (const std::exception& e) {
        throw evaluation_error("operator '" + label + "' failed at x = " + to_string(x) +
                               ": " + e.what());
    }
    if (static_cast<int>(out.size()) != output_dim)
        throw evaluation_error("operator '" + label + "' returned dimension " +
                               std::to_string(out.size()) + " at x = " + to_string(x));
    require_finite(out, label.c_str());
    return out;
}

OperatorHandle scalar_operator(int n, std::string label,
                               std::function<double(const Vector&)> fn) {
    OperatorHandle h;
    h.input_dim = n;
    h.output_dim = 1;
    h.label = std::move(label);
    h.eval = [fn = std::move(fn)](const Vector& x) { return Vector{fn(x)}; };
    return h;
}

double eval_scalar(const OperatorHandle& f, const Vector& x) {
    if (f.output_dim != 1)
        throw std::invalid_argument("eval_scalar: operator '" + f.label + "' is not scalar");
    return f(x)[0];
}

OperatorHandle coordinate_operator(const OperatorHandle& F, int i) {
    if (i < 0 || i >= F.output_dim)
        throw std::invalid_argument("coordinate_operator: index out of range");
    OperatorHandle h;
    h.input_dim = F.input_dim;
    h.output_dim = 1;
    h.label = F.label + "[" + std::to_string(i) + "]";
    h.eval = [F, i](const Vector& x) { return Vector{F(x)[static_cast<std::size_t>(i)]}; };
    return h;
}

const char* axiom_name(Axiom a) {
    switch (a) {
    case Axiom::M: return "M";
    case Axiom::AH: return "AH";
    case Axiom::ASH: return "ASH";
    case Axiom::N: return "N";
    case Axiom::H: return "H";
    case Axiom::Nt: return "Nt";
    case Axiom::NtPlus: return "Nt+";
    }
    return "?";
}

Axiom axiom_from_name(const std::string& name) {
    if (name == "M") return Axiom::M;
    if (name == "AH") return Axiom::AH;
    if (name == "ASH") return Axiom::ASH;
    if (name == "N") return Axiom::N;
    if (name == "H") return Axiom::H;
    if (name == "Nt") return Axiom::Nt;
    if (name == "Nt+" || name == "NtPlus") return Axiom::NtPlus;
    throw std::invalid_argument("unknown axiom '" + name + "'");
}

const char* suite_name(Suite s) {
    switch (s) {
    case Suite::CrandallTartar: return "crandall-tartar";
    case Suite::GunawardenaKeane: return "gunawardena-keane";
    case Suite::SubhomogeneousGK: return "gunawardena-keane-sub";
    }
    return "?";
}

Suite suite_from_name(const std::string& name) {
    if (name == "ct" || name == "crandall-tartar") return Suite::CrandallTartar;
    if (name == "gk" || name == "gunawardena-keane") return Suite::GunawardenaKeane;
    if (name == "gk-sub" || name == "gunawardena-keane-sub") return Suite::SubhomogeneousGK;
    throw std::invalid_argument("unknown suite '" + name + "'");
}

namespace {

struct AxiomSample {
    Vector x;
    Vector y;      // second input fed to f
    double gap;    // reference gap on the input side, where the axiom has one
};

// All inputs are drawn up front from one stream so the parallel violation
// scan stays bit-identical to the serial one.
std::vector<AxiomSample> draw_samples(Axiom axiom, const SampleConfig& cfg) {
    SplitMix64 gen(cfg.seed);
    const std::size_t n = cfg.dimension();
    auto draw_point = [&]() {
        Vector x(n);
        for (std::size_t j = 0; j < n; ++j)
            x[j] = gen.next_in(cfg.box_lo[j], cfg.box_hi[j]);
        return x;
    };

    std::vector<AxiomSample> samples(cfg.count);
    for (auto& s : samples) {
        s.x = draw_point();
        switch (axiom) {
        case Axiom::M: {
            Vector g = draw_point();
            s.y = s.x;
            for (std::size_t j = 0; j < n; ++j) s.y[j] += std::abs(g[j]);
            break;
        }
        case Axiom::AH:
        case Axiom::ASH: {
            s.gap = gen.next_in(0.0, 10.0); // lambda
            s.y = add_constant(s.x, s.gap);
            break;
        }
        case Axiom::H: {
            s.gap = gen.next_in(0.0, 10.0); // lambda
            s.y = s.x;
            for (double& v : s.y) v *= s.gap;
            break;
        }
        case Axiom::N:
        case Axiom::Nt:
        case Axiom::NtPlus:
            s.y = draw_point();
            break;
        }
    }
    return samples;
}

double violation_of(const OperatorHandle& f, Axiom axiom, const AxiomSample& s) {
    const Vector fx = f(s.x);
    const Vector fy = f(s.y);
    switch (axiom) {
    case Axiom::M:
        // x <= y must give f(x) <= f(y)
        return top(sub(fx, fy));
    case Axiom::AH:
        // f(x + le) = f(x) + le
        return sup_norm(sub(fy, add_constant(fx, s.gap)));
    case Axiom::ASH:
        // f(x + le) <= f(x) + le, l >= 0
        return top(sub(fy, add_constant(fx, s.gap)));
    case Axiom::H: {
        // f(lx) = l f(x)
        Vector scaled = fx;
        for (double& v : scaled) v *= s.gap;
        return sup_norm(sub(fy, scaled));
    }
    case Axiom::N:
        return sup_norm(sub(fx, fy)) - sup_norm(sub(s.x, s.y));
    case Axiom::Nt:
        return top(sub(fx, fy)) - top(sub(s.x, s.y));
    case Axiom::NtPlus:
        return top_plus(sub(fx, fy)) - top_plus(sub(s.x, s.y));
    }
    throw std::logic_error("violation_of: unknown axiom");
}

} // namespace

AxiomReport check_axiom(const OperatorHandle& f, Axiom axiom, const SampleConfig& cfg,
                        const Tolerance& tol) {
    cfg.validate();
    tol.validate();
    if (static_cast<int>(cfg.dimension()) != f.input_dim)
        throw std::invalid_argument("check_axiom: sample box dimension " +
                                    std::to_string(cfg.dimension()) +
                                    " does not match operator '" + f.label + "'");

    const std::vector<AxiomSample> samples = draw_samples(axiom, cfg);
    const ScanResult worst = kernels::scan_max(
        samples.size(), [&](std::size_t i) { return violation_of(f, axiom, samples[i]); });

    AxiomReport report;
    report.axiom = axiom;
    report.samples_used = samples.size();
    report.max_violation = std::max(worst.max_value, 0.0);
    report.holds = worst.max_value <= tol.abs_tol;
    if (!report.holds) {
        const AxiomSample& s = samples[static_cast<std::size_t>(worst.argmax)];
        report.counterexample = Counterexample{s.x, s.y, worst.max_value};
    }
    return report;
}

SuiteReport equivalence_suite(const OperatorHandle& f, Suite suite, const SampleConfig& cfg,
                              const Tolerance& tol) {
    std::vector<Axiom> axioms;
    switch (suite) {
    case Suite::CrandallTartar: axioms = {Axiom::M, Axiom::AH, Axiom::N}; break;
    case Suite::GunawardenaKeane: axioms = {Axiom::M, Axiom::AH, Axiom::Nt}; break;
    case Suite::SubhomogeneousGK: axioms = {Axiom::M, Axiom::ASH, Axiom::NtPlus}; break;
    }

    SuiteReport out;
    out.suite = suite;
    for (std::size_t k = 0; k < axioms.size(); ++k) {
        SampleConfig sub = cfg;
        sub.seed = derived_seed(cfg.seed, k);
        out.reports.push_back(check_axiom(f, axioms[k], sub, tol));
    }

    const bool a0 = out.reports[0].holds;
    const bool a1 = out.reports[1].holds;
    const bool a2 = out.reports[2].holds;
    switch (suite) {
    case Suite::CrandallTartar:
        out.left_holds = a0 && a1;  // (M) and (AH)
        out.right_holds = a2 && a1; // (N) and (AH)
        break;
    case Suite::GunawardenaKeane:
    case Suite::SubhomogeneousGK:
        out.left_holds = a0 && a1; // (M) and (AH) resp. (M) and (ASH)
        out.right_holds = a2;      // (Nt) resp. (Nt+)
        break;
    }
    out.consistent = out.left_holds == out.right_holds;
    return out;
}

} // namespace shapmin
