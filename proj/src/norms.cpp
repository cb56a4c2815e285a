#include "shapmin/norms.hpp"

#include <algorithm>
#include <cmath>

#include "shapmin/oracle.hpp"

namespace shapmin {

double top(const Vector& x) {
    if (x.empty()) throw std::invalid_argument("top: empty vector");
    double m = x[0];
    for (double v : x) {
        if (!std::isfinite(v)) throw std::invalid_argument("top: non-finite entry");
        m = std::max(m, v);
    }
    return m;
}

double top_plus(const Vector& x) { return std::max(top(x), 0.0); }

WeakNorm WeakNorm::top(int n) { return WeakNorm{NormKind::Top, n, {}}; }
WeakNorm WeakNorm::top_plus(int n) { return WeakNorm{NormKind::TopPlus, n, {}}; }
WeakNorm WeakNorm::sup(int n) { return WeakNorm{NormKind::Sup, n, {}}; }

WeakNorm WeakNorm::polyhedral(std::vector<Vector> generators) {
    WeakNorm q;
    q.kind = NormKind::Polyhedral;
    q.generators = std::move(generators);
    q.dimension = q.generators.empty() ? 0 : static_cast<int>(q.generators[0].size());
    q.validate();
    return q;
}

void WeakNorm::validate() const {
    if (dimension < 1) throw std::invalid_argument("WeakNorm: dimension must be >= 1");
    if (kind == NormKind::Polyhedral) {
        if (generators.empty())
            throw std::invalid_argument("WeakNorm: polyhedral norm needs a nonempty generator set");
        for (const Vector& p : generators) {
            if (static_cast<int>(p.size()) != dimension)
                throw std::invalid_argument("WeakNorm: generator dimension mismatch");
            require_finite(p, "WeakNorm generator");
        }
    }
}

double weak_norm_eval(const WeakNorm& q, const Vector& x) {
    if (static_cast<int>(x.size()) != q.dimension)
        throw std::invalid_argument("weak_norm_eval: dimension mismatch");
    switch (q.kind) {
    case NormKind::Top: return top(x);
    case NormKind::TopPlus: return top_plus(x);
    case NormKind::Sup: return sup_norm(x);
    case NormKind::Polyhedral: {
        double best = dot(q.generators[0], x);
        for (std::size_t i = 1; i < q.generators.size(); ++i)
            best = std::max(best, dot(q.generators[i], x));
        return best;
    }
    }
    throw std::logic_error("weak_norm_eval: unknown kind");
}

std::vector<Vector> extreme_points(const WeakNorm& q, const Tolerance& tol) {
    const std::size_t n = static_cast<std::size_t>(q.dimension);
    std::vector<Vector> out;
    switch (q.kind) {
    case NormKind::Top:
        for (std::size_t j = 0; j < n; ++j) out.push_back(unit_vector(n, j));
        return out;
    case NormKind::TopPlus:
        for (std::size_t j = 0; j < n; ++j) out.push_back(unit_vector(n, j));
        out.push_back(constant_vector(n, 0.0));
        return out;
    case NormKind::Sup:
        for (std::size_t j = 0; j < n; ++j) out.push_back(unit_vector(n, j));
        for (std::size_t j = 0; j < n; ++j) {
            Vector e = unit_vector(n, j);
            e[j] = -1.0;
            out.push_back(e);
        }
        return out;
    case NormKind::Polyhedral: {
        if (q.generators.empty())
            throw std::invalid_argument("extreme_points: empty generator set");
        if (q.dimension > 6)
            throw std::invalid_argument(
                "extreme_points: brute-force reduction only supported up to dimension 6");
        // Duplicates first; a point equal to another would otherwise shadow it
        // in the hull-membership test.
        std::vector<Vector> unique;
        for (const Vector& g : q.generators) {
            bool seen = false;
            for (const Vector& u : unique)
                if (approx_equal(g, u, tol.abs_tol)) { seen = true; break; }
            if (!seen) unique.push_back(g);
        }
        for (std::size_t i = 0; i < unique.size(); ++i) {
            std::vector<Vector> others;
            for (std::size_t k = 0; k < unique.size(); ++k)
                if (k != i) others.push_back(unique[k]);
            if (others.empty() || !oracle::in_convex_hull(unique[i], others, tol))
                out.push_back(unique[i]);
        }
        return out;
    }
    }
    throw std::logic_error("extreme_points: unknown kind");
}

std::string EpsNet::target_description() const {
    if (target == NetTarget::SupSphere) return "unit sup-sphere";
    return "box " + shapmin::to_string(box_lo) + " .. " + shapmin::to_string(box_hi);
}

namespace {

// Cell centers along one axis: ceil((hi-lo)/eps) cells, at least one.
std::vector<double> axis_centers(double lo, double hi, double eps) {
    const double len = hi - lo;
    const std::size_t cells = len <= 0.0 ? 1 : static_cast<std::size_t>(std::ceil(len / eps));
    const double width = len / static_cast<double>(cells);
    std::vector<double> centers(cells);
    for (std::size_t k = 0; k < cells; ++k)
        centers[k] = lo + (static_cast<double>(k) + 0.5) * width;
    return centers;
}

void product_grid(const std::vector<std::vector<double>>& axes, Vector& point,
                  std::size_t axis, std::vector<Vector>& out) {
    if (axis == axes.size()) {
        out.push_back(point);
        return;
    }
    for (double c : axes[axis]) {
        point[axis] = c;
        product_grid(axes, point, axis + 1, out);
    }
}

} // namespace

EpsNet epsilon_net_box(const Vector& lo, const Vector& hi, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon_net: epsilon must be positive");
    if (lo.empty() || lo.size() != hi.size())
        throw std::invalid_argument("epsilon_net: malformed box");
    for (std::size_t j = 0; j < lo.size(); ++j)
        if (lo[j] > hi[j]) throw std::invalid_argument("epsilon_net: degenerate box, lower > upper");

    std::vector<std::vector<double>> axes(lo.size());
    for (std::size_t j = 0; j < lo.size(); ++j) axes[j] = axis_centers(lo[j], hi[j], epsilon);

    EpsNet net;
    net.epsilon = epsilon;
    net.target = NetTarget::Box;
    net.box_lo = lo;
    net.box_hi = hi;
    Vector point(lo.size());
    product_grid(axes, point, 0, net.points);
    return net;
}

EpsNet epsilon_net_sup_sphere(int n, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon_net: epsilon must be positive");
    if (n < 1) throw std::invalid_argument("epsilon_net: dimension must be >= 1");

    EpsNet net;
    net.epsilon = epsilon;
    net.target = NetTarget::SupSphere;

    const std::size_t dim = static_cast<std::size_t>(n);
    const std::vector<double> centers = axis_centers(-1.0, 1.0, epsilon);
    for (std::size_t j = 0; j < dim; ++j) {
        for (double sign : {1.0, -1.0}) {
            // Grid the free coordinates of the face x_j = sign.
            std::vector<std::vector<double>> axes(dim);
            for (std::size_t k = 0; k < dim; ++k)
                axes[k] = (k == j) ? std::vector<double>{sign} : centers;
            Vector point(dim);
            product_grid(axes, point, 0, net.points);
        }
    }
    return net;
}

} // namespace shapmin
