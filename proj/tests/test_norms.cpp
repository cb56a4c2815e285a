#include <doctest.h>

#include <cmath>

#include "shapmin/norms.hpp"
#include "shapmin/core.hpp"

using namespace shapmin;

TEST_CASE("top and top_plus") {
    CHECK(top({3.0, -1.0, 2.0}) == 3.0);
    CHECK(top({-5.0, -2.0}) == -2.0);
    CHECK(top({1.5, 1.5, 1.5}) == 1.5);
    CHECK(top_plus({-3.0, -1.0}) == 0.0);
    CHECK(top_plus({3.0, -1.0}) == 3.0);
    CHECK(top_plus({0.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(top({}), std::invalid_argument);
}

TEST_CASE("weak_norm_eval closed forms and polyhedral max") {
    const Vector x = {2.0, -1.0};
    CHECK(weak_norm_eval(WeakNorm::top(2), x) == top(x));
    CHECK(weak_norm_eval(WeakNorm::top_plus(2), x) == top_plus(x));
    CHECK(weak_norm_eval(WeakNorm::sup(2), x) == sup_norm(x));

    const WeakNorm axes = WeakNorm::polyhedral({{1.0, 0.0}, {0.0, 1.0}});
    CHECK(weak_norm_eval(axes, x) == 2.0);

    // A redundant generator (the midpoint) changes nothing.
    const WeakNorm redundant = WeakNorm::polyhedral({{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}});
    CHECK(weak_norm_eval(redundant, x) == 2.0);

    CHECK_THROWS_AS(weak_norm_eval(axes, {1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("top equals the support function of the simplex vertices, sampled") {
    const int n = 3;
    const auto xs = sample_points(SampleConfig::uniform(11, 10000, n));
    for (const Vector& x : xs) {
        double support = -1e300;
        for (int j = 0; j < n; ++j) support = std::max(support, x[static_cast<std::size_t>(j)]);
        CHECK(std::abs(top(x) - support) <= 1e-12);
    }
}

TEST_CASE("extreme point reduction") {
    SUBCASE("redundant midpoint is dropped") {
        const WeakNorm q = WeakNorm::polyhedral({{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}});
        const auto ext = extreme_points(q);
        REQUIRE(ext.size() == 2);
        for (const Vector& p : ext) CHECK(std::abs(p[0] + p[1] - 1.0) <= 1e-12);
    }
    SUBCASE("singleton stays") {
        const auto ext = extreme_points(WeakNorm::polyhedral({{1.0, 0.0}}));
        REQUIRE(ext.size() == 1);
        CHECK(approx_equal(ext[0], {1.0, 0.0}, 0.0));
    }
    SUBCASE("top in dimension three gives the unit vectors") {
        const auto ext = extreme_points(WeakNorm::top(3));
        REQUIRE(ext.size() == 3);
        for (const Vector& p : ext) CHECK(is_stochastic(p));
    }
    SUBCASE("norm evaluation is preserved on samples") {
        const WeakNorm q = WeakNorm::polyhedral(
            {{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}, {0.25, 0.7}, {-1.0, 0.2}});
        const WeakNorm reduced = WeakNorm::polyhedral(extreme_points(q));
        for (const Vector& x : sample_points(SampleConfig::uniform(3, 10000, 2)))
            CHECK(std::abs(weak_norm_eval(q, x) - weak_norm_eval(reduced, x)) <= 1e-12);
    }
    SUBCASE("dimension cap for polyhedral inputs") {
        CHECK_THROWS_AS(extreme_points(WeakNorm::polyhedral({Vector(7, 0.0)})),
                        std::invalid_argument);
    }
}

TEST_CASE("weak norms are positively homogeneous and midpoint convex, sampled") {
    const std::vector<WeakNorm> norms = {
        WeakNorm::top(3), WeakNorm::top_plus(3), WeakNorm::sup(3),
        WeakNorm::polyhedral({{1.0, 0.5, 0.0}, {0.0, -1.0, 2.0}, {0.3, 0.3, 0.3}})};
    const auto xs = sample_points(SampleConfig::uniform(21, 10000, 3));
    const auto ys = sample_points(SampleConfig::uniform(derived_seed(21, 1), 10000, 3));
    SplitMix64 lambdas(derived_seed(21, 2));
    for (const WeakNorm& q : norms) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double lambda = lambdas.next_in(0.0, 10.0);
            Vector scaled = xs[i];
            for (double& v : scaled) v *= lambda;
            CHECK(std::abs(weak_norm_eval(q, scaled) - lambda * weak_norm_eval(q, xs[i])) <=
                  1e-9);
            Vector mid(3);
            for (std::size_t j = 0; j < 3; ++j) mid[j] = 0.5 * (xs[i][j] + ys[i][j]);
            CHECK(weak_norm_eval(q, mid) <=
                  0.5 * (weak_norm_eval(q, xs[i]) + weak_norm_eval(q, ys[i])) + 1e-9);
        }
    }
}

TEST_CASE("generators are pointwise bounded by the norm") {
    const WeakNorm q =
        WeakNorm::polyhedral({{1.0, 0.5, 0.0}, {0.0, -1.0, 2.0}, {0.3, 0.3, 0.3}});
    for (const Vector& x : sample_points(SampleConfig::uniform(31, 2000, 3))) {
        Vector neg = x;
        for (double& v : neg) v = -v;
        for (const Vector& p : q.generators) {
            CHECK(dot(p, x) <= weak_norm_eval(q, x) + 1e-12);
            CHECK(-weak_norm_eval(q, neg) <= dot(p, x) + 1e-12);
        }
    }
}

TEST_CASE("epsilon nets") {
    SUBCASE("unit sphere in dimension one is itself") {
        const EpsNet net = epsilon_net_sup_sphere(1, 0.5);
        REQUIRE(net.points.size() == 2);
        CHECK(net.points[0][0] == 1.0);
        CHECK(net.points[1][0] == -1.0);
    }
    SUBCASE("interval with wide epsilon gives the two cell centers") {
        const EpsNet net = epsilon_net_box({0.0}, {1.0}, 0.6);
        REQUIRE(net.points.size() == 2);
        CHECK(net.points[0][0] == 0.25);
        CHECK(net.points[1][0] == 0.75);
    }
    SUBCASE("sphere coverage spot-check in dimension two") {
        const EpsNet net = epsilon_net_sup_sphere(2, 0.5);
        SplitMix64 gen(99);
        for (int trial = 0; trial < 1000; ++trial) {
            // Random point on the sphere: pick a face, then a free coordinate.
            Vector x(2);
            x[0] = gen.next_in(-1.0, 1.0);
            x[1] = gen.next_u64() % 2 == 0 ? 1.0 : -1.0;
            if (gen.next_u64() % 2 == 0) std::swap(x[0], x[1]);
            double dist = 1e300;
            for (const Vector& y : net.points) dist = std::min(dist, sup_norm(sub(x, y)));
            CHECK(dist < 0.5);
        }
    }
    SUBCASE("box coverage spot-check in dimension three") {
        const Vector lo = {-1.0, 0.0, 2.0};
        const Vector hi = {1.0, 0.5, 4.0};
        const EpsNet net = epsilon_net_box(lo, hi, 0.3);
        SplitMix64 gen(123);
        for (int trial = 0; trial < 1000; ++trial) {
            Vector x(3);
            for (std::size_t j = 0; j < 3; ++j) x[j] = gen.next_in(lo[j], hi[j]);
            double dist = 1e300;
            for (const Vector& y : net.points) dist = std::min(dist, sup_norm(sub(x, y)));
            CHECK(dist < 0.3);
        }
    }
    SUBCASE("invalid epsilon") {
        CHECK_THROWS_AS(epsilon_net_box({0.0}, {1.0}, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(epsilon_net_sup_sphere(2, -1.0), std::invalid_argument);
    }
}
