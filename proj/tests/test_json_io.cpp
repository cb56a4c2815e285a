#include <doctest.h>

#include <cmath>

#include "shapmin/json_io.hpp"

using namespace shapmin;

TEST_CASE("vectors round-trip binary64 exactly") {
    SplitMix64 gen(13);
    for (int trial = 0; trial < 1000; ++trial) {
        Vector x(4);
        for (double& v : x) v = gen.next_in(-1e6, 1e6) * std::pow(10.0, gen.next_in(-8, 8));
        const json j = json::parse(to_json(x).dump());
        CHECK(vector_from_json(j) == x);
    }
}

TEST_CASE("game specs round-trip and reject bad rows") {
    const GameSpec spec = random_game_spec(3, 3, 2, 2);
    const json j = json::parse(to_json(spec).dump());
    const GameSpec back = game_spec_from_json(j);
    CHECK(back.n == spec.n);
    const Vector x = {0.5, -1.0, 2.0};
    CHECK(shapley_eval(back, x) == shapley_eval(spec, x));

    json bad = to_json(spec);
    bad["states"][0]["actions"][0]["inner"][0]["row"] = {0.6, 0.6, 0.0};
    CHECK_THROWS_AS(game_spec_from_json(bad), std::invalid_argument);

    json missing = to_json(spec);
    missing.erase("states");
    CHECK_THROWS_AS(game_spec_from_json(missing), std::invalid_argument);
}

TEST_CASE("payment-free reps round-trip") {
    const GameSpec pf = payment_free_from_spec(random_game_spec(9, 2, 2, 2));
    YNet net;
    net.points = sample_points(SampleConfig::uniform(10, 10, 2));
    const PaymentFreeRep rep = build_payment_free_representation(make_operator(pf), net);
    const PaymentFreeRep back = payment_free_rep_from_json(json::parse(to_json(rep).dump()));
    const Vector x = {1.25, -0.5};
    CHECK(eval_payment_free_rep(back, x) == eval_payment_free_rep(rep, x));
}

TEST_CASE("weak norms round-trip") {
    for (const WeakNorm& q :
         {WeakNorm::top(3), WeakNorm::sup(2), WeakNorm::polyhedral({{1.0, 0.0}, {0.5, 0.5}})}) {
        const WeakNorm back = weak_norm_from_json(json::parse(to_json(q).dump()));
        CHECK(back.kind == q.kind);
        CHECK(back.dimension == q.dimension);
        const Vector x = constant_vector(static_cast<std::size_t>(q.dimension), -1.5);
        CHECK(weak_norm_eval(back, x) == weak_norm_eval(q, x));
    }
    CHECK_THROWS_AS(weak_norm_from_json(json{{"kind", "euclidean"}, {"n", 2}}),
                    std::invalid_argument);
}

TEST_CASE("risk space parsing") {
    const json j = {{"atoms", {"up", "flat", "down"}},
                    {"weights", {0.25, 0.5, 0.25}}};
    const RiskSpace space = risk_space_from_json(j);
    CHECK(space.size() == 3);

    const json zero = {{"atoms", {"a", "b"}}, {"weights", {1.0, 0.0}}};
    CHECK_THROWS_AS(risk_space_from_json(zero), std::invalid_argument);
}

TEST_CASE("risk CSV ingestion") {
    const std::string csv = "up,0.25,1.0,0.0\nflat,0.5,2.0,4.0\ndown,0.25,3.0,-1.0\n";
    const RiskPositions pos = risk_positions_from_csv(csv);
    REQUIRE(pos.labels.size() == 3);
    REQUIRE(pos.positions.size() == 2);
    CHECK(pos.positions[0] == Vector{1.0, 2.0, 3.0});
    CHECK(pos.positions[1] == Vector{0.0, 4.0, -1.0});
    CHECK(pos.weights == Vector{0.25, 0.5, 0.25});

    CHECK_THROWS_AS(risk_positions_from_csv("up,0.5\n"), std::invalid_argument);
    CHECK_THROWS_AS(risk_positions_from_csv("up,0.5,oops\n"), std::invalid_argument);
    CHECK_THROWS_AS(risk_positions_from_csv(""), std::invalid_argument);
}

TEST_CASE("ynet parsing") {
    const YNet net = ynet_from_json(json{{"normalized", true}, {"points", {{1.0, 2.0}}}});
    CHECK(net.normalized);
    REQUIRE(net.points.size() == 1);
    CHECK_THROWS_AS(ynet_from_json(json{{"points", json::array()}}), std::invalid_argument);
}
