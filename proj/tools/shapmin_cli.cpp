// Command-line front end: load game specs, run the axiom suites, build and
// verify representations and approximations, evaluate risk measures, and
// spot-check against the brute-force oracle. JSON in, JSON out.
//
// Exit codes: 0 success, 1 property failure, 2 input error, 3 I/O error.

#include <cmath>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "shapmin/approximation.hpp"
#include "shapmin/axioms.hpp"
#include "shapmin/games.hpp"
#include "shapmin/json_io.hpp"
#include "shapmin/norms.hpp"
#include "shapmin/oracle.hpp"
#include "shapmin/representation.hpp"
#include "shapmin/risk.hpp"

using namespace shapmin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitIoError = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SHAPLEY_MINIMAX_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return static_cast<std::uint64_t>(v);
        throw std::invalid_argument("SHAPLEY_MINIMAX_SEED is not an unsigned integer");
    }
    return 42;
}

struct CommonOptions {
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t samples = 10000;
    double tol = 1e-9;
    bool reproducible = false;

    std::uint64_t resolved_seed() const { return seed_given ? seed : default_seed(); }
    Tolerance tolerance() const {
        Tolerance t{tol, tol};
        t.validate();
        return t;
    }
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool needs_input = true) {
    auto* input = cmd->add_option("--input", opts.input, "input file (or op:NAME:N builtin)");
    if (needs_input) input->required();
    cmd->add_option("--output", opts.output, "write the JSON report here instead of stdout");
    cmd->add_option("--seed", opts.seed, "RNG seed (fallback: SHAPLEY_MINIMAX_SEED, then 42)")
        ->each([&opts](const std::string&) { opts.seed_given = true; });
    cmd->add_option("--samples", opts.samples, "sample count for checks and verifications");
    cmd->add_option("--tol", opts.tol, "absolute tolerance");
    cmd->add_flag("--reproducible", opts.reproducible, "omit the timestamp field");
}

void emit(const json& payload, const CommonOptions& opts) {
    json out = payload;
    if (!opts.reproducible) {
        char buffer[32];
        const std::time_t now = std::time(nullptr);
        std::tm tm_utc{};
        gmtime_r(&now, &tm_utc);
        std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
        out["timestamp"] = buffer;
    }
    const std::string text = out.dump(2) + "\n";
    if (opts.output.empty()) {
        std::cout << text;
    } else {
        write_text_file(opts.output, text);
    }
}

Vector parse_csv_list(const std::string& text) {
    Vector out;
    std::string::size_type pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string cell =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(cell, &used));
            if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
            throw std::invalid_argument("not a number in list: '" + cell + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty number list");
    return out;
}

// Built-in operators addressable as op:NAME:N on the command line.
OperatorHandle builtin_operator(const std::string& name, int n) {
    if (n < 1) throw std::invalid_argument("builtin operator dimension must be >= 1");
    if (name == "top") return scalar_operator(n, "top", [](const Vector& x) { return top(x); });
    if (name == "min")
        return scalar_operator(n, "coordinate-min", [](const Vector& x) {
            double m = x[0];
            for (double v : x) m = std::min(m, v);
            return m;
        });
    if (name == "identity") {
        OperatorHandle h;
        h.input_dim = h.output_dim = n;
        h.label = "identity";
        h.eval = [](const Vector& x) { return x; };
        return h;
    }
    if (name == "negate") {
        OperatorHandle h;
        h.input_dim = h.output_dim = n;
        h.label = "negate";
        h.eval = [](const Vector& x) {
            Vector out = x;
            for (double& v : out) v = -v;
            return out;
        };
        return h;
    }
    throw std::invalid_argument("unknown builtin operator '" + name +
                                "' (expected top, min, identity or negate)");
}

struct LoadedOperator {
    OperatorHandle op;
    std::optional<GameSpec> spec;
};

LoadedOperator load_operator(const std::string& input, const Tolerance& tol) {
    if (input.rfind("op:", 0) == 0) {
        const auto second = input.find(':', 3);
        if (second == std::string::npos)
            throw std::invalid_argument("builtin operator syntax is op:NAME:N");
        const std::string name = input.substr(3, second - 3);
        const int n = std::stoi(input.substr(second + 1));
        return {builtin_operator(name, n), std::nullopt};
    }
    const GameSpec spec = game_spec_from_json(load_json_file(input), tol);
    return {make_operator(spec, tol), spec};
}

GameSpec load_payment_free_spec(const CommonOptions& opts, bool force_recursive) {
    GameSpec spec = game_spec_from_json(load_json_file(opts.input), opts.tolerance());
    if (spec.max_abs_payoff() > 0.0) {
        if (!force_recursive)
            throw std::invalid_argument(
                "spec carries stage payments; pass --force-recursive to zero them");
        spec = payment_free_from_spec(std::move(spec));
    }
    return spec;
}

// ---------------------------------------------------------------------------

int run_check(const CommonOptions& opts, const std::string& suite_name_arg) {
    const Tolerance tol = opts.tolerance();
    const LoadedOperator loaded = load_operator(opts.input, tol);
    const OperatorHandle& f = loaded.op;
    const std::size_t n = static_cast<std::size_t>(f.input_dim);
    const std::uint64_t seed = opts.resolved_seed();

    Suite suite = Suite::GunawardenaKeane;
    if (!suite_name_arg.empty()) {
        suite = suite_from_name(suite_name_arg);
    } else if (loaded.spec && loaded.spec->subprobability) {
        suite = Suite::SubhomogeneousGK;
    }

    json axioms = json::array();
    for (std::size_t k = 0; k < 7; ++k) {
        const Axiom axiom = static_cast<Axiom>(k);
        const AxiomReport report = check_axiom(
            f, axiom, SampleConfig::uniform(derived_seed(seed, 100 + k), opts.samples, n), tol);
        axioms.push_back(to_json(report));
    }
    const SuiteReport suite_report =
        equivalence_suite(f, suite, SampleConfig::uniform(seed, opts.samples, n), tol);

    bool pass = suite_report.consistent;
    for (const AxiomReport& r : suite_report.reports) pass = pass && r.holds;

    emit(json{{"command", "check"},
              {"operator", f.label},
              {"seed", seed},
              {"suite", to_json(suite_report)},
              {"axioms", std::move(axioms)},
              {"pass", pass}},
         opts);
    return pass ? kExitOk : kExitPropertyFailure;
}

int run_iterate(const CommonOptions& opts, const std::string& x0_arg, int steps) {
    const Tolerance tol = opts.tolerance();
    const GameSpec spec = game_spec_from_json(load_json_file(opts.input), tol);
    Vector x0 = x0_arg.empty() ? constant_vector(static_cast<std::size_t>(spec.n), 0.0)
                               : parse_csv_list(x0_arg);
    if (static_cast<int>(x0.size()) != spec.n)
        throw std::invalid_argument("x0 dimension does not match the spec");
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");

    const auto iterates = value_iteration(spec, x0, steps);
    json trajectory = json::array();
    for (const Vector& it : iterates) trajectory.push_back(to_json(it));
    emit(json{{"command", "iterate"}, {"steps", steps}, {"iterates", std::move(trajectory)}},
         opts);
    return kExitOk;
}

int run_approx(const CommonOptions& opts, double epsilon, bool force_recursive) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    const Tolerance tol = opts.tolerance();
    const GameSpec spec = load_payment_free_spec(opts, force_recursive);
    const OperatorHandle F = make_operator(spec, tol);
    const std::uint64_t seed = opts.resolved_seed();

    const PaymentFreeRep G = approximate_payment_free(F, epsilon, derived_seed(seed, 1), 2000, tol);
    const SandwichReport report = verify_sandwich(
        F, G, epsilon,
        SampleConfig::uniform(seed, opts.samples, static_cast<std::size_t>(spec.n)), tol);

    emit(json{{"command", "approx"},
              {"epsilon", epsilon},
              {"representation", to_json(G)},
              {"report", to_json(report)},
              {"pass", report.holds(tol)}},
         opts);
    return report.holds(tol) ? kExitOk : kExitPropertyFailure;
}

int run_represent(const CommonOptions& opts, double epsilon, const std::string& ynet_path,
                  const std::string& x0_arg, bool force_recursive) {
    const Tolerance tol = opts.tolerance();
    const GameSpec spec = load_payment_free_spec(opts, force_recursive);
    const OperatorHandle F = make_operator(spec, tol);
    const std::size_t n = static_cast<std::size_t>(spec.n);

    YNet ynet;
    if (!ynet_path.empty()) {
        ynet = ynet_from_json(load_json_file(ynet_path));
    } else {
        if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
        ynet.points = epsilon_net_sup_sphere(static_cast<int>(n), epsilon).points;
    }

    RepDiagnostics diag;
    const PaymentFreeRep rep = build_payment_free_representation(F, ynet, tol, &diag);

    // The construction is exact at net points; report the worst residual.
    double max_residual = 0.0;
    for (const Vector& y : ynet.points) {
        const Vector direct = F(y);
        const Vector via = eval_payment_free_rep(rep, y);
        for (std::size_t i = 0; i < n; ++i)
            max_residual = std::max(max_residual, std::abs(direct[i] - via[i]));
    }

    json payload{{"command", "represent"},
                 {"representation", to_json(rep)},
                 {"net_points", ynet.points.size()},
                 {"dropped_points", diag.dropped_points},
                 {"max_net_residual", max_residual}};
    if (!x0_arg.empty()) {
        const Vector x0 = parse_csv_list(x0_arg);
        if (x0.size() != n) throw std::invalid_argument("x0 dimension does not match the spec");
        json coordinates = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            RepresentationValue traced;
            traced.x = x0;
            traced.value = std::numeric_limits<double>::infinity();
            for (const RepAction& action : rep.states[i]) {
                double inner = -std::numeric_limits<double>::infinity();
                const Vector* argmax = nullptr;
                for (const Vector& p : action.vertices) {
                    const double v = dot(p, x0);
                    if (v > inner) {
                        inner = v;
                        argmax = &p;
                    }
                }
                if (inner < traced.value) {
                    traced.value = inner;
                    traced.argmin_y = action.outer_point;
                    traced.argmax_p = *argmax;
                }
            }
            coordinates.push_back(to_json(traced));
        }
        payload["eval"] = json{{"x", to_json(x0)},
                               {"value", to_json(eval_payment_free_rep(rep, x0))},
                               {"coordinates", std::move(coordinates)}};
    }
    emit(payload, opts);
    return max_residual <= tol.abs_tol ? kExitOk : kExitPropertyFailure;
}

RiskMeasure measure_by_name(const std::string& name, const RiskSpace& space) {
    const int n = static_cast<int>(space.size());
    if (name == "worst") return worst_case_measure(n);
    if (name == "expectation") return expectation_measure(space);
    if (name == "composite") {
        if (n < 2) throw std::invalid_argument("composite measure needs at least two atoms");
        auto f = scalar_operator(n, "min-max-composite", [](const Vector& x) {
            double tail = x[1];
            for (std::size_t i = 2; i < x.size(); ++i) tail = std::max(tail, x[i]);
            return std::min(x[0], tail);
        });
        return risk_from_operator(f);
    }
    throw std::invalid_argument("unknown measure '" + name +
                                "' (expected worst, expectation or composite)");
}

int run_risk(const CommonOptions& opts, const std::string& positions_path,
             const std::string& measure_name, const std::string& ynet_path) {
    const Tolerance tol = opts.tolerance();
    const RiskPositions positions = risk_positions_from_csv(read_text_file(positions_path));

    RiskSpace space;
    if (!opts.input.empty()) {
        space = risk_space_from_json(load_json_file(opts.input), tol);
        if (space.size() != positions.labels.size())
            throw std::invalid_argument("space and CSV disagree on the atom count");
        for (std::size_t i = 0; i < space.size(); ++i) {
            if (space.atoms[i] != positions.labels[i])
                throw std::invalid_argument("space and CSV disagree on atom '" +
                                            positions.labels[i] + "'");
            if (std::abs(space.weights[i] - positions.weights[i]) > tol.abs_tol)
                throw std::invalid_argument("space and CSV disagree on the weight of '" +
                                            positions.labels[i] + "'");
        }
    } else {
        space.atoms = positions.labels;
        space.weights = positions.weights;
        space.validate(tol);
    }

    const RiskMeasure mu = measure_by_name(measure_name, space);

    // The positions themselves always join the net, so each evaluation is
    // exact at its own position; extra points only refine other queries.
    std::vector<Vector> ynet = positions.positions;
    if (!ynet_path.empty()) {
        const YNet extra = ynet_from_json(load_json_file(ynet_path));
        for (const Vector& y : extra.points) {
            if (y.size() != space.size())
                throw std::invalid_argument("ynet point dimension does not match the atom count");
            ynet.push_back(y);
        }
    }

    json rows = json::array();
    bool pass = true;
    for (const Vector& X : positions.positions) {
        const double direct = mu(X);
        const double minimax = risk_minimax_eval(mu, ynet, X);
        json row{{"position", to_json(X)},
                 {"value", direct},
                 {"minimax", minimax},
                 {"residual", minimax - direct}};
        if (mu.positively_homogeneous) {
            const double homogeneous = homogeneous_risk_minimax_eval(mu, ynet, X, tol);
            row["homogeneous_minimax"] = homogeneous;
            row["homogeneous_residual"] = homogeneous - direct;
            pass = pass && std::abs(homogeneous - direct) <= tol.abs_tol;
        }
        pass = pass && std::abs(minimax - direct) <= tol.abs_tol;
        rows.push_back(std::move(row));
    }

    emit(json{{"command", "risk"},
              {"measure", mu.label},
              {"space", to_json(space)},
              {"positions", std::move(rows)},
              {"pass", pass}},
         opts);
    return pass ? kExitOk : kExitPropertyFailure;
}

int run_oracle_vertices(const CommonOptions& opts, const std::string& a_arg) {
    const Vector a = parse_csv_list(a_arg);
    const auto verts = oracle::vertex_enumeration_simplex_halfspace(a, opts.tolerance());
    json list = json::array();
    for (const Vector& p : verts) list.push_back(to_json(p));
    emit(json{{"command", "oracle vertices"}, {"a", to_json(a)}, {"vertices", std::move(list)}},
         opts);
    return kExitOk;
}

int run_oracle_eval(const CommonOptions& opts, const std::string& x0_arg) {
    const Tolerance tol = opts.tolerance();
    const GameSpec spec = game_spec_from_json(load_json_file(opts.input), tol);
    const Vector x0 = parse_csv_list(x0_arg);
    if (static_cast<int>(x0.size()) != spec.n)
        throw std::invalid_argument("x0 dimension does not match the spec");
    EvalTrace trace;
    const Vector value = oracle::exhaustive_minimax(spec, x0, &trace);
    emit(json{{"command", "oracle eval"},
              {"x", to_json(x0)},
              {"value", to_json(value)},
              {"argmin_a", trace.argmin_a},
              {"argmax_b", trace.argmax_b}},
         opts);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimax representations of Shapley operators and risk measures"};
    app.require_subcommand(1);

    CommonOptions check_opts, iterate_opts, approx_opts, represent_opts, risk_opts,
        vertices_opts, oracle_eval_opts;

    auto* check = app.add_subcommand("check", "run the axiom checks and an equivalence suite");
    add_common(check, check_opts);
    std::string suite_arg;
    check->add_option("--suite", suite_arg, "ct, gk or gk-sub (default: by spec kind)");

    auto* iterate = app.add_subcommand("iterate", "value iteration trajectory");
    add_common(iterate, iterate_opts);
    std::string iterate_x0;
    int steps = 10;
    iterate->add_option("--x0", iterate_x0, "start point as a comma list (default: zeros)");
    iterate->add_option("--steps", steps, "number of applications of the operator");

    auto* approx = app.add_subcommand(
        "approx", "polyhedral approximation of a payment-free operator, with verification");
    add_common(approx, approx_opts);
    double approx_epsilon = 0.0;
    bool approx_force = false;
    approx->add_option("--epsilon", approx_epsilon, "target accuracy")->required();
    approx->add_flag("--force-recursive", approx_force, "zero stage payments before building");

    auto* represent =
        app.add_subcommand("represent", "payment-free minimax representation over a net");
    add_common(represent, represent_opts);
    double represent_epsilon = 0.25;
    std::string represent_ynet, represent_x0;
    bool represent_force = false;
    represent->add_option("--epsilon", represent_epsilon,
                          "sphere net resolution when no --ynet is given");
    represent->add_option("--ynet", represent_ynet, "JSON file with explicit net points");
    represent->add_option("--x0", represent_x0, "also evaluate the representation here");
    represent->add_flag("--force-recursive", represent_force,
                        "zero stage payments before building");

    auto* risk = app.add_subcommand("risk", "evaluate a risk measure and its representations");
    add_common(risk, risk_opts, false);
    std::string risk_positions, risk_measure = "worst", risk_ynet;
    risk->add_option("--positions", risk_positions, "CSV: label,weight,value[,value...]")
        ->required();
    risk->add_option("--measure", risk_measure, "worst, expectation or composite");
    risk->add_option("--ynet", risk_ynet, "JSON file with extra net points");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force spot checks");
    oracle_cmd->require_subcommand(1);
    auto* vertices = oracle_cmd->add_subcommand(
        "vertices", "enumerate extreme points of a simplex/half-space section");
    add_common(vertices, vertices_opts, false);
    std::string vertices_a;
    vertices->add_option("--a", vertices_a, "constraint vector as a comma list")->required();
    auto* oracle_eval =
        oracle_cmd->add_subcommand("eval", "exhaustive Shapley operator evaluation");
    add_common(oracle_eval, oracle_eval_opts);
    std::string oracle_x0;
    oracle_eval->add_option("--x0", oracle_x0, "evaluation point as a comma list")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (check->parsed()) return run_check(check_opts, suite_arg);
        if (iterate->parsed()) return run_iterate(iterate_opts, iterate_x0, steps);
        if (approx->parsed()) return run_approx(approx_opts, approx_epsilon, approx_force);
        if (represent->parsed())
            return run_represent(represent_opts, represent_epsilon, represent_ynet, represent_x0,
                                 represent_force);
        if (risk->parsed()) return run_risk(risk_opts, risk_positions, risk_measure, risk_ynet);
        if (oracle_cmd->parsed()) {
            if (vertices->parsed()) return run_oracle_vertices(vertices_opts, vertices_a);
            if (oracle_eval->parsed()) return run_oracle_eval(oracle_eval_opts, oracle_x0);
        }
    } catch (const contract_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const evaluation_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitInputError;
}
