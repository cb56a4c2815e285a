#include "shapmin/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace shapmin {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::invalid_argument("malformed input: " + what);
}

double number_from(const json& j, const std::string& what) {
    if (!j.is_number()) malformed(what + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) malformed(what + " must be finite");
    return v;
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

} // namespace

json to_json(const Vector& x) { return json(x); }

Vector vector_from_json(const json& j) {
    if (!j.is_array() || j.empty()) malformed("vector must be a nonempty array");
    Vector x;
    x.reserve(j.size());
    for (const auto& v : j) x.push_back(number_from(v, "vector entry"));
    return x;
}

json to_json(const WeakNorm& q) {
    json j;
    switch (q.kind) {
    case NormKind::Top: j["kind"] = "top"; break;
    case NormKind::TopPlus: j["kind"] = "top_plus"; break;
    case NormKind::Sup: j["kind"] = "sup"; break;
    case NormKind::Polyhedral: j["kind"] = "polyhedral"; break;
    }
    j["n"] = q.dimension;
    if (q.kind == NormKind::Polyhedral) {
        json gens = json::array();
        for (const Vector& g : q.generators) gens.push_back(to_json(g));
        j["generators"] = std::move(gens);
    }
    return j;
}

WeakNorm weak_norm_from_json(const json& j) {
    const std::string kind = member(j, "kind").get<std::string>();
    const int n = member(j, "n").get<int>();
    if (kind == "top") return WeakNorm::top(n);
    if (kind == "top_plus") return WeakNorm::top_plus(n);
    if (kind == "sup") return WeakNorm::sup(n);
    if (kind == "polyhedral") {
        std::vector<Vector> gens;
        for (const auto& g : member(j, "generators")) gens.push_back(vector_from_json(g));
        WeakNorm q = WeakNorm::polyhedral(std::move(gens));
        if (q.dimension != n) malformed("polyhedral generators do not match 'n'");
        return q;
    }
    malformed("unknown norm kind '" + kind + "'");
}

json to_json(const EpsNet& net) {
    json points = json::array();
    for (const Vector& p : net.points) points.push_back(to_json(p));
    return json{{"epsilon", net.epsilon}, {"points", std::move(points)}};
}

json to_json(const YNet& net) {
    json points = json::array();
    for (const Vector& p : net.points) points.push_back(to_json(p));
    return json{{"normalized", net.normalized}, {"points", std::move(points)}};
}

YNet ynet_from_json(const json& j) {
    YNet net;
    net.normalized = j.value("normalized", false);
    for (const auto& p : member(j, "points")) net.points.push_back(vector_from_json(p));
    if (net.points.empty()) malformed("ynet has no points");
    return net;
}

json to_json(const AxiomReport& report) {
    json j{{"axiom", axiom_name(report.axiom)},
           {"holds", report.holds},
           {"samples", report.samples_used},
           {"max_violation", report.max_violation}};
    if (report.counterexample) {
        j["counterexample"] = json{{"x", to_json(report.counterexample->x)},
                                   {"y", to_json(report.counterexample->y)},
                                   {"violation", report.counterexample->violation}};
    }
    return j;
}

json to_json(const SuiteReport& report) {
    json axioms = json::array();
    for (const AxiomReport& r : report.reports) axioms.push_back(to_json(r));
    return json{{"suite", suite_name(report.suite)},
                {"axioms", std::move(axioms)},
                {"left_holds", report.left_holds},
                {"right_holds", report.right_holds},
                {"consistent", report.consistent}};
}

json to_json(const GameSpec& spec) {
    json states = json::array();
    for (const GameState& s : spec.states) {
        json actions = json::array();
        for (const OuterAction& a : s.actions) {
            json inner = json::array();
            for (const InnerAction& b : a.inner)
                inner.push_back(json{{"payoff", b.payoff}, {"row", to_json(b.row)}});
            actions.push_back(json{{"name", a.name}, {"inner", std::move(inner)}});
        }
        states.push_back(json{{"actions", std::move(actions)}});
    }
    return json{{"n", spec.n},
                {"subprobability", spec.subprobability},
                {"states", std::move(states)}};
}

GameSpec game_spec_from_json(const json& j, const Tolerance& tol) {
    GameSpec spec;
    spec.n = member(j, "n").get<int>();
    spec.subprobability = j.value("subprobability", false);
    for (const auto& s : member(j, "states")) {
        GameState state;
        for (const auto& a : member(s, "actions")) {
            OuterAction outer;
            outer.name = a.value("name", "");
            for (const auto& b : member(a, "inner")) {
                InnerAction inner;
                inner.payoff = number_from(member(b, "payoff"), "payoff");
                inner.row = vector_from_json(member(b, "row"));
                outer.inner.push_back(std::move(inner));
            }
            state.actions.push_back(std::move(outer));
        }
        spec.states.push_back(std::move(state));
    }
    try {
        spec.validate(tol);
    } catch (const std::invalid_argument& e) {
        malformed(e.what());
    }
    return spec;
}

json to_json(const PaymentFreeRep& rep) {
    json states = json::array();
    for (const auto& actions : rep.states) {
        json list = json::array();
        for (const RepAction& a : actions) {
            json verts = json::array();
            for (const Vector& p : a.vertices) verts.push_back(to_json(p));
            list.push_back(json{{"a", to_json(a.outer_point)}, {"vertices", std::move(verts)}});
        }
        states.push_back(std::move(list));
    }
    return json{{"n", rep.n}, {"states", std::move(states)}};
}

PaymentFreeRep payment_free_rep_from_json(const json& j, const Tolerance& tol) {
    PaymentFreeRep rep;
    rep.n = member(j, "n").get<int>();
    for (const auto& s : member(j, "states")) {
        std::vector<RepAction> actions;
        if (!s.is_array()) malformed("representation state must be an array of actions");
        for (const auto& a : s) {
            RepAction action;
            action.outer_point = vector_from_json(member(a, "a"));
            for (const auto& p : member(a, "vertices"))
                action.vertices.push_back(vector_from_json(p));
            actions.push_back(std::move(action));
        }
        rep.states.push_back(std::move(actions));
    }
    try {
        rep.validate(tol);
    } catch (const std::invalid_argument& e) {
        malformed(e.what());
    }
    return rep;
}

json to_json(const RiskSpace& space) {
    return json{{"atoms", space.atoms}, {"weights", to_json(space.weights)}};
}

RiskSpace risk_space_from_json(const json& j, const Tolerance& tol) {
    RiskSpace space;
    for (const auto& a : member(j, "atoms")) {
        if (!a.is_string()) malformed("atom labels must be strings");
        space.atoms.push_back(a.get<std::string>());
    }
    space.weights = vector_from_json(member(j, "weights"));
    try {
        space.validate(tol);
    } catch (const std::invalid_argument& e) {
        malformed(e.what());
    }
    return space;
}

json to_json(const RepresentationValue& value) {
    return json{{"x", to_json(value.x)},
                {"value", value.value},
                {"argmin_y", to_json(value.argmin_y)},
                {"argmax_p", to_json(value.argmax_p)}};
}

json to_json(const SandwichReport& report) {
    return json{{"epsilon", report.epsilon},
                {"max_lower_violation", report.max_lower_violation},
                {"max_upper_excess", report.max_upper_excess},
                {"samples", report.samples},
                {"seed", report.seed}};
}

RiskPositions risk_positions_from_csv(const std::string& text) {
    RiskPositions out;
    std::istringstream stream(text);
    std::string line;
    std::size_t columns = 0;
    std::vector<Vector> rows; // per atom: the value columns
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string field;
        std::vector<std::string> cells;
        while (std::getline(fields, field, ',')) cells.push_back(field);
        if (cells.size() < 3) malformed("risk CSV row needs label, weight and at least one value");
        if (columns == 0) columns = cells.size();
        if (cells.size() != columns) malformed("risk CSV rows have inconsistent column counts");
        out.labels.push_back(cells[0]);
        try {
            out.weights.push_back(std::stod(cells[1]));
            Vector values;
            for (std::size_t c = 2; c < cells.size(); ++c) values.push_back(std::stod(cells[c]));
            rows.push_back(std::move(values));
        } catch (const std::exception&) {
            malformed("risk CSV contains a non-numeric cell in row '" + line + "'");
        }
    }
    if (rows.empty()) malformed("risk CSV is empty");

    out.positions.assign(columns - 2, Vector(rows.size()));
    for (std::size_t atom = 0; atom < rows.size(); ++atom)
        for (std::size_t c = 0; c + 2 < columns; ++c) out.positions[c][atom] = rows[atom][c];
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        malformed(std::string("JSON parse error in '") + path + "': " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace shapmin
