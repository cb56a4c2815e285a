#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "shapmin/approximation.hpp"
#include "shapmin/axioms.hpp"
#include "shapmin/core.hpp"
#include "shapmin/games.hpp"
#include "shapmin/norms.hpp"
#include "shapmin/representation.hpp"
#include "shapmin/risk.hpp"

namespace shapmin {

using json = nlohmann::json;

// Wire formats. Vectors are plain JSON arrays of numbers; parsing rejects
// malformed documents with std::invalid_argument so the CLI can map them to
// its input-error exit code.

json to_json(const Vector& x);
Vector vector_from_json(const json& j);

json to_json(const WeakNorm& q);
WeakNorm weak_norm_from_json(const json& j);

json to_json(const EpsNet& net);
json to_json(const YNet& net);
YNet ynet_from_json(const json& j);

json to_json(const AxiomReport& report);
json to_json(const SuiteReport& report);

json to_json(const GameSpec& spec);
GameSpec game_spec_from_json(const json& j, const Tolerance& tol = {});

json to_json(const PaymentFreeRep& rep);
PaymentFreeRep payment_free_rep_from_json(const json& j, const Tolerance& tol = {});

json to_json(const RiskSpace& space);
RiskSpace risk_space_from_json(const json& j, const Tolerance& tol = {});

json to_json(const RepresentationValue& value);
json to_json(const SandwichReport& report);

/// Labeled positions parsed from a risk CSV: one row per atom
/// "label,weight,value[,value...]", one position per value column.
struct RiskPositions {
    std::vector<std::string> labels;
    Vector weights;
    std::vector<Vector> positions; // each of dimension = atom count
};

RiskPositions risk_positions_from_csv(const std::string& text);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

} // namespace shapmin
