#pragma once

// JSON documents shared by the CLI and the exporters.

#include <nlohmann/json.hpp>

#include "goeritz/lens.hpp"
#include "goeritz/obstruction.hpp"
#include "goeritz/presentation.hpp"
#include "goeritz/primitivity.hpp"
#include "goeritz/shell_bridge.hpp"

namespace goeritz {

using Json = nlohmann::ordered_json;

Json to_json(const PrimitivityVerdict& v);
Json to_json(const Obstruction& o);
/// {"p", "q", "qPrime", "qSquaredIsOne", "classification", "perType": {"q", "qPrime"},
/// "pi1Diff", "smaleConditional"}; a missing window is null.
Json lens_report(const LensSpace& L);
Json to_json(const Shell& s);
/// {"qbar", "m", "r", "w", "dWord", "simplexCount", "homology": {"E", "D"}, "corridor", "tie"}.
Json to_json(const Bridge& b);
Json to_json(const GoeritzResult& g);
Json to_json(const HeegaardSpaceReport& r);

}  // namespace goeritz
