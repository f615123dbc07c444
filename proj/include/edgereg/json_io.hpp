#pragma once

#include <json.hpp>

#include "edgereg/betti.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/ideal.hpp"

namespace edgereg {

/// {"field":"Q","entries":[{"i":1,"j":4,"beta":1}],"reg":3,"pd":1}, with the
/// multigraded refinement under "multi" when present.
nlohmann::json to_json(const res::BettiTable& table);
res::BettiTable betti_table_from_json(const nlohmann::json& j);

/// Generator strings in canonical order.
nlohmann::json to_json(const algebra::MonomialIdeal& ideal);
nlohmann::json to_json(const res::EngineCaps& caps);
nlohmann::json to_json(graph::VertexSet s);

}  // namespace edgereg
