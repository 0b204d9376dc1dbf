#pragma once

#include <string>

#include <json.hpp>

#include "harborth/bounds.hpp"
#include "harborth/constructions.hpp"
#include "harborth/solver.hpp"

namespace harborth {

// JSON report schemas (field order fixed; see README for the documented
// schema). Coordinates serialize as arrays, one per element.
nlohmann::ordered_json to_json(const ExactResult& r);
nlohmann::ordered_json to_json(const BoundReport& r);
nlohmann::ordered_json to_json(const ConstructionResult& r);

std::string to_text(const ExactResult& r);
std::string to_text(const BoundReport& r);
std::string to_text(const ConstructionResult& r);

// CSV: a header line plus one data row; group literals are always quoted.
std::string to_csv(const ExactResult& r);
std::string to_csv(const BoundReport& r);
std::string to_csv(const ConstructionResult& r);

std::string coords_list(const ElementSet& s);  // "(0,1) (1,5) ..." display form

}  // namespace harborth
