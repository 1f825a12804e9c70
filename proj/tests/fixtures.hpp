#pragma once

#include <fstream>
#include <string>

#include "json.hpp"
#include "orbsnake/orbifold.hpp"

namespace fixtures {

inline nlohmann::json load(const std::string& rel) {
  std::ifstream in(std::string(ORBSNAKE_DATA_DIR) + "/" + rel);
  if (!in) throw std::runtime_error("missing fixture " + rel);
  return nlohmann::json::parse(in);
}

inline orbsnake::Triangulation triangulation(const std::string& rel) {
  return orbsnake::triangulation_from_json(load(rel));
}

inline orbsnake::CurveDescriptor curve(const std::string& rel) { return orbsnake::curve_from_json(load(rel)); }

}  // namespace fixtures
