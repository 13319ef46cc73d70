#ifndef MONO_FIELD_IO_HPP
#define MONO_FIELD_IO_HPP

#include <string>

#include "mono/cone.hpp"
#include "mono/field.hpp"

#include <json.hpp>

namespace mono {

/// Field file schema:
///   {"nx": int, "ny": int, "spacing": float, "origin": [x, y],
///    "mask": [0/1 ...], "values": [float or null ...],
///    "continuity_hint": "continuous"|"discontinuous"}
/// Arrays are row-major, length nx*ny; values are null exactly at
/// masked-out cells. save -> load round-trips bit-exactly.
nlohmann::json field_to_json(const ScalarField& field);
ScalarField field_from_json(const nlohmann::json& j);

void save_field(const ScalarField& field, const std::string& path);
ScalarField load_field(const std::string& path);

/// 8-bit binary PGM heatmap: min -> 0, max -> 255, masked-out -> 0.
/// Rows are written top-down (highest iy first).
void write_pgm(const ScalarField& field, const std::string& path);

nlohmann::json cone_to_json(const Cone& cone);
Cone cone_from_json(const nlohmann::json& j);
Cone load_cone(const std::string& path);

}  // namespace mono

#endif
