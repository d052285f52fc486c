#pragma once

#include <string>
#include <variant>

#include "visco/models.hpp"

namespace visco {

// One material as stored on disk: a name plus either kind of model.
struct MaterialRecord {
  std::string name;
  std::variant<RelaxationModel, CreepModel> model;

  bool is_relaxation() const noexcept {
    return std::holds_alternative<RelaxationModel>(model);
  }
  const RelaxationModel& relaxation() const { return std::get<RelaxationModel>(model); }
  const CreepModel& creep() const { return std::get<CreepModel>(model); }
};

// Parses the JSON object format:
//   {"kind": "relaxation", "name": ..., "newtonian": ..., "equilibrium": ...,
//    "atoms": [{"rate": ..., "weight": ...}, ...]}
//   {"kind": "creep", "name": ..., "offset": ..., "flow": ..., "atoms": [...]}
// Unknown keys, missing keys, and wrong value types all raise SchemaError;
// value constraints (rates, weights, finiteness) surface as the model
// constructors' own ValidationErrors.
MaterialRecord parse_material(const std::string& json_text);
std::string to_json(const MaterialRecord& rec);

MaterialRecord read_material_file(const std::string& path);
void write_material_file(const std::string& path, const MaterialRecord& rec);

}  // namespace visco
