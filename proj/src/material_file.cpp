#include "visco/material_file.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "visco/errors.hpp"
#include "visco/number_format.hpp"

namespace visco {
namespace {

using nlohmann::json;

double number_field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) throw SchemaError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) throw SchemaError("unknown field '" + item.key() + "'");
  }
}

DiscreteSpectrum parse_atoms(const json& obj) {
  if (!obj.contains("atoms")) throw SchemaError("missing field 'atoms'");
  const json& arr = obj.at("atoms");
  if (!arr.is_array()) throw SchemaError("field 'atoms' must be an array");
  std::vector<SpectrumAtom> atoms;
  atoms.reserve(arr.size());
  for (const json& a : arr) {
    if (!a.is_object()) throw SchemaError("every atom must be an object");
    reject_unknown_keys(a, {"rate", "weight"});
    atoms.push_back({number_field(a, "rate"), number_field(a, "weight")});
  }
  return DiscreteSpectrum(std::move(atoms));
}

void append_atoms(std::ostringstream& out, const DiscreteSpectrum& spectrum) {
  out << "  \"atoms\": [";
  const auto& atoms = spectrum.atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0) out << ",";
    out << "\n    {\"rate\": " << format_double17(atoms[i].rate)
        << ", \"weight\": " << format_double17(atoms[i].weight) << "}";
  }
  if (!atoms.empty()) out << "\n  ";
  out << "]\n";
}

}  // namespace

MaterialRecord parse_material(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("top level must be an object");
  if (!doc.contains("kind") || !doc.at("kind").is_string())
    throw SchemaError("missing or non-string field 'kind'");
  if (!doc.contains("name") || !doc.at("name").is_string())
    throw SchemaError("missing or non-string field 'name'");

  const std::string kind = doc.at("kind").get<std::string>();
  std::string name = doc.at("name").get<std::string>();
  if (kind == "relaxation") {
    reject_unknown_keys(doc, {"kind", "name", "newtonian", "equilibrium", "atoms"});
    return MaterialRecord{std::move(name),
                          RelaxationModel(number_field(doc, "newtonian"),
                                          number_field(doc, "equilibrium"), parse_atoms(doc))};
  }
  if (kind == "creep") {
    reject_unknown_keys(doc, {"kind", "name", "offset", "flow", "atoms"});
    return MaterialRecord{std::move(name),
                          CreepModel(number_field(doc, "offset"), number_field(doc, "flow"),
                                     parse_atoms(doc))};
  }
  throw SchemaError("field 'kind' must be 'relaxation' or 'creep'");
}

std::string to_json(const MaterialRecord& rec) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"kind\": \"" << (rec.is_relaxation() ? "relaxation" : "creep") << "\",\n";
  out << "  \"name\": " << json(rec.name).dump() << ",\n";
  if (rec.is_relaxation()) {
    const RelaxationModel& m = rec.relaxation();
    out << "  \"newtonian\": " << format_double17(m.newtonian()) << ",\n";
    out << "  \"equilibrium\": " << format_double17(m.equilibrium()) << ",\n";
    append_atoms(out, m.spectrum());
  } else {
    const CreepModel& m = rec.creep();
    out << "  \"offset\": " << format_double17(m.offset()) << ",\n";
    out << "  \"flow\": " << format_double17(m.flow()) << ",\n";
    append_atoms(out, m.spectrum());
  }
  out << "}\n";
  return out.str();
}

MaterialRecord read_material_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("FileError", "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_material(ss.str());
}

void write_material_file(const std::string& path, const MaterialRecord& rec) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("FileError", "cannot open '" + path + "' for writing");
  out << to_json(rec);
  out.flush();
  if (!out) throw ValidationError("FileError", "failed writing '" + path + "'");
}

}  // namespace visco
