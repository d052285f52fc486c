#include "visco/material_file.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "visco/errors.hpp"

using namespace visco;

namespace {

const char* kSlsJson =
    R"({"kind":"relaxation","name":"sls","newtonian":0.0,"equilibrium":1.0,)"
    R"("atoms":[{"rate":1.0,"weight":1.0}]})";

const char* kCreepJson =
    R"({"kind":"creep","name":"sls-dual","flow":0.0,"offset":0.5,)"
    R"("atoms":[{"rate":0.5,"weight":0.25}]})";

}  // namespace

TEST_CASE("parses the canonical relaxation record") {
  const MaterialRecord rec = parse_material(kSlsJson);
  CHECK(rec.name == "sls");
  REQUIRE(rec.is_relaxation());
  CHECK(rec.relaxation().newtonian() == 0.0);
  CHECK(rec.relaxation().equilibrium() == 1.0);
  REQUIRE(rec.relaxation().spectrum().size() == 1);
  CHECK(rec.relaxation().spectrum().atoms()[0].rate == 1.0);
}

TEST_CASE("parses the canonical creep record") {
  const MaterialRecord rec = parse_material(kCreepJson);
  CHECK(rec.name == "sls-dual");
  REQUIRE(!rec.is_relaxation());
  CHECK(rec.creep().offset() == 0.5);
  CHECK(rec.creep().flow() == 0.0);
  REQUIRE(rec.creep().spectrum().size() == 1);
  CHECK(rec.creep().spectrum().atoms()[0].weight == 0.25);
}

TEST_CASE("serialization round-trips bit-exact values") {
  const MaterialRecord rec{
      "awkward values",
      RelaxationModel(0.1, 1e-3, DiscreteSpectrum({{1.0 / 3.0, 7e22}, {2.0, 0.1}}))};
  const MaterialRecord back = parse_material(to_json(rec));
  CHECK(back.name == rec.name);
  REQUIRE(back.is_relaxation());
  CHECK(back.relaxation().newtonian() == 0.1);
  CHECK(back.relaxation().equilibrium() == 1e-3);
  REQUIRE(back.relaxation().spectrum().size() == 2);
  CHECK(back.relaxation().spectrum().atoms()[0].rate == 1.0 / 3.0);
  CHECK(back.relaxation().spectrum().atoms()[0].weight == 7e22);
}

TEST_CASE("names with quotes and non-ascii text survive") {
  const MaterialRecord rec{"q\"uote\\slash\tμ", CreepModel(0.0, 2.0)};
  const MaterialRecord back = parse_material(to_json(rec));
  CHECK(back.name == rec.name);
  CHECK(back.creep().flow() == 2.0);
}

TEST_CASE("schema violations") {
  CHECK_THROWS_AS(parse_material("not json at all"), SchemaError);
  CHECK_THROWS_AS(parse_material("[1,2,3]"), SchemaError);
  CHECK_THROWS_AS(parse_material(R"({"kind":"viscosity","name":"x","atoms":[]})"), SchemaError);
  CHECK_THROWS_AS(parse_material(R"({"kind":"relaxation","name":"x"})"), SchemaError);

  // unknown field
  CHECK_THROWS_AS(
      parse_material(
          R"({"kind":"relaxation","name":"x","newtonian":0,"equilibrium":1,"atoms":[],"extra":1})"),
      SchemaError);
  // creep fields on a relaxation record
  CHECK_THROWS_AS(
      parse_material(R"({"kind":"relaxation","name":"x","offset":0,"flow":1,"atoms":[]})"),
      SchemaError);
  // wrong types
  CHECK_THROWS_AS(
      parse_material(R"({"kind":"relaxation","name":"x","newtonian":"0","equilibrium":1,"atoms":[]})"),
      SchemaError);
  CHECK_THROWS_AS(
      parse_material(R"({"kind":"relaxation","name":"x","newtonian":0,"equilibrium":1,"atoms":{}})"),
      SchemaError);
  CHECK_THROWS_AS(
      parse_material(
          R"({"kind":"relaxation","name":"x","newtonian":0,"equilibrium":1,"atoms":[{"rate":1,"weight":1,"phase":0}]})"),
      SchemaError);

  // unknown-field diagnostics name the offender
  try {
    parse_material(
        R"({"kind":"relaxation","name":"x","newtonian":0,"equilibrium":1,"atoms":[],"extra":1})");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("extra") != std::string::npos);
  }
}

TEST_CASE("value constraints surface as validation errors") {
  try {
    parse_material(
        R"({"kind":"relaxation","name":"x","newtonian":0,"equilibrium":1,"atoms":[{"rate":1,"weight":-2}]})");
    FAIL("expected NegativeWeight");
  } catch (const NegativeWeight& e) {
    CHECK(std::string(e.what()).find("NegativeWeight") != std::string::npos);
  }
  CHECK_THROWS_AS(
      parse_material(
          R"({"kind":"creep","name":"x","offset":0,"flow":1,"atoms":[{"rate":0,"weight":1}]})"),
      NonpositiveRate);
  CHECK_THROWS_AS(
      parse_material(R"({"kind":"creep","name":"x","offset":-1,"flow":1,"atoms":[]})"),
      DomainError);
}

TEST_CASE("file write and read are inverse") {
  const std::string path = "material_io_test.tmp.json";
  const MaterialRecord rec{"disk", CreepModel(0.5, 0.0, DiscreteSpectrum({{0.5, 0.25}}))};
  write_material_file(path, rec);
  const MaterialRecord back = read_material_file(path);
  CHECK(back.name == "disk");
  CHECK(back.creep().offset() == 0.5);
  REQUIRE(back.creep().spectrum().size() == 1);
  CHECK(back.creep().spectrum().atoms()[0].rate == 0.5);
  std::remove(path.c_str());

  CHECK_THROWS_AS(read_material_file("does-not-exist.json"), ValidationError);
}
