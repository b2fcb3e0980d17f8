#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bezout/degree.hpp"
#include "bezout/fan.hpp"
#include "bezout/koszul.hpp"
#include "bezout/species.hpp"
#include "bezout/sum_equation.hpp"

namespace bezout {

using Json = nlohmann::ordered_json;

// Parses text or throws parse_error with the parser message.
Json parse_json(const std::string& text);

Json spec_to_json(const SpeciesSpec& s);
SpeciesSpec spec_from_json(const Json& j);

// Polynomial JSON: a list of {"exp":[...],"num":"...","den":"..."}; den is omitted over F_p.
Json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const Json& j, std::size_t nvars, const Field& field);

struct SystemInput {
  Field field = Field::rationals();
  std::vector<std::string> vars;
  std::vector<Polynomial> polys;
  std::optional<SystemSpec> specs;
  std::optional<std::size_t> var;
};

// {"field":"Q"|"Fp","p":...,"vars":[...],"polys":[...],"specs":[...],"var":...}; polys may be
// strings in the text form or term lists. A bare array is read as a list of specs.
SystemInput system_from_json(const Json& j);

Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j, FanKind kind);

Json validation_to_json(const ValidationReport& v);
Json degree_to_json(const DegreeReport& r);
Json exactness_to_json(const ExactnessReport& r);
Json trace_to_json(const CokernelTrace& t);

}  // namespace bezout
