#include "bezout/json_io.hpp"

namespace bezout {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

namespace {

std::int64_t get_int(const Json& j, const char* key) {
  if (!j.contains(key)) fail(Errc::parse_error, std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) fail(Errc::parse_error, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> get_ints(const Json& v, const char* key) {
  if (!v.is_array()) fail(Errc::parse_error, std::string("field '") + key + "' must be an integer array");
  std::vector<std::int64_t> out;
  for (auto& x : v) {
    if (!x.is_number_integer()) fail(Errc::parse_error, std::string("field '") + key + "' must be an integer array");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

std::vector<std::int64_t> get_ints(const Json& j, const char* key, bool required) {
  if (!j.contains(key)) {
    if (required) fail(Errc::parse_error, std::string("missing field '") + key + "'");
    return {};
  }
  return get_ints(j.at(key), key);
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) fail(Errc::parse_error, "bad rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

std::string number_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  fail(Errc::parse_error, "coefficient must be a string or integer");
}

}  // namespace

Json spec_to_json(const SpeciesSpec& s) {
  Json j;
  j["kind"] = kind_name(s.kind);
  j["n"] = s.n;
  j["t"] = s.t;
  if (!s.a.empty()) j["a"] = s.a;
  if (s.kind == SpeciesKind::second) j["b"] = s.b.at(0);
  else if (!s.b.empty()) j["b"] = s.b;
  if (!s.s.empty()) j["s"] = s.s;
  return j;
}

SpeciesSpec spec_from_json(const Json& j) {
  if (!j.is_object()) fail(Errc::parse_error, "spec must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) fail(Errc::parse_error, "spec needs a string field 'kind'");
  SpeciesSpec s;
  s.kind = parse_kind(j["kind"].get<std::string>());
  s.t = get_int(j, "t");
  switch (s.kind) {
    case SpeciesKind::complete:
      s.n = static_cast<int>(get_int(j, "n"));
      break;
    case SpeciesKind::first:
      s.a = get_ints(j, "a", true);
      break;
    case SpeciesKind::second:
      s.a = get_ints(j, "a", true);
      if (j.contains("b") && j["b"].is_array()) s.b = get_ints(j, "b", true);
      else s.b = {get_int(j, "b")};
      break;
    case SpeciesKind::third:
      s.a = get_ints(j, "a", true);
      s.b = get_ints(j, "b", true);
      break;
    case SpeciesKind::truncated:
      s.a = get_ints(j, "a", true);
      s.b = get_ints(j, "b", true);
      s.s = get_ints(j, "s", true);
      break;
  }
  if (s.kind != SpeciesKind::complete) {
    s.n = static_cast<int>(s.a.size());
    if (j.contains("n") && get_int(j, "n") != s.n) fail(Errc::invalid_argument, "field 'n' disagrees with the length of 'a'");
  }
  s.check_shape();
  return s;
}

Json poly_to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    Json t;
    t["exp"] = it->first.exponents();
    if (it->second.is_rational()) {
      t["num"] = it->second.rational().get_num().get_str();
      t["den"] = it->second.rational().get_den().get_str();
    } else {
      t["num"] = std::to_string(it->second.residue());
    }
    terms.push_back(t);
  }
  return terms;
}

Polynomial poly_from_json(const Json& j, std::size_t nvars, const Field& field) {
  if (!j.is_array()) fail(Errc::parse_error, "polynomial must be a list of terms");
  Polynomial f(nvars, field);
  for (auto& t : j) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("num")) fail(Errc::parse_error, "term needs 'exp' and 'num'");
    auto e = get_ints(t["exp"], "exp");
    if (e.size() != nvars) fail(Errc::mismatch, "term exponent length differs from the variable count");
    std::vector<int> ex;
    for (auto v : e) {
      if (v < 0) fail(Errc::invalid_argument, "negative exponent");
      ex.push_back(static_cast<int>(v));
    }
    Rational q = parse_rational(number_text(t["num"]));
    if (t.contains("den")) q /= parse_rational(number_text(t["den"]));
    f.add_term(MultiIndex(ex), FieldElement::from_rational(q, field));
  }
  return f;
}

SystemInput system_from_json(const Json& j) {
  SystemInput in;
  const Json* specs = nullptr;
  if (j.is_array()) {
    specs = &j;
  } else if (j.is_object()) {
    if (j.contains("specs")) specs = &j["specs"];
  } else {
    fail(Errc::parse_error, "system must be a JSON object or array");
  }
  if (specs) {
    if (!specs->is_array()) fail(Errc::parse_error, "'specs' must be an array");
    SystemSpec s;
    for (auto& e : *specs) s.equations.push_back(spec_from_json(e));
    if (s.equations.empty()) fail(Errc::invalid_argument, "empty system");
    s.check(false);
    in.specs = s;
  }
  if (!j.is_object()) return in;
  std::string field = j.value("field", std::string("Q"));
  if (field == "Q") {
    in.field = Field::rationals();
  } else if (field == "Fp") {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) fail(Errc::parse_error, "field Fp needs an unsigned 'p'");
    in.field = Field::prime(j["p"].get<std::uint64_t>());
  } else {
    fail(Errc::parse_error, "field must be \"Q\" or \"Fp\"");
  }
  if (j.contains("polys")) {
    const auto& ps = j["polys"];
    if (!ps.is_array()) fail(Errc::parse_error, "'polys' must be an array");
    std::size_t nvars = 0;
    if (j.contains("vars")) {
      for (auto& v : j["vars"]) {
        if (!v.is_string()) fail(Errc::parse_error, "'vars' must be strings");
        in.vars.push_back(v.get<std::string>());
      }
      nvars = in.vars.size();
    } else if (in.specs) {
      nvars = static_cast<std::size_t>(in.specs->n());
    } else {
      for (auto& p : ps)
        if (p.is_array() && !p.empty()) nvars = p.front().at("exp").size();
      if (nvars == 0) fail(Errc::parse_error, "cannot infer the variables; give 'vars'");
    }
    if (in.vars.empty()) in.vars = nvars <= 3 ? std::vector<std::string>{"x", "y", "z"} : default_variable_names(nvars);
    in.vars.resize(nvars);
    if (in.specs && static_cast<std::size_t>(in.specs->n()) != nvars) fail(Errc::mismatch, "specs and vars disagree on n");
    for (auto& p : ps) {
      if (p.is_string()) in.polys.push_back(parse_polynomial(p.get<std::string>(), in.vars, in.field));
      else in.polys.push_back(poly_from_json(p, nvars, in.field));
    }
    if (in.specs && in.specs->equations.size() != in.polys.size()) fail(Errc::mismatch, "polys and specs differ in length");
  }
  if (j.contains("var")) {
    const auto& v = j["var"];
    if (v.is_number_unsigned()) {
      in.var = v.get<std::size_t>();
    } else if (v.is_string()) {
      auto it = std::find(in.vars.begin(), in.vars.end(), v.get<std::string>());
      if (it == in.vars.end()) fail(Errc::invalid_argument, "unknown variable '" + v.get<std::string>() + "'");
      in.var = static_cast<std::size_t>(it - in.vars.begin());
    } else {
      fail(Errc::parse_error, "'var' must be an index or a name");
    }
  }
  return in;
}

Json fan_to_json(const Fan& fan) {
  Json j;
  j["kind"] = fan.kind == FanKind::second_species ? "second_species" : "third_subdivided";
  j["n"] = fan.n;
  Json cones = Json::array();
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    Json c;
    c["gens"] = fan.cones[i].generators;
    if (i < fan.families.size()) c["family"] = fan.families[i];
    cones.push_back(c);
  }
  j["cones"] = cones;
  return j;
}

Fan fan_from_json(const Json& j, FanKind kind) {
  if (!j.is_object() || !j.contains("cones") || !j["cones"].is_array()) fail(Errc::parse_error, "fan needs a 'cones' array");
  Fan f;
  f.kind = kind;
  for (auto& c : j["cones"]) {
    if (!c.contains("gens") || !c["gens"].is_array()) fail(Errc::parse_error, "cone needs 'gens'");
    Cone cone;
    for (auto& g : c["gens"]) cone.generators.push_back(get_ints(g, "gens"));
    if (cone.generators.empty()) fail(Errc::parse_error, "cone without generators");
    if (f.n == 0) f.n = static_cast<int>(cone.generators.front().size());
    for (auto& g : cone.generators)
      if (static_cast<int>(g.size()) != f.n) fail(Errc::mismatch, "generators differ in dimension");
    f.cones.push_back(cone);
    f.families.push_back(c.value("family", std::string()));
  }
  return f;
}

Json validation_to_json(const ValidationReport& v) {
  Json j;
  j["valid"] = v.valid;
  j["violations"] = v.violations;
  j["warnings"] = v.warnings;
  return j;
}

Json degree_to_json(const DegreeReport& r) {
  Json j;
  j["D"] = r.D;
  j["method"] = method_name(r.method);
  j["epsilon"] = r.epsilon;
  Json H = Json::array();
  for (auto& f : r.forms) H.push_back(f.H);
  j["H"] = H;
  j["h"] = r.h;
  Json forms = Json::array();
  for (auto& f : r.forms) forms.push_back(f.form_index);
  j["forms"] = forms;
  j["common_form"] = r.common_form ? Json(*r.common_form) : Json(nullptr);
  j["per_form_D"] = r.per_form_D ? Json(*r.per_form_D) : Json(nullptr);
  if (r.base) j["base"] = spec_to_json(*r.base);
  Json checks = Json::array();
  for (auto& [m, v] : r.checks) checks.push_back({{"method", method_name(m)}, {"D", v}});
  j["checks"] = checks;
  j["consistent"] = r.consistent;
  j["notes"] = r.notes;
  return j;
}

Json exactness_to_json(const ExactnessReport& r) {
  Json j;
  Json pos = Json::array();
  for (auto& p : r.positions)
    pos.push_back({{"level", p.level}, {"dim", p.dim}, {"rank_in", p.rank_in}, {"rank_out", p.rank_out}, {"defect", p.defect}});
  j["positions"] = pos;
  j["top_dim"] = r.top_dim;
  j["coker"] = r.coker;
  j["alternating_sum"] = r.alternating_sum;
  j["exact"] = r.exact;
  j["d_squared_zero"] = r.d_squared_zero;
  j["euler_holds"] = r.euler_holds;
  j["expected"] = r.expected ? Json(*r.expected) : Json(nullptr);
  Json tr = Json::array();
  for (auto& s : r.trace)
    tr.push_back({{"m", s.m}, {"top", spec_to_json(s.top)}, {"coker", s.coker}, {"max_defect", s.max_defect}, {"per_seed", s.per_seed}});
  j["trace"] = tr;
  j["pass"] = r.pass;
  j["notes"] = r.notes;
  return j;
}

Json trace_to_json(const CokernelTrace& t) {
  Json j;
  j["coker"] = t.coker;
  j["stabilized"] = t.stabilized;
  j["base"] = spec_to_json(t.base);
  Json steps = Json::array();
  for (auto& s : t.steps)
    steps.push_back({{"target", spec_to_json(s.target)}, {"rows", s.rows}, {"cols", s.cols}, {"coker", s.coker}, {"per_seed", s.per_seed},
                     {"prime", s.prime}});
  j["steps"] = steps;
  j["notes"] = t.notes;
  return j;
}

}  // namespace bezout
