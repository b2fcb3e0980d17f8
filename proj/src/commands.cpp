#include "bezout/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "bezout/degree.hpp"
#include "bezout/fan.hpp"
#include "bezout/findiff.hpp"
#include "bezout/json_io.hpp"
#include "bezout/koszul.hpp"
#include "bezout/species.hpp"
#include "bezout/sum_equation.hpp"

namespace bezout {

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names{"validate", "count",  "vertices",  "classify", "degree",   "diff",
                                              "eliminate", "statement", "koszul", "fan-check", "demo"};
  return names;
}

namespace {

// Carries a ready error document (invalid specs with their violation lists).
struct SpecRejected {
  Json doc;
};

struct Output {
  Json doc;
  int exit_code = 0;
  std::string text;  // preformatted text view, if any
};

bool is_inline(const std::string& s) {
  auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (s[p] == '{' || s[p] == '[');
}

Json load_source(const std::string& value, const char* what) {
  if (is_inline(value)) return parse_json(value);
  std::ifstream in(value);
  if (!in) fail(Errc::invalid_argument, std::string("cannot open ") + what + " file '" + value + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

const std::string* opt(const CommandRequest& r, const std::string& key) {
  auto it = r.options.find(key);
  return it == r.options.end() || it->second.empty() ? nullptr : &it->second;
}

const std::string& need(const CommandRequest& r, const std::string& key) {
  auto* v = opt(r, key);
  if (!v) fail(Errc::invalid_argument, r.subcommand + " requires --" + key);
  return *v;
}

ElimConfig config_of(const CommandRequest& r) {
  ElimConfig c;
  if (r.seed == 0) fail(Errc::invalid_argument, "seed must be positive");
  if (!is_prime_u64(r.prime)) fail(Errc::invalid_argument, "--prime must be a prime below 2^63");
  if (r.prime >= (std::uint64_t{1} << 63)) fail(Errc::invalid_argument, "--prime must be below 2^63");
  if (r.margin_cap < 1) fail(Errc::invalid_argument, "--margin-cap must be positive");
  if (r.seeds < 1) fail(Errc::invalid_argument, "--seeds must be positive");
  c.seed = r.seed;
  c.prime = r.prime;
  c.margin_cap = r.margin_cap;
  c.seeds = r.seeds;
  return c;
}

void reject_if_invalid(const SpeciesSpec& s, const std::string& label) {
  auto v = validate_spec(s);
  if (v.valid) return;
  Json d;
  d["error"] = {{"code", "invalid_spec"}, {"message", label + " is not a valid spec"}, {"spec", spec_to_json(s)}, {"violations", v.violations}};
  throw SpecRejected{d};
}

void reject_if_invalid(const SystemSpec& sys) {
  for (std::size_t i = 0; i < sys.equations.size(); ++i) reject_if_invalid(sys.equations[i], "equation " + std::to_string(i + 1));
}

SpeciesSpec spec_arg(const CommandRequest& r, const std::string& key = "spec") {
  return spec_from_json(load_source(need(r, key), key.c_str()));
}

std::optional<SpeciesSpec> optional_spec(const CommandRequest& r, const std::string& key) {
  if (!opt(r, key)) return std::nullopt;
  return spec_arg(r, key);
}

SystemInput system_arg(const CommandRequest& r) {
  if (opt(r, "sys") && opt(r, "spec")) fail(Errc::invalid_argument, "give exactly one input source");
  return system_from_json(load_source(need(r, "sys"), "system"));
}

SystemSpec specs_of(const SystemInput& in) {
  if (!in.specs) fail(Errc::invalid_argument, "system input needs 'specs'");
  return *in.specs;
}

Json points(const std::vector<MultiIndex>& pts) {
  Json a = Json::array();
  for (auto& p : pts) a.push_back(p.exponents());
  return a;
}

// ---------------------------------------------------------------- commands

Output cmd_validate(const CommandRequest& r) {
  auto s = spec_arg(r);
  auto v = validate_spec(s);
  Output o;
  o.doc["spec"] = spec_to_json(s);
  Json vj = validation_to_json(v);
  for (auto& [k, val] : vj.items()) o.doc[k] = val;
  o.exit_code = v.valid ? 0 : 2;
  return o;
}

Output cmd_count(const CommandRequest& r) {
  auto s = spec_arg(r);
  reject_if_invalid(s, "spec");
  Output o;
  std::int64_t closed = count_closed_form(s);
  std::int64_t en = count_enumerated(s);
  o.doc["spec"] = spec_to_json(s);
  o.doc["closed"] = closed;
  o.doc["enumerated"] = en;
  o.doc["agree"] = closed == en;
  if (s.kind == SpeciesKind::third) o.doc["form"] = classify_form(s).form_index;
  o.exit_code = closed == en ? 0 : 1;
  return o;
}

Output cmd_vertices(const CommandRequest& r) {
  auto s = spec_arg(r);
  reject_if_invalid(s, "spec");
  Output o;
  o.doc["spec"] = spec_to_json(s);
  std::vector<MultiIndex> pts;
  std::size_t expected = 0;
  if (s.kind == SpeciesKind::second) {
    auto vs = vertices(s);
    pts = vs.points;
    expected = static_cast<std::size_t>(s.n * s.n + 2 * s.n - 3);
    o.doc["candidates"] = vs.candidates;
    o.doc["nondegenerate"] = vs.nondegenerate;
  } else if (s.kind == SpeciesKind::third || s.kind == SpeciesKind::truncated) {
    std::set<MultiIndex, GrlexLess> uniq;
    for (auto& v : all_cone_vertices(s)) uniq.insert(MultiIndex(std::vector<int>(v.begin(), v.end())));
    pts.assign(uniq.begin(), uniq.end());
    expected = build_fan(FanKind::third_subdivided, 3).cones.size();
    o.doc["candidates"] = expected;
    o.doc["nondegenerate"] = pts.size() == expected;
  } else {
    fail(Errc::invalid_argument, "vertices are defined for second, third and truncated specs");
  }
  auto support = enumerate_support(s);
  LatticeHull hull(pts);
  bool contains = std::all_of(support.begin(), support.end(), [&](auto& p) { return hull.contains(p); });
  bool in_support_all = std::all_of(pts.begin(), pts.end(), [&](auto& p) { return in_support(s, p); });
  o.doc["vertices"] = points(pts);
  o.doc["count"] = pts.size();
  o.doc["expected"] = expected;
  o.doc["in_support"] = in_support_all;
  o.doc["hull_contains_support"] = contains;
  o.exit_code = contains && in_support_all ? 0 : 1;
  return o;
}

Output cmd_classify(const CommandRequest& r) {
  auto s = spec_arg(r);
  if (s.kind != SpeciesKind::third && s.kind != SpeciesKind::truncated) fail(Errc::invalid_argument, "classify needs a third or truncated spec");
  Output o;
  auto fc = classify_form(s);
  o.doc["spec"] = spec_to_json(s);
  o.doc["form"] = fc.form_index;
  o.doc["H"] = fc.H;
  o.doc["boundary"] = fc.boundary;
  o.doc["matching"] = fc.matching;
  auto signs = form_signs(fc.form_index);
  std::string pat;
  for (int x : signs) pat += x > 0 ? '+' : '-';
  o.doc["signs"] = pat;
  if (s.kind == SpeciesKind::third && !fc.matching.empty()) o.doc["P"] = count_third_form(s, fc.form_index);
  o.doc["valid"] = is_valid(s);
  return o;
}

Json cokernel_check(const SystemSpec& sys, const ElimConfig& cfg, std::int64_t* coker, bool* stable) {
  auto tr = stabilized_cokernel(sys, cfg);
  *coker = tr.coker;
  *stable = tr.stabilized;
  return trace_to_json(tr);
}

Output cmd_degree(const CommandRequest& r) {
  auto in = system_arg(r);
  auto sys = specs_of(in);
  reject_if_invalid(sys);
  sys.check(true);
  auto cfg = config_of(r);
  std::string method = opt(r, "method") ? *opt(r, "method") : "closed";
  Output o;
  if (method == "closed" || method == "all") {
    auto rep = degree_bound(sys);
    if (method == "all") {
      auto diff = degree_via_difference(sys, optional_spec(r, "base"));
      rep.checks.push_back({DegreeMethod::iterated_difference, diff.D});
      for (auto& n : diff.notes) rep.notes.push_back(n);
      if (diff.D != rep.D || !diff.consistent) rep.consistent = false;
      std::int64_t ck = 0;
      bool st = false;
      Json tr = cokernel_check(sys, cfg, &ck, &st);
      rep.checks.push_back({DegreeMethod::cokernel_rank, ck});
      if (!st || ck != rep.D) rep.consistent = false;
      o.doc = degree_to_json(rep);
      o.doc["cokernel"] = tr;
    } else {
      o.doc = degree_to_json(rep);
    }
    o.exit_code = rep.consistent ? 0 : 1;
  } else if (method == "difference") {
    auto rep = degree_via_difference(sys, optional_spec(r, "base"));
    o.doc = degree_to_json(rep);
    o.exit_code = rep.consistent ? 0 : 1;
  } else if (method == "cokernel") {
    DegreeReport rep;
    rep.method = DegreeMethod::cokernel_rank;
    std::int64_t ck = 0;
    bool st = false;
    Json tr = cokernel_check(sys, cfg, &ck, &st);
    rep.D = ck;
    auto closed = degree_bound(sys);
    rep.checks.push_back({DegreeMethod::closed_form, closed.D});
    rep.forms = closed.forms;
    rep.h = closed.h;
    rep.epsilon = closed.epsilon;
    rep.consistent = st && closed.D == ck;
    if (!st) rep.notes.push_back("cokernel did not stabilize within the margin cap");
    o.doc = degree_to_json(rep);
    o.doc["cokernel"] = tr;
    o.exit_code = rep.consistent ? 0 : 1;
  } else {
    fail(Errc::invalid_argument, "--method must be closed, difference, cokernel or all");
  }
  return o;
}

Output cmd_diff(const CommandRequest& r) {
  CommandRequest q = r;
  q.options["method"] = "difference";
  return cmd_degree(q);
}

std::size_t var_index(const CommandRequest& r, const SystemInput& in) {
  if (auto* v = opt(r, "var")) {
    auto it = std::find(in.vars.begin(), in.vars.end(), *v);
    if (it != in.vars.end()) return static_cast<std::size_t>(it - in.vars.begin());
    try {
      std::size_t pos = 0;
      unsigned long k = std::stoul(*v, &pos);
      if (pos == v->size() && k < in.vars.size()) return k;
    } catch (const std::exception&) {
    }
    fail(Errc::invalid_argument, "unknown variable '" + *v + "'");
  }
  if (in.var) return *in.var;
  return 0;
}

Output cmd_eliminate(const CommandRequest& r) {
  auto in = system_arg(r);
  if (in.polys.empty()) fail(Errc::invalid_argument, "eliminate needs 'polys'");
  std::size_t var = var_index(r, in);
  if (var >= in.vars.size()) fail(Errc::invalid_argument, "variable index out of range");
  auto cfg = config_of(r);
  auto res = eliminand_extract(in.polys, var, cfg);
  Output o;
  o.doc["var"] = in.vars[var];
  o.doc["field"] = in.field.name();
  o.doc["found"] = res.eliminand.has_value();
  if (res.eliminand) {
    o.doc["eliminand"] = to_text(*res.eliminand, in.vars);
    o.doc["degree"] = res.eliminand->degree();
    o.doc["terms"] = poly_to_json(*res.eliminand);
  } else {
    o.doc["eliminand"] = nullptr;
    o.doc["degree"] = nullptr;
  }
  o.doc["stabilized"] = res.stabilized;
  Json steps = Json::array();
  for (auto& s : res.steps) steps.push_back({{"T", s.T}, {"rows", s.rows}, {"cols", s.cols}, {"degree", s.degree}});
  o.doc["steps"] = steps;
  if (auto* mm = opt(r, "mm")) {
    std::int64_t T = res.steps.back().T;
    const std::size_t n = in.polys.front().nvars();
    std::vector<std::vector<MultiIndex>> mult;
    for (auto& f : in.polys) {
      auto d = T - f.degree();
      mult.push_back(d < 0 ? std::vector<MultiIndex>{} : enumerate_support(SpeciesSpec::complete(static_cast<int>(n), d)));
    }
    auto map = build_map(in.polys, mult, enumerate_support(SpeciesSpec::complete(static_cast<int>(n), T)));
    std::ofstream out(*mm);
    if (!out) fail(Errc::invalid_argument, "cannot write matrix file '" + *mm + "'");
    map.write_matrix_market(out);
    o.doc["matrix"] = *mm;
  }
  o.exit_code = res.eliminand ? 0 : 1;
  return o;
}

Output cmd_statement(const CommandRequest& r) {
  auto in = system_arg(r);
  auto sys = specs_of(in);
  reject_if_invalid(sys);
  auto cfg = config_of(r);
  auto target = optional_spec(r, "target");
  std::vector<StatementReport> reps;
  if (!in.polys.empty()) {
    SystemSpec cl = sys.closure();
    reps.push_back(statement_check(in.polys, sys, target ? *target : cl.sum() + base_spec(cl)));
  } else {
    reps = statement_check_generic(sys, target, cfg);
  }
  Output o;
  Json arr = Json::array();
  bool pass = true;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    auto& s = reps[k];
    pass = pass && s.pass;
    Json j;
    j["replica"] = k;
    j["r"] = s.r;
    j["target"] = spec_to_json(s.target);
    j["kernel_dim"] = s.kernel_dim;
    j["predicted_kernel_dim"] = s.predicted_kernel_dim ? Json(*s.predicted_kernel_dim) : Json(nullptr);
    j["checked"] = s.checked;
    j["failures"] = s.failures;
    j["pass"] = s.pass;
    j["counterexamples"] = s.counterexamples;
    arr.push_back(j);
  }
  o.doc["reports"] = arr;
  o.doc["pass"] = pass;
  o.exit_code = pass ? 0 : 1;
  return o;
}

Output cmd_koszul(const CommandRequest& r) {
  auto in = system_arg(r);
  auto sys = specs_of(in);
  reject_if_invalid(sys);
  auto cfg = config_of(r);
  std::string mode = opt(r, "method") ? *opt(r, "method") : "complex";
  ExactnessReport rep;
  if (mode == "resolution") {
    rep = first_species_resolution_check(sys, optional_spec(r, "target"), cfg);
  } else if (mode == "complex") {
    rep = exactness_stabilized(sys, optional_spec(r, "base"), cfg);
    if (sys.equations.size() == static_cast<std::size_t>(sys.n())) {
      rep.expected = degree_bound(sys).D;
      rep.pass = rep.pass && rep.coker == *rep.expected;
    }
  } else {
    fail(Errc::invalid_argument, "--method must be complex or resolution for koszul");
  }
  Output o;
  o.doc = exactness_to_json(rep);
  o.doc["mode"] = mode;
  o.exit_code = rep.pass ? 0 : 1;
  return o;
}

Output cmd_fan_check(const CommandRequest& r) {
  auto s = spec_arg(r);
  reject_if_invalid(s, "spec");
  if (s.kind != SpeciesKind::second && s.kind != SpeciesKind::third && s.kind != SpeciesKind::truncated)
    fail(Errc::invalid_argument, "fan-check needs a second, third or truncated spec");
  std::size_t samples = 100;
  if (auto* v = opt(r, "samples")) samples = static_cast<std::size_t>(std::stoul(*v));
  Fan fan = build_fan(s.kind == SpeciesKind::second ? FanKind::second_species : FanKind::third_subdivided, s.n);
  auto rep = sections_check(s, r.seed, samples);
  Output o;
  o.doc["spec"] = spec_to_json(s);
  o.doc["fan"] = fan_to_json(fan);
  Json us = Json::array();
  for (auto& c : fan.cones) us.push_back(vertex_correspondence(s, c).exponents());
  o.doc["cone_vertices"] = us;
  o.doc["support_points"] = rep.support_points;
  o.doc["cones"] = rep.cones;
  o.doc["violations"] = rep.violations;
  o.doc["exterior_sampled"] = rep.exterior_sampled;
  o.doc["exterior_certified"] = rep.exterior_certified;
  o.doc["vertices_in_support"] = rep.vertices_in_support;
  o.doc["vertices_certified"] = rep.vertices_certified;
  if (fan.kind == FanKind::third_subdivided) o.doc["refines_second_fan"] = fan_refines(fan, build_fan(FanKind::second_species, 3));
  o.doc["details"] = rep.details;
  bool pass = rep.pass && rep.vertices_certified == rep.cones;
  o.doc["pass"] = pass;
  o.exit_code = pass ? 0 : 1;
  return o;
}

Output demo_superfluous() {
  auto tr = sequential_elim_demo();
  Output o;
  Json steps = Json::array();
  std::ostringstream text;
  std::size_t w = 0;
  for (auto& s : tr.steps) w = std::max(w, s.label.size());
  for (auto& s : tr.steps) {
    steps.push_back({{"label", s.label}, {"text", s.text}});
    text << std::left << std::setw(static_cast<int>(w + 1)) << (s.label + ":") << " " << s.text << "\n";
  }
  text << tr.summary << "\n";
  const std::vector<std::string> xyz{"x", "y", "z"};
  o.doc["steps"] = steps;
  o.doc["final"] = to_compact_text(tr.final_equation, xyz);
  o.doc["eliminand"] = to_compact_text(tr.eliminand, xyz);
  o.doc["superfluous"] = to_compact_text(tr.superfluous, xyz);
  o.doc["summary"] = tr.summary;
  o.text = text.str();
  return o;
}

Output demo_sylvester3q(const CommandRequest& r) {
  auto cfg = config_of(r);
  Output o;
  Json cases = Json::array();
  bool pass = true;
  auto add = [&](const std::string& label, const std::vector<Polynomial>& q, std::optional<bool> expect_zero) {
    auto d = sylvester_three_quadrics(q[0], q[1], q[2]);
    Json c;
    c["label"] = label;
    Json qs = Json::array();
    for (auto& p : q) qs.push_back(to_text(p, {"x", "y", "z"}));
    c["quadrics"] = qs;
    c["det"] = d.to_string();
    c["vanishes"] = d.is_zero();
    if (expect_zero) {
      c["expected_zero"] = *expect_zero;
      pass = pass && d.is_zero() == *expect_zero;
    }
    cases.push_back(c);
  };
  if (opt(r, "sys")) {
    auto in = system_arg(r);
    if (in.polys.size() != 3) fail(Errc::invalid_argument, "sylvester3q needs three quadrics");
    add("input", in.polys, std::nullopt);
  } else {
    Field f = Field::prime(cfg.prime);
    const std::vector<std::string> xyz{"x", "y", "z"};
    add("x^2, xy, y^2", {parse_polynomial("x^2", xyz, f), parse_polynomial("x*y", xyz, f), parse_polynomial("y^2", xyz, f)}, true);
    auto U = random_quadrics(cfg.prime, seed_for(cfg, 0)).front();
    add("U, 2U, 3U", {U, U.scale(FieldElement::from_int(2, f)), U.scale(FieldElement::from_int(3, f))}, true);
    for (int k = 0; k < cfg.seeds; ++k) {
      add("common zero, replica " + std::to_string(k), quadrics_through_point(cfg.prime, seed_for(cfg, k)), true);
      add("generic, replica " + std::to_string(k), random_quadrics(cfg.prime, seed_for(cfg, k)), false);
    }
  }
  o.doc["cases"] = cases;
  o.doc["pass"] = pass;
  o.exit_code = pass ? 0 : 1;
  return o;
}

Output dispatch(const CommandRequest& r) {
  const auto& c = r.subcommand;
  if (c == "validate") return cmd_validate(r);
  if (c == "count") return cmd_count(r);
  if (c == "vertices") return cmd_vertices(r);
  if (c == "classify") return cmd_classify(r);
  if (c == "degree") return cmd_degree(r);
  if (c == "diff") return cmd_diff(r);
  if (c == "eliminate") return cmd_eliminate(r);
  if (c == "statement") return cmd_statement(r);
  if (c == "koszul") return cmd_koszul(r);
  if (c == "fan-check") return cmd_fan_check(r);
  if (c == "demo") {
    if (r.positional.empty()) fail(Errc::invalid_argument, "demo needs a name: superfluous or sylvester3q");
    if (r.positional.front() == "superfluous") return demo_superfluous();
    if (r.positional.front() == "sylvester3q") return demo_sylvester3q(r);
    fail(Errc::invalid_argument, "unknown demo '" + r.positional.front() + "'");
  }
  fail(Errc::invalid_argument, "unknown subcommand '" + c + "'");
}

int exit_for(Errc e) {
  switch (e) {
    case Errc::out_of_domain:
    case Errc::math_failure:
    case Errc::internal:
      return 1;
    default:
      return 2;
  }
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_object(); });
}

void render_text(const Json& j, const std::string& indent, std::ostream& os) {
  if (j.is_object()) {
    std::size_t w = 0;
    for (auto& [k, v] : j.items()) w = std::max(w, k.size());
    for (auto& [k, v] : j.items()) {
      if (is_flat(v)) {
        os << indent << std::left << std::setw(static_cast<int>(w)) << k << "  " << scalar_text(v) << "\n";
      } else {
        os << indent << k << ":\n";
        render_text(v, indent + "  ", os);
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (is_flat(j[i])) {
        os << indent << "- " << scalar_text(j[i]) << "\n";
      } else {
        os << indent << "[" << i << "]\n";
        render_text(j[i], indent + "  ", os);
      }
    }
  } else {
    os << indent << scalar_text(j) << "\n";
  }
}

std::string format_output(const Output& o, const std::string& fmt) {
  if (fmt == "text") {
    if (!o.text.empty()) return o.text;
    std::ostringstream os;
    render_text(o.doc, "", os);
    return os.str();
  }
  return o.doc.dump(2) + "\n";
}

}  // namespace

CommandResult run_command(const CommandRequest& req) {
  CommandResult res;
  std::string fmt = req.format;
  if (fmt != "json" && fmt != "text") {
    Json d;
    d["error"] = {{"code", "invalid_argument"}, {"message", "--format must be json or text"}};
    return {2, d.dump(2) + "\n"};
  }
  Output o;
  try {
    o = dispatch(req);
  } catch (const SpecRejected& e) {
    o.doc = e.doc;
    o.exit_code = 2;
  } catch (const Error& e) {
    o.doc = Json::object();
    o.doc["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
    o.exit_code = exit_for(e.code());
  } catch (const std::exception& e) {
    o.doc = Json::object();
    o.doc["error"] = {{"code", "internal"}, {"message", e.what()}};
    o.exit_code = 1;
  }
  res.exit_code = o.exit_code;
  res.output = format_output(o, fmt);
  return res;
}

}  // namespace bezout
