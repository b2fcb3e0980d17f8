#include <doctest.h>

#include "bezout/commands.hpp"
#include "bezout/json_io.hpp"
#include "oracles.hpp"

using namespace bezout;

namespace {

CommandResult run(const std::string& sub, std::map<std::string, std::string> opts, std::vector<std::string> pos = {}) {
  CommandRequest req;
  req.subcommand = sub;
  req.options = std::move(opts);
  req.positional = std::move(pos);
  return run_command(req);
}

}  // namespace

TEST_CASE("spec JSON round trip") {
  Rng rng(1);
  std::vector<SpeciesSpec> specs{SpeciesSpec::complete(3, 4), SpeciesSpec::first(3, {2, 3}),
                                 SpeciesSpec::third(2, {1, 1, 1}, {2, 2, 2}),
                                 default_s(SpeciesSpec::third(7, {5, 5, 5}, {5, 5, 5}))};
  for (int i = 0; i < 20; ++i) specs.push_back(oracle::random_second(rng, static_cast<int>(rng.range(2, 4)), 5));
  for (auto& s : specs) CHECK(spec_from_json(spec_to_json(s)) == s);
  auto j = spec_to_json(SpeciesSpec::second(2, {1, 1, 1}, 2));
  CHECK(j.dump() == R"({"kind":"second","n":3,"t":2,"a":[1,1,1],"b":2})");
  CHECK(spec_from_json(parse_json(R"({"kind":"second","t":2,"a":[1,1,1],"b":2})")) == SpeciesSpec::second(2, {1, 1, 1}, 2));
  CHECK_THROWS_AS(parse_json("{\"kind\":"), Error);
  CHECK_THROWS_AS(spec_from_json(parse_json(R"({"kind":"complete","t":2})")), Error);
  CHECK_THROWS_AS(spec_from_json(parse_json(R"({"kind":"cubic","n":2,"t":2})")), Error);
  CHECK(spec_from_json(parse_json(R"({"kind":"second","t":2,"a":[1,1,1],"b":[2]})")) == SpeciesSpec::second(2, {1, 1, 1}, 2));
  CHECK_THROWS_AS(spec_from_json(parse_json(R"({"kind":"second","t":2,"a":[1,1,1],"b":[2,3]})")), Error);
}

TEST_CASE("polynomial JSON round trip") {
  for (const Field& f : {Field::rationals(), Field::prime(101)}) {
    auto p = parse_polynomial("3/4*x^2*y-5z+1", {"x", "y", "z"}, f);
    CHECK(poly_from_json(poly_to_json(p), 3, f) == p);
  }
  auto j = poly_to_json(parse_polynomial("x/2-1", {"x"}, Field::rationals()));
  CHECK(j.dump() == R"([{"exp":[1],"num":"1","den":"2"},{"exp":[0],"num":"-1","den":"1"}])");
}

TEST_CASE("system JSON forms") {
  auto bare = system_from_json(parse_json(R"([{"kind":"complete","n":2,"t":1},{"kind":"complete","n":2,"t":2}])"));
  REQUIRE(bare.specs.has_value());
  CHECK(bare.specs->equations.size() == 2);
  CHECK(bare.polys.empty());
  auto text = system_from_json(parse_json(R"({"field":"Fp","p":101,"vars":["x","y"],"polys":["x+y","x-y"],"var":"y"})"));
  CHECK(text.field == Field::prime(101));
  CHECK(text.polys.size() == 2);
  REQUIRE(text.var.has_value());
  CHECK(*text.var == 1);
  auto defaults = system_from_json(parse_json(R"({"polys":["x+z","y"],"specs":[{"kind":"complete","n":3,"t":1},{"kind":"complete","n":3,"t":1}]})"));
  CHECK(defaults.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK_THROWS_AS(system_from_json(parse_json(R"({"field":"R","polys":["x"]})")), Error);
  CHECK_THROWS_AS(system_from_json(parse_json(R"({"vars":["x"],"polys":["x+q"]})")), Error);
  CHECK_THROWS_AS(system_from_json(parse_json(R"([{"kind":"complete","n":2,"t":1},{"kind":"complete","n":3,"t":1}])")), Error);
}

TEST_CASE("fan JSON round trip") {
  for (auto kind : {FanKind::second_species, FanKind::third_subdivided}) {
    auto fan = build_fan(kind, 3);
    auto back = fan_from_json(fan_to_json(fan), kind);
    REQUIRE(back.cones.size() == fan.cones.size());
    for (std::size_t i = 0; i < fan.cones.size(); ++i) CHECK(back.cones[i] == fan.cones[i]);
  }
}

TEST_CASE("command examples") {
  auto c = run("count", {{"spec", R"({"kind":"second","n":3,"t":2,"a":[1,1,1],"b":2})"}});
  CHECK(c.exit_code == 0);
  auto j = parse_json(c.output);
  CHECK(j["closed"] == 7);
  CHECK(j["enumerated"] == 7);
  CHECK(j["agree"] == true);

  auto s = R"({"kind":"second","n":3,"t":3,"a":[2,2,2],"b":3})";
  auto d = run("degree", {{"sys", std::string("[") + s + "," + s + "," + s + "]"}});
  CHECK(d.exit_code == 0);
  CHECK(parse_json(d.output)["D"] == 24);

  auto demo = run("demo", {}, {"superfluous"});
  CHECK(demo.exit_code == 0);
  CHECK(parse_json(demo.output)["summary"] == "eliminand: y^2-1; superfluous factor: 4y");
}

TEST_CASE("command exit codes") {
  CHECK(run("count", {{"spec", "{\"kind\":"}}).exit_code == 2);
  auto bad = run("count", {{"spec", R"({"kind":"second","n":3,"t":3,"a":[1,1,3],"b":3})"}});
  CHECK(bad.exit_code == 2);
  auto err = parse_json(bad.output);
  CHECK(err["error"]["code"] == "invalid_spec");
  CHECK(err["error"]["violations"].size() == 1);
  CHECK(run("nonsense", {}).exit_code == 2);
  CHECK(run("count", {}).exit_code == 2);
  CHECK(run("demo", {}, {"unknown"}).exit_code == 2);
  CHECK(run("count", {{"spec", "/nonexistent/file.json"}}).exit_code == 2);
}

TEST_CASE("repeat runs are byte-identical") {
  auto sys = R"({"specs":[{"kind":"second","n":2,"t":2,"a":[1,1],"b":2},{"kind":"second","n":2,"t":2,"a":[1,2],"b":2}]})";
  auto a = run("degree", {{"sys", sys}, {"method", "all"}});
  auto b = run("degree", {{"sys", sys}, {"method", "all"}});
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}
