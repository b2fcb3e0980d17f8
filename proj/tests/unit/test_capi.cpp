#include <doctest.h>

#include <cstring>
#include <string>

#include "bezout/bezout.h"

// Exercises the shared library through its C interface only.

TEST_CASE("context settings and errors") {
  bz_context* ctx = bz_context_new();
  REQUIRE(ctx != nullptr);
  CHECK(std::string(bz_version()).size() > 0);
  CHECK(bz_context_set_seed(ctx, 5) == BZ_OK);
  CHECK(bz_context_set_seed(ctx, 0) == BZ_E_INVALID_ARGUMENT);
  CHECK(std::strlen(bz_last_error(ctx)) > 0);
  CHECK(bz_context_set_prime(ctx, 100) == BZ_E_INVALID_ARGUMENT);
  CHECK(bz_context_set_prime(ctx, 1000003) == BZ_OK);
  CHECK(bz_context_set_margin_cap(ctx, 0) == BZ_E_INVALID_ARGUMENT);
  CHECK(bz_context_set_seeds(ctx, 2) == BZ_OK);
  CHECK(bz_context_set_format(ctx, "xml") == BZ_E_INVALID_ARGUMENT);
  CHECK(bz_context_set_format(ctx, "text") == BZ_OK);
  CHECK(bz_context_set_seed(nullptr, 1) == BZ_E_NULL);
  CHECK(std::string(bz_status_name(BZ_E_INVALID_SPEC)) == "invalid_spec");
  bz_context_free(ctx);
}

TEST_CASE("running a subcommand") {
  bz_context* ctx = bz_context_new();
  const char* keys[] = {"spec"};
  const char* values[] = {R"({"kind":"second","n":3,"t":2,"a":[1,1,1],"b":2})"};
  bz_report* rep = nullptr;
  REQUIRE(bz_run(ctx, "count", nullptr, 0, keys, values, 1, &rep) == BZ_OK);
  CHECK(bz_report_exit_code(rep) == 0);
  CHECK(std::string(bz_report_text(rep)).find("\"closed\": 7") != std::string::npos);
  bz_report_free(rep);

  const char* pos[] = {"superfluous"};
  REQUIRE(bz_run(ctx, "demo", pos, 1, nullptr, nullptr, 0, &rep) == BZ_OK);
  CHECK(std::string(bz_report_text(rep)).find("eliminand: y^2-1; superfluous factor: 4y") != std::string::npos);
  bz_report_free(rep);

  CHECK(bz_run(ctx, "count", nullptr, 0, keys, values, 1, nullptr) == BZ_E_NULL);
  bz_context_free(ctx);
}

TEST_CASE("specs and degrees") {
  bz_context* ctx = bz_context_new();
  bz_spec* s = nullptr;
  REQUIRE(bz_spec_parse(ctx, R"({"kind":"second","n":3,"t":2,"a":[1,1,1],"b":2})", &s) == BZ_OK);
  int valid = 0;
  CHECK(bz_spec_validate(ctx, s, &valid) == BZ_OK);
  CHECK(valid == 1);
  int64_t closed = 0, enumerated = 0;
  CHECK(bz_spec_count(ctx, s, &closed, &enumerated) == BZ_OK);
  CHECK(closed == 7);
  CHECK(enumerated == 7);
  bz_poly* f = nullptr;
  CHECK(bz_poly_random(ctx, s, 3, &f) == BZ_OK);
  const char* text = nullptr;
  CHECK(bz_poly_to_string(ctx, f, &text) == BZ_OK);
  CHECK(std::string(text).size() > 0);
  bz_poly_free(f);
  bz_spec_free(s);

  bz_spec* bad = nullptr;
  REQUIRE(bz_spec_parse(ctx, R"({"kind":"second","n":3,"t":3,"a":[1,1,3],"b":3})", &bad) == BZ_OK);
  CHECK(bz_spec_validate(ctx, bad, &valid) == BZ_OK);
  CHECK(valid == 0);
  CHECK(std::string(bz_last_error(ctx)).find("a1+a2 >= b") != std::string::npos);
  bz_spec_free(bad);
  CHECK(bz_spec_parse(ctx, "{", &bad) == BZ_E_PARSE);

  int64_t D = 0;
  const char* sys = R"([{"kind":"second","n":3,"t":3,"a":[2,2,2],"b":3},{"kind":"second","n":3,"t":3,"a":[2,2,2],"b":3},)"
                    R"({"kind":"second","n":3,"t":3,"a":[2,2,2],"b":3}])";
  CHECK(bz_degree(ctx, sys, &D) == BZ_OK);
  CHECK(D == 24);
  bz_context_free(ctx);
}

TEST_CASE("polynomial arithmetic") {
  bz_context* ctx = bz_context_new();
  bz_poly *f = nullptr, *g = nullptr, *h = nullptr, *e = nullptr;
  REQUIRE(bz_poly_parse(ctx, "-x^2+y^2+z^2-2*y*z-2*x-1", "x,y,z", 0, &f) == BZ_OK);
  REQUIRE(bz_poly_parse(ctx, "1-x-y", "x,y,z", 0, &g) == BZ_OK);
  REQUIRE(bz_poly_substitute(ctx, f, 2, g, &h) == BZ_OK);
  REQUIRE(bz_poly_parse(ctx, "4*y^2+4*x*y-4*x-4*y", "x,y,z", 0, &e) == BZ_OK);
  bz_poly* diff = nullptr;
  REQUIRE(bz_poly_sub(ctx, h, e, &diff) == BZ_OK);
  const char* text = nullptr;
  CHECK(bz_poly_to_string(ctx, diff, &text) == BZ_OK);
  CHECK(std::string(text) == "0");
  CHECK(bz_poly_substitute(ctx, f, 7, g, &h) != BZ_OK);
  bz_poly* q = nullptr;
  CHECK(bz_poly_parse(ctx, "x", "x,y,z", 101, &q) == BZ_OK);
  bz_poly* mixed = nullptr;
  CHECK(bz_poly_add(ctx, f, q, &mixed) == BZ_E_MISMATCH);
  CHECK(bz_poly_parse(ctx, "x+", "x", 0, &mixed) == BZ_E_PARSE);
  for (auto* p : {f, g, h, e, diff, q}) bz_poly_free(p);
  bz_context_free(ctx);
}
