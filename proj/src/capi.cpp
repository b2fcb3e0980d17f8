#include "bezout/bezout.h"

#include <new>
#include <sstream>
#include <string>

#include "bezout/commands.hpp"
#include "bezout/degree.hpp"
#include "bezout/json_io.hpp"
#include "bezout/species.hpp"

struct bz_context {
  bezout::CommandRequest defaults;
  std::string last_error;
};

struct bz_report {
  bezout::CommandResult result;
};

struct bz_spec {
  bezout::SpeciesSpec spec;
};

struct bz_poly {
  bezout::Polynomial poly;
  std::vector<std::string> names;
  mutable std::string text;
};

namespace {

bz_status status_of(bezout::Errc e) {
  using bezout::Errc;
  switch (e) {
    case Errc::invalid_argument: return BZ_E_INVALID_ARGUMENT;
    case Errc::mismatch: return BZ_E_MISMATCH;
    case Errc::out_of_range: return BZ_E_OUT_OF_RANGE;
    case Errc::invalid_spec: return BZ_E_INVALID_SPEC;
    case Errc::size_cap: return BZ_E_SIZE_CAP;
    case Errc::out_of_domain: return BZ_E_OUT_OF_DOMAIN;
    case Errc::math_failure: return BZ_E_MATH_FAILURE;
    case Errc::parse_error: return BZ_E_PARSE;
    case Errc::internal: return BZ_E_INTERNAL;
  }
  return BZ_E_INTERNAL;
}

template <class F>
bz_status guarded(bz_context* ctx, F&& f) {
  if (!ctx) return BZ_E_NULL;
  ctx->last_error.clear();
  try {
    f();
    return BZ_OK;
  } catch (const bezout::Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return BZ_E_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return BZ_E_INTERNAL;
  }
}

std::vector<std::string> split_names(const char* names) {
  std::vector<std::string> out;
  std::string cur;
  for (const char* p = names; *p; ++p) {
    if (*p == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (*p != ' ') {
      cur += *p;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

template <class Op>
bz_status binary(bz_context* ctx, const bz_poly* f, const bz_poly* g, bz_poly** out, Op op) {
  if (!f || !g || !out) return ctx ? (ctx->last_error = "null argument", BZ_E_NULL) : BZ_E_NULL;
  return guarded(ctx, [&] { *out = new bz_poly{op(f->poly, g->poly), f->names, {}}; });
}

}  // namespace

extern "C" {

const char* bz_version(void) { return "1.0.0"; }

const char* bz_status_name(bz_status s) {
  switch (s) {
    case BZ_OK: return "ok";
    case BZ_E_INVALID_ARGUMENT: return "invalid_argument";
    case BZ_E_MISMATCH: return "mismatch";
    case BZ_E_OUT_OF_RANGE: return "out_of_range";
    case BZ_E_INVALID_SPEC: return "invalid_spec";
    case BZ_E_SIZE_CAP: return "size_cap";
    case BZ_E_OUT_OF_DOMAIN: return "out_of_domain";
    case BZ_E_MATH_FAILURE: return "math_failure";
    case BZ_E_PARSE: return "parse_error";
    case BZ_E_INTERNAL: return "internal";
    case BZ_E_NULL: return "null_argument";
  }
  return "unknown";
}

bz_context* bz_context_new(void) { return new (std::nothrow) bz_context{}; }
void bz_context_free(bz_context* ctx) { delete ctx; }

bz_status bz_context_set_seed(bz_context* ctx, uint64_t seed) {
  if (!ctx) return BZ_E_NULL;
  if (seed == 0) {
    ctx->last_error = "seed must be positive";
    return BZ_E_INVALID_ARGUMENT;
  }
  ctx->defaults.seed = seed;
  return BZ_OK;
}

bz_status bz_context_set_prime(bz_context* ctx, uint64_t p) {
  if (!ctx) return BZ_E_NULL;
  if (p >= (uint64_t{1} << 63) || !bezout::is_prime_u64(p)) {
    ctx->last_error = "modulus must be a prime below 2^63";
    return BZ_E_INVALID_ARGUMENT;
  }
  ctx->defaults.prime = p;
  return BZ_OK;
}

bz_status bz_context_set_margin_cap(bz_context* ctx, int cap) {
  if (!ctx) return BZ_E_NULL;
  if (cap < 1) {
    ctx->last_error = "margin cap must be positive";
    return BZ_E_INVALID_ARGUMENT;
  }
  ctx->defaults.margin_cap = cap;
  return BZ_OK;
}

bz_status bz_context_set_seeds(bz_context* ctx, int seeds) {
  if (!ctx) return BZ_E_NULL;
  if (seeds < 1) {
    ctx->last_error = "seed count must be positive";
    return BZ_E_INVALID_ARGUMENT;
  }
  ctx->defaults.seeds = seeds;
  return BZ_OK;
}

bz_status bz_context_set_format(bz_context* ctx, const char* format) {
  if (!ctx) return BZ_E_NULL;
  if (!format) return BZ_E_NULL;
  std::string f = format;
  if (f != "json" && f != "text") {
    ctx->last_error = "format must be json or text";
    return BZ_E_INVALID_ARGUMENT;
  }
  ctx->defaults.format = f;
  return BZ_OK;
}

const char* bz_last_error(const bz_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

bz_status bz_run(bz_context* ctx, const char* subcommand, const char* const* positional, size_t npositional,
                 const char* const* keys, const char* const* values, size_t noptions, bz_report** out) {
  if (!ctx) return BZ_E_NULL;
  if (!subcommand || !out || (npositional && !positional) || (noptions && (!keys || !values))) {
    ctx->last_error = "null argument";
    return BZ_E_NULL;
  }
  return guarded(ctx, [&] {
    bezout::CommandRequest req = ctx->defaults;
    req.subcommand = subcommand;
    for (size_t i = 0; i < npositional; ++i) req.positional.emplace_back(positional[i] ? positional[i] : "");
    for (size_t i = 0; i < noptions; ++i)
      if (keys[i] && values[i]) req.options[keys[i]] = values[i];
    *out = new bz_report{bezout::run_command(req)};
  });
}

int bz_report_exit_code(const bz_report* r) { return r ? r->result.exit_code : 2; }
const char* bz_report_text(const bz_report* r) { return r ? r->result.output.c_str() : ""; }
void bz_report_free(bz_report* r) { delete r; }

bz_status bz_spec_parse(bz_context* ctx, const char* json, bz_spec** out) {
  if (!json || !out) return ctx ? (ctx->last_error = "null argument", BZ_E_NULL) : BZ_E_NULL;
  return guarded(ctx, [&] { *out = new bz_spec{bezout::spec_from_json(bezout::parse_json(json))}; });
}

void bz_spec_free(bz_spec* s) { delete s; }

bz_status bz_spec_validate(bz_context* ctx, const bz_spec* s, int* valid) {
  if (!s || !valid) return ctx ? (ctx->last_error = "null argument", BZ_E_NULL) : BZ_E_NULL;
  return guarded(ctx, [&] {
    auto v = bezout::validate_spec(s->spec);
    *valid = v.valid ? 1 : 0;
    if (!v.valid && !v.violations.empty()) ctx->last_error = v.violations.front();
  });
}

bz_status bz_spec_count(bz_context* ctx, const bz_spec* s, int64_t* closed, int64_t* enumerated) {
  if (!s || !closed || !enumerated) return ctx ? (ctx->last_error = "null argument", BZ_E_NULL) : BZ_E_NULL;
  return guarded(ctx, [&] {
    *closed = bezout::count_closed_form(s->spec);
    *enumerated = bezout::count_enumerated(s->spec);
  });
}

bz_status bz_degree(bz_context* ctx, const char* system_json, int64_t* degree) {
  if (!system_json || !degree) return ctx ? (ctx->last_error = "null argument", BZ_E_NULL) : BZ_E_NULL;
  return guarded(ctx, [&] {
    auto in = bezout::system_from_json(bezout::parse_json(system_json));
    if (!in.specs) bezout::fail(bezout::Errc::invalid_argument, "system needs specs");
    *degree = bezout::degree_bound(*in.specs).D;
  });
}

bz_status bz_poly_parse(bz_context* ctx, const char* text, const char* names, uint64_t p, bz_poly** out) {
  if (!text || !names || !out) return ctx ? (ctx->last_error = "null argument", BZ_E_NULL) : BZ_E_NULL;
  return guarded(ctx, [&] {
    auto vars = split_names(names);
    if (vars.empty()) bezout::fail(bezout::Errc::invalid_argument, "no variable names");
    bezout::Field f = p == 0 ? bezout::Field::rationals() : bezout::Field::prime(p);
    *out = new bz_poly{bezout::parse_polynomial(text, vars, f), vars, {}};
  });
}

void bz_poly_free(bz_poly* f) { delete f; }

bz_status bz_poly_add(bz_context* ctx, const bz_poly* f, const bz_poly* g, bz_poly** out) {
  return binary(ctx, f, g, out, [](auto& a, auto& b) { return a + b; });
}
bz_status bz_poly_sub(bz_context* ctx, const bz_poly* f, const bz_poly* g, bz_poly** out) {
  return binary(ctx, f, g, out, [](auto& a, auto& b) { return a - b; });
}
bz_status bz_poly_mul(bz_context* ctx, const bz_poly* f, const bz_poly* g, bz_poly** out) {
  return binary(ctx, f, g, out, [](auto& a, auto& b) { return a * b; });
}

bz_status bz_poly_substitute(bz_context* ctx, const bz_poly* f, size_t var, const bz_poly* g, bz_poly** out) {
  if (!f || !g || !out) return ctx ? (ctx->last_error = "null argument", BZ_E_NULL) : BZ_E_NULL;
  return guarded(ctx, [&] {
    if (var >= f->poly.nvars()) bezout::fail(bezout::Errc::invalid_argument, "variable index out of range");
    *out = new bz_poly{f->poly.substitute(var, g->poly), f->names, {}};
  });
}

bz_status bz_poly_random(bz_context* ctx, const bz_spec* s, uint64_t seed, bz_poly** out) {
  if (!s || !out) return ctx ? (ctx->last_error = "null argument", BZ_E_NULL) : BZ_E_NULL;
  return guarded(ctx, [&] {
    auto f = bezout::random_generic(s->spec, ctx->defaults.prime, seed);
    *out = new bz_poly{f, bezout::default_variable_names(f.nvars()), {}};
  });
}

bz_status bz_poly_to_string(bz_context* ctx, const bz_poly* f, const char** out) {
  if (!f || !out) return ctx ? (ctx->last_error = "null argument", BZ_E_NULL) : BZ_E_NULL;
  return guarded(ctx, [&] {
    f->text = bezout::to_text(f->poly, f->names);
    *out = f->text.c_str();
  });
}

}  // extern "C"
