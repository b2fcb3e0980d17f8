#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bezout/bezout.h"

namespace {

struct Common {
  std::uint64_t seed = 1;
  std::uint64_t prime = (std::uint64_t{1} << 61) - 1;
  int margin_cap = 6;
  int seeds = 3;
  std::string format = "json";
  std::string out;
};

struct Args {
  std::string spec, sys, base, target, var, method, mm, samples;
};

int usage_error(const std::string& msg) {
  std::cout << "{\n  \"error\": {\n    \"code\": \"invalid_argument\",\n    \"message\": \"";
  for (char c : msg) {
    if (c == '"' || c == '\\') std::cout << '\\';
    if (c == '\n') {
      std::cout << "\\n";
      continue;
    }
    std::cout << c;
  }
  std::cout << "\"\n  }\n}\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  Common common;
  if (const char* env = std::getenv("BEZOUT_SEED")) {
    try {
      common.seed = std::stoull(env);
    } catch (const std::exception&) {
      return usage_error("BEZOUT_SEED is not an unsigned integer");
    }
  }

  CLI::App app{"Eliminand degree bounds, support polytopes and sum-equation checks"};
  app.require_subcommand(1);
  app.add_option("--seed", common.seed, "Random seed (default BEZOUT_SEED or 1)");
  app.add_option("--prime", common.prime, "Prime modulus below 2^63");
  app.add_option("--margin-cap", common.margin_cap, "Growth steps of the stabilization loop");
  app.add_option("--seeds", common.seeds, "Independent random replicas");
  app.add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", common.out, "Write the report to this file");
  app.fallthrough();

  Args args;
  std::vector<std::string> demo_name;
  auto add = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto spec_opt = [&](CLI::App* c) { c->add_option("--spec", args.spec, "Spec JSON, inline or a file path")->required(); };
  auto sys_opt = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--sys", args.sys, "System JSON, inline or a file path");
    if (required) o->required();
  };

  spec_opt(add("validate", "Check the restrictive conditions of a spec"));
  spec_opt(add("count", "Closed-form count against enumeration"));
  spec_opt(add("vertices", "Vertices of the support polytope"));
  spec_opt(add("classify", "Third-species form from the H signs"));
  auto* degree = add("degree", "Degree bound of a square system");
  sys_opt(degree, true);
  degree->add_option("--method", args.method, "closed, difference, cokernel or all");
  degree->add_option("--base", args.base, "Base parameters for the difference");
  auto* diff = add("diff", "Iterated finite difference of the counting function");
  sys_opt(diff, true);
  diff->add_option("--base", args.base, "Evaluation point");
  auto* elim = add("eliminate", "Minimal univariate element of the sum-equation image");
  sys_opt(elim, true);
  elim->add_option("--var", args.var, "Variable name or index");
  elim->add_option("--mm", args.mm, "MatrixMarket dump of the final map");
  auto* stmt = add("statement", "Kernel first-coordinate membership check");
  sys_opt(stmt, true);
  stmt->add_option("--target", args.target, "Target parameters");
  auto* kz = add("koszul", "Koszul complex exactness");
  sys_opt(kz, true);
  kz->add_option("--base", args.base, "Base spec of the complex");
  kz->add_option("--target", args.target, "Target of the first-species resolution");
  kz->add_option("--method", args.method, "complex or resolution");
  auto* fan = add("fan-check", "Normal fan and section inequalities");
  spec_opt(fan);
  fan->add_option("--samples", args.samples, "Exterior lattice points to sample");
  auto* demo = add("demo", "Built-in demonstrations");
  demo->add_option("name", demo_name, "superfluous or sylvester3q")->required();
  sys_opt(demo, false);
  for (auto* c : app.get_subcommands({})) c->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  std::unique_ptr<bz_context, decltype(&bz_context_free)> ctx(bz_context_new(), bz_context_free);
  if (!ctx) return usage_error("cannot allocate context");
  auto check = [&](bz_status s) {
    if (s != BZ_OK) throw std::runtime_error(bz_last_error(ctx.get()));
  };
  try {
    check(bz_context_set_seed(ctx.get(), common.seed));
    check(bz_context_set_prime(ctx.get(), common.prime));
    check(bz_context_set_margin_cap(ctx.get(), common.margin_cap));
    check(bz_context_set_seeds(ctx.get(), common.seeds));
    check(bz_context_set_format(ctx.get(), common.format.c_str()));
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }

  std::string name = app.get_subcommands().front()->get_name();
  std::vector<const char*> keys, values, pos;
  auto put = [&](const char* k, const std::string& v) {
    if (v.empty()) return;
    keys.push_back(k);
    values.push_back(v.c_str());
  };
  put("spec", args.spec);
  put("sys", args.sys);
  put("base", args.base);
  put("target", args.target);
  put("var", args.var);
  put("method", args.method);
  put("mm", args.mm);
  put("samples", args.samples);
  for (auto& d : demo_name) pos.push_back(d.c_str());

  bz_report* rep = nullptr;
  bz_status st = bz_run(ctx.get(), name.c_str(), pos.data(), pos.size(), keys.data(), values.data(), keys.size(), &rep);
  if (st != BZ_OK) return usage_error(bz_last_error(ctx.get()));
  std::unique_ptr<bz_report, decltype(&bz_report_free)> guard(rep, bz_report_free);
  if (!common.out.empty()) {
    std::ofstream f(common.out);
    if (!f) return usage_error("cannot write '" + common.out + "'");
    f << bz_report_text(rep);
  } else {
    std::cout << bz_report_text(rep);
  }
  return bz_report_exit_code(rep);
}
