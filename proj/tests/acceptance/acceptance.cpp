#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "bezout/degree.hpp"
#include "bezout/fan.hpp"
#include "bezout/findiff.hpp"
#include "bezout/koszul.hpp"
#include "bezout/species.hpp"
#include "bezout/sum_equation.hpp"

using namespace bezout;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && secs >= limit_s) out.fail("time limit exceeded");
  if (!out.ok) ++failures;
  std::printf("%s %2d %-28s %8.2fs / %.0fs%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs, limit_s,
              out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

SystemSpec sys_of(std::vector<SpeciesSpec> e) { return SystemSpec{std::move(e)}; }

std::string str(const SystemSpec& s) {
  std::string o;
  for (auto& e : s.equations) o += e.to_string() + " ";
  return o;
}

ElimConfig config(std::uint64_t seed) {
  ElimConfig cfg;
  cfg.seed = seed;
  cfg.seeds = 3;
  return cfg;
}

// Cokernel per seed must agree at the stabilized size.
bool seeds_agree(const CokernelTrace& tr) {
  if (tr.steps.empty()) return false;
  auto& last = tr.steps.back();
  if (last.per_seed.size() != 3) return false;
  for (auto v : last.per_seed)
    if (v != tr.coker) return false;
  return true;
}

void three_way(const SystemSpec& sys, std::uint64_t seed, Outcome& out, int& done) {
  auto closed = degree_bound(sys).D;
  auto diff = degree_via_difference(sys).D;
  auto tr = stabilized_cokernel(sys, config(seed));
  if (!tr.stabilized) out.fail("not stabilized: " + str(sys));
  else if (!seeds_agree(tr)) out.fail("seed disagreement: " + str(sys));
  else if (closed != diff || diff != tr.coker)
    out.fail(str(sys) + "closed " + std::to_string(closed) + " diff " + std::to_string(diff) + " coker " +
             std::to_string(tr.coker));
  ++done;
}

std::vector<SpeciesSpec> random_eqs(Rng& rng, int n, int r, std::int64_t bound) {
  std::vector<SpeciesSpec> eq;
  for (int k = 0; k < r; ++k) eq.push_back(oracle::random_second(rng, n, bound));
  return eq;
}

// Second spec whose polytope is full-dimensional, so a generic system has finitely many roots.
SpeciesSpec random_second_pos(Rng& rng, int n, std::int64_t bound) {
  for (;;) {
    auto s = oracle::random_second(rng, n, bound);
    if (s.t >= 1 && s.b[0] >= 1) {
      bool ok = true;
      for (auto v : s.a) ok = ok && v >= 1;
      if (ok) return s;
    }
  }
}

}  // namespace

int main() {
  std::printf("acceptance criteria\n");

  criterion(1, "superfluous-factor demo", 1, [](Outcome& out) {
    auto d = sequential_elim_demo();
    auto step = [&](const std::string& label) {
      for (auto& st : d.steps)
        if (st.label == label) return st.text;
      return std::string("missing");
    };
    if (step("eq4") != "4y^2+4xy-4x-4y=0") out.fail("eq4: " + step("eq4"));
    if (step("eq5") != "4y^2-4xy-4x+4y=0") out.fail("eq5: " + step("eq5"));
    if (step("factored") != "4y(y^2-1)=0") out.fail("final: " + step("factored"));
    auto polys = superfluous_demo_system();
    auto res = eliminand_extract(polys, 1, ElimConfig{});
    std::string e = res.eliminand ? to_text(*res.eliminand, {"x", "y", "z"}) : "none";
    if (e != "y^2-1") out.fail("eliminand " + e);
  });

  criterion(2, "counting oracle", 60, [](Outcome& out) {
    std::size_t n_specs = 0;
    for (int n = 2; n <= 4; ++n)
      for (auto& s : oracle::all_second(n, 5)) {
        ++n_specs;
        auto c = count_closed_form(s);
        if (c != count_enumerated(s) || c != oracle::count(s)) out.fail("mismatch at " + s.to_string());
      }
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
      auto th = oracle::random_third(rng, 8);
      auto s = i % 2 ? th : default_s(th);
      ++n_specs;
      auto c = count_closed_form(s);
      if (c != count_enumerated(s) || c != oracle::count(s)) out.fail("mismatch at " + s.to_string());
    }
    if (out.ok) out.detail = std::to_string(n_specs) + " specs";
  });

  criterion(3, "vertices and hull", 30, [](Outcome& out) {
    Rng rng(3);
    int done = 0;
    while (done < 100) {
      int n = static_cast<int>(rng.range(2, 4));
      auto s = oracle::random_second(rng, n, 8);
      auto vs = vertices(s);
      if (!vs.nondegenerate) continue;
      ++done;
      if (vs.points.size() != static_cast<std::size_t>(n * n + 2 * n - 3)) out.fail("vertex count at " + s.to_string());
      LatticeHull hull(vs.points);
      for (auto& p : enumerate_support(s))
        if (!hull.contains(p)) {
          out.fail("hull misses a point of " + s.to_string());
          break;
        }
    }
  });

  criterion(4, "difference = alternate sum", 30, [](Outcome& out) {
    Rng rng(4);
    const SpeciesKind kinds[] = {SpeciesKind::complete, SpeciesKind::first, SpeciesKind::second,
                                 SpeciesKind::truncated};
    auto draw = [&](SpeciesKind k, int n) {
      switch (k) {
        case SpeciesKind::complete: return SpeciesSpec::complete(n, rng.range(0, 3));
        case SpeciesKind::first:
          for (;;) {
            std::int64_t t = rng.range(0, 3);
            std::vector<std::int64_t> a(static_cast<std::size_t>(n));
            for (auto& v : a) v = rng.range(0, t);
            auto s = SpeciesSpec::first(t, a);
            if (is_valid(s)) return s;
          }
        case SpeciesKind::second: return oracle::random_second(rng, n, 3);
        default: return default_s(oracle::random_third(rng, 3));
      }
    };
    for (int i = 0; i < 500; ++i) {
      auto kind = kinds[i % 4];
      int n = kind == SpeciesKind::truncated ? 3 : static_cast<int>(rng.range(2, 3));
      int r = static_cast<int>(rng.range(1, 4));
      std::vector<ParamShift> shifts;
      SpeciesSpec x = draw(kind, n);
      for (int k = 0; k < r; ++k) {
        shifts.push_back(draw(kind, n));
        x = x + shifts.back();
      }
      auto P = CountFunction::counting(kind, n);
      auto a = delta_iterate(P, shifts)(x);
      auto b = alternate_sum(P, shifts)(x);
      if (!a || !b || *a != *b) out.fail("disagree at " + x.to_string());
    }
  });

  criterion(5, "degree three-way agreement", 600, [](Outcome& out) {
    int done = 0;
    auto two = oracle::all_second(2, 3);
    for (std::size_t i = 0; i < two.size(); ++i)
      for (std::size_t j = i; j < two.size(); ++j) three_way(sys_of({two[i], two[j]}), 11, out, done);
    auto three = oracle::all_second(3, 3);
    for (std::size_t i = 0; i < three.size(); ++i) {
      three_way(sys_of({three[i], three[i], three[i]}), 13, out, done);
      auto& b = three[(i + 1) % three.size()];
      auto& c = three[(i + 2) % three.size()];
      three_way(sys_of({three[i], b, c}), 17, out, done);
    }
    Rng rng(5);
    for (int k = 0; k < 20; ++k) {
      int n = k < 10 ? 2 : 3;
      auto eq = random_eqs(rng, n, n, n == 2 ? 6 : 4);
      three_way(sys_of(eq), rng.next(), out, done);
    }
    if (out.ok) out.detail = std::to_string(done) + " systems";
  });

  criterion(6, "specialization identities", 60, [](Outcome& out) {
    Rng rng(6);
    for (int i = 0; i < 30; ++i) {
      int n = static_cast<int>(rng.range(2, 4));
      std::vector<SpeciesSpec> eq;
      std::int64_t prod = 1;
      for (int k = 0; k < n; ++k) {
        std::int64_t t = rng.range(1, 4);
        prod *= t;
        eq.push_back(SpeciesSpec::first(t, std::vector<std::int64_t>(static_cast<std::size_t>(n), t)));
      }
      if (degree_bound(sys_of(eq)).D != prod) out.fail("First a=t: " + str(sys_of(eq)));
    }
    auto pair = sys_of({SpeciesSpec::first(3, {2, 3}), SpeciesSpec::first(2, {1, 2})});
    if (degree_bound(pair).D != 5) out.fail("First pair D != 5");
    auto s = SpeciesSpec::second(3, {2, 2, 2}, 3);
    if (degree_bound(sys_of({s, s, s})).D != 24) out.fail("Second triple D != 24");
    auto th = SpeciesSpec::third(2, {1, 1, 1}, {2, 2, 2});
    auto sec = SpeciesSpec::second(2, {1, 1, 1}, 2);
    auto dt = degree_bound(sys_of({th, th, th})).D;
    if (dt != 5) out.fail("Third triple D = " + std::to_string(dt));
    if (oracle::points(th) != oracle::points(sec)) out.fail("Third and Second supports differ");
    if (degree_bound(sys_of({sec, sec, sec})).D != dt) out.fail("Second value on the same support differs");
  });

  criterion(7, "Koszul exactness", 600, [](Outcome& out) {
    Rng rng(7);
    int square = 0, other = 0;
    for (int k = 0; k < 16; ++k) {
      int n = static_cast<int>(rng.range(2, 3));
      int r = k < 10 ? n : static_cast<int>(rng.range(1, n - 1));
      std::vector<SpeciesSpec> eq;
      for (int i = 0; i < r; ++i) eq.push_back(random_second_pos(rng, n, 3));
      auto sys = sys_of(eq);
      auto rep = exactness_stabilized(sys, std::nullopt, config(rng.next()));
      if (!rep.d_squared_zero) out.fail("d o d != 0: " + str(sys));
      for (auto& p : rep.positions)
        if (p.defect != 0) out.fail("defect: " + str(sys));
      if (r == n) {
        ++square;
        auto D = degree_bound(sys).D;
        if (rep.coker != D) out.fail("coker " + std::to_string(rep.coker) + " != D " + std::to_string(D));
      } else {
        ++other;
      }
    }
    if (out.ok) out.detail = std::to_string(square) + " square, " + std::to_string(other) + " underdetermined";
  });

  criterion(8, "statement check", 600, [](Outcome& out) {
    Rng rng(8);
    std::int64_t checked = 0;
    for (int k = 0; k < 20; ++k) {
      int r = k % 2 ? 3 : 2;
      int n = static_cast<int>(rng.range(r, 3));
      auto sys = sys_of(random_eqs(rng, n, r, 3));
      for (auto& rep : statement_check_generic(sys, std::nullopt, config(rng.next()))) {
        checked += rep.checked;
        if (!rep.pass) out.fail("statement fails: " + str(sys));
      }
    }
    if (out.ok) out.detail = std::to_string(checked) + " kernel elements";
  });

  criterion(9, "first-species resolution", 300, [](Outcome& out) {
    Rng rng(9);
    int done = 0;
    while (done < 10) {
      std::vector<SpeciesSpec> eq;
      for (int i = 0; i < 3; ++i)
        for (;;) {
          std::int64_t t = rng.range(1, 3);
          std::vector<std::int64_t> a(3);
          for (auto& v : a) v = rng.range(1, t);
          auto s = SpeciesSpec::first(t, a);
          if (is_valid(s)) {
            eq.push_back(s);
            break;
          }
        }
      auto sys = sys_of(eq);
      auto target = sys.sum() + base_spec(sys);
      if (!resolution_target_ok(sys, target)) continue;
      ++done;
      // Variable j of equation i carries exponent at most a_i^{(j)}.
      std::int64_t want = eq[0].t * eq[1].t * eq[2].t;
      for (std::size_t j = 0; j < 3; ++j) {
        std::int64_t p = 1;
        for (auto& e : eq) p *= e.t - e.a[j];
        want -= p;
      }
      auto rep = first_species_resolution_check(sys, target, config(rng.next()));
      for (auto& p : rep.positions)
        if (p.defect != 0) out.fail("defect: " + str(sys));
      if (!rep.pass || rep.coker != want)
        out.fail(str(sys) + "coker " + std::to_string(rep.coker) + " want " + std::to_string(want));
    }
  });

  criterion(10, "fan and section checks", 120, [](Outcome& out) {
    std::size_t n_specs = 0;
    std::vector<Fan> fans;
    for (int n = 0; n <= 4; ++n) fans.push_back(n < 2 ? Fan{} : build_fan(FanKind::second_species, n));
    for (int n = 2; n <= 4; ++n)
      for (auto& s : oracle::all_second(n, 6)) {
        ++n_specs;
        auto rep = sections_check(s, 1, 20);
        if (!rep.pass) {
          out.fail("sections_check at " + s.to_string());
          continue;
        }
        auto vs = vertices(s);
        std::set<MultiIndex, GrlexLess> vset(vs.points.begin(), vs.points.end());
        for (auto& c : fans[static_cast<std::size_t>(n)].cones)
          if (!vset.count(vertex_correspondence(s, c))) out.fail("u(sigma) not a vertex at " + s.to_string());
        if (rep.vertices_certified != rep.cones) out.fail("uncertified vertex at " + s.to_string());
      }
    if (out.ok) out.detail = std::to_string(n_specs) + " specs";
  });

  criterion(11, "three quadrics", 60, [](Outcome& out) {
    const std::uint64_t p = kMersenne61;
    for (std::uint64_t seed : {1u, 2u, 3u})
      for (std::uint64_t i = 0; i < 20; ++i) {
        auto z = quadrics_through_point(p, derive_seed(seed, i));
        if (!sylvester_three_quadrics(z[0], z[1], z[2]).is_zero()) out.fail("nonzero on a common zero");
        auto g = random_quadrics(p, derive_seed(seed, 1000 + i));
        if (sylvester_three_quadrics(g[0], g[1], g[2]).is_zero()) out.fail("zero on a random triple");
      }
  });

  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
