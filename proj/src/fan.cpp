#include "bezout/fan.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "bezout/rng.hpp"

namespace bezout {

namespace {

IntVec unit(int n, int i, std::int64_t sign = 1) {
  IntVec v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = sign;
  return v;
}

IntVec all_minus(int n) { return IntVec(static_cast<std::size_t>(n), -1); }

IntVec minus_e1e2(int n) {
  IntVec v(static_cast<std::size_t>(n), 0);
  v[0] = v[1] = -1;
  return v;
}

// Cones of the refined third-species fan, as triples of indices into truncated_normals().
constexpr std::array<std::array<int, 3>, 22> kRefinedCones{{
    {0, 1, 2},  {0, 1, 5},  {0, 2, 4},  {0, 4, 8},  {0, 5, 8},  {1, 2, 3},  {1, 3, 7},  {1, 5, 7},
    {2, 3, 6},  {2, 4, 6},  {3, 6, 10}, {3, 7, 10}, {4, 6, 11}, {4, 8, 11}, {5, 7, 12}, {5, 8, 12},
    {6, 9, 10}, {6, 9, 11}, {7, 9, 10}, {7, 9, 12}, {8, 9, 11}, {8, 9, 12},
}};

struct SecondLabel {
  int family;  // 1..9 following the vertex classes
  int i = -1;  // zero-based
  int j = -1;
};

std::vector<SecondLabel> second_labels(int n) {
  std::vector<SecondLabel> out{{1}, {2}, {3}};
  for (int i = 0; i < n; ++i) out.push_back({4, i});
  for (int i = 2; i < n; ++i) out.push_back({5, i});
  for (int i = 2; i < n; ++i) out.push_back({6, i});
  for (int i = 2; i < n; ++i) out.push_back({7, i});
  for (int i = 2; i < n; ++i) out.push_back({8, i});
  for (int i = 2; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i) out.push_back({9, i, j});
  return out;
}

Cone second_cone(int n, const SecondLabel& l) {
  Cone c;
  auto tail = [&](int skip) {
    for (int k = 2; k < n; ++k)
      if (k != skip) c.generators.push_back(unit(n, k));
  };
  switch (l.family) {
    case 1:
      for (int k = 0; k < n; ++k) c.generators.push_back(unit(n, k));
      break;
    case 2:
      c.generators = {unit(n, 0, -1), minus_e1e2(n)};
      tail(-1);
      break;
    case 3:
      c.generators = {unit(n, 1, -1), minus_e1e2(n)};
      tail(-1);
      break;
    case 4:
      for (int k = 0; k < n; ++k)
        if (k != l.i) c.generators.push_back(unit(n, k));
      c.generators.push_back(unit(n, l.i, -1));
      break;
    case 5:
      tail(l.i);
      c.generators.push_back(unit(n, 0, -1));
      c.generators.push_back(minus_e1e2(n));
      c.generators.push_back(all_minus(n));
      break;
    case 6:
      tail(l.i);
      c.generators.push_back(unit(n, 1, -1));
      c.generators.push_back(minus_e1e2(n));
      c.generators.push_back(all_minus(n));
      break;
    case 7:
      tail(l.i);
      c.generators.push_back(unit(n, 0, -1));
      c.generators.push_back(unit(n, 1));
      c.generators.push_back(all_minus(n));
      break;
    case 8:
      tail(l.i);
      c.generators.push_back(unit(n, 1, -1));
      c.generators.push_back(unit(n, 0));
      c.generators.push_back(all_minus(n));
      break;
    case 9:
      for (int k = 0; k < n; ++k)
        if (k != l.i && k != l.j) c.generators.push_back(unit(n, k));
      c.generators.push_back(unit(n, l.i, -1));
      c.generators.push_back(all_minus(n));
      break;
  }
  return c;
}

std::string label_name(const SecondLabel& l) {
  static const char* names[] = {"", "positive", "minus_e1", "minus_e2", "minus_ei", "e1_b_t", "e2_b_t",
                                "e1_t",     "e2_t",     "ei_t"};
  std::string s = names[l.family];
  if (l.i >= 0) s += ":" + std::to_string(l.i + 1);
  if (l.j >= 0) s += "," + std::to_string(l.j + 1);
  return s;
}

MultiIndex second_vertex(const SpeciesSpec& spec, const SecondLabel& l) {
  std::size_t n = static_cast<std::size_t>(spec.n);
  MultiIndex u(n);
  int t = static_cast<int>(spec.t);
  int b = static_cast<int>(spec.b[0]);
  auto a = [&](int i) { return static_cast<int>(spec.a[static_cast<std::size_t>(i)]); };
  switch (l.family) {
    case 1:
      break;
    case 2:
      u[0] = a(0);
      u[1] = b - a(0);
      break;
    case 3:
      u[0] = b - a(1);
      u[1] = a(1);
      break;
    case 4:
      u[l.i] = a(l.i);
      break;
    case 5:
      u[0] = a(0);
      u[1] = b - a(0);
      u[l.i] = t - b;
      break;
    case 6:
      u[0] = b - a(1);
      u[1] = a(1);
      u[l.i] = t - b;
      break;
    case 7:
      u[0] = a(0);
      u[l.i] = t - a(0);
      break;
    case 8:
      u[1] = a(1);
      u[l.i] = t - a(1);
      break;
    case 9:
      u[l.i] = a(l.i);
      u[l.j] = t - a(l.i);
      break;
  }
  return u;
}

bool same_generator_set(const Cone& x, const Cone& y) {
  if (x.generators.size() != y.generators.size()) return false;
  std::set<IntVec> a(x.generators.begin(), x.generators.end());
  std::set<IntVec> b(y.generators.begin(), y.generators.end());
  return a == b;
}

// Solves <u, g_k> = -h_k for a unimodular 3x3 generator matrix.
IntVec tight_vertex(const std::array<IntVec, 3>& g, const std::array<std::int64_t, 3>& rhs) {
  std::int64_t m[3][3];
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = g[r][c];
  auto cof = [&](int r, int c) {
    int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
    return m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
  };
  std::int64_t det = m[0][0] * cof(0, 0) + m[0][1] * cof(0, 1) + m[0][2] * cof(0, 2);
  if (det == 0) fail(Errc::internal, "singular cone");
  IntVec u(3);
  for (int c = 0; c < 3; ++c) {
    std::int64_t s = 0;
    for (int r = 0; r < 3; ++r) s += cof(r, c) * rhs[r];
    if (s % det != 0) fail(Errc::internal, "cone is not unimodular");
    u[c] = s / det;
  }
  return u;
}

}  // namespace

std::vector<IntVec> truncated_normals() {
  return {
      {1, 0, 0},   {0, 1, 0},   {0, 0, 1},   {-1, 0, 0},  {0, -1, 0},  {0, 0, -1},  {-1, -1, 0},
      {-1, 0, -1}, {0, -1, -1}, {-1, -1, -1}, {-2, -1, -1}, {-1, -2, -1}, {-1, -1, -2},
  };
}

std::vector<std::int64_t> truncated_constants(const SpeciesSpec& spec) {
  if (spec.kind != SpeciesKind::truncated) fail(Errc::mismatch, "truncated spec expected");
  const auto& a = spec.a;
  const auto& b = spec.b;
  const auto& s = spec.s;
  return {0, 0, 0, a[0], a[1], a[2], b[2], b[1], b[0], spec.t, s[0], s[1], s[2]};
}

std::int64_t pairing(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size()) fail(Errc::mismatch, "pairing of vectors with different lengths");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

Fan build_fan(FanKind kind, int n) {
  Fan f;
  f.kind = kind;
  f.n = n;
  if (kind == FanKind::second_species) {
    if (n < 2) fail(Errc::invalid_argument, "second-species fan needs n >= 2");
    for (auto& l : second_labels(n)) {
      f.cones.push_back(second_cone(n, l));
      f.families.push_back(label_name(l));
    }
    return f;
  }
  if (n != 3) fail(Errc::invalid_argument, "the subdivided fan is defined for n = 3");
  auto normals = truncated_normals();
  for (auto& tri : kRefinedCones) {
    Cone c;
    std::string fam = "refined:";
    for (int k = 0; k < 3; ++k) {
      c.generators.push_back(normals[static_cast<std::size_t>(tri[k])]);
      fam += (k ? "," : "") + std::to_string(tri[k] + 1);
    }
    f.cones.push_back(c);
    f.families.push_back(fam);
  }
  return f;
}

std::optional<std::size_t> find_cone(const Fan& fan, const Cone& cone) {
  for (std::size_t i = 0; i < fan.cones.size(); ++i)
    if (same_generator_set(fan.cones[i], cone)) return i;
  return std::nullopt;
}

MultiIndex vertex_correspondence(const SpeciesSpec& spec, const Cone& cone) {
  spec.check_shape();
  if (spec.kind == SpeciesKind::second) {
    auto labels = second_labels(spec.n);
    for (auto& l : labels)
      if (same_generator_set(second_cone(spec.n, l), cone)) return second_vertex(spec, l);
    fail(Errc::invalid_argument, "cone is not a maximal cone of the second-species fan");
  }
  if (spec.kind == SpeciesKind::third || spec.kind == SpeciesKind::truncated) {
    SpeciesSpec tr = closure_spec(spec);
    auto h = truncated_constants(tr);
    auto normals = truncated_normals();
    Fan fan = build_fan(FanKind::third_subdivided, 3);
    auto idx = find_cone(fan, cone);
    if (!idx) fail(Errc::invalid_argument, "cone is not a maximal cone of the subdivided fan");
    std::array<IntVec, 3> g;
    std::array<std::int64_t, 3> rhs{};
    for (int k = 0; k < 3; ++k) {
      auto ray = static_cast<std::size_t>(kRefinedCones[*idx][static_cast<std::size_t>(k)]);
      g[static_cast<std::size_t>(k)] = normals[ray];
      rhs[static_cast<std::size_t>(k)] = -h[ray];
    }
    IntVec u = tight_vertex(g, rhs);
    return MultiIndex({static_cast<int>(u[0]), static_cast<int>(u[1]), static_cast<int>(u[2])});
  }
  fail(Errc::mismatch, "vertex correspondence needs a second, third or truncated spec");
}

std::vector<IntVec> all_cone_vertices(const SpeciesSpec& spec) {
  Fan fan = build_fan(spec.kind == SpeciesKind::second ? FanKind::second_species : FanKind::third_subdivided, spec.n);
  std::vector<IntVec> out;
  for (auto& c : fan.cones) {
    MultiIndex u = vertex_correspondence(spec, c);
    out.emplace_back(u.exponents().begin(), u.exponents().end());
  }
  return out;
}

bool fan_refines(const Fan& fine, const Fan& coarse, std::vector<std::size_t>* owner) {
  if (fine.n != coarse.n) fail(Errc::mismatch, "fans live in different dimensions");
  std::size_t n = static_cast<std::size_t>(fine.n);
  if (owner) owner->assign(fine.cones.size(), SIZE_MAX);
  // g lies in cone(C) iff the coefficients of g in the basis C are all non-negative.
  auto inside = [&](const Cone& c, const IntVec& g) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) m[r][k] = static_cast<long>(c.generators[k][r]);
      m[r][n] = static_cast<long>(g[r]);
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t p = col;
      while (p < n && sgn(m[p][col]) == 0) ++p;
      if (p == n) return false;
      std::swap(m[p], m[col]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || sgn(m[r][col]) == 0) continue;
        Rational f = m[r][col] / m[col][col];
        for (std::size_t k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
      }
    }
    for (std::size_t r = 0; r < n; ++r)
      if (sgn(m[r][n] / m[r][r]) < 0) return false;
    return true;
  };
  bool all = true;
  for (std::size_t i = 0; i < fine.cones.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < coarse.cones.size() && !found; ++j) {
      bool ok = true;
      for (auto& g : fine.cones[i].generators)
        if (!inside(coarse.cones[j], g)) {
          ok = false;
          break;
        }
      if (ok) {
        found = true;
        if (owner) (*owner)[i] = j;
      }
    }
    all = all && found;
  }
  return all;
}

bool certify_vertex(const std::vector<MultiIndex>& support, const Cone& cone, const MultiIndex& u) {
  IntVec w(u.size(), 0);
  for (auto& g : cone.generators)
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += g[i];
  bool found = false;
  for (auto& x : support) {
    if (x == u) {
      found = true;
      continue;
    }
    std::int64_t s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += (x[i] - u[i]) * w[i];
    if (s <= 0) return false;
  }
  return found;
}

SectionsReport sections_check(const SpeciesSpec& spec, std::uint64_t seed, std::size_t samples) {
  if (spec.kind != SpeciesKind::second && spec.kind != SpeciesKind::truncated && spec.kind != SpeciesKind::third)
    fail(Errc::mismatch, "sections check needs a second, third or truncated spec");
  SectionsReport rep;
  Fan fan = build_fan(spec.kind == SpeciesKind::second ? FanKind::second_species : FanKind::third_subdivided, spec.n);
  rep.cones = fan.cones.size();
  std::vector<IntVec> us;
  for (auto& c : fan.cones) {
    MultiIndex u = vertex_correspondence(spec, c);
    us.emplace_back(u.exponents().begin(), u.exponents().end());
  }
  auto support = enumerate_support(spec);
  rep.support_points = support.size();
  std::set<IntVec> supp_set;
  for (auto& k : support) supp_set.emplace(k.exponents().begin(), k.exponents().end());
  rep.vertices_in_support = true;
  for (std::size_t c = 0; c < us.size(); ++c)
    if (!supp_set.count(us[c])) {
      rep.vertices_in_support = false;
      if (rep.details.size() < 8) rep.details.push_back("u(sigma) of cone " + fan.families[c] + " is not a support point");
    }
  for (std::size_t c = 0; c < us.size(); ++c) {
    if (certify_vertex(support, fan.cones[c], vertex_correspondence(spec, fan.cones[c]))) {
      ++rep.vertices_certified;
    } else if (rep.details.size() < 8) {
      rep.details.push_back("u(sigma) of cone " + fan.families[c] + " is not certified as a vertex");
    }
  }
  auto excluded_by = [&](const IntVec& u) -> std::optional<std::size_t> {
    for (std::size_t c = 0; c < fan.cones.size(); ++c)
      for (auto& g : fan.cones[c].generators) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < u.size(); ++i) s += (u[i] - us[c][i]) * g[i];
        if (s < 0) return c;
      }
    return std::nullopt;
  };
  for (auto& k : support) {
    IntVec u(k.exponents().begin(), k.exponents().end());
    if (auto c = excluded_by(u)) {
      ++rep.violations;
      if (rep.details.size() < 8)
        rep.details.push_back("support point " + to_string(k) + " fails the pairing on cone " + fan.families[*c]);
    }
  }
  // Exterior lattice points in the bounding box inflated by 2.
  std::size_t n = static_cast<std::size_t>(spec.n);
  IntVec hi(n, 0);
  for (auto& k : support)
    for (std::size_t i = 0; i < n; ++i) hi[i] = std::max<std::int64_t>(hi[i], k[i]);
  std::vector<IntVec> exterior;
  IntVec cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (!supp_set.count(cur)) exterior.push_back(cur);
      return;
    }
    for (std::int64_t v = -2; v <= hi[i] + 2; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  Rng rng(derive_seed(seed, 0x5ec7));
  if (exterior.size() > samples) {
    rng.shuffle(exterior);
    exterior.resize(samples);
    std::sort(exterior.begin(), exterior.end());
  }
  rep.exterior_sampled = exterior.size();
  for (auto& u : exterior) {
    if (excluded_by(u)) {
      ++rep.exterior_certified;
    } else if (rep.details.size() < 8) {
      MultiIndex m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(u[i]);
      rep.details.push_back("exterior point " + to_string(m) + " is not excluded by any cone");
    }
  }
  rep.pass = rep.violations == 0 && rep.vertices_in_support && rep.exterior_certified == rep.exterior_sampled;
  return rep;
}

}  // namespace bezout
