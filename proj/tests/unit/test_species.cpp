#include <doctest.h>

#include <algorithm>
#include <set>

#include "bezout/species.hpp"
#include "oracles.hpp"

using namespace bezout;

namespace {

using Pt = std::vector<std::int64_t>;

std::set<Pt> as_set(const std::vector<Pt>& v) { return {v.begin(), v.end()}; }

Pt to_pt(const MultiIndex& m) { return Pt(m.exponents().begin(), m.exponents().end()); }

// Point-in-polygon for a convex hull in the plane, from the gift-wrapped boundary.
bool planar_hull_contains(std::vector<Pt> pts, const Pt& q) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto cross = [](const Pt& o, const Pt& a, const Pt& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  if (pts.size() == 1) return pts[0] == q;
  std::vector<Pt> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2) {
    // Collinear: on the segment.
    if (cross(h[0], h[1], q) != 0) return false;
    return std::min(h[0][0], h[1][0]) <= q[0] && q[0] <= std::max(h[0][0], h[1][0]) &&
           std::min(h[0][1], h[1][1]) <= q[1] && q[1] <= std::max(h[0][1], h[1][1]);
  }
  for (std::size_t i = 0; i < h.size(); ++i)
    if (cross(h[i], h[(i + 1) % h.size()], q) < 0) return false;
  return true;
}

// Searches a small integer functional whose unique minimizer over pts is v.
bool exposed(const std::vector<Pt>& pts, const Pt& v) {
  bool found = false;
  oracle::for_box(static_cast<int>(v.size()), 8, [&](const Pt& w0) {
    if (found) return;
    Pt w(w0.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = w0[i] - 4;
    auto dot = [&](const Pt& p) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * w[i];
      return s;
    };
    std::int64_t dv = dot(v);
    for (auto& p : pts)
      if (p != v && dot(p) <= dv) return;
    found = true;
  });
  return found;
}

}  // namespace

TEST_CASE("validation examples") {
  CHECK(validate_spec(SpeciesSpec::second(2, {1, 1, 1}, 2)).valid);
  auto bad = validate_spec(SpeciesSpec::second(3, {1, 1, 3}, 3));
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].find("a1+a2 >= b") != std::string::npos);
  CHECK(validate_spec(SpeciesSpec::third(2, {1, 1, 1}, {2, 2, 2})).valid);
  auto eq = validate_spec(SpeciesSpec::first(2, {1, 1, 1}));
  CHECK(eq.valid);
  CHECK(eq.warnings.size() == 3);
  CHECK_FALSE(validate_spec(SpeciesSpec::first(3, {1, 1})).valid);
  CHECK_FALSE(validate_spec(SpeciesSpec::second(2, {-1, 1, 1}, 2)).valid);
}

TEST_CASE("validation matches the written-out conditions") {
  for (int n = 2; n <= 3; ++n)
    oracle::for_box(n + 2, 3, [&](const std::vector<std::int64_t>& v) {
      std::vector<std::int64_t> a(v.begin() + 2, v.end());
      CHECK(is_valid(SpeciesSpec::second(v[0], a, v[1])) == oracle::second_valid(v[0], a, v[1]));
    });
  oracle::for_box(7, 3, [&](const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> a(v.begin() + 1, v.begin() + 4), b(v.begin() + 4, v.end());
    CHECK(is_valid(SpeciesSpec::third(v[0], a, b)) == oracle::third_valid(v[0], a, b));
  });
}

TEST_CASE("enumeration examples") {
  auto pts = enumerate_support(SpeciesSpec::second(2, {1, 1, 1}, 2));
  CHECK(pts.size() == 7);
  for (auto& p : pts) CHECK(p != MultiIndex{1, 1, 1});
  CHECK(count_enumerated(SpeciesSpec::complete(3, 2)) == 10);
  for (auto s : {SpeciesSpec::complete(4, 0), SpeciesSpec::second(0, {0, 0, 0}, 0), SpeciesSpec::first(0, {0, 0})}) {
    auto z = enumerate_support(s);
    REQUIRE(z.size() == 1);
    CHECK(z[0].total() == 0);
  }
  CHECK(count_enumerated(SpeciesSpec::second(-1, {1, 1, 1}, 1)) == 0);
  CHECK_THROWS_AS(enumerate_support(SpeciesSpec::complete(3, 30), 100), Error);
}

TEST_CASE("enumeration agrees with the brute-force box scan") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto s = oracle::random_second(rng, static_cast<int>(rng.range(2, 4)), 5);
    std::vector<Pt> got;
    auto pts = enumerate_support(s);
    for (auto& m : pts) got.push_back(to_pt(m));
    CHECK(as_set(got) == as_set(oracle::points(s)));
    CHECK(std::is_sorted(pts.begin(), pts.end(), GrlexLess{}));
  }
}

TEST_CASE("closed-form count examples") {
  CHECK(count_closed_form(SpeciesSpec::second(2, {1, 1, 1}, 2)) == 7);
  CHECK(count_closed_form(SpeciesSpec::first(2, {1, 1, 1})) == 7);
  CHECK(count_closed_form(SpeciesSpec::complete(3, 0)) == 1);
  CHECK(count_closed_form(SpeciesSpec::second(0, {0, 0, 0}, 0)) == 1);
}

TEST_CASE("closed-form count equals enumeration on every small valid spec") {
  for (int n = 2; n <= 4; ++n)
    for (auto& s : oracle::all_second(n, n == 4 ? 4 : 5)) CHECK(count_closed_form(s) == oracle::count(s));
  for (int n = 2; n <= 4; ++n)
    oracle::for_box(n + 1, 4, [&](const std::vector<std::int64_t>& v) {
      auto s = SpeciesSpec::first(v[0], std::vector<std::int64_t>(v.begin() + 1, v.end()));
      if (is_valid(s)) CHECK(count_closed_form(s) == oracle::count(s));
    });
  for (int n = 1; n <= 4; ++n)
    for (std::int64_t t = 0; t <= 6; ++t) CHECK(count_closed_form(SpeciesSpec::complete(n, t)) == oracle::count(SpeciesSpec::complete(n, t)));
}

TEST_CASE("third and truncated counts equal enumeration") {
  Rng rng(5);
  int truncated = 0;
  for (int i = 0; i < 150; ++i) {
    auto s = oracle::random_third(rng, 8);
    CHECK(count_closed_form(s) == oracle::count(s));
    auto d = default_s(s);
    CHECK(count_closed_form(d) == oracle::count(d));
    auto cut = d;
    for (auto& v : cut.s) v -= rng.range(0, 3);
    if (is_valid(cut)) {
      ++truncated;
      CHECK(count_closed_form(cut) == oracle::count(cut));
    }
  }
  CHECK(truncated > 0);
}

TEST_CASE("binomial convention") {
  CHECK(binom(5, 3) == 10);
  CHECK(binom(2, 3) == 0);
  CHECK(binom(-1, 2) == 0);
  CHECK(binom(4, 0) == 1);
  for (std::int64_t m = 0; m < 30; ++m)
    for (std::int64_t k = 0; k <= 6; ++k) CHECK(binom(m, k) == oracle::choose(m, k));
}

TEST_CASE("form classification examples") {
  auto f1 = classify_form(SpeciesSpec::third(2, {1, 1, 1}, {2, 2, 2}));
  CHECK(f1.H == std::array<std::int64_t, 3>{-1, -1, -1});
  CHECK(f1.form_index == 1);
  auto f6s = SpeciesSpec::third(7, {5, 5, 5}, {5, 5, 5});
  CHECK(is_valid(f6s));
  auto f6 = classify_form(f6s);
  CHECK(f6.H == std::array<std::int64_t, 3>{2, 2, 2});
  CHECK(f6.form_index == 6);
  auto b = SpeciesSpec::third(6, {4, 4, 4}, {5, 5, 5});
  auto fb = classify_form(b);
  CHECK(fb.H == std::array<std::int64_t, 3>{0, 0, 0});
  CHECK(fb.boundary);
  CHECK(count_third_form(b, 1) == count_third_form(b, 6));
  CHECK(fb.matching.size() == 8);
  CHECK_THROWS_AS(count_third_form(f6s, 1), Error);
}

TEST_CASE("form classification under index permutation") {
  // One-plus patterns (2, 3, 7) and two-plus patterns (4, 5, 8) are each closed under permutation.
  const std::set<int> one_plus{2, 3, 7}, two_plus{4, 5, 8};
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    auto s = oracle::random_third(rng, 8);
    auto base = classify_form(s);
    for (auto& p : perms) {
      std::vector<std::int64_t> a(3), b(3);
      for (int k = 0; k < 3; ++k) {
        a[static_cast<std::size_t>(k)] = s.a[static_cast<std::size_t>(p[k])];
        b[static_cast<std::size_t>(k)] = s.b[static_cast<std::size_t>(p[k])];
      }
      auto q = SpeciesSpec::third(s.t, a, b);
      auto fc = classify_form(q);
      for (int k = 0; k < 3; ++k) CHECK(fc.H[static_cast<std::size_t>(k)] == base.H[static_cast<std::size_t>(p[k])]);
      CHECK(count_closed_form(q) == count_closed_form(s));
      if (!base.boundary) {
        CHECK(one_plus.count(base.form_index) == one_plus.count(fc.form_index));
        CHECK(two_plus.count(base.form_index) == two_plus.count(fc.form_index));
        CHECK((base.form_index == 1) == (fc.form_index == 1));
        CHECK((base.form_index == 6) == (fc.form_index == 6));
      }
    }
  }
}

TEST_CASE("Minkowski sums") {
  auto p = SpeciesSpec::second(2, {1, 1, 1}, 2);
  CHECK(minkowski_add(p, p) == SpeciesSpec::second(4, {2, 2, 2}, 4));
  CHECK(minkowski_add(p, SpeciesSpec::zero_like(p)) == p);
  CHECK_THROWS_AS(minkowski_add(SpeciesSpec::third(2, {1, 1, 1}, {2, 2, 2}), SpeciesSpec::third(2, {1, 1, 1}, {2, 2, 2})), Error);
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    int n = static_cast<int>(rng.range(2, 3));
    auto a = oracle::random_second(rng, n, 3), b = oracle::random_second(rng, n, 3);
    auto sum = minkowski_add(a, b);
    CHECK(oracle::second_valid(sum.t, sum.a, sum.b[0]));
    // Lattice points of the sum are sums of lattice points.
    std::set<Pt> sums;
    for (auto& x : oracle::points(a))
      for (auto& y : oracle::points(b)) {
        Pt z(x.size());
        for (std::size_t k = 0; k < z.size(); ++k) z[k] = x[k] + y[k];
        sums.insert(z);
      }
    CHECK(sums == as_set(oracle::points(sum)));
  }
  for (int i = 0; i < 50; ++i) {
    auto a = default_s(oracle::random_third(rng, 4)), b = default_s(oracle::random_third(rng, 4));
    CHECK(is_valid(minkowski_add(a, b)));
  }
}

TEST_CASE("default truncation") {
  CHECK(default_s(SpeciesSpec::third(2, {1, 1, 1}, {2, 2, 2})).s == std::vector<std::int64_t>{3, 3, 3});
  CHECK(default_s(SpeciesSpec::third(7, {5, 5, 5}, {5, 5, 5})).s == std::vector<std::int64_t>{10, 10, 10});
  Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    auto s = oracle::random_third(rng, 8);
    auto d = default_s(s);
    CHECK(is_valid(d));
    CHECK(as_set(oracle::points(s)) == as_set(oracle::points(d)));
    CHECK(closure_spec(s) == d);
  }
}

TEST_CASE("vertex examples") {
  auto v = vertices(SpeciesSpec::second(3, {2, 2}, 3));
  std::set<Pt> got;
  for (auto& m : v.points) got.insert(to_pt(m));
  CHECK(got == std::set<Pt>{{0, 0}, {2, 0}, {0, 2}, {2, 1}, {1, 2}});
  CHECK(v.nondegenerate);
  auto v3 = vertices(SpeciesSpec::second(5, {3, 3, 4}, 4));
  CHECK(v3.nondegenerate);
  CHECK(v3.points.size() == 12);
  CHECK(vertices(SpeciesSpec::second(4, {3, 2, 2}, 4)).points.size() < 12);
}

TEST_CASE("vertices are exposed points and their hull holds the support") {
  Rng rng(29);
  for (int i = 0; i < 40; ++i) {
    int n = static_cast<int>(rng.range(2, 3));
    auto s = oracle::random_second(rng, n, 5);
    auto v = vertices(s);
    auto pts = oracle::points(s);
    std::vector<Pt> vp;
    for (auto& m : v.points) {
      vp.push_back(to_pt(m));
      CHECK(oracle::member(s, vp.back()));
      CHECK(exposed(pts, vp.back()));
    }
    if (v.nondegenerate) CHECK(v.points.size() == static_cast<std::size_t>(n * n + 2 * n - 3));
    LatticeHull hull(v.points);
    for (auto& p : pts) CHECK(hull.contains(MultiIndex(std::vector<int>(p.begin(), p.end()))));
    if (n == 2)
      for (auto& p : pts) CHECK(planar_hull_contains(vp, p));
  }
}

TEST_CASE("lattice hull agrees with a planar reference") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    std::vector<Pt> pts;
    std::vector<MultiIndex> mi;
    int m = static_cast<int>(rng.range(1, 7));
    for (int k = 0; k < m; ++k) {
      Pt p{rng.range(0, 6), rng.range(0, 6)};
      pts.push_back(p);
      mi.push_back(MultiIndex{static_cast<int>(p[0]), static_cast<int>(p[1])});
    }
    LatticeHull hull(mi);
    for (int x = -1; x <= 7; ++x)
      for (int y = -1; y <= 7; ++y) CHECK(hull.contains(MultiIndex{x, y}) == planar_hull_contains(pts, {x, y}));
  }
}
