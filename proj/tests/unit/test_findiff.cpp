#include <doctest.h>

#include <algorithm>
#include <optional>

#include "bezout/findiff.hpp"
#include "oracles.hpp"

using namespace bezout;

namespace {

// Brute count at both corners, for any parameters.
std::int64_t two_point(const SpeciesSpec& x, const SpeciesSpec& shift) { return oracle::count(x) - oracle::count(x - shift); }

SpeciesSpec random_second_params(Rng& rng, int n, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(n));
  for (auto& v : a) v = rng.range(lo, hi);
  return SpeciesSpec::second(rng.range(lo, hi), a, rng.range(lo, hi));
}

}  // namespace

TEST_CASE("difference of a linear function") {
  CountFunction lin(SpeciesKind::complete, 1, [](const SpeciesSpec& x) { return std::optional<std::int64_t>(x.t); });
  for (std::int64_t t : {0, 1, 3, 7}) {
    auto d = delta_apply(lin, SpeciesSpec::complete(1, t));
    for (std::int64_t T = 0; T < 20; ++T) CHECK(d.value(SpeciesSpec::complete(1, T)) == t);
  }
}

TEST_CASE("single difference of the second-species count") {
  auto P = CountFunction::counting(SpeciesKind::second, 3);
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    auto shift = oracle::random_second(rng, 3, 3);
    auto x = random_second_params(rng, 3, 0, 9);
    CHECK(delta_apply(P, shift).value(x) == two_point(x, shift));
  }
}

TEST_CASE("three shifts of (2,(1,1,1),2) give 5") {
  auto P = CountFunction::counting(SpeciesKind::second, 3);
  auto s = SpeciesSpec::second(2, {1, 1, 1}, 2);
  std::vector<SpeciesSpec> shifts{s, s, s};
  auto D = delta_iterate(P, shifts);
  CHECK(D.value(SpeciesSpec::second(10, {7, 7, 7}, 10)) == 5);
  Rng rng(4);
  int tested = 0;
  while (tested < 5) {
    auto x = oracle::random_second(rng, 3, 14);
    bool ok = true;
    for (auto& c : difference_corners(x, shifts)) ok = ok && oracle::second_valid(c.t, c.a, c.b[0]);
    if (!ok) continue;
    ++tested;
    CHECK(D.value(x) == 5);
  }
}

TEST_CASE("order of shifts does not matter") {
  auto P = CountFunction::counting(SpeciesKind::second, 3);
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    std::vector<SpeciesSpec> sh{oracle::random_second(rng, 3, 3), oracle::random_second(rng, 3, 3), oracle::random_second(rng, 3, 3)};
    std::vector<SpeciesSpec> rev(sh.rbegin(), sh.rend());
    auto x = random_second_params(rng, 3, 5, 12);
    CHECK(delta_iterate(P, sh).value(x) == delta_iterate(P, rev).value(x));
  }
}

TEST_CASE("alternate sum edge cases") {
  auto P = CountFunction::counting(SpeciesKind::second, 3);
  auto x = SpeciesSpec::second(6, {4, 4, 5}, 5);
  CHECK(alternate_sum(P, std::span<const SpeciesSpec>{}).value(x) == oracle::count(x));
  auto s = SpeciesSpec::second(2, {1, 1, 1}, 2);
  std::vector<SpeciesSpec> one{s};
  CHECK(alternate_sum(P, one).value(x) == two_point(x, s));
  std::vector<SpeciesSpec> zero{SpeciesSpec::zero_like(s)};
  CHECK(delta_iterate(P, zero).value(x) == 0);
  CHECK(difference_corners(x, one).size() == 2);
}

TEST_CASE("iterated difference equals the alternate sum") {
  Rng rng(8);
  for (int i = 0; i < 60; ++i) {
    int r = static_cast<int>(rng.range(1, 4));
    int n = static_cast<int>(rng.range(2, 4));
    std::vector<SpeciesSpec> sh;
    SpeciesKind kind = i % 3 == 0 ? SpeciesKind::first : (i % 3 == 1 ? SpeciesKind::second : SpeciesKind::truncated);
    for (int k = 0; k < r; ++k) {
      if (kind == SpeciesKind::second) sh.push_back(oracle::random_second(rng, n, 3));
      if (kind == SpeciesKind::first) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(n));
        std::int64_t t = rng.range(0, 3);
        for (auto& v : a) v = rng.range(0, t);
        sh.push_back(SpeciesSpec::first(t, a));
      }
      if (kind == SpeciesKind::truncated) sh.push_back(default_s(oracle::random_third(rng, 3)));
    }
    auto P = CountFunction::counting(kind, sh.front().n);
    SpeciesSpec x = sh.front().scaled(0);
    for (auto& s : sh) x = x + s;
    auto extra = sh.front().scaled(static_cast<std::int64_t>(rng.range(0, 3)));
    x = x + extra;
    auto lhs = delta_iterate(P, sh)(x);
    auto rhs = alternate_sum(P, sh)(x);
    REQUIRE(lhs.has_value() == rhs.has_value());
    if (lhs) CHECK(*lhs == *rhs);
    // Direct alternating sum of brute counts.
    std::int64_t brute = 0;
    auto corners = difference_corners(x, sh);
    for (std::size_t m = 0; m < corners.size(); ++m) brute += (__builtin_popcountll(m) % 2 ? -1 : 1) * oracle::count(corners[m]);
    CHECK(*rhs == brute);
  }
}

TEST_CASE("iterated difference of a per-form count is constant") {
  Rng rng(10);
  for (int form : {1, 6}) {
    std::vector<SpeciesSpec> sh(3, SpeciesSpec::third(2, {1, 1, 1}, {2, 2, 2}));
    if (form == 6) sh.assign(3, SpeciesSpec::third(7, {5, 5, 5}, {5, 5, 5}));
    auto D = delta_iterate(CountFunction::third_form(form), sh);
    std::optional<std::int64_t> first;
    int tested = 0;
    for (int i = 0; i < 2000 && tested < 20; ++i) {
      auto x = oracle::random_third(rng, 40);
      bool inside = true;
      for (auto& c : difference_corners(x, sh)) {
        auto fc = classify_form(c);
        // Every binomial argument non-negative, where the truncated binomials are polynomial.
        bool binom_regime = c.t >= 0;
        for (std::size_t k = 0; k < 3; ++k) binom_regime = binom_regime && c.t - c.a[k] + 2 >= 0 && c.t - c.b[k] + 1 >= 0;
        inside = inside && binom_regime && std::find(fc.matching.begin(), fc.matching.end(), form) != fc.matching.end();
      }
      if (!inside) continue;
      ++tested;
      auto v = D.value(x);
      if (!first) first = v;
      CHECK(v == *first);
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("out-of-domain evaluation is reported") {
  auto P = CountFunction::third_form(6);
  auto x = SpeciesSpec::third(2, {1, 1, 1}, {2, 2, 2});
  CHECK_FALSE(P(x).has_value());
  CHECK_THROWS_AS(P.value(x), Error);
}
