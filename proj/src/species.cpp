#include "bezout/species.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "bezout/fan.hpp"
#include "bezout/rng.hpp"

namespace bezout {

const char* kind_name(SpeciesKind k) noexcept {
  switch (k) {
    case SpeciesKind::complete: return "complete";
    case SpeciesKind::first: return "first";
    case SpeciesKind::second: return "second";
    case SpeciesKind::third: return "third";
    case SpeciesKind::truncated: return "truncated";
  }
  return "?";
}

SpeciesKind parse_kind(const std::string& name) {
  if (name == "complete") return SpeciesKind::complete;
  if (name == "first") return SpeciesKind::first;
  if (name == "second") return SpeciesKind::second;
  if (name == "third" || name == "third-n3" || name == "third_n3") return SpeciesKind::third;
  if (name == "truncated" || name == "truncated-n3" || name == "truncated_n3") return SpeciesKind::truncated;
  fail(Errc::invalid_argument, "unknown species kind '" + name + "'");
}

// ---------------------------------------------------------------- SpeciesSpec

SpeciesSpec SpeciesSpec::complete(int n, std::int64_t t) {
  SpeciesSpec s;
  s.kind = SpeciesKind::complete;
  s.n = n;
  s.t = t;
  s.check_shape();
  return s;
}

SpeciesSpec SpeciesSpec::first(std::int64_t t, std::vector<std::int64_t> a) {
  SpeciesSpec s;
  s.kind = SpeciesKind::first;
  s.n = static_cast<int>(a.size());
  s.t = t;
  s.a = std::move(a);
  s.check_shape();
  return s;
}

SpeciesSpec SpeciesSpec::second(std::int64_t t, std::vector<std::int64_t> a, std::int64_t b) {
  SpeciesSpec s;
  s.kind = SpeciesKind::second;
  s.n = static_cast<int>(a.size());
  s.t = t;
  s.a = std::move(a);
  s.b = {b};
  s.check_shape();
  return s;
}

SpeciesSpec SpeciesSpec::third(std::int64_t t, std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  SpeciesSpec s;
  s.kind = SpeciesKind::third;
  s.n = 3;
  s.t = t;
  s.a = std::move(a);
  s.b = std::move(b);
  s.check_shape();
  return s;
}

SpeciesSpec SpeciesSpec::truncated(std::int64_t t, std::vector<std::int64_t> a, std::vector<std::int64_t> b,
                                   std::vector<std::int64_t> sv) {
  SpeciesSpec s;
  s.kind = SpeciesKind::truncated;
  s.n = 3;
  s.t = t;
  s.a = std::move(a);
  s.b = std::move(b);
  s.s = std::move(sv);
  s.check_shape();
  return s;
}

SpeciesSpec SpeciesSpec::zero_like(const SpeciesSpec& shape) {
  SpeciesSpec z = shape;
  z.t = 0;
  std::fill(z.a.begin(), z.a.end(), 0);
  std::fill(z.b.begin(), z.b.end(), 0);
  std::fill(z.s.begin(), z.s.end(), 0);
  return z;
}

void SpeciesSpec::check_shape() const {
  auto bad = [&](const std::string& why) {
    fail(Errc::invalid_argument, std::string(kind_name(kind)) + " spec: " + why);
  };
  if (n < 1) bad("n must be at least 1");
  std::size_t un = static_cast<std::size_t>(n);
  switch (kind) {
    case SpeciesKind::complete:
      if (!a.empty() || !b.empty() || !s.empty()) bad("complete specs carry only n and t");
      break;
    case SpeciesKind::first:
      if (a.size() != un) bad("a must have n entries");
      if (!b.empty() || !s.empty()) bad("first specs carry no b or s");
      break;
    case SpeciesKind::second:
      if (n < 2) bad("second species needs n >= 2");
      if (a.size() != un) bad("a must have n entries");
      if (b.size() != 1) bad("b must be a single bound");
      if (!s.empty()) bad("second specs carry no s");
      break;
    case SpeciesKind::third:
      if (n != 3) bad("third species is defined for n = 3");
      if (a.size() != 3 || b.size() != 3) bad("a and b must have three entries");
      if (!s.empty()) bad("third specs carry no s; use kind truncated");
      break;
    case SpeciesKind::truncated:
      if (n != 3) bad("truncated species is defined for n = 3");
      if (a.size() != 3 || b.size() != 3 || s.size() != 3) bad("a, b and s must have three entries");
      break;
  }
}

bool SpeciesSpec::same_shape(const SpeciesSpec& o) const noexcept {
  return kind == o.kind && n == o.n && a.size() == o.a.size() && b.size() == o.b.size() && s.size() == o.s.size();
}

std::vector<std::int64_t> SpeciesSpec::params() const {
  std::vector<std::int64_t> v{t};
  v.insert(v.end(), a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  v.insert(v.end(), s.begin(), s.end());
  return v;
}

SpeciesSpec SpeciesSpec::from_params(SpeciesKind kind, int n, const std::vector<std::int64_t>& flat) {
  SpeciesSpec r;
  r.kind = kind;
  r.n = n;
  std::size_t na = kind == SpeciesKind::complete ? 0 : static_cast<std::size_t>(n);
  std::size_t nb = kind == SpeciesKind::second ? 1 : (kind == SpeciesKind::third || kind == SpeciesKind::truncated) ? 3 : 0;
  std::size_t ns = kind == SpeciesKind::truncated ? 3 : 0;
  if (flat.size() != 1 + na + nb + ns) fail(Errc::mismatch, "parameter vector has the wrong length");
  r.t = flat[0];
  r.a.assign(flat.begin() + 1, flat.begin() + 1 + na);
  r.b.assign(flat.begin() + 1 + na, flat.begin() + 1 + na + nb);
  r.s.assign(flat.begin() + 1 + na + nb, flat.end());
  r.check_shape();
  return r;
}

SpeciesSpec SpeciesSpec::operator+(const SpeciesSpec& o) const {
  if (!same_shape(o)) fail(Errc::mismatch, "parameter shapes differ");
  auto p = params(), q = o.params();
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += q[i];
  return from_params(kind, n, p);
}

SpeciesSpec SpeciesSpec::operator-(const SpeciesSpec& o) const {
  if (!same_shape(o)) fail(Errc::mismatch, "parameter shapes differ");
  auto p = params(), q = o.params();
  for (std::size_t i = 0; i < p.size(); ++i) p[i] -= q[i];
  return from_params(kind, n, p);
}

SpeciesSpec SpeciesSpec::scaled(std::int64_t k) const {
  auto p = params();
  for (auto& v : p) v *= k;
  return from_params(kind, n, p);
}

bool SpeciesSpec::all_nonnegative() const {
  for (auto v : params())
    if (v < 0) return false;
  return true;
}

std::int64_t SpeciesSpec::max_param() const {
  auto p = params();
  return *std::max_element(p.begin(), p.end());
}

std::string SpeciesSpec::to_string() const {
  std::ostringstream os;
  auto vec = [&](const std::vector<std::int64_t>& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  };
  os << kind_name(kind) << "[n=" << n << ",t=" << t;
  if (!a.empty()) {
    os << ",a=";
    vec(a);
  }
  if (kind == SpeciesKind::second) {
    os << ",b=" << b[0];
  } else if (!b.empty()) {
    os << ",b=";
    vec(b);
  }
  if (!s.empty()) {
    os << ",s=";
    vec(s);
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- validation

namespace {

class Checker {
 public:
  explicit Checker(ValidationReport& r) : r_(r) {}
  void le(std::int64_t lhs, std::int64_t rhs, const std::string& what) {
    if (lhs > rhs) add(what, lhs, "<=", rhs);
  }
  void ge(std::int64_t lhs, std::int64_t rhs, const std::string& what) {
    if (lhs < rhs) add(what, lhs, ">=", rhs);
  }
  void gt(std::int64_t lhs, std::int64_t rhs, const std::string& what) {
    if (lhs <= rhs) add(what, lhs, ">", rhs);
  }

 private:
  void add(const std::string& what, std::int64_t lhs, const char* op, std::int64_t rhs) {
    r_.valid = false;
    r_.violations.push_back(what + " fails: " + std::to_string(lhs) + " " + op + " " + std::to_string(rhs) +
                            " is false");
  }
  ValidationReport& r_;
};

std::string idx(const char* name, std::size_t i) { return std::string(name) + std::to_string(i + 1); }

void check_third_conditions(const SpeciesSpec& s, Checker& c) {
  const auto& a = s.a;
  const auto& b = s.b;
  c.le(std::max(a[0], a[1]), b[2], "max(a1,a2) <= b3");
  c.le(std::max(a[0], a[2]), b[1], "max(a1,a3) <= b2");
  c.le(std::max(a[1], a[2]), b[0], "max(a2,a3) <= b1");
  c.ge(a[0] + a[1], b[2], "a1+a2 >= b3");
  c.ge(a[0] + a[2], b[1], "a1+a3 >= b2");
  c.ge(a[1] + a[2], b[0], "a2+a3 >= b1");
  c.le(std::max({b[0], b[1], b[2]}), s.t, "max(b1,b2,b3) <= t");
  c.ge(std::min({a[0] + b[0], a[1] + b[1], a[2] + b[2]}), s.t, "min(a1+b1,a2+b2,a3+b3) >= t");
  c.ge(b[0] + b[1] + b[2], 2 * s.t, "b1+b2+b3 >= 2t");
}

}  // namespace

ValidationReport validate_spec(const SpeciesSpec& spec) {
  spec.check_shape();
  ValidationReport r;
  Checker c(r);
  if (!spec.all_nonnegative()) {
    r.valid = false;
    r.violations.push_back("all parameters must be non-negative");
    return r;
  }
  const auto& a = spec.a;
  std::size_t n = static_cast<std::size_t>(spec.n);
  switch (spec.kind) {
    case SpeciesKind::complete:
      break;
    case SpeciesKind::first:
      for (std::size_t i = 0; i < n; ++i) c.le(a[i], spec.t, idx("a", i) + " <= t");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          std::string sum = idx("a", i) + "+" + idx("a", j);
          // Equality is the boundary of the strict condition: accepted, with a warning.
          c.ge(a[i] + a[j], spec.t, sum + " >= t");
          if (a[i] + a[j] == spec.t)
            r.warnings.push_back(sum + " > t holds only with equality (" + std::to_string(a[i] + a[j]) + " = " +
                                 std::to_string(spec.t) + ")");
        }
      break;
    case SpeciesKind::second: {
      std::int64_t b = spec.b[0];
      c.le(std::max(a[0], a[1]), b, "max(a1,a2) <= b");
      for (std::size_t i = 2; i < n; ++i) c.le(a[i], spec.t, idx("a", i) + " <= t");
      c.ge(a[0] + a[1], b, "a1+a2 >= b");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          if (i == 0 && j == 1) continue;
          c.ge(a[i] + a[j], spec.t, idx("a", i) + "+" + idx("a", j) + " >= t");
        }
      c.le(b, spec.t, "b <= t");
      for (std::size_t i = 2; i < n; ++i) c.ge(a[i] + b, spec.t, idx("a", i) + "+b >= t");
      break;
    }
    case SpeciesKind::third:
      check_third_conditions(spec, c);
      break;
    case SpeciesKind::truncated: {
      check_third_conditions(spec, c);
      if (!r.valid) break;
      // The truncation parameters must keep every cone vertex of the refined fan inside the polytope.
      auto normals = truncated_normals();
      auto h = truncated_constants(spec);
      auto verts = all_cone_vertices(spec);
      for (std::size_t k = 0; k < verts.size(); ++k) {
        for (std::size_t j = 0; j < normals.size(); ++j) {
          if (pairing(verts[k], normals[j]) < -h[j]) {
            r.valid = false;
            std::ostringstream os;
            os << "truncation s=(" << spec.s[0] << "," << spec.s[1] << "," << spec.s[2]
               << ") is not convex on the refined fan: vertex of cone " << k + 1 << " violates constraint "
               << j + 1;
            r.violations.push_back(os.str());
            break;
          }
        }
      }
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------- enumeration

bool in_support(const SpeciesSpec& spec, const MultiIndex& k) {
  spec.check_shape();
  if (k.size() != static_cast<std::size_t>(spec.n)) fail(Errc::mismatch, "multi-index length differs from n");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0) return false;
    if (!spec.a.empty() && k[i] > spec.a[i]) return false;
    sum += k[i];
  }
  if (sum > spec.t) return false;
  if (spec.kind == SpeciesKind::second && k[0] + k[1] > spec.b[0]) return false;
  if (spec.kind == SpeciesKind::third || spec.kind == SpeciesKind::truncated) {
    if (k[1] + k[2] > spec.b[0] || k[0] + k[2] > spec.b[1] || k[0] + k[1] > spec.b[2]) return false;
  }
  if (spec.kind == SpeciesKind::truncated) {
    for (int i = 0; i < 3; ++i)
      if (sum + k[i] > spec.s[i]) return false;
  }
  return true;
}

namespace {

// Calls visit(k) for each lattice point; k is reused between calls.
void for_each_point(const SpeciesSpec& spec, const std::function<void(const MultiIndex&)>& visit) {
  spec.check_shape();
  for (auto v : spec.params())
    if (v < 0) return;
  std::size_t n = static_cast<std::size_t>(spec.n);
  MultiIndex k(n);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rem) {
    if (i == n) {
      if (in_support(spec, k)) visit(k);
      return;
    }
    std::int64_t ub = rem;
    if (!spec.a.empty()) ub = std::min(ub, spec.a[i]);
    if (spec.kind == SpeciesKind::second && i == 1) ub = std::min<std::int64_t>(ub, spec.b[0] - k[0]);
    if (spec.kind == SpeciesKind::third || spec.kind == SpeciesKind::truncated) {
      if (i == 1) ub = std::min<std::int64_t>(ub, spec.b[2] - k[0]);
      if (i == 2) ub = std::min<std::int64_t>({ub, spec.b[1] - k[0], spec.b[0] - k[1]});
    }
    for (std::int64_t v = 0; v <= ub; ++v) {
      k[i] = static_cast<int>(v);
      rec(i + 1, rem - v);
    }
    k[i] = 0;
  };
  rec(0, spec.t);
}

}  // namespace

std::vector<MultiIndex> enumerate_support(const SpeciesSpec& spec, std::size_t cap) {
  std::vector<MultiIndex> out;
  for_each_point(spec, [&](const MultiIndex& k) {
    if (out.size() >= cap) fail(Errc::size_cap, "support enumeration exceeds cap of " + std::to_string(cap));
    out.push_back(k);
  });
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::int64_t count_enumerated(const SpeciesSpec& spec, std::size_t cap) {
  std::size_t count = 0;
  for_each_point(spec, [&](const MultiIndex&) {
    if (++count > cap) fail(Errc::size_cap, "support enumeration exceeds cap of " + std::to_string(cap));
  });
  return static_cast<std::int64_t>(count);
}

// ---------------------------------------------------------------- closed forms

std::int64_t binom(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < 0 || m < k) return 0;
  k = std::min(k, m - k);
  __int128 r = 1;
  for (std::int64_t i = 0; i < k; ++i) r = r * (m - i) / (i + 1);
  if (r > INT64_MAX) fail(Errc::out_of_range, "binomial coefficient overflows 64 bits");
  return static_cast<std::int64_t>(r);
}

std::array<std::int64_t, 3> third_H(const SpeciesSpec& s) {
  if (s.kind != SpeciesKind::third && s.kind != SpeciesKind::truncated)
    fail(Errc::mismatch, "H values are defined for third-species parameters");
  std::array<std::int64_t, 3> H{};
  for (int i = 0; i < 3; ++i) H[i] = s.t - s.b[(i + 1) % 3] - s.b[(i + 2) % 3] + s.a[i];
  return H;
}

std::array<int, 3> form_signs(int form) {
  static const std::array<std::array<int, 3>, 8> table{{
      {-1, -1, -1},
      {-1, -1, +1},
      {+1, -1, -1},
      {+1, -1, +1},
      {+1, +1, -1},
      {+1, +1, +1},
      {-1, +1, -1},
      {-1, +1, +1},
  }};
  if (form < 1 || form > 8) fail(Errc::out_of_range, "form index must be in 1..8");
  return table[form - 1];
}

FormClass classify_form(const SpeciesSpec& spec) {
  FormClass fc;
  fc.H = third_H(spec);
  for (int f = 1; f <= 8; ++f) {
    auto sg = form_signs(f);
    bool ok = true;
    for (int i = 0; i < 3; ++i)
      if (sg[i] * fc.H[i] < 0) ok = false;
    if (ok) fc.matching.push_back(f);
  }
  fc.form_index = fc.matching.front();
  fc.boundary = std::any_of(fc.H.begin(), fc.H.end(), [](std::int64_t h) { return h == 0; });
  return fc;
}

namespace {

std::int64_t third_base_count(const SpeciesSpec& s) {
  const std::int64_t T = s.t;
  const auto& A = s.a;
  const auto& B = s.b;
  std::int64_t r = binom(T + 3, 3);
  for (int i = 0; i < 3; ++i) {
    r -= binom(T - A[i] + 2, 3);
    r += binom(T - B[i] + 1, 3);
    r -= (A[(i + 1) % 3] + A[(i + 2) % 3] - B[i]) * binom(T - B[i] + 1, 2);
  }
  return r;
}

}  // namespace

std::int64_t count_third_form(const SpeciesSpec& spec, int form) {
  if (spec.kind != SpeciesKind::third) fail(Errc::mismatch, "per-form counts take third-species parameters");
  auto sg = form_signs(form);
  auto H = third_H(spec);
  for (int i = 0; i < 3; ++i)
    if (sg[i] * H[i] < 0)
      fail(Errc::out_of_domain, "H=(" + std::to_string(H[0]) + "," + std::to_string(H[1]) + "," +
                                    std::to_string(H[2]) + ") is outside form " + std::to_string(form));
  std::int64_t r = third_base_count(spec);
  for (int i = 0; i < 3; ++i)
    if (sg[i] > 0) r += binom(H[i] + 1, 3);
  return r;
}

std::int64_t count_closed_form(const SpeciesSpec& spec) {
  spec.check_shape();
  const std::int64_t T = spec.t;
  const std::int64_t n = spec.n;
  switch (spec.kind) {
    case SpeciesKind::complete:
      return binom(T + n, n);
    case SpeciesKind::first: {
      std::int64_t r = binom(T + n, n);
      for (auto A : spec.a) r -= binom(T - A + n - 1, n);
      return r;
    }
    case SpeciesKind::second: {
      std::int64_t B = spec.b[0];
      std::int64_t r = binom(T + n, n);
      for (auto A : spec.a) r -= binom(T - A + n - 1, n);
      r += binom(T - B + n - 2, n);
      r -= (spec.a[0] + spec.a[1] - B) * binom(T - B + n - 2, n - 1);
      return r;
    }
    case SpeciesKind::third:
      return count_third_form(spec, classify_form(spec).form_index);
    case SpeciesKind::truncated: {
      const auto& A = spec.a;
      const auto& B = spec.b;
      const auto& S = spec.s;
      std::int64_t r = binom(T + 3, 3);
      for (int i = 0; i < 3; ++i) {
        std::int64_t j = (i + 1) % 3, k = (i + 2) % 3;
        r += binom(T - B[i] + 1, 3) - binom(T - A[i] + 2, 3);
        r -= (A[j] + A[k] - B[i]) * binom(T - B[i] + 1, 2);
        r += (T + A[i] - B[j] - B[k] + 1) * binom(T + A[i] - S[i] + 1, 2) - 2 * binom(T + A[i] - S[i] + 2, 3);
      }
      return r;
    }
  }
  fail(Errc::internal, "unhandled species kind");
}

bool closed_form_domain(const SpeciesSpec& spec) { return validate_spec(spec).valid; }

// ---------------------------------------------------------------- vertices

std::vector<MultiIndex> vertex_candidates(const SpeciesSpec& spec) {
  if (spec.kind != SpeciesKind::second) fail(Errc::mismatch, "vertex classes are defined for second-species specs");
  spec.check_shape();
  std::size_t n = static_cast<std::size_t>(spec.n);
  auto t = static_cast<int>(spec.t);
  auto b = static_cast<int>(spec.b[0]);
  std::vector<int> a(spec.a.begin(), spec.a.end());
  std::vector<MultiIndex> out;
  auto pt = [&]() { return MultiIndex(n); };
  out.push_back(pt());  // (i)
  {
    auto v = pt();
    v[0] = a[0];
    v[1] = b - a[0];
    out.push_back(v);  // (ii)
  }
  {
    auto v = pt();
    v[0] = b - a[1];
    v[1] = a[1];
    out.push_back(v);  // (iii)
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto v = pt();
    v[i] = a[i];
    out.push_back(v);  // (iv)
  }
  for (std::size_t i = 2; i < n; ++i) {
    auto v = pt();
    v[0] = a[0];
    v[1] = b - a[0];
    v[i] = t - b;
    out.push_back(v);  // (v)
  }
  for (std::size_t i = 2; i < n; ++i) {
    auto v = pt();
    v[0] = b - a[1];
    v[1] = a[1];
    v[i] = t - b;
    out.push_back(v);  // (vi)
  }
  for (std::size_t i = 2; i < n; ++i) {
    auto v = pt();
    v[0] = a[0];
    v[i] = t - a[0];
    out.push_back(v);  // (vii)
  }
  for (std::size_t i = 2; i < n; ++i) {
    auto v = pt();
    v[1] = a[1];
    v[i] = t - a[1];
    out.push_back(v);  // (viii)
  }
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      auto v = pt();
      v[i] = a[i];
      v[j] = t - a[i];
      out.push_back(v);  // (ix)
    }
  return out;
}

VertexSet vertices(const SpeciesSpec& spec) {
  VertexSet vs;
  auto cand = vertex_candidates(spec);
  vs.candidates = cand.size();
  std::set<MultiIndex, GrlexLess> uniq(cand.begin(), cand.end());
  vs.points.assign(uniq.begin(), uniq.end());
  vs.nondegenerate = vs.points.size() == cand.size();
  return vs;
}

// ---------------------------------------------------------------- hull

namespace {

using Row = std::vector<Rational>;

// Rank of integer vectors via rational elimination.
std::size_t rank_of(const std::vector<std::vector<std::int64_t>>& vecs) {
  std::vector<Row> m;
  for (auto& v : vecs) {
    Row r;
    for (auto x : v) r.emplace_back(static_cast<long>(x));
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

mpz_class det_int(std::vector<std::vector<mpz_class>> m) {
  // Bareiss fraction-free determinant.
  std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

LatticeHull::LatticeHull(const std::vector<MultiIndex>& points) {
  std::set<MultiIndex, GrlexLess> uniq(points.begin(), points.end());
  pts_.assign(uniq.begin(), uniq.end());
  if (pts_.empty()) return;
  empty_ = false;
  n_ = pts_[0].size();
  origin_.assign(pts_[0].exponents().begin(), pts_[0].exponents().end());
  for (auto& p : pts_) {
    std::vector<std::int64_t> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = p[i] - origin_[i];
    auto trial = basis_;
    trial.push_back(d);
    if (rank_of(trial) > basis_.size()) basis_.push_back(d);
    if (basis_.size() == n_) break;
  }
  dim_ = basis_.size();
  if (dim_ == 0) return;
  // Coordinates on which the projection of the affine hull is injective.
  std::vector<std::size_t> pick(dim_);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<std::vector<mpz_class>> minor(dim_, std::vector<mpz_class>(dim_));
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) minor[r][c] = static_cast<long>(basis_[r][pick[c]]);
    if (det_int(minor) != 0) break;
    std::size_t i = dim_;
    while (i > 0 && pick[i - 1] == n_ - dim_ + i - 1) --i;
    if (i == 0) fail(Errc::internal, "no injective coordinate projection");
    ++pick[i - 1];
    for (std::size_t j = i; j < dim_; ++j) pick[j] = pick[j - 1] + 1;
  }
  coords_ = pick;

  std::vector<std::vector<std::int64_t>> q;
  for (auto& p : pts_) {
    std::vector<std::int64_t> v;
    for (auto c : coords_) v.push_back(p[c]);
    q.push_back(v);
  }
  std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> seen;
  std::vector<std::size_t> sub(dim_);
  std::iota(sub.begin(), sub.end(), 0);
  const std::size_t m = q.size();
  if (m < dim_) return;
  while (true) {
    // Generalized cross product of the dim-1 edge vectors from q[sub[0]].
    std::vector<std::int64_t> normal(dim_);
    for (std::size_t col = 0; col < dim_; ++col) {
      std::vector<std::vector<mpz_class>> mm;
      for (std::size_t r = 1; r < dim_; ++r) {
        std::vector<mpz_class> row;
        for (std::size_t c = 0; c < dim_; ++c)
          if (c != col) row.emplace_back(static_cast<long>(q[sub[r]][c] - q[sub[0]][c]));
        mm.push_back(row);
      }
      mpz_class d = det_int(mm);
      normal[col] = ((col % 2) ? -1 : 1) * d.get_si();
    }
    if (std::any_of(normal.begin(), normal.end(), [](std::int64_t x) { return x != 0; })) {
      std::int64_t g = 0;
      for (auto x : normal) g = std::gcd(g, x < 0 ? -x : x);
      for (auto& x : normal) x /= g;
      auto dot = [&](const std::vector<std::int64_t>& v) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < dim_; ++i) s += normal[i] * v[i];
        return s;
      };
      std::int64_t off = dot(q[sub[0]]);
      bool le = true, ge = true;
      for (auto& v : q) {
        std::int64_t d = dot(v);
        if (d > off) le = false;
        if (d < off) ge = false;
      }
      if (le || ge) {
        if (!le) {
          for (auto& x : normal) x = -x;
          off = -off;
        }
        if (seen.insert({normal, off}).second) facets_.push_back({normal, off});
      }
    }
    std::size_t i = dim_;
    while (i > 0 && sub[i - 1] == m - dim_ + i - 1) --i;
    if (i == 0) break;
    ++sub[i - 1];
    for (std::size_t j = i; j < dim_; ++j) sub[j] = sub[j - 1] + 1;
  }
}

bool LatticeHull::in_affine_hull(const MultiIndex& p) const {
  std::vector<std::int64_t> d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = p[i] - origin_[i];
  if (dim_ == 0) return std::all_of(d.begin(), d.end(), [](std::int64_t x) { return x == 0; });
  auto trial = basis_;
  trial.push_back(d);
  return rank_of(trial) == dim_;
}

bool LatticeHull::contains(const MultiIndex& p) const {
  if (empty_) return false;
  if (p.size() != n_) fail(Errc::mismatch, "point dimension differs from hull");
  if (!in_affine_hull(p)) return false;
  for (auto& f : facets_) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dim_; ++i) s += f.normal[i] * p[coords_[i]];
    if (s > f.offset) return false;
  }
  return true;
}

// ---------------------------------------------------------------- sums and truncation

SpeciesSpec minkowski_add(const SpeciesSpec& p, const SpeciesSpec& q) {
  if (p.kind != q.kind || p.n != q.n) fail(Errc::mismatch, "Minkowski sum needs the same kind and n");
  if (p.kind == SpeciesKind::third)
    fail(Errc::invalid_argument,
         "third-species supports are not closed under Minkowski sums; convert with default_s first");
  return p + q;
}

SpeciesSpec default_s(const SpeciesSpec& spec) {
  if (spec.kind != SpeciesKind::third) fail(Errc::mismatch, "default_s takes a third-species spec");
  spec.check_shape();
  std::vector<std::int64_t> s(3);
  for (int i = 0; i < 3; ++i) s[i] = std::min(spec.t + spec.a[i], spec.b[(i + 1) % 3] + spec.b[(i + 2) % 3]);
  return SpeciesSpec::truncated(spec.t, spec.a, spec.b, s);
}

SpeciesSpec closure_spec(const SpeciesSpec& spec) {
  return spec.kind == SpeciesKind::third ? default_s(spec) : spec;
}

Polynomial random_generic(const SpeciesSpec& spec, std::uint64_t p, std::uint64_t seed) {
  auto v = validate_spec(spec);
  if (!v.valid) {
    std::string msg = "random_generic needs a valid spec";
    for (auto& s : v.violations) msg += "; " + s;
    fail(Errc::invalid_spec, msg);
  }
  Field f = Field::prime(p);
  Rng rng(seed);
  Polynomial out(static_cast<std::size_t>(spec.n), f);
  for (auto& k : enumerate_support(spec)) out.add_term(k, FieldElement(1 + rng.below(p - 1), p));
  return out;
}

}  // namespace bezout
