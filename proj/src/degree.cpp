#include "bezout/degree.hpp"

#include <algorithm>
#include <set>

namespace bezout {

const char* method_name(DegreeMethod m) noexcept {
  switch (m) {
    case DegreeMethod::closed_form: return "closed_form";
    case DegreeMethod::iterated_difference: return "iterated_difference";
    case DegreeMethod::cokernel_rank: return "cokernel_rank";
  }
  return "?";
}

SpeciesKind SystemSpec::kind() const {
  if (equations.empty()) fail(Errc::invalid_argument, "empty system");
  return equations.front().kind;
}

int SystemSpec::n() const {
  if (equations.empty()) fail(Errc::invalid_argument, "empty system");
  return equations.front().n;
}

void SystemSpec::check(bool square) const {
  if (equations.empty()) fail(Errc::invalid_argument, "empty system");
  for (auto& e : equations) {
    e.check_shape();
    if (e.kind != kind()) fail(Errc::mismatch, "system mixes species kinds");
    if (e.n != n()) fail(Errc::mismatch, "system mixes variable counts");
  }
  if (square && equations.size() != static_cast<std::size_t>(n()))
    fail(Errc::mismatch, "system is not square: " + std::to_string(equations.size()) + " equations in " +
                             std::to_string(n()) + " variables");
}

SystemSpec SystemSpec::closure() const {
  SystemSpec c;
  for (auto& e : equations) c.equations.push_back(closure_spec(e));
  return c;
}

SpeciesSpec SystemSpec::sum() const {
  SpeciesSpec s = SpeciesSpec::zero_like(equations.front());
  for (auto& e : equations) s = s + e;
  return s;
}

SpeciesSpec base_spec(const SystemSpec& sys) {
  sys.check(false);
  auto flat = sys.equations.front().params();
  for (auto& e : sys.equations) {
    auto p = e.params();
    for (std::size_t i = 0; i < p.size(); ++i) flat[i] = std::min(flat[i], p[i]);
  }
  SpeciesSpec m = SpeciesSpec::from_params(sys.kind(), sys.n(), flat);
  if (is_valid(m)) return m;
  const SpeciesSpec* best = &sys.equations.front();
  for (auto& e : sys.equations)
    if (e.params() < best->params()) best = &e;
  return *best;
}

namespace {

std::int64_t prod(const std::vector<std::int64_t>& v) {
  __int128 r = 1;
  for (auto x : v) r *= x;
  if (r > INT64_MAX || r < INT64_MIN) fail(Errc::out_of_range, "degree product overflows 64 bits");
  return static_cast<std::int64_t>(r);
}

void require_valid(const SystemSpec& sys) {
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    auto v = validate_spec(sys.equations[i]);
    if (!v.valid) {
      std::string msg = "equation " + std::to_string(i + 1) + " is not a valid spec";
      for (auto& s : v.violations) msg += "; " + s;
      fail(Errc::invalid_spec, msg);
    }
  }
}

std::optional<int> common_form_of(const std::vector<FormClass>& forms) {
  std::set<int> common(forms.front().matching.begin(), forms.front().matching.end());
  for (auto& f : forms) {
    std::set<int> next;
    for (int x : f.matching)
      if (common.count(x)) next.insert(x);
    common = next;
  }
  if (common.empty()) return std::nullopt;
  return *common.begin();
}

// D_form through P_form when every corner of the difference stays inside the form.
std::optional<std::int64_t> per_form_degree(const SystemSpec& sys, int form, const SpeciesSpec& base,
                                            std::vector<std::string>& notes) {
  auto P = CountFunction::third_form(form);
  auto corners = difference_corners(base, sys.equations);
  for (auto& c : corners) {
    if (!P(c)) {
      notes.push_back("corner " + c.to_string() + " leaves form " + std::to_string(form));
      return std::nullopt;
    }
  }
  return *delta_iterate(P, sys.equations)(base);
}

}  // namespace

DegreeReport degree_bound(const SystemSpec& sys) {
  sys.check(true);
  require_valid(sys);
  DegreeReport rep;
  rep.method = DegreeMethod::closed_form;
  const auto& eq = sys.equations;
  const std::size_t n = static_cast<std::size_t>(sys.n());
  std::vector<std::int64_t> ts;
  for (auto& e : eq) ts.push_back(e.t);
  std::int64_t D = prod(ts);
  auto minus_prod = [&](auto&& coord) {
    std::vector<std::int64_t> v;
    for (std::size_t j = 0; j < n; ++j) v.push_back(eq[j].t - coord(eq[j]));
    return prod(v);
  };
  switch (sys.kind()) {
    case SpeciesKind::complete:
      break;
    case SpeciesKind::first:
      for (std::size_t i = 0; i < n; ++i) D -= minus_prod([&](const SpeciesSpec& s) { return s.a[i]; });
      break;
    case SpeciesKind::second: {
      for (std::size_t i = 0; i < n; ++i) D -= minus_prod([&](const SpeciesSpec& s) { return s.a[i]; });
      D += minus_prod([](const SpeciesSpec& s) { return s.b[0]; });
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::int64_t> v;
        for (std::size_t k = 0; k < n; ++k)
          if (k != j) v.push_back(eq[k].t - eq[k].b[0]);
        D -= (eq[j].a[0] + eq[j].a[1] - eq[j].b[0]) * prod(v);
      }
      break;
    }
    case SpeciesKind::truncated:
      if (!std::all_of(eq.begin(), eq.end(), [](const SpeciesSpec& s) {
            return default_s(SpeciesSpec::third(s.t, s.a, s.b)).s == s.s;
          })) {
        // The epsilon corollary assumes the default truncation; fall back to the difference.
        rep.method = DegreeMethod::iterated_difference;
        auto diff = delta_iterate(CountFunction::counting(SpeciesKind::truncated, 3), eq);
        auto v = diff(sys.sum() + base_spec(sys));
        if (!v) fail(Errc::out_of_domain, "difference corners leave the counting domain");
        D = *v;
        rep.notes.push_back("non-default truncation: degree computed by iterated difference");
        break;
      }
      [[fallthrough]];
    case SpeciesKind::third: {
      // Equations indexed by j, variables by i.
      for (std::size_t i = 0; i < 3; ++i) {
        D += minus_prod([&](const SpeciesSpec& s) { return s.b[i]; });
        D -= minus_prod([&](const SpeciesSpec& s) { return s.a[i]; });
        for (std::size_t j = 0; j < 3; ++j) {
          std::vector<std::int64_t> v;
          for (std::size_t k = 0; k < 3; ++k)
            if (k != j) v.push_back(eq[k].t - eq[k].b[i]);
          D -= (eq[j].a[(i + 1) % 3] + eq[j].a[(i + 2) % 3] - eq[j].b[i]) * prod(v);
        }
      }
      for (std::size_t i = 0; i < 3; ++i) {
        std::array<std::int64_t, 3> hi{};
        int nonpos = 0;
        for (std::size_t j = 0; j < 3; ++j) {
          const auto& s = eq[j];
          hi[j] = s.t + s.a[i] - s.b[(i + 1) % 3] - s.b[(i + 2) % 3];
          if (hi[j] <= 0) ++nonpos;
        }
        int eps = nonpos >= 2 ? 0 : 1;
        rep.h.push_back(hi);
        rep.epsilon.push_back(eps);
        if (eps) D += prod({hi[0], hi[1], hi[2]});
      }
      if (sys.kind() == SpeciesKind::third) {
        for (auto& e : eq) rep.forms.push_back(classify_form(e));
        rep.common_form = common_form_of(rep.forms);
        if (rep.common_form) {
          SpeciesSpec base = sys.sum() + base_spec(sys);
          rep.per_form_D = per_form_degree(sys, *rep.common_form, base, rep.notes);
          if (rep.per_form_D) {
            rep.checks.push_back({DegreeMethod::iterated_difference, *rep.per_form_D});
            if (*rep.per_form_D != D) {
              rep.consistent = false;
              rep.notes.push_back("per-form degree D" + std::to_string(*rep.common_form) + " = " +
                                  std::to_string(*rep.per_form_D) + " differs from the closed form");
            }
          }
        } else {
          rep.notes.push_back("equations fall in different forms; the truncated corollary is used");
        }
      }
      break;
    }
  }
  if (D < 0) fail(Errc::internal, "closed form produced a negative degree");
  rep.D = D;
  return rep;
}

DegreeReport degree_via_difference(const SystemSpec& sys, std::optional<SpeciesSpec> base) {
  sys.check(true);
  require_valid(sys);
  DegreeReport rep;
  rep.method = DegreeMethod::iterated_difference;
  SystemSpec cl = sys.closure();
  SpeciesSpec pi = base_spec(cl);
  SpeciesSpec b;
  if (base) {
    if (base->kind == SpeciesKind::third && cl.kind() == SpeciesKind::truncated) {
      b = default_s(*base);
      rep.notes.push_back("third-species base converted with default_s");
    } else {
      b = *base;
    }
    if (!b.same_shape(cl.equations.front())) fail(Errc::mismatch, "base parameters do not match the system");
  } else {
    b = cl.sum() + pi;
  }
  rep.base = b;
  auto P = CountFunction::counting(cl.kind(), cl.n());
  for (auto& c : difference_corners(b, cl.equations))
    if (!closed_form_domain(c)) rep.notes.push_back("corner " + c.to_string() + " is outside the closed-form domain; enumeration used");
  auto diff = delta_iterate(P, cl.equations);
  auto v = diff(b);
  if (!v) fail(Errc::out_of_domain, "difference corners leave the counting domain at base " + b.to_string());
  rep.D = *v;
  // The n-fold difference is constant: compare one step further out.
  auto v2 = diff(b + pi);
  if (v2 && *v2 != *v) {
    rep.consistent = false;
    rep.notes.push_back("difference is not constant: " + std::to_string(*v) + " at base, " + std::to_string(*v2) +
                        " at base + Pi");
  }
  DegreeReport closed = degree_bound(sys);
  rep.checks.push_back({DegreeMethod::closed_form, closed.D});
  rep.forms = closed.forms;
  rep.h = closed.h;
  rep.epsilon = closed.epsilon;
  rep.common_form = closed.common_form;
  if (closed.D != rep.D) {
    rep.consistent = false;
    rep.notes.push_back("closed form gives " + std::to_string(closed.D));
  }
  if (sys.kind() == SpeciesKind::third && rep.common_form) {
    SpeciesSpec tb = base && base->kind == SpeciesKind::third ? *base : sys.sum() + base_spec(sys);
    rep.per_form_D = per_form_degree(sys, *rep.common_form, tb, rep.notes);
    if (rep.per_form_D) {
      rep.checks.push_back({DegreeMethod::iterated_difference, *rep.per_form_D});
      if (*rep.per_form_D != rep.D) {
        rep.consistent = false;
        rep.notes.push_back("per-form difference gives " + std::to_string(*rep.per_form_D));
      }
    }
  }
  return rep;
}

}  // namespace bezout
