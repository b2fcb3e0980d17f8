#include "bezout/findiff.hpp"

#include <memory>

namespace bezout {

CountFunction::CountFunction(SpeciesKind kind, int n, Eval f) : kind_(kind), n_(n), f_(std::move(f)) {
  if (!f_) fail(Errc::invalid_argument, "count function needs an evaluator");
}

bool CountFunction::accepts(const SpeciesSpec& p) const noexcept {
  if (p.kind != kind_ || p.n != n_) return false;
  try {
    p.check_shape();
  } catch (const Error&) {
    return false;
  }
  return true;
}

std::optional<std::int64_t> CountFunction::operator()(const SpeciesSpec& params) const {
  if (!accepts(params)) fail(Errc::mismatch, "parameter shape does not match the count function");
  return f_(params);
}

std::int64_t CountFunction::value(const SpeciesSpec& params) const {
  auto v = (*this)(params);
  if (!v) fail(Errc::out_of_domain, "count function is undefined at " + params.to_string());
  return *v;
}

CountFunction CountFunction::enumeration(SpeciesKind kind, int n, std::size_t cap) {
  return CountFunction(kind, n, [cap](const SpeciesSpec& p) -> std::optional<std::int64_t> {
    try {
      return count_enumerated(p, cap);
    } catch (const Error& e) {
      if (e.code() == Errc::size_cap) return std::nullopt;
      throw;
    }
  });
}

CountFunction CountFunction::counting(SpeciesKind kind, int n, std::size_t cap) {
  auto fallback = enumeration(kind, n, cap);
  return CountFunction(kind, n, [fallback](const SpeciesSpec& p) -> std::optional<std::int64_t> {
    if (closed_form_domain(p)) return count_closed_form(p);
    return fallback(p);
  });
}

CountFunction CountFunction::closed_form(SpeciesKind kind, int n) {
  if (kind == SpeciesKind::third)
    fail(Errc::invalid_argument, "third-species closed forms are per form; use third_form");
  return CountFunction(kind, n, [](const SpeciesSpec& p) -> std::optional<std::int64_t> { return count_closed_form(p); });
}

CountFunction CountFunction::third_form(int form) {
  form_signs(form);
  return CountFunction(SpeciesKind::third, 3, [form](const SpeciesSpec& p) -> std::optional<std::int64_t> {
    try {
      return count_third_form(p, form);
    } catch (const Error& e) {
      if (e.code() == Errc::out_of_domain) return std::nullopt;
      throw;
    }
  });
}

CountFunction delta_apply(const CountFunction& P, const ParamShift& shift) {
  if (!P.accepts(shift)) fail(Errc::mismatch, "shift shape does not match the count function");
  return CountFunction(P.kind(), P.n(), [P, shift](const SpeciesSpec& x) -> std::optional<std::int64_t> {
    auto hi = P(x);
    if (!hi) return std::nullopt;
    auto lo = P(x - shift);
    if (!lo) return std::nullopt;
    return *hi - *lo;
  });
}

CountFunction delta_iterate(const CountFunction& P, std::span<const ParamShift> shifts) {
  CountFunction acc = P;
  for (auto& s : shifts) acc = delta_apply(acc, s);
  return acc;
}

std::vector<SpeciesSpec> difference_corners(const SpeciesSpec& base, std::span<const ParamShift> shifts) {
  if (shifts.size() > 20) fail(Errc::out_of_range, "too many shifts");
  std::vector<SpeciesSpec> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << shifts.size()); ++mask) {
    SpeciesSpec c = base;
    for (std::size_t i = 0; i < shifts.size(); ++i)
      if (mask >> i & 1) c = c - shifts[i];
    out.push_back(c);
  }
  return out;
}

CountFunction alternate_sum(const CountFunction& P, std::span<const ParamShift> shifts) {
  for (auto& s : shifts)
    if (!P.accepts(s)) fail(Errc::mismatch, "shift shape does not match the count function");
  std::vector<ParamShift> owned(shifts.begin(), shifts.end());
  return CountFunction(P.kind(), P.n(), [P, owned](const SpeciesSpec& x) -> std::optional<std::int64_t> {
    auto corners = difference_corners(x, owned);
    std::int64_t total = 0;
    for (std::size_t mask = 0; mask < corners.size(); ++mask) {
      auto v = P(corners[mask]);
      if (!v) return std::nullopt;
      total += (__builtin_popcountll(mask) % 2 ? -1 : 1) * *v;
    }
    return total;
  });
}

}  // namespace bezout
