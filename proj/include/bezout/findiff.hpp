#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bezout/species.hpp"

namespace bezout {

// A parameter decrement with the same shape as the counted parameters.
using ParamShift = SpeciesSpec;

// Evaluatable map from parameter tuples to integers. An empty optional marks an
// out-of-domain evaluation point.
class CountFunction {
 public:
  using Eval = std::function<std::optional<std::int64_t>(const SpeciesSpec&)>;

  CountFunction(SpeciesKind kind, int n, Eval f);

  // Closed form inside closed_form_domain, enumeration elsewhere, out-of-domain past the cap.
  static CountFunction counting(SpeciesKind kind, int n, std::size_t enum_cap = 2'000'000);
  static CountFunction enumeration(SpeciesKind kind, int n, std::size_t enum_cap = 2'000'000);
  // Total closed-form map, no domain restriction (Complete, First, Second, Truncated).
  static CountFunction closed_form(SpeciesKind kind, int n);
  // P_form over third-species parameters; out-of-domain where H leaves the form.
  static CountFunction third_form(int form);

  SpeciesKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  bool accepts(const SpeciesSpec& params) const noexcept;

  std::optional<std::int64_t> operator()(const SpeciesSpec& params) const;
  // Throws out_of_domain instead of returning an empty optional.
  std::int64_t value(const SpeciesSpec& params) const;

 private:
  SpeciesKind kind_;
  int n_;
  Eval f_;
};

// X -> P(X) - P(X - shift), evaluated lazily.
CountFunction delta_apply(const CountFunction& P, const ParamShift& shift);
// Left-to-right composition of delta_apply.
CountFunction delta_iterate(const CountFunction& P, std::span<const ParamShift> shifts);
// X -> sum over S of (-1)^|S| P(X - sum_{i in S} shift_i).
CountFunction alternate_sum(const CountFunction& P, std::span<const ParamShift> shifts);

// Corners X - sum_{i in S} shift_i in subset-bitmask order.
std::vector<SpeciesSpec> difference_corners(const SpeciesSpec& base, std::span<const ParamShift> shifts);

}  // namespace bezout
