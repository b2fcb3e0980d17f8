#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bezout/findiff.hpp"
#include "bezout/species.hpp"

namespace bezout {

struct SystemSpec {
  std::vector<SpeciesSpec> equations;

  SpeciesKind kind() const;
  int n() const;
  // Same kind and n throughout; square when requested. Throws mismatch.
  void check(bool square) const;
  // Shapes for the Minkowski-closed family: ThirdN3 equations mapped to their default truncation.
  SystemSpec closure() const;
  SpeciesSpec sum() const;
};

// Base polytope: the componentwise minimum of the equations when valid, else the smallest equation.
SpeciesSpec base_spec(const SystemSpec& sys);

enum class DegreeMethod { closed_form, iterated_difference, cokernel_rank };
const char* method_name(DegreeMethod m) noexcept;

struct DegreeReport {
  std::int64_t D = 0;
  DegreeMethod method = DegreeMethod::closed_form;
  // ThirdN3 details: per-equation form classes, h[i][j] = h_i^{(j)}, and epsilon_i.
  std::vector<FormClass> forms;
  std::vector<std::array<std::int64_t, 3>> h;
  std::vector<int> epsilon;
  std::optional<int> common_form;
  std::optional<std::int64_t> per_form_D;
  std::optional<SpeciesSpec> base;
  std::vector<std::pair<DegreeMethod, std::int64_t>> checks;
  bool consistent = true;
  std::vector<std::string> notes;
};

DegreeReport degree_bound(const SystemSpec& sys);

// The n-fold difference of the counting function at `base` (default: sum of the equations plus
// the base polytope). Corners outside the domain are reported through out_of_domain errors.
DegreeReport degree_via_difference(const SystemSpec& sys, std::optional<SpeciesSpec> base = std::nullopt);

}  // namespace bezout
