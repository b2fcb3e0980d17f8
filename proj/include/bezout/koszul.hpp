#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bezout/degree.hpp"
#include "bezout/sum_equation.hpp"

namespace bezout {

struct KoszulTerm {
  unsigned subset = 0;  // bit i set when equation i+1 is in S
  SpeciesSpec spec;     // base + sum of spec_i over S
  std::vector<MultiIndex> monomials;
};

// Subset-indexed complex 0 -> C_0 -> C_1 -> ... -> C_r with C_k the sum over |S| = k.
// d(k) maps level k to level k+1; the component S -> S+{i} multiplies by (-1)^{#{j in S : j < i}} f_i.
class KoszulComplex {
 public:
  KoszulComplex(const SystemSpec& sys, std::vector<Polynomial> polys, const SpeciesSpec& base);

  int r() const noexcept { return static_cast<int>(polys_.size()); }
  const SystemSpec& system() const noexcept { return sys_; }
  const SpeciesSpec& base() const noexcept { return base_; }
  const std::vector<KoszulTerm>& terms() const noexcept { return terms_; }
  // Term indices at level k, in increasing subset order.
  const std::vector<std::size_t>& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
  std::size_t level_dim(int k) const;
  const BlockLinearMap& d(int k) const { return maps_.at(static_cast<std::size_t>(k)); }

 private:
  SystemSpec sys_;
  SpeciesSpec base_;
  std::vector<Polynomial> polys_;
  std::vector<KoszulTerm> terms_;
  std::vector<std::vector<std::size_t>> levels_;
  std::vector<BlockLinearMap> maps_;
};

KoszulComplex build_complex(const SystemSpec& sys, std::span<const Polynomial> polys, const SpeciesSpec& base);

struct ExactnessPosition {
  int level = 0;
  std::int64_t dim = 0;
  std::int64_t rank_in = 0;
  std::int64_t rank_out = 0;
  std::int64_t defect = 0;
};

struct MarginStep {
  int m = 0;
  SpeciesSpec top;
  std::int64_t coker = 0;
  std::int64_t max_defect = 0;
  std::vector<std::int64_t> per_seed;
};

struct ExactnessReport {
  std::vector<ExactnessPosition> positions;  // every level before the last
  std::int64_t top_dim = 0;
  std::int64_t coker = 0;
  std::int64_t alternating_sum = 0;  // sum over S of (-1)^{r-|S|} dim(term_S)
  bool exact = false;
  bool d_squared_zero = false;
  bool euler_holds = false;
  std::optional<std::int64_t> expected;
  bool pass = false;
  std::vector<MarginStep> trace;
  std::vector<std::string> notes;
};

// Exact composite of consecutive maps on full matrices.
bool composition_is_zero(const BlockLinearMap& first, const BlockLinearMap& second);

ExactnessReport exactness_check(const KoszulComplex& cx);
// Bases m * base for m = 1.. until every defect is zero and the cokernel repeats; every seed of cfg.
ExactnessReport exactness_stabilized(const SystemSpec& sys, std::optional<SpeciesSpec> base, const ElimConfig& cfg);

// Whether a First target satisfies T - sum t <= (A_i - sum a_i) + (A_k - sum a_k) for all i != k.
bool resolution_target_ok(const SystemSpec& sys, const SpeciesSpec& target, std::string* why = nullptr);
// Four-term sequence h, g, f for three First equations in three variables.
ExactnessReport first_species_resolution_check(const SystemSpec& sys, std::optional<SpeciesSpec> target,
                                               const ElimConfig& cfg);

}  // namespace bezout
