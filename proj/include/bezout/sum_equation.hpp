#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bezout/degree.hpp"
#include "bezout/exact.hpp"
#include "bezout/species.hpp"

namespace bezout {

struct ElimConfig {
  std::uint64_t prime = kMersenne61;
  std::uint64_t seed = 1;
  int seeds = 3;
  int margin_cap = 6;       // growth steps after the initial size
  int window = 2;           // equal consecutive sizes required to stop
  std::size_t max_rows = 60000;
};

struct IndexBlock {
  std::string label;
  std::vector<MultiIndex> monomials;  // graded-lex order
};

// Explicit matrix with block-structured monomial indexing of rows and columns.
class BlockLinearMap {
 public:
  using Entry = std::pair<std::uint32_t, FieldElement>;

  BlockLinearMap(Field field, std::vector<IndexBlock> row_blocks, std::vector<IndexBlock> col_blocks);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return nrows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const std::vector<IndexBlock>& row_blocks() const noexcept { return row_blocks_; }
  const std::vector<IndexBlock>& col_blocks() const noexcept { return col_blocks_; }
  std::size_t row_offset(std::size_t block) const { return row_off_.at(block); }
  std::size_t col_offset(std::size_t block) const { return col_off_.at(block); }

  std::optional<std::size_t> find_row(std::size_t block, const MultiIndex& m) const;
  // Adds c at (row of m in row block) for column j; throws internal if m is outside the block.
  void add_entry(std::size_t col, std::size_t row_block, const MultiIndex& m, const FieldElement& c);
  const std::vector<Entry>& column(std::size_t j) const { return columns_.at(j); }

  // MatrixMarket coordinate text, one-based indices, entries sorted by column then row.
  void write_matrix_market(std::ostream& os) const;

 private:
  Field field_;
  std::vector<IndexBlock> row_blocks_, col_blocks_;
  std::vector<std::size_t> row_off_, col_off_;
  std::vector<std::map<MultiIndex, std::size_t, GrlexLess>> row_index_;
  std::size_t nrows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

// Map (phi_i) -> sum phi_i f_i with phi_i ranging over the monomials in multipliers[i] and
// rows indexed by `target`.
BlockLinearMap build_map(std::span<const Polynomial> polys, const std::vector<std::vector<MultiIndex>>& multipliers,
                         const std::vector<MultiIndex>& target);
// Multiplier spaces E(target - spec_i); empty when the shifted parameters are negative.
BlockLinearMap build_map(const SystemSpec& sys, std::span<const Polynomial> polys, const SpeciesSpec& target);

// Exact rank: echelon over F_p, Bareiss over Q.
std::size_t map_rank(const BlockLinearMap& map);
std::int64_t cokernel_dim(const BlockLinearMap& map);

// Generic random coefficients for every equation (equation i uses seed stream i).
std::vector<Polynomial> random_system(const SystemSpec& sys, std::uint64_t prime, std::uint64_t seed);
std::uint64_t seed_for(const ElimConfig& cfg, int replica);

struct CokernelStep {
  SpeciesSpec target;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<std::int64_t> per_seed;
  std::int64_t coker = 0;
  std::uint64_t prime = 0;
};

struct CokernelTrace {
  SpeciesSpec base;
  std::vector<CokernelStep> steps;
  std::int64_t coker = 0;
  bool stabilized = false;
  std::vector<std::string> notes;
};

// Cokernel dimension at one target over all seeds; a seed disagreement is retried with other
// primes, then raised as math_failure.
CokernelStep generic_cokernel(const SystemSpec& sys, const SpeciesSpec& target, const ElimConfig& cfg);
// Targets sum(spec) + m * base for m = 0, 1, ... until the cokernel repeats.
CokernelTrace stabilized_cokernel(const SystemSpec& sys, const ElimConfig& cfg);

struct EliminandStep {
  std::int64_t T = 0;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::int64_t degree = -1;  // -1: no univariate element at this size
};

struct EliminandResult {
  std::optional<Polynomial> eliminand;
  std::vector<EliminandStep> steps;
  bool stabilized = false;
};

// Minimal-degree monic element of (sum phi_i f_i) that involves only x_var, over complete
// multiplier spaces of growing total degree.
EliminandResult eliminand_extract(std::span<const Polynomial> polys, std::size_t var, const ElimConfig& cfg);

struct StatementReport {
  int r = 0;
  SpeciesSpec target;
  std::int64_t kernel_dim = 0;
  std::optional<std::int64_t> predicted_kernel_dim;
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  bool pass = false;
  std::vector<std::string> counterexamples;
};

// For a basis of ker(f_1..f_r) at `target`, checks that each first coordinate lies in the image of
// (f_2..f_r) at target - spec_1.
StatementReport statement_check(std::span<const Polynomial> polys, const SystemSpec& specs, const SpeciesSpec& target);
// Runs statement_check on every seed of cfg; default target sum(spec) + base.
std::vector<StatementReport> statement_check_generic(const SystemSpec& sys, std::optional<SpeciesSpec> target,
                                                     const ElimConfig& cfg);

struct DemoStep {
  std::string label;
  std::string text;
};

struct DemoTrace {
  std::vector<DemoStep> steps;
  Polynomial final_equation;
  Polynomial eliminand;
  Polynomial superfluous;
  std::string summary;
};

std::vector<Polynomial> superfluous_demo_system();
DemoTrace sequential_elim_demo();

// Determinant of the Sylvester matrix in var; the deg_var(f) rows of g come first, so the value
// is the classical Res(g, f).
Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::size_t var);

// 10x10 determinant of x*U .. z*W and Jacobian/8 in the cubic monomials.
FieldElement sylvester_three_quadrics(const Polynomial& U, const Polynomial& V, const Polynomial& W);

// Ternary quadrics over F_p with uniform nonzero coefficients on all six monomials.
std::vector<Polynomial> random_quadrics(std::uint64_t p, std::uint64_t seed);
// Random quadrics corrected to vanish at a random projective point; the point is returned too.
std::vector<Polynomial> quadrics_through_point(std::uint64_t p, std::uint64_t seed, std::vector<FieldElement>* point = nullptr);

}  // namespace bezout
