#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bezout/exact.hpp"

namespace bezout {

struct PrimeOps {
  using T = std::uint64_t;
  Modulus m;
  explicit PrimeOps(std::uint64_t p) : m(p) {}
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return a == 0; }
  T sub(const T& a, const T& b) const { return m.sub(a, b); }
  T add(const T& a, const T& b) const { return m.add(a, b); }
  T mul(const T& a, const T& b) const { return m.mul(a, b); }
  T neg(const T& a) const { return m.neg(a); }
  T inv(const T& a) const { return m.inv(a); }
};

struct RationalOps {
  using T = Rational;
  T zero() const { return T(0); }
  T one() const { return T(1); }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T sub(const T& a, const T& b) const { return T(a - b); }
  T add(const T& a, const T& b) const { return T(a + b); }
  T mul(const T& a, const T& b) const { return T(a * b); }
  T neg(const T& a) const { return T(-a); }
  T inv(const T& a) const { return T(1 / a); }
};

template <class T>
using SparseVec = std::vector<std::pair<std::uint32_t, T>>;

// Incremental row-echelon basis of a subspace of K^dim. Coordinates with higher index are
// eliminated first, so a stored vector's pivot is its highest nonzero coordinate.
// With tracking, each stored vector remembers its combination of inserted input vectors.
template <class Ops>
class Echelon {
 public:
  using T = typename Ops::T;

  Echelon(std::size_t dim, Ops ops, bool track = false) : dim_(dim), ops_(std::move(ops)), track_(track), pivot_(dim, -1) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  // Inserts a dense vector (consumed). Returns true when the rank grows. When tracking and the
  // vector is dependent, last_relation() holds a combination of inputs that vanishes.
  bool insert(std::vector<T>& v) {
    std::vector<T> dense_combo;
    if (track_) {
      dense_combo.assign(inputs_ + 1, ops_.zero());
      dense_combo[inputs_] = ops_.one();
    }
    ++inputs_;
    for (std::size_t i = dim_; i-- > 0;) {
      if (ops_.is_zero(v[i])) continue;
      long p = pivot_[i];
      if (p >= 0) {
        T c = v[i];
        const Row& r = rows_[static_cast<std::size_t>(p)];
        for (auto& [j, val] : r.entries) v[j] = ops_.sub(v[j], ops_.mul(c, val));
        v[i] = ops_.zero();
        if (track_)
          for (auto& [j, val] : r.combo) dense_combo[j] = ops_.sub(dense_combo[j], ops_.mul(c, val));
        continue;
      }
      T inv = ops_.inv(v[i]);
      Row r;
      r.pivot = static_cast<std::uint32_t>(i);
      for (std::size_t j = 0; j < i; ++j)
        if (!ops_.is_zero(v[j])) r.entries.emplace_back(static_cast<std::uint32_t>(j), ops_.mul(v[j], inv));
      if (track_)
        for (std::size_t j = 0; j < dense_combo.size(); ++j)
          if (!ops_.is_zero(dense_combo[j])) r.combo.emplace_back(static_cast<std::uint32_t>(j), ops_.mul(dense_combo[j], inv));
      pivot_[i] = static_cast<long>(rows_.size());
      rows_.push_back(std::move(r));
      return true;
    }
    if (track_) {
      relation_.clear();
      for (std::size_t j = 0; j < dense_combo.size(); ++j)
        if (!ops_.is_zero(dense_combo[j])) relation_.emplace_back(static_cast<std::uint32_t>(j), dense_combo[j]);
    }
    return false;
  }

  // Reduces v against the basis in place; true when it reduces to zero.
  bool reduce(std::vector<T>& v) const {
    for (std::size_t i = dim_; i-- > 0;) {
      if (ops_.is_zero(v[i])) continue;
      long p = pivot_[i];
      if (p < 0) return false;
      T c = v[i];
      for (auto& [j, val] : rows_[static_cast<std::size_t>(p)].entries) v[j] = ops_.sub(v[j], ops_.mul(c, val));
      v[i] = ops_.zero();
    }
    return true;
  }

  bool in_span(std::vector<T> v) const { return reduce(v); }

  const SparseVec<T>& last_relation() const noexcept { return relation_; }

  // Pivot coordinates and normalized stored vectors (pivot coefficient 1, implicit).
  struct Row {
    std::uint32_t pivot = 0;
    SparseVec<T> entries;
    SparseVec<T> combo;
  };
  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::optional<std::size_t> row_with_pivot(std::size_t i) const {
    if (pivot_[i] < 0) return std::nullopt;
    return static_cast<std::size_t>(pivot_[i]);
  }
  const Ops& ops() const noexcept { return ops_; }

 private:
  std::size_t dim_;
  Ops ops_;
  bool track_;
  std::size_t inputs_ = 0;
  std::vector<long> pivot_;
  std::vector<Row> rows_;
  SparseVec<T> relation_;
};

// Rank of an integer matrix by Bareiss fraction-free elimination.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m);

// Determinant over a field by Gaussian elimination.
FieldElement determinant(std::vector<std::vector<FieldElement>> m, const Field& field);

// Determinant of a polynomial matrix by Bareiss elimination with exact polynomial division.
Polynomial polynomial_determinant(std::vector<std::vector<Polynomial>> m, std::size_t nvars, const Field& field);

}  // namespace bezout
