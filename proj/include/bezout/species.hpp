#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bezout/exact.hpp"

namespace bezout {

enum class SpeciesKind { complete, first, second, third, truncated };

const char* kind_name(SpeciesKind k) noexcept;
SpeciesKind parse_kind(const std::string& name);

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

// A support description together with its degree parameters. The same type carries
// shifted parameter tuples (T, A, B, S) for counting functions and finite differences.
struct SpeciesSpec {
  SpeciesKind kind = SpeciesKind::complete;
  int n = 0;
  std::int64_t t = 0;
  std::vector<std::int64_t> a;  // first, second, third, truncated
  std::vector<std::int64_t> b;  // one entry for second, three for third/truncated
  std::vector<std::int64_t> s;  // three entries for truncated

  static SpeciesSpec complete(int n, std::int64_t t);
  static SpeciesSpec first(std::int64_t t, std::vector<std::int64_t> a);
  static SpeciesSpec second(std::int64_t t, std::vector<std::int64_t> a, std::int64_t b);
  static SpeciesSpec third(std::int64_t t, std::vector<std::int64_t> a, std::vector<std::int64_t> b);
  static SpeciesSpec truncated(std::int64_t t, std::vector<std::int64_t> a, std::vector<std::int64_t> b,
                               std::vector<std::int64_t> s);
  static SpeciesSpec zero_like(const SpeciesSpec& shape);

  // Throws invalid_argument when field lengths do not fit the kind.
  void check_shape() const;
  bool same_shape(const SpeciesSpec& o) const noexcept;

  // Flattened parameters: t, a..., b..., s...
  std::vector<std::int64_t> params() const;
  static SpeciesSpec from_params(SpeciesKind kind, int n, const std::vector<std::int64_t>& flat);

  SpeciesSpec operator+(const SpeciesSpec& o) const;
  SpeciesSpec operator-(const SpeciesSpec& o) const;
  SpeciesSpec scaled(std::int64_t k) const;
  bool all_nonnegative() const;
  std::int64_t max_param() const;

  friend bool operator==(const SpeciesSpec&, const SpeciesSpec&) = default;

  std::string to_string() const;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
};

ValidationReport validate_spec(const SpeciesSpec& spec);
inline bool is_valid(const SpeciesSpec& spec) { return validate_spec(spec).valid; }

// Membership in the inequality system, for any parameter values.
bool in_support(const SpeciesSpec& spec, const MultiIndex& k);

// Lattice points of the inequality system in graded-lex order. Parameters need not be valid;
// negative parameters give the empty set.
std::vector<MultiIndex> enumerate_support(const SpeciesSpec& spec, std::size_t cap = kDefaultEnumerationCap);
std::int64_t count_enumerated(const SpeciesSpec& spec, std::size_t cap = kDefaultEnumerationCap);

// C(m, k) with C(m, k) = 0 whenever m < k or m < 0.
std::int64_t binom(std::int64_t m, std::int64_t k);

struct FormClass {
  int form_index = 1;
  std::array<std::int64_t, 3> H{};
  bool boundary = false;
  std::vector<int> matching;  // every form whose sign pattern H satisfies
};

// H_i = t - b_{i+1} - b_{i+2} + a_i over third or truncated parameters.
std::array<std::int64_t, 3> third_H(const SpeciesSpec& spec);
FormClass classify_form(const SpeciesSpec& spec);
// Sign pattern of a form: +1 means H_i >= 0 is required, -1 means H_i <= 0.
std::array<int, 3> form_signs(int form);

// Closed-form count. Complete, First and Second formulas are total functions of the parameters;
// ThirdN3 uses the form selected by the H signs; TruncatedN3 uses the truncated formula.
std::int64_t count_closed_form(const SpeciesSpec& spec);
// The per-form third-species count P_form; out_of_domain unless H matches the form's signs.
std::int64_t count_third_form(const SpeciesSpec& spec, int form);
// Parameters where count_closed_form is known to agree with enumeration.
bool closed_form_domain(const SpeciesSpec& spec);

struct VertexSet {
  std::vector<MultiIndex> points;  // deduplicated, graded-lex order
  std::size_t candidates = 0;      // n^2+2n-3 before deduplication
  bool nondegenerate = false;      // all candidates distinct
};

// The nine vertex classes of a Second spec, in class order, duplicates kept.
std::vector<MultiIndex> vertex_candidates(const SpeciesSpec& spec);
VertexSet vertices(const SpeciesSpec& spec);

// Exact convex hull of a finite lattice point set by facet enumeration.
class LatticeHull {
 public:
  explicit LatticeHull(const std::vector<MultiIndex>& points);
  bool contains(const MultiIndex& p) const;
  std::size_t dimension() const noexcept { return dim_; }
  std::size_t facet_count() const noexcept { return facets_.size(); }

 private:
  struct Halfspace {
    std::vector<std::int64_t> normal;
    std::int64_t offset;  // normal . x <= offset
  };
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  bool empty_ = true;
  std::vector<MultiIndex> pts_;
  std::vector<std::int64_t> origin_;
  std::vector<std::vector<std::int64_t>> basis_;  // independent difference vectors
  std::vector<std::size_t> coords_;               // projection coordinates
  std::vector<Halfspace> facets_;
  bool in_affine_hull(const MultiIndex& p) const;
};

// Componentwise parameter sum. Refuses ThirdN3 (its supports are not closed under sums).
SpeciesSpec minkowski_add(const SpeciesSpec& p, const SpeciesSpec& q);
// s_i = min(t + a_i, b_{i+1} + b_{i+2}).
SpeciesSpec default_s(const SpeciesSpec& spec);
// Truncated parameters carrying the same lattice set; identity for other kinds.
SpeciesSpec closure_spec(const SpeciesSpec& spec);

// Support exactly E(spec), coefficients uniform in F_p minus zero, in graded-lex draw order.
Polynomial random_generic(const SpeciesSpec& spec, std::uint64_t p, std::uint64_t seed);

}  // namespace bezout
