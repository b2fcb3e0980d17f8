#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "bezout/error.hpp"

namespace bezout {

using Rational = mpq_class;

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

bool is_prime_u64(std::uint64_t n);

// Arithmetic modulo a prime below 2^63.
class Modulus {
 public:
  explicit Modulus(std::uint64_t p = kMersenne61);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    if (mersenne_) {
      std::uint64_t lo = static_cast<std::uint64_t>(x) & kMersenne61;
      std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
      std::uint64_t r = lo + hi;
      return r >= kMersenne61 ? r - kMersenne61 : r;
    }
    return static_cast<std::uint64_t>(x % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t from_rational(const Rational& q) const;
  std::uint64_t from_int(std::int64_t v) const noexcept;

 private:
  std::uint64_t p_;
  bool mersenne_;
};

// Q or F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  Modulus modulus() const;
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldElement;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

struct Residue {
  std::uint64_t value;
  std::uint64_t p;
};

class FieldElement {
 public:
  FieldElement() : v_(Rational(0)) {}
  explicit FieldElement(Rational q);
  FieldElement(std::uint64_t residue, std::uint64_t p);
  static FieldElement from_int(std::int64_t v, const Field& f);
  static FieldElement from_rational(const Rational& q, const Field& f);
  static FieldElement zero(const Field& f) { return from_int(0, f); }
  static FieldElement one(const Field& f) { return from_int(1, f); }

  Field field() const;
  bool is_rational() const noexcept { return std::holds_alternative<Rational>(v_); }
  bool is_zero() const;
  bool is_one() const;
  const Rational& rational() const;
  std::uint64_t residue() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Rationals print as "n" or "n/d"; residues as their integer value.
  std::string to_string() const;
  // Negative-looking for text output: a negative rational, never a residue.
  bool looks_negative() const;

 private:
  void require_same(const FieldElement& o) const;
  std::variant<Rational, Residue> v_;
};

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  MultiIndex(std::initializer_list<int> e) : e_(e) {}
  explicit MultiIndex(std::vector<int> e) : e_(std::move(e)) {}

  std::size_t size() const noexcept { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  const std::vector<int>& exponents() const noexcept { return e_; }
  long total() const noexcept;
  MultiIndex operator+(const MultiIndex& o) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> e_;
};

// Graded lexicographic: lower total degree first, ties broken lexicographically with x1 > x2 > ...
struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const noexcept;
};

std::string to_string(const MultiIndex& m);

class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, FieldElement, GrlexLess>;

  Polynomial(std::size_t nvars, Field field) : nvars_(nvars), field_(field) {}
  static Polynomial constant(std::size_t nvars, const FieldElement& c);
  static Polynomial variable(std::size_t nvars, std::size_t index, const Field& field);
  static Polynomial monomial(const MultiIndex& m, const FieldElement& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const Field& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  FieldElement coefficient(const MultiIndex& m) const;
  // Adds c to the coefficient of m, pruning zero results.
  void add_term(const MultiIndex& m, const FieldElement& c);

  long degree() const;
  int degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  bool is_homogeneous() const;
  // Leading term in grlex order; throws on zero.
  std::pair<MultiIndex, FieldElement> leading() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(const FieldElement& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial shifted(const MultiIndex& m) const;  // multiplication by x^m
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial substitute(std::size_t var, const Polynomial& g) const;
  FieldElement evaluate(std::span<const FieldElement> point) const;
  Polynomial derivative(std::size_t var) const;
  // Coefficients in var: result[k] holds the coefficient of var^k, with var removed.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  // Scaled so the leading coefficient is 1.
  Polynomial monic() const;

  // Exact division; throws math_failure when d does not divide this.
  Polynomial divide_exact(const Polynomial& d) const;
  // Division with remainder by a univariate-in-var divisor with a unit leading coefficient.
  std::pair<Polynomial, Polynomial> divmod_univariate(const Polynomial& d, std::size_t var) const;

 private:
  void require_compatible(const Polynomial& o) const;
  std::size_t nvars_;
  Field field_;
  TermMap terms_;
};

std::vector<std::string> default_variable_names(std::size_t nvars);

// c*x1^e1*...*xn^en joined by + and -; terms in descending grlex order.
std::string to_text(const Polynomial& f, const std::vector<std::string>& names = {});
// Compact form without '*' and with single-letter names, e.g. "4y^2+4xy-4x-4y".
std::string to_compact_text(const Polynomial& f, const std::vector<std::string>& names);

// Accepts the text form above, implicit products ("4xy" with single-letter names), and parentheses.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names, const Field& field);

}  // namespace bezout
