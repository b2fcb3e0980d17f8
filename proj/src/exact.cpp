#include "bezout/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bezout {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::mismatch: return "mismatch";
    case Errc::out_of_range: return "out_of_range";
    case Errc::invalid_spec: return "invalid_spec";
    case Errc::size_cap: return "size_cap";
    case Errc::out_of_domain: return "out_of_domain";
    case Errc::math_failure: return "math_failure";
    case Errc::parse_error: return "parse_error";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

// ---------------------------------------------------------------- primes

namespace {

std::uint64_t mulmod_generic(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_generic(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_generic(r, a, m);
    a = mulmod_generic(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_generic(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_generic(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Modulus::Modulus(std::uint64_t p) : p_(p), mersenne_(p == kMersenne61) {
  if (p < 2 || p >= (std::uint64_t{1} << 63)) fail(Errc::invalid_argument, "modulus must be in [2, 2^63)");
}

std::uint64_t Modulus::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Modulus::inv(std::uint64_t a) const {
  if (a % p_ == 0) fail(Errc::math_failure, "division by zero in F_p");
  return pow(a, p_ - 2);
}

std::uint64_t Modulus::from_int(std::int64_t v) const noexcept {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
  std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return neg(m % p_);
}

std::uint64_t Modulus::from_rational(const Rational& q) const {
  mpz_class pz;
  mpz_set_ui(pz.get_mpz_t(), 0);
  mpz_import(pz.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &p_);
  auto reduce = [&](const mpz_class& z) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(std::uint64_t), 0, 0, r.get_mpz_t());
    return out;
  };
  std::uint64_t num = reduce(q.get_num());
  std::uint64_t den = reduce(q.get_den());
  if (den == 0) fail(Errc::math_failure, "rational denominator vanishes modulo p");
  return mul(num, inv(den));
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) fail(Errc::invalid_argument, "not a prime: " + std::to_string(p));
  if (p >= (std::uint64_t{1} << 63)) fail(Errc::invalid_argument, "prime must be below 2^63");
  return Field(p);
}

Modulus Field::modulus() const {
  if (p_ == 0) fail(Errc::mismatch, "rational field has no modulus");
  return Modulus(p_);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(Rational q) : v_(std::move(q)) { std::get<Rational>(v_).canonicalize(); }

FieldElement::FieldElement(std::uint64_t residue, std::uint64_t p) : v_(Residue{residue % p, p}) {}

FieldElement FieldElement::from_int(std::int64_t v, const Field& f) {
  if (f.is_rational()) return FieldElement(Rational(static_cast<long>(v)));
  Modulus m(f.characteristic());
  return FieldElement(m.from_int(v), f.characteristic());
}

FieldElement FieldElement::from_rational(const Rational& q, const Field& f) {
  if (f.is_rational()) return FieldElement(q);
  Modulus m(f.characteristic());
  return FieldElement(m.from_rational(q), f.characteristic());
}

Field FieldElement::field() const {
  if (is_rational()) return Field::rationals();
  return Field(std::get<Residue>(v_).p);
}

bool FieldElement::is_zero() const {
  if (is_rational()) return sgn(std::get<Rational>(v_)) == 0;
  return std::get<Residue>(v_).value == 0;
}

bool FieldElement::is_one() const {
  if (is_rational()) return std::get<Rational>(v_) == 1;
  return std::get<Residue>(v_).value == 1;
}

const Rational& FieldElement::rational() const {
  if (!is_rational()) fail(Errc::mismatch, "element is not rational");
  return std::get<Rational>(v_);
}

std::uint64_t FieldElement::residue() const {
  if (is_rational()) fail(Errc::mismatch, "element is not a residue");
  return std::get<Residue>(v_).value;
}

void FieldElement::require_same(const FieldElement& o) const {
  if (is_rational() != o.is_rational() ||
      (!is_rational() && std::get<Residue>(v_).p != std::get<Residue>(o.v_).p)) {
    fail(Errc::mismatch, "field mismatch between coefficients");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  if (is_rational()) return FieldElement(Rational(std::get<Rational>(v_) + std::get<Rational>(o.v_)));
  auto& a = std::get<Residue>(v_);
  return FieldElement(Modulus(a.p).add(a.value, std::get<Residue>(o.v_).value), a.p);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  if (is_rational()) return FieldElement(Rational(std::get<Rational>(v_) - std::get<Rational>(o.v_)));
  auto& a = std::get<Residue>(v_);
  return FieldElement(Modulus(a.p).sub(a.value, std::get<Residue>(o.v_).value), a.p);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  if (is_rational()) return FieldElement(Rational(std::get<Rational>(v_) * std::get<Rational>(o.v_)));
  auto& a = std::get<Residue>(v_);
  return FieldElement(Modulus(a.p).mul(a.value, std::get<Residue>(o.v_).value), a.p);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(Errc::math_failure, "division by zero");
  if (is_rational()) return FieldElement(Rational(1 / std::get<Rational>(v_)));
  auto& a = std::get<Residue>(v_);
  return FieldElement(Modulus(a.p).inv(a.value), a.p);
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::operator-() const {
  if (is_rational()) return FieldElement(Rational(-std::get<Rational>(v_)));
  auto& a = std::get<Residue>(v_);
  return FieldElement(Modulus(a.p).neg(a.value), a.p);
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (is_rational() != o.is_rational()) return false;
  if (is_rational()) return std::get<Rational>(v_) == std::get<Rational>(o.v_);
  auto& a = std::get<Residue>(v_);
  auto& b = std::get<Residue>(o.v_);
  return a.p == b.p && a.value == b.value;
}

std::string FieldElement::to_string() const {
  if (is_rational()) return std::get<Rational>(v_).get_str();
  return std::to_string(std::get<Residue>(v_).value);
}

bool FieldElement::looks_negative() const { return is_rational() && sgn(std::get<Rational>(v_)) < 0; }

// ---------------------------------------------------------------- MultiIndex

long MultiIndex::total() const noexcept {
  long s = 0;
  for (int v : e_) s += v;
  return s;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.size() != size()) fail(Errc::mismatch, "multi-index length mismatch");
  MultiIndex r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const noexcept {
  long da = a.total(), db = b.total();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

std::string to_string(const MultiIndex& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const FieldElement& c) {
  Polynomial p(nvars, c.field());
  p.add_term(MultiIndex(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, const Field& field) {
  if (index >= nvars) fail(Errc::out_of_range, "variable index out of range");
  MultiIndex m(nvars);
  m[index] = 1;
  Polynomial p(nvars, field);
  p.add_term(m, FieldElement::one(field));
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& m, const FieldElement& c) {
  Polynomial p(m.size(), c.field());
  p.add_term(m, c);
  return p;
}

FieldElement Polynomial::coefficient(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

void Polynomial::add_term(const MultiIndex& m, const FieldElement& c) {
  if (m.size() != nvars_) fail(Errc::mismatch, "term length differs from nvars");
  for (int e : m.exponents())
    if (e < 0) fail(Errc::invalid_argument, "negative exponent");
  if (c.field() != field_) fail(Errc::mismatch, "coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

long Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.total();
}

int Polynomial::degree_in(std::size_t var) const {
  if (var >= nvars_) fail(Errc::out_of_range, "variable index out of range");
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m[var]);
  return terms_.empty() ? -1 : d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = terms_.begin()->first.total();
  for (auto& [m, c] : terms_)
    if (m.total() != d) return false;
  return true;
}

std::pair<MultiIndex, FieldElement> Polynomial::leading() const {
  if (terms_.empty()) fail(Errc::invalid_argument, "zero polynomial has no leading term");
  return *terms_.rbegin();
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (o.nvars_ != nvars_) fail(Errc::mismatch, "nvars mismatch");
  if (o.field_ != field_) fail(Errc::mismatch, "field mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_compatible(o);
  Polynomial r(*this);
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_compatible(o);
  Polynomial r(*this);
  for (auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_, field_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_compatible(o);
  Polynomial r(nvars_, field_);
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
  return r;
}

Polynomial Polynomial::scale(const FieldElement& c) const {
  if (c.field() != field_) fail(Errc::mismatch, "scalar field mismatch");
  Polynomial r(nvars_, field_);
  if (c.is_zero()) return r;
  for (auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(nvars_, FieldElement::one(field_));
  Polynomial b(*this);
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Polynomial Polynomial::shifted(const MultiIndex& s) const {
  Polynomial r(nvars_, field_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m + s, c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return nvars_ == o.nvars_ && field_ == o.field_ && terms_ == o.terms_;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& g) const {
  if (var >= nvars_) fail(Errc::out_of_range, "substitution variable out of range");
  require_compatible(g);
  if (g.involves(var)) fail(Errc::invalid_argument, "substituted polynomial involves the variable itself");
  int d = degree_in(var);
  std::vector<Polynomial> powers;
  powers.push_back(constant(nvars_, FieldElement::one(field_)));
  for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * g);
  Polynomial r(nvars_, field_);
  for (auto& [m, c] : terms_) {
    MultiIndex rest = m;
    int k = rest[var];
    rest[var] = 0;
    for (auto& [pm, pc] : powers[k].terms_) r.add_term(pm + rest, pc * c);
  }
  return r;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != nvars_) fail(Errc::mismatch, "evaluation point has wrong length");
  FieldElement acc = FieldElement::zero(field_);
  for (auto& [m, c] : terms_) {
    FieldElement t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < m[i]; ++k) t = t * point[i];
    acc = acc + t;
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) fail(Errc::out_of_range, "variable index out of range");
  Polynomial r(nvars_, field_);
  for (auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    MultiIndex d = m;
    d[var] -= 1;
    r.add_term(d, c * FieldElement::from_int(m[var], field_));
  }
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  int d = degree_in(var);
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(d, 0) + 1), Polynomial(nvars_, field_));
  for (auto& [m, c] : terms_) {
    MultiIndex rest = m;
    int k = rest[var];
    rest[var] = 0;
    out[k].add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scale(terms_.rbegin()->second.inverse());
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
  require_compatible(d);
  if (d.is_zero()) fail(Errc::math_failure, "division by zero polynomial");
  auto [lm, lc] = d.leading();
  FieldElement lci = lc.inverse();
  Polynomial rem(*this), q(nvars_, field_);
  while (!rem.is_zero()) {
    auto [rm, rc] = rem.leading();
    MultiIndex s(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      s[i] = rm[i] - lm[i];
      if (s[i] < 0) fail(Errc::math_failure, "inexact polynomial division");
    }
    FieldElement f = rc * lci;
    q.add_term(s, f);
    rem = rem - d.shifted(s).scale(f);
  }
  return q;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod_univariate(const Polynomial& d, std::size_t var) const {
  require_compatible(d);
  for (auto& [m, c] : d.terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != var && m[i] != 0) fail(Errc::invalid_argument, "divisor is not univariate");
  if (d.is_zero()) fail(Errc::math_failure, "division by zero polynomial");
  int dd = d.degree_in(var);
  FieldElement lci = d.leading().second.inverse();
  Polynomial rem(*this), q(nvars_, field_);
  while (!rem.is_zero() && rem.degree_in(var) >= dd) {
    int rd = rem.degree_in(var);
    Polynomial top(nvars_, field_);
    for (auto& [m, c] : rem.terms_)
      if (m[var] == rd) {
        MultiIndex s = m;
        s[var] -= dd;
        top.add_term(s, c * lci);
      }
    q = q + top;
    rem = rem - top * d;
  }
  return {q, rem};
}

// ---------------------------------------------------------------- text I/O

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < nvars; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

namespace {

std::string render(const Polynomial& f, const std::vector<std::string>& names_in, bool compact) {
  auto names = names_in.empty() ? default_variable_names(f.nvars()) : names_in;
  if (names.size() != f.nvars()) fail(Errc::mismatch, "variable name count differs from nvars");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool neg = c.looks_negative();
    FieldElement mag = neg ? -c : c;
    std::string mono;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty() && !compact) mono += "*";
      mono += names[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string coef = mag.to_string();
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (mag.is_one()) {
      term = mono;
    } else {
      term = coef + (compact ? "" : "*") + mono;
    }
    if (first) {
      out += neg ? "-" + term : term;
    } else {
      out += (neg ? "-" : "+") + term;
    }
    first = false;
  }
  return out;
}

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& names, const Field& field)
      : s_(s), names_(names), field_(field) {
    single_letters_ = std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
  }

  Polynomial parse() {
    Polynomial r = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& why) {
    fail(Errc::parse_error, "polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Polynomial expr() {
    Polynomial acc(names_.size(), field_);
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    } else if (peek('+')) {
      ++pos_;
    }
    Polynomial t = term();
    acc = negate ? acc - t : acc + t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (peek('/')) {
        ++pos_;
        Rational q = number();
        if (sgn(q) == 0) error("division by zero");
        acc = acc.scale(FieldElement::from_rational(Rational(1 / q), field_));
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      Rational e = number();
      if (e.get_den() != 1 || sgn(e) < 0 || e > 100000) error("bad exponent");
      base = base.pow(static_cast<unsigned>(e.get_num().get_ui()));
    }
    return base;
  }

  Rational number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return Rational(mpz_class(s_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial r = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q = number();
      // A literal fraction such as 3/4 binds as one coefficient.
      if (peek('/')) {
        std::size_t save = pos_;
        ++pos_;
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          Rational d = number();
          if (sgn(d) == 0) error("division by zero");
          q /= d;
        } else {
          pos_ = save;
        }
      }
      return Polynomial::constant(names_.size(), FieldElement::from_rational(q, field_));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      auto it = std::find(names_.begin(), names_.end(), id);
      if (it != names_.end()) return Polynomial::variable(names_.size(), it - names_.begin(), field_);
      if (single_letters_) {
        // Juxtaposed single-letter variables, e.g. "xy^2": one letter per factor so that
        // an exponent binds to the last letter only.
        auto jt = std::find(names_.begin(), names_.end(), std::string(1, id[0]));
        if (jt == names_.end()) {
          pos_ = start;
          error("unknown variable '" + id + "'");
        }
        pos_ = start + 1;
        return Polynomial::variable(names_.size(), jt - names_.begin(), field_);
      }
      pos_ = start;
      error("unknown variable '" + id + "'");
    }
    error(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  const std::vector<std::string>& names_;
  Field field_;
  std::size_t pos_ = 0;
  bool single_letters_ = false;
};

}  // namespace

std::string to_text(const Polynomial& f, const std::vector<std::string>& names) { return render(f, names, false); }

std::string to_compact_text(const Polynomial& f, const std::vector<std::string>& names) {
  return render(f, names, true);
}

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names, const Field& field) {
  if (names.empty()) fail(Errc::invalid_argument, "at least one variable name required");
  Parser p(text, names, field);
  return p.parse();
}

}  // namespace bezout
