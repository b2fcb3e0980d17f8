#include "bezout/linalg.hpp"

namespace bezout {

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

FieldElement determinant(std::vector<std::vector<FieldElement>> m, const Field& field) {
  const std::size_t n = m.size();
  FieldElement det = FieldElement::one(field);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].size() != n) fail(Errc::mismatch, "determinant of a non-square matrix");
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return FieldElement::zero(field);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    FieldElement inv = m[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      FieldElement f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return det;
}

Polynomial polynomial_determinant(std::vector<std::vector<Polynomial>> m, std::size_t nvars, const Field& field) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(nvars, FieldElement::one(field));
  Polynomial prev = Polynomial::constant(nvars, FieldElement::one(field));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Polynomial(nvars, field);
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
      m[i][k] = Polynomial(nvars, field);
    }
    prev = m[k][k];
  }
  Polynomial d = m[n - 1][n - 1];
  return negate ? -d : d;
}

}  // namespace bezout
