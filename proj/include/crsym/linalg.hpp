#pragma once

// Exact linear algebra over Q and Q(i).

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "crsym/arith.hpp"

namespace crsym {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
struct Echelon {
  Matrix<T> rows;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

namespace detail {

// Multiplies a rational row by the lcm of its denominators.
inline std::vector<mpz_class> integer_row(const std::vector<Rat>& row) {
  mpz_class l = 1;
  for (const auto& x : row)
    if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  std::vector<mpz_class> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!row[j].is_zero()) out[j] = row[j].num() * (l / row[j].den());
  return out;
}

}  // namespace detail

// Fraction-free (Bareiss) forward elimination on the integer-scaled matrix,
// followed by back substitution over Q to reach the reduced echelon form.
inline Echelon<Rat> rref(const Matrix<Rat>& m, std::size_t ncols) {
  std::vector<std::vector<mpz_class>> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != ncols) throw DimensionError("rref: ragged matrix");
    auto r = detail::integer_row(row);
    if (std::any_of(r.begin(), r.end(), [](const mpz_class& x) { return x != 0; })) a.push_back(std::move(r));
  }

  const std::size_t nrows = a.size();
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  Echelon<Rat> e;
  e.pivots = pivots;
  e.rows.assign(r, std::vector<Rat>(ncols));
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class& lead = a[i][pivots[i]];
    for (std::size_t j = 0; j < ncols; ++j)
      if (a[i][j] != 0) e.rows[i][j] = Rat(a[i][j], lead);
  }
  for (std::size_t i = r; i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      Rat f = e.rows[k][pivots[i]];
      if (f.is_zero()) continue;
      for (std::size_t j = pivots[i]; j < ncols; ++j)
        if (!e.rows[i][j].is_zero()) e.rows[k][j] -= f * e.rows[i][j];
    }
  }
  return e;
}

inline std::size_t rank(const Matrix<Rat>& m, std::size_t ncols) { return rref(m, ncols).pivots.size(); }

// Scales v to coprime integer entries with a positive first nonzero entry.
inline std::vector<Rat> primitive(std::vector<Rat> v) {
  mpz_class l = 1;
  for (const auto& x : v)
    if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  mpz_class g = 0;
  for (auto& x : v) {
    x *= Rat(l);
    if (!x.is_zero()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
  }
  if (g == 0) return v;
  auto lead = std::find_if(v.begin(), v.end(), [](const Rat& x) { return !x.is_zero(); });
  if (lead->sign() < 0) g = -g;
  for (auto& x : v) x /= Rat(g);
  return v;
}

// Basis of {x : m x = 0}, one vector per free column in increasing order,
// each scaled by primitive().
inline std::vector<std::vector<Rat>> kernel_basis(const Matrix<Rat>& m, std::size_t ncols) {
  Echelon<Rat> e = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(ncols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

// Gauss-Jordan over an exact field (Rat or GaussRat).
template <class T>
Echelon<T> rref_field(Matrix<T> a, std::size_t ncols) {
  Echelon<T> e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    T inv = T(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      T f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j) a[i][j] -= f * a[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

template <class T>
T determinant(Matrix<T> a) {
  const std::size_t n = a.size();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return T(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    T inv = T(1) / a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      T f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

template <class T>
Matrix<T> identity(std::size_t n) {
  Matrix<T> m(n, std::vector<T>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix<T> r(n, std::vector<T>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

}  // namespace crsym
