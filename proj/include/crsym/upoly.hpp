#pragma once

// Dense univariate polynomials over an exact field, with gcd and Sturm
// sequences. Coefficients are stored lowest degree first.

#include <cstddef>
#include <utility>
#include <vector>

#include "crsym/arith.hpp"
#include "crsym/linalg.hpp"

namespace crsym {

template <class T>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static UPoly monomial(std::size_t k, T c = T(1)) {
    std::vector<T> v(k + 1);
    v[k] = std::move(c);
    return UPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const T& leading() const { return c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(); }

  UPoly derivative() const {
    std::vector<T> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * T(static_cast<long>(k)));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    UPoly r(*this);
    T inv = T(1) / leading();
    for (auto& x : r.c_) x *= inv;
    return r;
  }

  T operator()(const T& x) const {
    T acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return UPoly(std::move(r));
  }
  UPoly operator-() const {
    UPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  // Euclidean division: a = q b + r with deg r < deg b.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    std::vector<T> rem = a.c_;
    std::vector<T> quot(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
    T inv = T(1) / b.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
      T f = rem[k + b.c_.size() - 1] * inv;
      quot[k] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<T> c_;
};

// Monic gcd (zero if both inputs are zero).
template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
  while (!b.is_zero()) {
    auto r = UPoly<T>::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class T>
bool is_squarefree(const UPoly<T>& p) {
  return gcd(p, p.derivative()).degree() <= 0;
}

template <class T>
UPoly<T> squarefree_part(const UPoly<T>& p) {
  if (p.degree() <= 0) return p;
  return UPoly<T>::divmod(p, gcd(p, p.derivative())).first;
}

// Number of distinct real roots, from the sign changes of the Sturm sequence
// at -infinity and +infinity.
inline std::size_t sturm_real_root_count(const UPoly<Rat>& p) {
  if (p.degree() <= 0) return 0;
  std::vector<UPoly<Rat>> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto r = UPoly<Rat>::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto changes = [&](bool at_plus) {
    std::size_t v = 0;
    int last = 0;
    for (const auto& q : seq) {
      int s = q.leading().sign();
      if (!at_plus && (q.degree() % 2 == 1)) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return changes(false) - changes(true);
}

// det(t I - A) via Faddeev-LeVerrier.
template <class T>
UPoly<T> characteristic_polynomial(const Matrix<T>& a) {
  const std::size_t n = a.size();
  std::vector<T> c(n + 1);
  c[n] = T(1);
  Matrix<T> m(n, std::vector<T>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> am = multiply(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    Matrix<T> prod = multiply(a, m);
    T tr;
    for (std::size_t i = 0; i < n; ++i) tr += prod[i][i];
    c[n - k] = -tr / T(static_cast<long>(k));
  }
  return UPoly<T>(std::move(c));
}

// Monic minimal polynomial from the first linear dependency among I, A, A^2, ...
template <class T>
UPoly<T> minimal_polynomial(const Matrix<T>& a) {
  const std::size_t n = a.size();
  if (n == 0) return UPoly<T>::monomial(0);
  std::vector<Matrix<T>> powers{identity<T>(n)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(multiply(a, powers.back()));
    Matrix<T> sys(n * n, std::vector<T>(k + 1));
    for (std::size_t p = 0; p <= k; ++p)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sys[i * n + j][p] = powers[p][i][j];
    auto e = rref_field(sys, k + 1);
    if (e.pivots.size() == k + 1) continue;
    std::vector<T> coeffs(k + 1);
    coeffs[k] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) coeffs[e.pivots[r]] = -e.rows[r][k];
    return UPoly<T>(std::move(coeffs));
  }
  return characteristic_polynomial(a);  // unreachable by Cayley-Hamilton
}

}  // namespace crsym
