#pragma once

// Exact scalars (Q and Q(i)) and multi-indices.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crsym/errors.hpp"

namespace crsym {

// Arbitrary precision rational, always in lowest terms with a positive
// denominator, so structural equality is value equality.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(mpz_class v) : v_(std::move(v)) {}
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "p" or "p/q" with optional sign and surrounding blanks.
  static Rat parse(std::string_view text) {
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos) throw ArithmeticError("empty rational literal");
    std::string s(text.substr(first, last - first + 1));
    auto slash = s.find('/');
    auto valid_int = [](std::string_view t, bool allow_sign) {
      if (!t.empty() && allow_sign && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
      return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string num = s.substr(0, slash);
    if (!num.empty() && num.front() == '+') num.erase(0, 1);
    if (!valid_int(num, true)) throw ArithmeticError("malformed rational literal '" + s + "'");
    if (slash == std::string::npos) return Rat(mpz_class(num));
    std::string den = s.substr(slash + 1);
    if (!valid_int(den, false)) throw ArithmeticError("malformed rational literal '" + s + "'");
    return Rat(mpz_class(num), mpz_class(den));
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  // "p/q", or "p" when q == 1.
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

// Element of Q(i).
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(int r) : re(r) {}                // NOLINT(google-explicit-constructor)
  GaussRat(long r) : re(r) {}               // NOLINT(google-explicit-constructor)
  GaussRat(Rat r) : re(std::move(r)) {}     // NOLINT(google-explicit-constructor)
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return {Rat(0), Rat(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussRat conj() const { return {re, -im}; }
  // a * conj(a), a nonnegative rational.
  Rat norm2() const { return re * re + im * im; }

  GaussRat inverse() const {
    Rat n = norm2();
    if (n.is_zero()) throw ArithmeticError("inverse of zero");
    return {re / n, -im / n};
  }

  GaussRat operator-() const { return {-re, -im}; }
  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) {
    if (o.im.is_zero()) {
      re *= o.re;
      im *= o.re;
      return *this;
    }
    Rat r = re * o.re - im * o.im;
    Rat m = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(m);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat&, const GaussRat&) = default;

  // Human readable form: "3/2", "-i", "1/2 + 3/4*i".
  std::string str() const {
    if (im.is_zero()) return re.str();
    std::string imag;
    if (im == Rat(1)) {
      imag = "i";
    } else if (im == Rat(-1)) {
      imag = "-i";
    } else {
      imag = im.str() + "*i";
    }
    if (re.is_zero()) return imag;
    if (im.sign() < 0) {
      std::string mag = (im == Rat(-1)) ? "i" : (-im).str() + "*i";
      return re.str() + " - " + mag;
    }
    return re.str() + " + " + imag;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.str(); }
};

inline GaussRat conj(const GaussRat& a) { return a.conj(); }

// Fixed-length vector of nonnegative exponents.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  MultiIndex(std::initializer_list<std::uint32_t> e) : e_(e) {}
  explicit MultiIndex(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  static MultiIndex unit(std::size_t n, std::size_t j) {
    MultiIndex m(n);
    m.e_.at(j) = 1;
    return m;
  }

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t j) const { return e_[j]; }
  std::uint32_t& operator[](std::size_t j) { return e_[j]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }
  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t x) { return x == 0; });
  }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw DimensionError("multi-index length mismatch");
    MultiIndex r(a);
    for (std::size_t j = 0; j < a.size(); ++j) r.e_[j] += b.e_[j];
    return r;
  }

  // a - b, or nullopt when some component would become negative.
  std::optional<MultiIndex> minus(const MultiIndex& b) const {
    if (size() != b.size()) throw DimensionError("multi-index length mismatch");
    MultiIndex r(*this);
    for (std::size_t j = 0; j < size(); ++j) {
      if (r.e_[j] < b.e_[j]) return std::nullopt;
      r.e_[j] -= b.e_[j];
    }
    return r;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::uint32_t> e_;
};

// |alpha|_mu = sum_j alpha_j mu_j.
inline Rat weighted_length(const MultiIndex& alpha, std::span<const Rat> mu) {
  if (alpha.size() != mu.size())
    throw DimensionError("weighted_length: multi-index has length " + std::to_string(alpha.size()) +
                         " but weight has length " + std::to_string(mu.size()));
  Rat r;
  for (std::size_t j = 0; j < mu.size(); ++j)
    if (alpha[j] != 0) r += Rat(static_cast<long>(alpha[j])) * mu[j];
  return r;
}

// |(alpha, alpha_hat)|_mu = sum_j (alpha_j + alpha_hat_j) mu_j.
inline Rat pair_weighted_length(const MultiIndex& alpha, const MultiIndex& alpha_hat,
                                std::span<const Rat> mu) {
  if (alpha.size() != alpha_hat.size())
    throw DimensionError("pair_weighted_length: multi-index length mismatch");
  return weighted_length(alpha, mu) + weighted_length(alpha_hat, mu);
}

}  // namespace crsym
