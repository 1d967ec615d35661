#pragma once

// Sparse polynomial rings used throughout the library:
//   RealPoly  - real-valued polynomials in (z, zb)
//   HoloPoly  - holomorphic polynomials in (z, w)
//   MixedPoly - polynomials in (z, zb, u), e.g. tangency residues on M
//
// Variable indices are 0-based in the API and 1-based in text ("z1").

#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "crsym/arith.hpp"

namespace crsym {

namespace detail {

// Lexicographic order with larger leading exponents first (z1 > z2 > ...).
inline int compare_lex_desc(const MultiIndex& a, const MultiIndex& b) {
  if (a == b) return 0;
  return (b.exponents() < a.exponents()) ? -1 : 1;
}

}  // namespace detail

// z^a zb^b
struct RealKey {
  MultiIndex z;
  MultiIndex zb;

  std::size_t nvars() const { return z.size(); }
  std::uint32_t total_degree() const { return z.degree() + zb.degree(); }
  friend RealKey operator+(const RealKey& x, const RealKey& y) { return {x.z + y.z, x.zb + y.zb}; }
  friend bool operator==(const RealKey&, const RealKey&) = default;
};

// z^a w^m
struct HoloKey {
  MultiIndex z;
  std::uint32_t w = 0;

  std::size_t nvars() const { return z.size(); }
  std::uint32_t total_degree() const { return z.degree() + w; }
  friend HoloKey operator+(const HoloKey& x, const HoloKey& y) { return {x.z + y.z, x.w + y.w}; }
  friend bool operator==(const HoloKey&, const HoloKey&) = default;
};

// z^a zb^b u^k
struct MixedKey {
  MultiIndex z;
  MultiIndex zb;
  std::uint32_t u = 0;

  std::size_t nvars() const { return z.size(); }
  std::uint32_t total_degree() const { return z.degree() + zb.degree() + u; }
  friend MixedKey operator+(const MixedKey& x, const MixedKey& y) {
    return {x.z + y.z, x.zb + y.zb, x.u + y.u};
  }
  friend bool operator==(const MixedKey&, const MixedKey&) = default;
};

// Graded lexicographic order: total degree ascending, then z, zb, and the
// extra exponent in descending lex order.
struct KeyLess {
  bool operator()(const RealKey& a, const RealKey& b) const {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    if (int c = detail::compare_lex_desc(a.z, b.z)) return c < 0;
    return detail::compare_lex_desc(a.zb, b.zb) < 0;
  }
  bool operator()(const HoloKey& a, const HoloKey& b) const {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    if (int c = detail::compare_lex_desc(a.z, b.z)) return c < 0;
    return a.w > b.w;
  }
  bool operator()(const MixedKey& a, const MixedKey& b) const {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    if (int c = detail::compare_lex_desc(a.z, b.z)) return c < 0;
    if (int c = detail::compare_lex_desc(a.zb, b.zb)) return c < 0;
    return a.u > b.u;
  }
};

// Sparse polynomial with Gaussian-rational coefficients. Zero coefficients are
// never stored, so equality is structural.
template <class Key>
class SparsePoly {
 public:
  using Terms = std::map<Key, GaussRat, KeyLess>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : n_(nvars) {}
  SparsePoly(std::size_t nvars, const Key& key, const GaussRat& c) : n_(nvars) { add_term(key, c); }

  static SparsePoly constant(std::size_t nvars, const GaussRat& c) {
    return SparsePoly(nvars, unit_key(nvars), c);
  }

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  GaussRat coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? GaussRat{} : it->second;
  }

  void add_term(const Key& k, const GaussRat& c) {
    if (k.nvars() != n_) throw DimensionError("term has wrong number of variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  SparsePoly& operator*=(const GaussRat& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  SparsePoly operator-() const {
    SparsePoly r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const GaussRat& s) { return a *= s; }
  friend SparsePoly operator*(const GaussRat& s, SparsePoly a) { return a *= s; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check(b);
    SparsePoly r(a.n_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  SparsePoly pow(unsigned e) const {
    SparsePoly r = constant(n_, GaussRat(1));
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

 private:
  static Key unit_key(std::size_t n) {
    Key k;
    k.z = MultiIndex(n);
    if constexpr (requires { k.zb; }) k.zb = MultiIndex(n);
    return k;
  }

  void check(const SparsePoly& o) const {
    if (n_ != o.n_)
      throw DimensionError("polynomials in " + std::to_string(n_) + " and " + std::to_string(o.n_) +
                           " variables");
  }

  std::size_t n_ = 0;
  Terms terms_;
};

using HoloPoly = SparsePoly<HoloKey>;
using MixedPoly = SparsePoly<MixedKey>;
using ZPoly = SparsePoly<RealKey>;

// Complex conjugate: swaps z and zb exponents and conjugates coefficients.
inline MixedPoly conj(const MixedPoly& p) {
  MixedPoly r(p.nvars());
  for (const auto& [k, c] : p.terms()) r.add_term({k.zb, k.z, k.u}, c.conj());
  return r;
}

inline ZPoly conj(const ZPoly& p) {
  ZPoly r(p.nvars());
  for (const auto& [k, c] : p.terms()) r.add_term({k.zb, k.z}, c.conj());
  return r;
}

// Conjugate of a holomorphic polynomial in z (no w), as a polynomial in zb.
inline MixedPoly conj_holo(const HoloPoly& h) {
  MixedPoly r(h.nvars());
  for (const auto& [k, c] : h.terms()) {
    if (k.w != 0) throw DimensionError("conjugate of a w-dependent holomorphic polynomial");
    r.add_term({MultiIndex(h.nvars()), k.z, 0}, c.conj());
  }
  return r;
}

inline bool is_real(const MixedPoly& p) { return conj(p) == p; }
inline bool is_real(const ZPoly& p) { return conj(p) == p; }

// Real-valued polynomial P(z, zb): A_{a,b} = conj(A_{b,a}) for every term.
class RealPoly {
 public:
  RealPoly() = default;
  explicit RealPoly(std::size_t nvars) : p_(nvars) {}
  // Throws RealityError naming an offending monomial if p is not real.
  explicit RealPoly(ZPoly p) : p_(std::move(p)) { check_reality(); }
  explicit RealPoly(const MixedPoly& p) : p_(p.nvars()) {
    for (const auto& [k, c] : p.terms()) {
      if (k.u != 0) throw DimensionError("RealPoly cannot depend on u");
      p_.add_term({k.z, k.zb}, c);
    }
    check_reality();
  }

  std::size_t nvars() const { return p_.nvars(); }
  const ZPoly::Terms& terms() const { return p_.terms(); }
  const ZPoly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  GaussRat coeff(const MultiIndex& a, const MultiIndex& b) const { return p_.coeff({a, b}); }

  MixedPoly to_mixed() const {
    MixedPoly r(nvars());
    for (const auto& [k, c] : p_.terms()) r.add_term({k.z, k.zb, 0}, c);
    return r;
  }

  RealPoly& operator+=(const RealPoly& o) { p_ += o.p_; return *this; }
  RealPoly& operator-=(const RealPoly& o) { p_ -= o.p_; return *this; }
  RealPoly& operator*=(const Rat& s) { p_ *= GaussRat(s); return *this; }

  friend RealPoly operator+(RealPoly a, const RealPoly& b) { return a += b; }
  friend RealPoly operator-(RealPoly a, const RealPoly& b) { return a -= b; }
  friend RealPoly operator*(RealPoly a, const Rat& s) { return a *= s; }
  friend RealPoly operator*(const Rat& s, RealPoly a) { return a *= s; }
  friend RealPoly operator*(const RealPoly& a, const RealPoly& b) {
    RealPoly r;
    r.p_ = a.p_ * b.p_;
    return r;
  }
  friend bool operator==(const RealPoly&, const RealPoly&) = default;

 private:
  void check_reality() const;

  ZPoly p_;
};

// ---- text form ------------------------------------------------------------

namespace detail {

inline void append_var(std::string& out, const std::string& name, std::uint32_t e) {
  if (e == 0) return;
  if (!out.empty()) out += ' ';
  out += name;
  if (e > 1) out += '^' + std::to_string(e);
}

inline std::string monomial_text(const MultiIndex* z, const MultiIndex* zb, std::uint32_t w,
                                 std::uint32_t u) {
  std::string s;
  if (z)
    for (std::size_t j = 0; j < z->size(); ++j) append_var(s, "z" + std::to_string(j + 1), (*z)[j]);
  if (zb)
    for (std::size_t j = 0; j < zb->size(); ++j) append_var(s, "zb" + std::to_string(j + 1), (*zb)[j]);
  append_var(s, "w", w);
  append_var(s, "u", u);
  return s;
}

inline std::string term_text(const GaussRat& c, const std::string& mono) {
  if (mono.empty()) return c == GaussRat(1) ? "1" : "(" + c.str() + ")";
  if (c == GaussRat(1)) return mono;
  return "(" + c.str() + ") " + mono;
}

template <class Terms, class MonoFn>
std::string poly_text(const Terms& terms, MonoFn mono) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms) {
    if (!s.empty()) s += " + ";
    s += term_text(c, mono(k));
  }
  return s;
}

}  // namespace detail

// Canonical text, e.g. "(1/2) z1 zb2^2 u^3 + z1 zb1".
inline std::string to_string(const MixedPoly& p) {
  return detail::poly_text(p.terms(), [](const MixedKey& k) {
    return detail::monomial_text(&k.z, &k.zb, 0, k.u);
  });
}
inline std::string to_string(const ZPoly& p) {
  return detail::poly_text(p.terms(), [](const RealKey& k) {
    return detail::monomial_text(&k.z, &k.zb, 0, 0);
  });
}
inline std::string to_string(const RealPoly& p) { return to_string(p.poly()); }
inline std::string to_string(const HoloPoly& p) {
  return detail::poly_text(p.terms(), [](const HoloKey& k) {
    return detail::monomial_text(&k.z, nullptr, k.w, 0);
  });
}

inline void RealPoly::check_reality() const {
  for (const auto& [k, c] : p_.terms()) {
    if (p_.coeff({k.zb, k.z}) != c.conj())
      throw RealityError("polynomial is not real: coefficient of " +
                         detail::monomial_text(&k.z, &k.zb, 0, 0) + " is " + c.str() +
                         " but its conjugate monomial has " + p_.coeff({k.zb, k.z}).str());
  }
}

// ---- weights ----------------------------------------------------------------

// Distinguished weight of finite multitype: 1/2 >= mu_1 >= ... >= mu_n > 0.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rat> mu) : mu_(std::move(mu)) {
    auto problems = violations(mu_);
    if (!problems.empty()) throw DimensionError("invalid weight vector: " + problems.front());
  }

  // Human readable reasons why mu is not an admissible weight vector.
  static std::vector<std::string> violations(std::span<const Rat> mu) {
    std::vector<std::string> out;
    if (mu.empty()) out.emplace_back("weight vector is empty");
    for (std::size_t j = 0; j < mu.size(); ++j) {
      if (mu[j].sign() <= 0) out.push_back("mu_" + std::to_string(j + 1) + " = " + mu[j].str() + " is not positive");
      if (mu[j] > Rat(1, 2)) out.push_back("mu_" + std::to_string(j + 1) + " = " + mu[j].str() + " exceeds 1/2");
      if (j > 0 && mu[j] > mu[j - 1])
        out.push_back("mu_" + std::to_string(j + 1) + " = " + mu[j].str() + " exceeds mu_" + std::to_string(j) +
                      " = " + mu[j - 1].str());
    }
    return out;
  }

  std::size_t size() const { return mu_.size(); }
  const Rat& operator[](std::size_t j) const { return mu_[j]; }
  std::span<const Rat> values() const { return mu_; }
  const std::vector<Rat>& vector() const { return mu_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rat> mu_;
};

// ---- ring operations --------------------------------------------------------

// Splits p into weighted-homogeneous parts keyed by weighted degree.
inline std::map<Rat, RealPoly> weighted_degree_terms(const RealPoly& p, const WeightVector& mu) {
  if (p.nvars() != mu.size()) throw DimensionError("weighted_degree_terms: dimension mismatch");
  std::map<Rat, ZPoly> parts;
  for (const auto& [k, c] : p.terms()) {
    Rat d = pair_weighted_length(k.z, k.zb, mu.values());
    auto [it, _] = parts.try_emplace(d, ZPoly(p.nvars()));
    it->second.add_term(k, c);
  }
  std::map<Rat, RealPoly> out;
  // Each part is real: the conjugate monomial has the same weighted degree.
  for (auto& [d, q] : parts) out.emplace(d, RealPoly(std::move(q)));
  return out;
}

inline bool is_pluriharmonic_free(const RealPoly& p) {
  for (const auto& [k, c] : p.terms())
    if (k.z.is_zero() || k.zb.is_zero()) return false;
  return true;
}

// Wirtinger derivative d/dz_j (or d/dzb_j when conjugated).
inline MixedPoly wirtinger(const MixedPoly& p, std::size_t j, bool conjugated) {
  if (j >= p.nvars()) throw DimensionError("wirtinger: variable index out of range");
  MixedPoly r(p.nvars());
  for (const auto& [k, c] : p.terms()) {
    const MultiIndex& idx = conjugated ? k.zb : k.z;
    if (idx[j] == 0) continue;
    MixedKey nk = k;
    MultiIndex& target = conjugated ? nk.zb : nk.z;
    target[j] -= 1;
    r.add_term(nk, c * GaussRat(static_cast<long>(idx[j])));
  }
  return r;
}

// The derivative of a real polynomial is in general not real, so the result
// is a (u-free) MixedPoly.
inline MixedPoly wirtinger(const RealPoly& p, std::size_t j, bool conjugated) {
  return wirtinger(p.to_mixed(), j, conjugated);
}

// d/dz_j of a holomorphic polynomial.
inline HoloPoly d_z(const HoloPoly& h, std::size_t j) {
  if (j >= h.nvars()) throw DimensionError("d_z: variable index out of range");
  HoloPoly r(h.nvars());
  for (const auto& [k, c] : h.terms()) {
    if (k.z[j] == 0) continue;
    HoloKey nk = k;
    nk.z[j] -= 1;
    r.add_term(nk, c * GaussRat(static_cast<long>(k.z[j])));
  }
  return r;
}

inline HoloPoly d_w(const HoloPoly& h) {
  HoloPoly r(h.nvars());
  for (const auto& [k, c] : h.terms()) {
    if (k.w == 0) continue;
    r.add_term({k.z, k.w - 1}, c * GaussRat(static_cast<long>(k.w)));
  }
  return r;
}

// Convenience constructors.
inline HoloPoly holo_monomial(std::size_t n, MultiIndex z, std::uint32_t w, const GaussRat& c = 1) {
  return HoloPoly(n, HoloKey{std::move(z), w}, c);
}
inline HoloPoly holo_z(std::size_t n, std::size_t j) { return holo_monomial(n, MultiIndex::unit(n, j), 0); }
inline HoloPoly holo_w(std::size_t n) { return holo_monomial(n, MultiIndex(n), 1); }

inline MixedPoly mixed_u(std::size_t n) { return MixedPoly(n, MixedKey{MultiIndex(n), MultiIndex(n), 1}, 1); }

// Embeds a w-free holomorphic polynomial as a MixedPoly.
inline MixedPoly holo_to_mixed(const HoloPoly& h) {
  MixedPoly r(h.nvars());
  for (const auto& [k, c] : h.terms()) {
    if (k.w != 0) throw DimensionError("holo_to_mixed: polynomial depends on w");
    r.add_term({k.z, MultiIndex(h.nvars()), 0}, c);
  }
  return r;
}

// Restriction of holomorphic polynomials to M_P = {Im w = P}: w -> u + iP.
// Powers of u + iP are cached, so one instance serves many substitutions.
class WSubstitution {
 public:
  explicit WSubstitution(const RealPoly& P) : n_(P.nvars()) {
    base_ = mixed_u(n_) + P.to_mixed() * GaussRat::i();
    powers_.push_back(MixedPoly::constant(n_, 1));
  }

  const MixedPoly& power(std::uint32_t m) {
    while (powers_.size() <= m) powers_.push_back(powers_.back() * base_);
    return powers_[m];
  }

  MixedPoly operator()(const HoloPoly& h) {
    if (h.nvars() != n_) throw DimensionError("substitute_w: dimension mismatch");
    MixedPoly r(n_);
    for (const auto& [k, c] : h.terms()) {
      MixedPoly zpart(n_, MixedKey{k.z, MultiIndex(n_), 0}, c);
      r += zpart * power(k.w);
    }
    return r;
  }

 private:
  std::size_t n_;
  MixedPoly base_;
  std::vector<MixedPoly> powers_;
};

// h(z, u + iP(z, zb)), expanded exactly.
inline MixedPoly substitute_w(const HoloPoly& h, const RealPoly& P) {
  WSubstitution s(P);
  return s(h);
}

// Writes P = sum_j x_l^j P_j with x_l = Re z_l and P_j free of z_l.
// Peels off the top x_l-degree repeatedly; P_j = 2^j [z_l^j zb_l^0] of the
// current remainder. Throws DecompositionError if a remainder survives.
inline std::vector<RealPoly> xl_decompose(const RealPoly& P, std::size_t l) {
  const std::size_t n = P.nvars();
  if (l >= n) throw DimensionError("xl_decompose: variable index out of range");
  ZPoly rest = P.poly();
  std::uint32_t top = 0;
  for (const auto& [k, c] : rest.terms()) top = std::max(top, k.z[l] + k.zb[l]);

  // x_l = (z_l + zb_l) / 2
  ZPoly x(n);
  x.add_term({MultiIndex::unit(n, l), MultiIndex(n)}, Rat(1, 2));
  x.add_term({MultiIndex(n), MultiIndex::unit(n, l)}, Rat(1, 2));

  std::vector<ZPoly> parts(top + 1, ZPoly(n));
  for (std::uint32_t j = top + 1; j-- > 0;) {
    ZPoly pj(n);
    for (const auto& [k, c] : rest.terms()) {
      if (k.z[l] == j && k.zb[l] == 0) {
        RealKey nk = k;
        nk.z[l] = 0;
        pj.add_term(nk, c * GaussRat(Rat(mpz_class(mpz_class(1) << j))));
      }
    }
    if (pj.is_zero()) continue;
    rest -= x.pow(j) * pj;
    parts[j] = std::move(pj);
  }
  if (!rest.is_zero())
    throw DecompositionError("polynomial is not of the form sum_j (Re z" + std::to_string(l + 1) +
                             ")^j P_j: remainder " + to_string(rest));
  while (!parts.empty() && parts.back().is_zero()) parts.pop_back();
  std::vector<RealPoly> out;
  out.reserve(parts.size());
  for (auto& q : parts) out.emplace_back(std::move(q));
  return out;
}

// Exact evaluation at z (zb = conj z) and real u.
inline GaussRat evaluate(const MixedPoly& p, std::span<const GaussRat> z, const Rat& u = Rat()) {
  if (z.size() != p.nvars()) throw DimensionError("evaluate: point has wrong dimension");
  GaussRat total;
  for (const auto& [k, c] : p.terms()) {
    GaussRat t = c;
    for (std::size_t j = 0; j < z.size(); ++j) {
      for (std::uint32_t e = 0; e < k.z[j]; ++e) t *= z[j];
      for (std::uint32_t e = 0; e < k.zb[j]; ++e) t *= z[j].conj();
    }
    for (std::uint32_t e = 0; e < k.u; ++e) t *= GaussRat(u);
    total += t;
  }
  return total;
}

}  // namespace crsym
