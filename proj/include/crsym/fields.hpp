#pragma once

// Holomorphic vector fields X = sum_j f_j d/dz_j + g d/dw with polynomial
// coefficients, their Lie bracket, weighted degree and the tangency operator.
//
// Conventions: the real field attached to X is X + conj(X), and
// Im w = (w - conj w) / (2i). X is an infinitesimal automorphism of M_P
// exactly when (X + conj X)(Im w - P) vanishes on M_P.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crsym/model.hpp"
#include "crsym/ring.hpp"

namespace crsym {

class VField {
 public:
  VField() = default;
  explicit VField(std::size_t n) : f_(n, HoloPoly(n)), g_(n) {}
  VField(std::vector<HoloPoly> f, HoloPoly g) : f_(std::move(f)), g_(std::move(g)) {
    for (const auto& fj : f_)
      if (fj.nvars() != n()) throw DimensionError("vector field coefficients in different contexts");
    if (g_.nvars() != n()) throw DimensionError("vector field coefficients in different contexts");
  }

  std::size_t n() const { return f_.size(); }
  const HoloPoly& f(std::size_t j) const { return f_.at(j); }
  const HoloPoly& g() const { return g_; }
  HoloPoly& f(std::size_t j) { return f_.at(j); }
  HoloPoly& g() { return g_; }
  // Coefficient slot: 0..n-1 are d/dz_j, n is d/dw.
  const HoloPoly& slot(std::size_t s) const { return s < n() ? f_.at(s) : g_; }
  HoloPoly& slot(std::size_t s) { return s < n() ? f_.at(s) : g_; }

  bool is_zero() const {
    if (!g_.is_zero()) return false;
    for (const auto& fj : f_)
      if (!fj.is_zero()) return false;
    return true;
  }

  // X(h) = sum_j f_j dh/dz_j + g dh/dw
  HoloPoly apply(const HoloPoly& h) const {
    HoloPoly r = g_ * d_w(h);
    for (std::size_t j = 0; j < n(); ++j) r += f_[j] * d_z(h, j);
    return r;
  }

  VField& operator+=(const VField& o) {
    check(o);
    for (std::size_t j = 0; j < n(); ++j) f_[j] += o.f_[j];
    g_ += o.g_;
    return *this;
  }
  VField& operator-=(const VField& o) {
    check(o);
    for (std::size_t j = 0; j < n(); ++j) f_[j] -= o.f_[j];
    g_ -= o.g_;
    return *this;
  }
  VField& operator*=(const GaussRat& s) {
    for (auto& fj : f_) fj *= s;
    g_ *= s;
    return *this;
  }
  friend VField operator+(VField a, const VField& b) { return a += b; }
  friend VField operator-(VField a, const VField& b) { return a -= b; }
  friend VField operator*(VField a, const GaussRat& s) { return a *= s; }
  friend VField operator*(const GaussRat& s, VField a) { return a *= s; }
  VField operator-() const { return *this * GaussRat(-1); }
  friend bool operator==(const VField&, const VField&) = default;

 private:
  void check(const VField& o) const {
    if (n() != o.n()) throw DimensionError("vector fields in different contexts");
  }

  std::vector<HoloPoly> f_;
  HoloPoly g_;
};

// "(coef) d/dz1 + (coef) d/dw", zero field "0".
inline std::string to_string(const VField& X) {
  std::string s;
  for (std::size_t j = 0; j <= X.n(); ++j) {
    const HoloPoly& c = X.slot(j);
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ") " + (j < X.n() ? "d/dz" + std::to_string(j + 1) : std::string("d/dw"));
  }
  return s.empty() ? "0" : s;
}

struct GradedVField {
  VField field;
  Rat degree;
};

// [X, Y] = X(Y^i) - Y(X^i) componentwise.
inline VField bracket(const VField& X, const VField& Y) {
  if (X.n() != Y.n()) throw DimensionError("bracket: vector fields in different contexts");
  VField r(X.n());
  for (std::size_t s = 0; s <= X.n(); ++s) r.slot(s) = X.apply(Y.slot(s)) - Y.apply(X.slot(s));
  return r;
}

// Commutes with d/dw, i.e. no coefficient depends on w.
inline bool is_rigid(const VField& X) {
  for (std::size_t s = 0; s <= X.n(); ++s)
    for (const auto& [k, c] : X.slot(s).terms())
      if (k.w != 0) return false;
  return true;
}

// Weighted degree of a single monomial coefficient in slot s.
inline Rat monomial_field_degree(const HoloKey& k, std::size_t slot, const WeightVector& mu) {
  Rat d = weighted_length(k.z, mu.values()) + Rat(static_cast<long>(k.w));
  return slot < mu.size() ? d - mu[slot] : d - Rat(1);
}

// Degree l such that f_j has weighted degree l + mu_j and g has l + 1.
// Throws InhomogeneousError (listing the degrees) for mixed or zero fields.
inline Rat graded_degree(const VField& X, const WeightVector& mu) {
  if (X.n() != mu.size()) throw DimensionError("graded_degree: dimension mismatch");
  std::set<Rat> degrees;
  for (std::size_t s = 0; s <= X.n(); ++s)
    for (const auto& [k, c] : X.slot(s).terms()) degrees.insert(monomial_field_degree(k, s, mu));
  if (degrees.empty()) throw InhomogeneousError("the zero field has no weighted degree");
  if (degrees.size() > 1) {
    std::string list;
    for (const auto& d : degrees) list += (list.empty() ? "" : ", ") + d.str();
    throw InhomogeneousError("inhomogeneous vector field with degrees {" + list + "}");
  }
  return *degrees.begin();
}

// Evaluates (X + conj X)(Im w - P) on M_P. The restriction uses w = u + iP,
// and dP/dz_j and the powers of u + iP are computed once per model.
class TangencyOperator {
 public:
  explicit TangencyOperator(const Model& model) : n_(model.n()), subst_(model.P()) {
    MixedPoly p = model.P().to_mixed();
    for (std::size_t j = 0; j < n_; ++j) dP_.push_back(wirtinger(p, j, false));
  }

  // T = g / (2i) - sum_j f_j dP/dz_j restricted to M; X annihilates
  // Im w - P on M as a complex field iff T == 0.
  MixedPoly complex_residue(const VField& X) {
    if (X.n() != n_) throw DimensionError("tangency: field and model dimensions differ");
    // 1 / (2i) = -i/2
    MixedPoly t = subst_(X.g()) * GaussRat(Rat(0), Rat(-1, 2));
    for (std::size_t j = 0; j < n_; ++j) {
      if (X.f(j).is_zero()) continue;
      t -= subst_(X.f(j)) * dP_[j];
    }
    return t;
  }

  // T + conj(T); zero iff X is an infinitesimal automorphism of M_P.
  MixedPoly residue(const VField& X) {
    MixedPoly t = complex_residue(X);
    return t + conj(t);
  }

 private:
  std::size_t n_;
  WSubstitution subst_;
  std::vector<MixedPoly> dP_;
};

inline MixedPoly tangency(const VField& X, const Model& model) {
  TangencyOperator op(model);
  return op.residue(X);
}

// ---- the explicit symmetries ---------------------------------------------------

struct NamedField {
  std::string name;
  VField field;
};

inline VField field_dw(std::size_t n) {
  VField X(n);
  X.g() = HoloPoly::constant(n, 1);
  return X;
}

inline VField field_dz(std::size_t n, std::size_t j, const GaussRat& a = 1) {
  VField X(n);
  X.f(j) = HoloPoly::constant(n, a);
  return X;
}

// w d/dw + sum_j mu_j z_j d/dz_j
inline VField euler_field(const WeightVector& mu) {
  const std::size_t n = mu.size();
  VField E(n);
  E.g() = holo_w(n);
  for (std::size_t j = 0; j < n; ++j) E.f(j) = holo_z(n, j) * GaussRat(mu[j]);
  return E;
}

// i sum_j mu_j z_j d/dz_j
inline VField imaginary_euler_field(const WeightVector& mu) {
  const std::size_t n = mu.size();
  VField X(n);
  for (std::size_t j = 0; j < n; ++j) X.f(j) = holo_z(n, j) * GaussRat(Rat(0), mu[j]);
  return X;
}

// (1/2) w^2 d/dw + sum_j mu_j w z_j d/dz_j; [d/dw, this] = E.
inline VField third_symmetry(const WeightVector& mu) {
  const std::size_t n = mu.size();
  VField G(n);
  G.g() = holo_monomial(n, MultiIndex(n), 2, Rat(1, 2));
  for (std::size_t j = 0; j < n; ++j) G.f(j) = holo_monomial(n, MultiIndex::unit(n, j), 1, mu[j]);
  return G;
}

// a d/dz_j + 2i conj(a) z_j d/dw, weighted degree -1/2 when mu_j = 1/2.
inline VField half_weight_field(const WeightVector& mu, std::size_t j, const GaussRat& a) {
  const std::size_t n = mu.size();
  VField Y = field_dz(n, j, a);
  Y.g() = holo_z(n, j) * (GaussRat(0, 2) * a.conj());
  return Y;
}

// a w d/dz_j + 4i conj(a) z_j sum_k mu_k z_k d/dz_k + 2i conj(a) z_j w d/dw,
// equal to -2 [third_symmetry, half_weight_field(j, a)].
inline VField integrated_half_weight_field(const WeightVector& mu, std::size_t j, const GaussRat& a) {
  const std::size_t n = mu.size();
  const GaussRat b = GaussRat(0, 2) * a.conj();  // 2i conj(a)
  VField Z(n);
  for (std::size_t k = 0; k < n; ++k)
    Z.f(k) = holo_monomial(n, MultiIndex::unit(n, j) + MultiIndex::unit(n, k), 0, b * GaussRat(2) * GaussRat(mu[k]));
  Z.f(j) += holo_monomial(n, MultiIndex(n), 1, a);
  Z.g() = holo_monomial(n, MultiIndex::unit(n, j), 1, b);
  return Z;
}

// True when P = sum_{j < kappa} |z_j|^2 + Q(z_kappa, ..., z_{n-1}) in the
// given coordinates, kappa being the number of weights equal to 1/2.
inline bool has_leading_hermitian_block(const Model& model) {
  const std::size_t n = model.n();
  std::size_t kappa = 0;
  while (kappa < n && model.mu()[kappa] == Rat(1, 2)) ++kappa;
  if (kappa == 0) return false;
  for (std::size_t j = 0; j < kappa; ++j) {
    MultiIndex e = MultiIndex::unit(n, j);
    if (model.P().coeff(e, e) != GaussRat(1)) return false;
  }
  for (const auto& [k, c] : model.P().terms()) {
    bool touches_block = false;
    for (std::size_t j = 0; j < kappa; ++j) touches_block = touches_block || k.z[j] != 0 || k.zb[j] != 0;
    if (!touches_block) continue;
    bool is_square = k.z == k.zb && k.z.degree() == 1;
    if (!is_square) return false;
  }
  return true;
}

// The symmetries written down explicitly for model hypersurfaces, with the
// complex parameter a of the half-weight families taken from {1, i}.
inline std::vector<NamedField> known_fields(const Model& model) {
  const auto& mu = model.mu();
  const std::size_t n = model.n();
  std::vector<NamedField> out;
  out.push_back({"W", field_dw(n)});
  out.push_back({"E", euler_field(mu)});
  out.push_back({"E_tilde", imaginary_euler_field(mu)});
  out.push_back({"G1", third_symmetry(mu)});
  const bool block = has_leading_hermitian_block(model);
  for (std::size_t j = 0; j < n; ++j) {
    if (mu[j] != Rat(1, 2)) continue;
    const std::string idx = std::to_string(j + 1);
    out.push_back({"Y" + idx + "_re", half_weight_field(mu, j, 1)});
    out.push_back({"Y" + idx + "_im", half_weight_field(mu, j, GaussRat::i())});
    if (block) {
      out.push_back({"Z" + idx + "_re", integrated_half_weight_field(mu, j, 1)});
      out.push_back({"Z" + idx + "_im", integrated_half_weight_field(mu, j, GaussRat::i())});
    }
  }
  return out;
}

}  // namespace crsym
