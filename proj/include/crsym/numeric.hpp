#pragma once

// Double-precision evaluation of the tangency residue at points of M_P,
// computed directly from the field and P without the exact substitution.

#include <complex>
#include <random>
#include <vector>

#include "crsym/fields.hpp"

namespace crsym {

using cplx = std::complex<double>;

inline cplx to_complex(const GaussRat& c) { return {c.re.to_double(), c.im.to_double()}; }

inline cplx eval_monomial(const MultiIndex& a, const std::vector<cplx>& z) {
  cplx r = 1;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::uint32_t e = 0; e < a[j]; ++e) r *= z[j];
  return r;
}

inline cplx eval_numeric(const HoloPoly& h, const std::vector<cplx>& z, cplx w) {
  cplx s = 0;
  for (const auto& [k, c] : h.terms()) s += to_complex(c) * eval_monomial(k.z, z) * std::pow(w, static_cast<int>(k.w));
  return s;
}

inline double eval_numeric(const RealPoly& P, const std::vector<cplx>& z) {
  cplx s = 0;
  for (const auto& [k, c] : P.terms()) s += to_complex(c) * eval_monomial(k.z, z) * std::conj(eval_monomial(k.zb, z));
  return s.real();
}

// dP/dz_j at z, differentiating term by term.
inline cplx eval_dP(const RealPoly& P, const std::vector<cplx>& z, std::size_t j) {
  cplx s = 0;
  for (const auto& [k, c] : P.terms()) {
    if (k.z[j] == 0) continue;
    MultiIndex a = k.z;
    a[j] -= 1;
    s += to_complex(c) * double(k.z[j]) * eval_monomial(a, z) * std::conj(eval_monomial(k.zb, z));
  }
  return s;
}

// 2 Re( g / (2i) - sum_j f_j dP/dz_j ) at (z, u + i P(z)).
inline double numeric_residue(const VField& X, const RealPoly& P, const std::vector<cplx>& z, double u) {
  const cplx w(u, eval_numeric(P, z));
  cplx t = eval_numeric(X.g(), z, w) / cplx(0, 2);
  for (std::size_t j = 0; j < X.n(); ++j) t -= eval_numeric(X.f(j), z, w) * eval_dP(P, z, j);
  return 2 * t.real();
}

struct NumericPoint {
  std::vector<cplx> z;
  double u;
};

inline std::vector<NumericPoint> numeric_points(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<NumericPoint> out;
  for (std::size_t i = 0; i < count; ++i) {
    NumericPoint p{std::vector<cplx>(n), U(rng)};
    for (auto& zj : p.z) zj = {U(rng), U(rng)};
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace crsym
