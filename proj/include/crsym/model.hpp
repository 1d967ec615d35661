#pragma once

// Model hypersurfaces M_P = {Im w = P(z, zb)}: validation, sum-of-squares
// construction, Levi form and pseudoconvexity, balance and the diagonal
// condition on P's coefficients.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "crsym/linalg.hpp"
#include "crsym/ring.hpp"

namespace crsym {

struct Violation {
  enum class Kind { dimension, weight_bounds, reality, not_homogeneous, pluriharmonic, zero_polynomial };
  Kind kind;
  std::string detail;
};

inline const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::dimension: return "dimension";
    case Violation::Kind::weight_bounds: return "weight_bounds";
    case Violation::Kind::reality: return "reality";
    case Violation::Kind::not_homogeneous: return "not_homogeneous";
    case Violation::Kind::pluriharmonic: return "pluriharmonic";
    case Violation::Kind::zero_polynomial: return "zero_polynomial";
  }
  return "unknown";
}

class Model;
struct ValidationResult;
ValidationResult validate(const std::vector<Rat>& mu, const ZPoly& P);

// A validated model: P is real, pluriharmonic-free, nonzero and
// mu-homogeneous of weighted degree 1. Instances only come from validate()
// and build_sos().
class Model {
 public:
  std::size_t n() const { return mu_.size(); }
  const WeightVector& mu() const { return mu_; }
  const RealPoly& P() const { return P_; }
  bool is_sos() const { return !sos_.empty(); }
  // The Q_j of P = sum_j |Q_j|^2 when built by build_sos().
  const std::vector<HoloPoly>& sos_factors() const { return sos_; }

  friend bool operator==(const Model&, const Model&) = default;

 private:
  Model(WeightVector mu, RealPoly P, std::vector<HoloPoly> sos)
      : mu_(std::move(mu)), P_(std::move(P)), sos_(std::move(sos)) {}

  friend ValidationResult validate(const std::vector<Rat>& mu, const ZPoly& P);
  friend Model build_sos(const std::vector<Rat>& mu, const std::vector<HoloPoly>& Q);

  WeightVector mu_;
  RealPoly P_;
  std::vector<HoloPoly> sos_;
};

struct ValidationResult {
  std::optional<Model> model;
  std::vector<Violation> violations;

  bool ok() const { return model.has_value(); }

  // The model, or ModelError listing every violation.
  const Model& value() const {
    if (!model) {
      std::string msg = "invalid model:";
      for (const auto& v : violations) msg += std::string(" [") + to_string(v.kind) + "] " + v.detail + ";";
      throw ModelError(msg);
    }
    return *model;
  }
};

inline ValidationResult validate(const std::vector<Rat>& mu, const ZPoly& P) {
  ValidationResult res;
  auto bad = [&](Violation::Kind k, std::string d) { res.violations.push_back({k, std::move(d)}); };

  if (mu.size() != P.nvars()) {
    bad(Violation::Kind::dimension, "weight has length " + std::to_string(mu.size()) + " but P has " +
                                        std::to_string(P.nvars()) + " variables");
    return res;
  }
  for (auto& msg : WeightVector::violations(mu)) bad(Violation::Kind::weight_bounds, msg);
  if (P.is_zero()) bad(Violation::Kind::zero_polynomial, "P is identically zero");

  for (const auto& [k, c] : P.terms()) {
    std::string mono = detail::monomial_text(&k.z, &k.zb, 0, 0);
    if (mono.empty()) mono = "1";
    if (P.coeff({k.zb, k.z}) != c.conj())
      bad(Violation::Kind::reality, mono + ": coefficient " + c.str() + " is not conjugate to that of its mirror");
    Rat len = pair_weighted_length(k.z, k.zb, mu);
    if (len != Rat(1)) bad(Violation::Kind::not_homogeneous, mono + " has weighted degree " + len.str());
    if (k.z.is_zero() || k.zb.is_zero()) bad(Violation::Kind::pluriharmonic, mono + " is pluriharmonic");
  }
  if (res.violations.empty()) res.model = Model(WeightVector(mu), RealPoly(P), {});
  return res;
}

inline ValidationResult validate(const std::vector<Rat>& mu, const RealPoly& P) { return validate(mu, P.poly()); }

// P = sum_j Q_j conj(Q_j) for holomorphic Q_j in z of weighted degree 1/2.
inline Model build_sos(const std::vector<Rat>& mu, const std::vector<HoloPoly>& Q) {
  if (Q.empty()) throw ModelError("sum of squares needs at least one polynomial");
  ZPoly P(mu.size());
  for (std::size_t j = 0; j < Q.size(); ++j) {
    const HoloPoly& q = Q[j];
    const std::string name = "Q_" + std::to_string(j + 1);
    if (q.nvars() != mu.size()) throw DimensionError(name + " has the wrong number of variables");
    if (q.is_zero()) throw ModelError(name + " is zero");
    for (const auto& [k, c] : q.terms()) {
      if (k.w != 0) throw ModelError(name + " depends on w");
      if (k.z.is_zero()) throw ModelError(name + " has a constant term (weighted degree 0, expected 1/2)");
      Rat d = weighted_length(k.z, mu);
      if (d != Rat(1, 2))
        throw ModelError(name + ": monomial " + detail::monomial_text(&k.z, nullptr, 0, 0) + " has weighted degree " +
                         d.str() + ", expected 1/2");
    }
    MixedPoly sq = holo_to_mixed(q) * conj_holo(q);
    for (const auto& [k, c] : sq.terms()) P.add_term({k.z, k.zb}, c);
  }
  ValidationResult v = validate(mu, P);
  Model m = v.value();
  m.sos_ = Q;
  return m;
}

// ---- Levi form -------------------------------------------------------------

using LeviMatrix = Matrix<MixedPoly>;

// entry(j, k) = d^2 P / dz_j dzb_k
inline LeviMatrix levi_form(const RealPoly& P) {
  const std::size_t n = P.nvars();
  MixedPoly p = P.to_mixed();
  LeviMatrix L(n, std::vector<MixedPoly>(n, MixedPoly(n)));
  for (std::size_t j = 0; j < n; ++j) {
    MixedPoly dj = wirtinger(p, j, false);
    for (std::size_t k = 0; k < n; ++k) L[j][k] = wirtinger(dj, k, true);
  }
  return L;
}

inline Matrix<GaussRat> evaluate(const LeviMatrix& L, std::span<const GaussRat> z) {
  Matrix<GaussRat> m(L.size(), std::vector<GaussRat>(L.size()));
  for (std::size_t j = 0; j < L.size(); ++j)
    for (std::size_t k = 0; k < L.size(); ++k) m[j][k] = evaluate(L[j][k], z);
  return m;
}

// A principal minor of a Hermitian matrix; the determinant is real.
struct PrincipalMinor {
  std::vector<std::size_t> indices;
  Rat value;
};

// First negative principal minor, or nullopt if H is positive semidefinite.
// A Hermitian matrix is PSD iff all its principal minors are nonnegative.
inline std::optional<PrincipalMinor> negative_principal_minor(const Matrix<GaussRat>& h) {
  const std::size_t n = h.size();
  for (std::size_t size = 1; size <= n; ++size) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (std::uint64_t{1} << j)) idx.push_back(j);
      Matrix<GaussRat> sub(size, std::vector<GaussRat>(size));
      for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b) sub[a][b] = h[idx[a]][idx[b]];
      GaussRat d = determinant(sub);
      if (d.re.sign() < 0) return PrincipalMinor{idx, d.re};
    }
  }
  return std::nullopt;
}

struct LeviVerdict {
  enum class Status { psd_certified, psd_sampled, not_psd, unknown };
  struct Witness {
    std::vector<GaussRat> point;
    PrincipalMinor minor;
  };

  Status status = Status::unknown;
  std::size_t samples_checked = 0;
  // Sampling is exact, so no numeric tolerance is ever applied.
  double tolerance = 0.0;
  std::optional<Witness> witness;

  bool pseudoconvex_evidence() const { return status == Status::psd_certified || status == Status::psd_sampled; }
};

inline const char* to_string(LeviVerdict::Status s) {
  switch (s) {
    case LeviVerdict::Status::psd_certified: return "psd_certified";
    case LeviVerdict::Status::psd_sampled: return "psd_sampled";
    case LeviVerdict::Status::not_psd: return "not_psd";
    case LeviVerdict::Status::unknown: return "unknown";
  }
  return "unknown";
}

// Deterministic sample points: the coordinate axis points e_j, then
// sample_budget pseudo-random Gaussian rationals of height <= 16.
inline std::vector<std::vector<GaussRat>> levi_sample_points(std::size_t n, std::size_t sample_budget,
                                                             std::uint64_t seed) {
  std::vector<std::vector<GaussRat>> pts;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<GaussRat> p(n);
    p[j] = 1;
    pts.push_back(std::move(p));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-16, 16), den(1, 16);
  for (std::size_t s = 0; s < sample_budget; ++s) {
    std::vector<GaussRat> p;
    for (std::size_t j = 0; j < n; ++j) {
      long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
      p.emplace_back(Rat(a, b), Rat(c, d));
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

inline LeviVerdict pseudoconvexity(const Model& model, std::size_t sample_budget = 100, std::uint64_t seed = 1) {
  LeviVerdict v;
  if (model.is_sos()) {
    // The Levi form is the Gram matrix of the gradients of the Q_j.
    v.status = LeviVerdict::Status::psd_certified;
    return v;
  }
  LeviMatrix L = levi_form(model.P());
  for (auto& pt : levi_sample_points(model.n(), sample_budget, seed)) {
    ++v.samples_checked;
    if (auto minor = negative_principal_minor(evaluate(L, pt))) {
      v.status = LeviVerdict::Status::not_psd;
      v.witness = LeviVerdict::Witness{std::move(pt), std::move(*minor)};
      return v;
    }
  }
  v.status = LeviVerdict::Status::psd_sampled;
  return v;
}

// ---- balance and diagonal condition -----------------------------------------

struct BalanceInfo {
  bool balanced = false;
  std::size_t kappa = 0;  // number of weights equal to 1/2
};

// Balanced: every monomial has |alpha|_mu = |alpha_hat|_mu = 1/2.
inline BalanceInfo balance_info(const Model& model) {
  BalanceInfo b;
  for (std::size_t j = 0; j < model.n(); ++j)
    if (model.mu()[j] == Rat(1, 2)) ++b.kappa;
  b.balanced = true;
  for (const auto& [k, c] : model.P().terms()) {
    if (weighted_length(k.z, model.mu().values()) != Rat(1, 2) ||
        weighted_length(k.zb, model.mu().values()) != Rat(1, 2)) {
      b.balanced = false;
      break;
    }
  }
  return b;
}

struct DiagonalCondition {
  bool holds = true;
  std::size_t first_bad = 0;  // 0-based variable index, meaningful when !holds
};

// For every j some diagonal coefficient A_{a,a} != 0 has a_j != 0 and
// a_l = 0 for l > j, checked in the given coordinates.
inline DiagonalCondition diagonal_condition(const Model& model) {
  const std::size_t n = model.n();
  for (std::size_t j = 0; j < n; ++j) {
    bool found = false;
    for (const auto& [k, c] : model.P().terms()) {
      if (k.z != k.zb || k.z[j] == 0) continue;
      bool tail_free = true;
      for (std::size_t l = j + 1; l < n; ++l) tail_free = tail_free && k.z[l] == 0;
      if (tail_free) {
        found = true;
        break;
      }
    }
    if (!found) return {false, j};
  }
  return {};
}

// The vectors 2a over diagonal monomials z^a zb^a of P.
inline Matrix<Rat> diagonal_exponent_vectors(const Model& model) {
  Matrix<Rat> rows;
  for (const auto& [k, c] : model.P().terms()) {
    if (k.z != k.zb) continue;
    std::vector<Rat> r;
    for (std::size_t j = 0; j < model.n(); ++j) r.emplace_back(2 * static_cast<long>(k.z[j]));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace crsym
