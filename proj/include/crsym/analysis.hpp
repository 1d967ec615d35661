#pragma once

// Structure verdicts over a computed grading: spectra of weight-zero
// fields, the rigid/non-rigid split of intermediate components, the
// Re z_l dichotomy, theorem-shaped gradings and the jet order.

#include <optional>
#include <string>
#include <vector>

#include "crsym/nondegeneracy.hpp"
#include "crsym/solver.hpp"
#include "crsym/upoly.hpp"

namespace crsym {

// X = sum_{j,k} A_jk z_k d/dz_j + c w d/dw + (remainder)
struct LinearPart {
  Matrix<GaussRat> A;
  GaussRat c;
  bool nonlinear_remainder = false;
};

inline LinearPart linear_part(const GradedVField& X) {
  if (!X.degree.is_zero()) throw InhomogeneousError("linear_part needs a weight-zero field, got degree " + X.degree.str());
  const std::size_t n = X.field.n();
  LinearPart lp;
  lp.A.assign(n, std::vector<GaussRat>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [k, coef] : X.field.f(j).terms()) {
      if (k.w == 0 && k.z.degree() == 1) {
        std::size_t idx = 0;
        while (k.z[idx] == 0) ++idx;
        lp.A[j][idx] = coef;
      } else {
        lp.nonlinear_remainder = true;
      }
    }
  }
  for (const auto& [k, coef] : X.field.g().terms()) {
    if (k.w == 1 && k.z.is_zero())
      lp.c = coef;
    else
      lp.nonlinear_remainder = true;
  }
  return lp;
}

struct RotationVerdict {
  bool semisimple = false;        // minimal polynomial is squarefree
  bool purely_imaginary = false;  // every eigenvalue lies on the imaginary axis
  bool real_part_zero = false;    // both of the above
};

// Exact: squarefreeness of the minimal polynomial, and for the spectrum the
// polynomial q(t) = char_A(i t) made monic must have real coefficients and
// only real roots (Sturm count of its squarefree part equals its degree).
inline RotationVerdict rotation_check(const Matrix<GaussRat>& A) {
  RotationVerdict v;
  v.semisimple = is_squarefree(minimal_polynomial(A));

  UPoly<GaussRat> chi = characteristic_polynomial(A);
  std::vector<GaussRat> q;
  GaussRat ipow(1);
  for (const auto& c : chi.coeffs()) {
    q.push_back(c * ipow);
    ipow *= GaussRat::i();
  }
  UPoly<GaussRat> qm = UPoly<GaussRat>(std::move(q)).monic();
  bool real_coeffs = true;
  std::vector<Rat> qr;
  for (const auto& c : qm.coeffs()) {
    real_coeffs = real_coeffs && c.is_real();
    qr.push_back(c.re);
  }
  if (real_coeffs) {
    UPoly<Rat> sf = squarefree_part(UPoly<Rat>(std::move(qr)));
    v.purely_imaginary = sturm_real_root_count(sf) == static_cast<std::size_t>(std::max(0L, sf.degree()));
  }
  v.real_part_zero = v.semisimple && v.purely_imaginary;
  return v;
}

struct RotationReport {
  VField field;
  LinearPart linear;
  std::optional<RotationVerdict> verdict;  // nullopt: nonlinear, not analysed
};

struct G0Classification {
  VField euler;
  std::vector<RotationReport> rotations;
  std::vector<std::size_t> violations;   // indices into rotations
  std::vector<std::size_t> unsupported;  // indices into rotations with nonlinear terms
};

// Euler line plus the complement obtained by eliminating the w d/dw
// coordinate; each complement field is checked for a vanishing real and
// nilpotent part.
inline G0Classification classify_g0(const std::vector<GradedVField>& basis, const Model& model) {
  std::vector<VField> fields;
  for (const auto& b : basis) fields.push_back(b.field);
  EulerSplit split = split_euler(fields, model);
  if (!split.euler_in_span)
    throw std::logic_error("classify_g0: the Euler field is not in the span of the degree-0 kernel");
  G0Classification out;
  out.euler = euler_field(model.mu());
  for (auto& X : split.complement) {
    RotationReport r{X, linear_part({X, Rat(0)}), std::nullopt};
    if (r.linear.nonlinear_remainder) {
      out.unsupported.push_back(out.rotations.size());
    } else {
      r.verdict = rotation_check(r.linear.A);
      if (!r.verdict->real_part_zero) out.violations.push_back(out.rotations.size());
    }
    out.rotations.push_back(std::move(r));
  }
  return out;
}

inline G0Classification classify_g0(const GradingReport& report, const Model& model) {
  std::vector<GradedVField> basis;
  if (const auto* c = report.component(Rat(0)))
    for (const auto& X : c->basis) basis.push_back({X, Rat(0)});
  return classify_g0(basis, model);
}

// ---- Re z_l dichotomy --------------------------------------------------------------

enum class DichotomyForm {
  quadratic,  // P = x_l^2 + x_l P_1 + P_0
  linear,     // P = x_l P_1 + P_0
  none
};

inline const char* to_string(DichotomyForm f) {
  switch (f) {
    case DichotomyForm::quadratic: return "form_6_3";
    case DichotomyForm::linear: return "form_6_4";
    case DichotomyForm::none: return "none";
  }
  return "none";
}

struct DichotomyEntry {
  std::size_t l;  // 0-based
  DichotomyForm form = DichotomyForm::none;
  std::vector<RealPoly> parts;  // P_0, ..., P_m when the decomposition exists
  std::string note;
};

inline std::vector<DichotomyEntry> gn_dichotomy(const Model& model) {
  std::vector<DichotomyEntry> out;
  for (std::size_t l = 0; l < model.n(); ++l) {
    DichotomyEntry e{l, DichotomyForm::none, {}, {}};
    try {
      e.parts = xl_decompose(model.P(), l);
      const std::size_t m = e.parts.empty() ? 0 : e.parts.size() - 1;
      if (m == 1) {
        e.form = DichotomyForm::linear;
      } else if (m == 2) {
        const auto& top = e.parts[2].terms();
        bool constant = top.size() == 1 && top.begin()->first.z.is_zero() && top.begin()->first.zb.is_zero();
        if (constant) e.form = DichotomyForm::quadratic;
        else e.note = "x_l^2 coefficient is not constant";
      } else {
        e.note = "Re z_l degree " + std::to_string(m);
      }
    } catch (const DecompositionError& err) {
      e.note = err.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

// ---- theorem-shaped verdicts ---------------------------------------------------------

enum class GradingShape { thm_1_1, thm_5_3, thm_5_4, other };

inline const char* to_string(GradingShape s) {
  switch (s) {
    case GradingShape::thm_1_1: return "thm_1_1";
    case GradingShape::thm_5_3: return "thm_5_3";
    case GradingShape::thm_5_4: return "thm_5_4";
    case GradingShape::other: return "other";
  }
  return "other";
}

struct StructureVerdict {
  GradingShape grading_shape = GradingShape::other;
  bool gc_zero = true;
  bool gn_weight_half_only = true;
  int jet_order = 1;
  bool balanced = false;
  std::size_t kappa = 0;
  bool rotations_real_part_zero = true;  // no entry of classify_g0's violations
  std::size_t rotations_unsupported = 0;
  std::vector<DichotomyEntry> dichotomy;
};

namespace detail {

inline bool support_within(const GradingReport& r, const std::set<Rat>& allowed) {
  for (const auto& c : r.components)
    if (c.dim() > 0 && !allowed.count(c.degree)) return false;
  return true;
}

}  // namespace detail

inline StructureVerdict structure_verdict(const GradingReport& report, const Model& model, const LeviVerdict& levi,
                                          const NondegeneracyVerdict& nondeg) {
  StructureVerdict v;
  v.gc_zero = !report.has_gc;
  for (const auto& c : report.components)
    if (is_intermediate(c.degree) && c.dim() > 0 && c.degree != Rat(1, 2)) v.gn_weight_half_only = false;

  const BalanceInfo b = balance_info(model);
  v.balanced = b.balanced;
  v.kappa = b.kappa;
  v.jet_order = b.balanced ? 2 : 1;

  G0Classification g0 = classify_g0(report, model);
  v.rotations_real_part_zero = g0.violations.empty();
  v.rotations_unsupported = g0.unsupported.size();
  v.dichotomy = gn_dichotomy(model);

  const auto& mu = model.mu();
  const bool hypotheses = levi.pseudoconvex_evidence() && nondeg.nondegenerate;
  const bool homogeneous = std::all_of(mu.values().begin(), mu.values().end(), [&](const Rat& m) { return m == mu[0]; });
  const bool levi_degenerate = mu[mu.size() - 1] < Rat(1, 2);
  const Rat half(1, 2);

  if (hypotheses && model.is_sos() && levi_degenerate) {
    if (homogeneous && detail::support_within(report, {Rat(-1), Rat(0), Rat(1)}) && report.dim(Rat(-1)) == 1 &&
        report.dim(Rat(1)) == 1) {
      v.grading_shape = GradingShape::thm_5_3;
      return v;
    }
    if (detail::support_within(report, {Rat(-1), -half, Rat(0), half, Rat(1)}) && report.dim(Rat(-1)) == 1 &&
        report.dim(Rat(1)) == 1 && report.dim(-half) == 2 * b.kappa && report.dim(half) == 2 * b.kappa) {
      v.grading_shape = GradingShape::thm_5_4;
      return v;
    }
  }
  if (hypotheses) {
    std::set<Rat> allowed{Rat(-1), Rat(0), half, Rat(1)};
    for (std::size_t j = 0; j < mu.size(); ++j) allowed.insert(-mu[j]);
    if (detail::support_within(report, allowed)) v.grading_shape = GradingShape::thm_1_1;
  }
  return v;
}

}  // namespace crsym
