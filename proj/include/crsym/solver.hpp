#pragma once

// Degree-by-degree computation of the infinitesimal automorphisms of a model.
//
// For a weighted degree d the candidate fields are all
//   sum_j f_j d/dz_j + g d/dw,  f_j of weighted degree d + mu_j, g of d + 1,
// with one complex unknown per coefficient monomial, split into real and
// imaginary parts. Tangency is real-linear in the field, so the residue of
// each basis field gives one column of a rational system whose kernel is
// the graded component g_d.

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "crsym/fields.hpp"
#include "crsym/linalg.hpp"
#include "crsym/model.hpp"

namespace crsym {

namespace detail {

// Calls emit(alpha) for every alpha with |alpha|_mu == target.
template <class Emit>
void enumerate_weighted(const WeightVector& mu, std::size_t j, Rat remaining, MultiIndex& alpha, Emit& emit) {
  if (j == mu.size()) {
    if (remaining.is_zero()) emit(alpha);
    return;
  }
  for (std::uint32_t e = 0;; ++e) {
    Rat rest = remaining - Rat(static_cast<long>(e)) * mu[j];
    if (rest.sign() < 0) break;
    alpha[j] = e;
    enumerate_weighted(mu, j + 1, rest, alpha, emit);
  }
  alpha[j] = 0;
}

// Nonnegative integer combinations of `gens` with value < bound.
inline std::set<Rat> combinations_below(const std::vector<Rat>& gens, const Rat& bound, bool inclusive) {
  std::set<Rat> seen{Rat(0)};
  std::vector<Rat> frontier{Rat(0)};
  while (!frontier.empty()) {
    std::vector<Rat> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        Rat s = v + g;
        bool inside = inclusive ? s <= bound : s < bound;
        if (inside && seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace detail

// All z^alpha w^m with |alpha|_mu + m == target, in canonical order.
inline std::vector<HoloKey> weighted_monomials(const WeightVector& mu, const Rat& target) {
  std::vector<HoloKey> out;
  if (target.sign() < 0) return out;
  const std::size_t n = mu.size();
  for (long m = 0; Rat(m) <= target; ++m) {
    MultiIndex alpha(n);
    auto emit = [&](const MultiIndex& a) { out.push_back({a, static_cast<std::uint32_t>(m)}); };
    detail::enumerate_weighted(mu, 0, target - Rat(m), alpha, emit);
  }
  std::sort(out.begin(), out.end(), KeyLess{});
  return out;
}

// {-1} u {-mu_j} u {0} u E u {1}, E = nonnegative integer combinations of
// the weights strictly between 0 and 1.
struct DegreeMenu {
  std::vector<Rat> degrees;

  bool contains(const Rat& d) const { return std::binary_search(degrees.begin(), degrees.end(), d); }
};

inline DegreeMenu degree_menu(const WeightVector& mu) {
  std::set<Rat> s{Rat(-1), Rat(0), Rat(1)};
  for (std::size_t j = 0; j < mu.size(); ++j) s.insert(-mu[j]);
  for (const auto& c : detail::combinations_below(mu.vector(), Rat(1), false))
    if (c.sign() > 0) s.insert(c);
  return {std::vector<Rat>(s.begin(), s.end())};
}

// Every weighted degree in [lo, hi] carried by some polynomial field.
inline std::vector<Rat> achievable_degrees(const WeightVector& mu, const Rat& lo, const Rat& hi) {
  std::vector<Rat> gens = mu.vector();
  gens.emplace_back(1);
  std::set<Rat> out;
  for (const auto& c : detail::combinations_below(gens, hi + Rat(1), true)) {
    std::vector<Rat> shifts = mu.vector();
    shifts.emplace_back(1);
    for (const auto& s : shifts) {
      Rat d = c - s;
      if (d >= lo && d <= hi) out.insert(d);
    }
  }
  return {out.begin(), out.end()};
}

// Coefficient monomials of a generic field of degree d; slot n is d/dw.
struct Ansatz {
  Rat degree;
  std::vector<std::vector<HoloKey>> slots;

  std::size_t complex_unknowns() const {
    std::size_t k = 0;
    for (const auto& s : slots) k += s.size();
    return k;
  }
};

inline Ansatz ansatz(const WeightVector& mu, const Rat& d, bool rigid_only = false) {
  Ansatz a{d, {}};
  for (std::size_t s = 0; s <= mu.size(); ++s) {
    Rat target = d + (s < mu.size() ? mu[s] : Rat(1));
    auto monos = weighted_monomials(mu, target);
    if (rigid_only) std::erase_if(monos, [](const HoloKey& k) { return k.w != 0; });
    a.slots.push_back(std::move(monos));
  }
  return a;
}

inline Ansatz ansatz(const Model& model, const Rat& d, bool rigid_only = false) {
  return ansatz(model.mu(), d, rigid_only);
}

// A real unknown: the real or imaginary part of one coefficient monomial.
struct Unknown {
  std::size_t slot;
  HoloKey monomial;
  bool imaginary;
};

struct LinearSystem {
  std::vector<Unknown> unknowns;
  Matrix<Rat> rows;
  // Residue monomial and part (false = real, true = imaginary) of each row.
  std::vector<std::pair<MixedKey, bool>> provenance;
};

inline std::vector<Unknown> unknowns_of(const Ansatz& a) {
  std::vector<Unknown> u;
  for (std::size_t s = 0; s < a.slots.size(); ++s)
    for (const auto& k : a.slots[s]) {
      u.push_back({s, k, false});
      u.push_back({s, k, true});
    }
  return u;
}

inline VField unit_field(std::size_t n, const Unknown& u) {
  VField X(n);
  X.slot(u.slot) = holo_monomial(n, u.monomial.z, u.monomial.w, u.imaginary ? GaussRat::i() : GaussRat(1));
  return X;
}

inline VField field_from_coordinates(std::size_t n, const std::vector<Unknown>& unknowns,
                                     const std::vector<Rat>& x) {
  VField X(n);
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    if (x[c].is_zero()) continue;
    const Unknown& u = unknowns[c];
    GaussRat coef = u.imaginary ? GaussRat(Rat(0), x[c]) : GaussRat(x[c]);
    X.slot(u.slot).add_term(u.monomial, coef);
  }
  return X;
}

// Coordinates of X in the given unknowns, or nullopt if X has a monomial
// outside them.
inline std::optional<std::vector<Rat>> coordinates(const VField& X, const std::vector<Unknown>& unknowns) {
  std::vector<Rat> x(unknowns.size());
  std::size_t matched = 0;
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    const Unknown& u = unknowns[c];
    const GaussRat coef = X.slot(u.slot).coeff(u.monomial);
    x[c] = u.imaginary ? coef.im : coef.re;
    if (!u.imaginary && !coef.is_zero()) ++matched;
  }
  std::size_t total = 0;
  for (std::size_t s = 0; s <= X.n(); ++s) total += X.slot(s).size();
  if (matched != total) return std::nullopt;
  return x;
}

enum class Condition {
  real_part,  // (X + conj X)(Im w - P) = 0 on M: infinitesimal automorphisms
  complex     // X(Im w - P) = 0 on M: holomorphic degeneracy witnesses
};

inline LinearSystem build_linear_system(const Model& model, const Ansatz& a, TangencyOperator& op,
                                        Condition cond = Condition::real_part) {
  LinearSystem sys;
  sys.unknowns = unknowns_of(a);
  const std::size_t ncols = sys.unknowns.size();
  std::map<MixedKey, std::vector<std::pair<std::size_t, GaussRat>>, KeyLess> entries;
  for (std::size_t c = 0; c < ncols; ++c) {
    VField X = unit_field(model.n(), sys.unknowns[c]);
    MixedPoly r = cond == Condition::real_part ? op.residue(X) : op.complex_residue(X);
    for (const auto& [k, coef] : r.terms()) entries[k].emplace_back(c, coef);
  }
  for (const auto& [k, col] : entries) {
    std::vector<Rat> re(ncols), im(ncols);
    bool any_re = false, any_im = false;
    for (const auto& [c, coef] : col) {
      re[c] = coef.re;
      im[c] = coef.im;
      any_re = any_re || !coef.re.is_zero();
      any_im = any_im || !coef.im.is_zero();
    }
    if (any_re) {
      sys.rows.push_back(std::move(re));
      sys.provenance.emplace_back(k, false);
    }
    if (any_im) {
      sys.rows.push_back(std::move(im));
      sys.provenance.emplace_back(k, true);
    }
  }
  return sys;
}

struct SolveOptions {
  bool rigid_only = false;
  Condition condition = Condition::real_part;
};

// Kernel basis of the tangency system at degree d. Each returned field is
// re-checked by evaluating its residue directly.
inline std::vector<GradedVField> solve_graded(const Model& model, const Rat& d, SolveOptions opt = {}) {
  Ansatz a = ansatz(model, d, opt.rigid_only);
  if (a.complex_unknowns() == 0) return {};
  TangencyOperator op(model);
  LinearSystem sys = build_linear_system(model, a, op, opt.condition);
  std::vector<GradedVField> out;
  for (auto& v : kernel_basis(sys.rows, sys.unknowns.size())) {
    VField X = field_from_coordinates(model.n(), sys.unknowns, v);
    MixedPoly check = opt.condition == Condition::real_part ? op.residue(X) : op.complex_residue(X);
    if (!check.is_zero())
      throw std::logic_error("solve_graded: kernel field " + to_string(X) + " has nonzero residue");
    out.push_back({std::move(X), d});
  }
  return out;
}

// ---- the full grading ---------------------------------------------------------

struct GradedComponent {
  Rat degree;
  std::vector<VField> basis;
  std::size_t rigid_dim = 0;    // dimension of the w-free part
  std::size_t ansatz_dim = 0;   // real dimension of the candidate space

  std::size_t dim() const { return basis.size(); }
};

// The Euler line and its complement inside g_0.
struct EulerSplit {
  bool euler_in_span = false;
  // Kernel fields whose w d/dw coefficient vanishes.
  std::vector<VField> complement;
};

struct GradingReport {
  std::vector<GradedComponent> components;  // one per menu degree, ascending
  std::size_t total_dim = 0;
  bool has_gc = false;  // rigid fields at some degree in (0, 1)
  bool has_gn = false;  // non-rigid fields at some degree in (0, 1)
  std::vector<Rat> gc_weights;
  std::vector<Rat> gn_weights;
  EulerSplit g0;
  // Nonzero components at achievable degrees outside the menu (only
  // populated when requested).
  std::vector<GradedComponent> extended_findings;

  const GradedComponent* component(const Rat& d) const {
    for (const auto& c : components)
      if (c.degree == d) return &c;
    return nullptr;
  }
  std::size_t dim(const Rat& d) const {
    const auto* c = component(d);
    return c ? c->dim() : 0;
  }
  std::map<Rat, std::size_t> dims() const {
    std::map<Rat, std::size_t> m;
    for (const auto& c : components) m[c.degree] = c.dim();
    return m;
  }
};

inline bool is_intermediate(const Rat& d) { return d.sign() > 0 && d < Rat(1); }

// Splits the degree-0 kernel into the Euler direction and the fields with
// no w d/dw term (elimination of that coordinate).
inline EulerSplit split_euler(const std::vector<VField>& basis, const Model& model) {
  EulerSplit s;
  const std::size_t n = model.n();
  Ansatz a = ansatz(model, Rat(0));
  auto unknowns = unknowns_of(a);
  Matrix<Rat> cols;  // basis vectors as rows
  for (const auto& X : basis) {
    auto x = coordinates(X, unknowns);
    if (!x) throw std::logic_error("split_euler: basis field outside the degree-0 ansatz");
    cols.push_back(std::move(*x));
  }
  auto e = coordinates(euler_field(model.mu()), unknowns);
  Matrix<Rat> with_e = cols;
  with_e.push_back(*e);
  s.euler_in_span = rank(with_e, unknowns.size()) == rank(cols, unknowns.size());

  // c_i = coefficient of w in g for basis field i; combinations with sum c = 0.
  const HoloKey wkey{MultiIndex(n), 1};
  Matrix<Rat> cond(2, std::vector<Rat>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    GaussRat c = basis[i].g().coeff(wkey);
    cond[0][i] = c.re;
    cond[1][i] = c.im;
  }
  for (const auto& comb : kernel_basis(cond, basis.size())) {
    VField X(n);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!comb[i].is_zero()) X += basis[i] * GaussRat(comb[i]);
    s.complement.push_back(std::move(X));
  }
  return s;
}

struct GradingOptions {
  bool extended_menu = false;
  bool parallel = true;
};

inline GradedComponent solve_component(const Model& model, const Rat& d) {
  GradedComponent c;
  c.degree = d;
  c.ansatz_dim = 2 * ansatz(model, d).complex_unknowns();
  for (auto& g : solve_graded(model, d)) c.basis.push_back(std::move(g.field));
  c.rigid_dim = c.basis.empty() ? 0 : solve_graded(model, d, {.rigid_only = true}).size();
  return c;
}

inline GradingReport full_grading(const Model& model, GradingOptions opt = {}) {
  GradingReport rep;
  const DegreeMenu menu = degree_menu(model.mu());

  std::vector<Rat> degrees = menu.degrees;
  std::vector<Rat> extra;
  if (opt.extended_menu)
    for (const auto& d : achievable_degrees(model.mu(), Rat(-1), Rat(1)))
      if (!menu.contains(d)) extra.push_back(d);
  degrees.insert(degrees.end(), extra.begin(), extra.end());

  std::vector<GradedComponent> solved(degrees.size());
  if (opt.parallel) {
    std::vector<std::future<GradedComponent>> jobs;
    for (const auto& d : degrees) jobs.push_back(std::async(std::launch::async, [&model, d] { return solve_component(model, d); }));
    for (std::size_t i = 0; i < jobs.size(); ++i) solved[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < degrees.size(); ++i) solved[i] = solve_component(model, degrees[i]);
  }

  for (std::size_t i = 0; i < solved.size(); ++i) {
    if (i >= menu.degrees.size()) {
      if (solved[i].dim() > 0) rep.extended_findings.push_back(std::move(solved[i]));
      continue;
    }
    GradedComponent& c = solved[i];
    rep.total_dim += c.dim();
    if (is_intermediate(c.degree)) {
      if (c.rigid_dim > 0) {
        rep.has_gc = true;
        rep.gc_weights.push_back(c.degree);
      }
      if (c.dim() > c.rigid_dim) {
        rep.has_gn = true;
        rep.gn_weights.push_back(c.degree);
      }
    }
    if (c.degree.is_zero()) rep.g0 = split_euler(c.basis, model);
    rep.components.push_back(std::move(c));
  }
  return rep;
}

}  // namespace crsym
