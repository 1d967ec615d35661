#pragma once

// Floating-point reference for graded symmetry dimensions. Shares nothing
// with the exact solver: monomials are enumerated by brute force over
// integer-scaled weights, the tangency condition is evaluated numerically at
// random points of M and the kernel dimension is read off an SVD.

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

struct Term {
  cd c;
  std::vector<int> a, b;  // z^a zb^b
};

struct Model {
  std::vector<int> mu_num;  // weights = mu_num / den
  int den;
  std::vector<Term> P;
  std::size_t n() const { return mu_num.size(); }
};

inline cd monomial(const std::vector<cd>& z, const std::vector<int>& a) {
  cd r = 1;
  for (std::size_t j = 0; j < a.size(); ++j) r *= std::pow(z[j], a[j]);
  return r;
}

inline double eval_P(const Model& m, const std::vector<cd>& z) {
  cd s = 0;
  for (const auto& t : m.P) s += t.c * monomial(z, t.a) * std::conj(monomial(z, t.b));
  return s.real();
}

inline cd eval_dP(const Model& m, const std::vector<cd>& z, std::size_t j) {
  cd s = 0;
  for (const auto& t : m.P) {
    if (t.a[j] == 0) continue;
    auto a = t.a;
    a[j] -= 1;
    s += t.c * double(t.a[j]) * monomial(z, a) * std::conj(monomial(z, t.b));
  }
  return s;
}

struct Mono {
  std::vector<int> a;
  int m;  // power of w
};

// Monomials z^a w^m with sum a_j mu_num_j + m den == target (integer units).
inline std::vector<Mono> monomials(const Model& M, int target) {
  std::vector<Mono> out;
  if (target < 0) return out;
  std::vector<int> a(M.n(), 0);
  auto rec = [&](auto&& self, std::size_t j, int rem) -> void {
    if (j == M.n()) {
      if (rem >= 0 && rem % M.den == 0) out.push_back({a, rem / M.den});
      return;
    }
    for (int e = 0; e * M.mu_num[j] <= rem; ++e) {
      a[j] = e;
      self(self, j + 1, rem - e * M.mu_num[j]);
    }
    a[j] = 0;
  };
  rec(rec, 0, target);
  return out;
}

struct Column {
  std::size_t slot;  // 0..n-1 z-slots, n = w-slot
  Mono mono;
  cd coeff;  // 1 or i
};

struct Dims {
  int dim = 0;
  int rigid_dim = 0;
  int unknowns = 0;
};

// Degree d = k / den, k an integer in [-den, den].
inline Dims graded_dims(const Model& M, int k, std::uint64_t seed = 7) {
  const std::size_t n = M.n();
  std::vector<Column> cols;
  for (std::size_t s = 0; s <= n; ++s) {
    const int weight = s < n ? M.mu_num[s] : M.den;
    for (const auto& mono : monomials(M, k + weight)) {
      cols.push_back({s, mono, cd(1, 0)});
      cols.push_back({s, mono, cd(0, 1)});
    }
  }
  Dims d;
  d.unknowns = static_cast<int>(cols.size());
  if (cols.empty()) return d;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-0.9, 0.9);
  const std::size_t rows = std::max<std::size_t>(3 * cols.size(), 24);
  Eigen::MatrixXd A(rows, cols.size());
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<cd> z(n);
    for (auto& zj : z) zj = cd(U(rng), U(rng));
    const double u = U(rng);
    const cd w(u, eval_P(M, z));
    std::vector<cd> dP(n);
    for (std::size_t j = 0; j < n; ++j) dP[j] = eval_dP(M, z, j);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& col = cols[c];
      const cd val = col.coeff * monomial(z, col.mono.a) * std::pow(w, col.mono.m);
      const cd t = col.slot == n ? val / cd(0, 2) : -val * dP[col.slot];
      A(r, c) = 2 * t.real();
    }
  }
  auto nullity = [](const Eigen::MatrixXd& B) {
    if (B.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(B);
    const auto& sv = svd.singularValues();
    const double tol = 1e-9 * std::max(1.0, sv.size() ? sv(0) : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) rank += sv(i) > tol;
    return static_cast<int>(B.cols()) - rank;
  };
  d.dim = nullity(A);
  std::vector<int> rigid;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (cols[c].mono.m == 0) rigid.push_back(static_cast<int>(c));
  Eigen::MatrixXd R(rows, rigid.size());
  for (std::size_t c = 0; c < rigid.size(); ++c) R.col(c) = A.col(rigid[c]);
  d.rigid_dim = nullity(R);
  return d;
}

// Every degree k/den in [-1, 1] that has at least one candidate monomial.
inline std::map<int, Dims> all_dims(const Model& M) {
  std::map<int, Dims> out;
  for (int k = -M.den; k <= M.den; ++k) {
    Dims d = graded_dims(M, k);
    if (d.unknowns > 0) out[k] = d;
  }
  return out;
}

inline Term term(double re, double im, std::vector<int> a, std::vector<int> b) {
  return {cd(re, im), std::move(a), std::move(b)};
}

// Hand-expanded defining polynomials of the built-in models.
inline std::map<std::string, Model> zoo() {
  std::map<std::string, Model> z;
  z["hyperquadric1"] = {{1}, 2, {term(1, 0, {1}, {1})}};
  z["hyperquadric2"] = {{1, 1}, 2, {term(1, 0, {1, 0}, {1, 0}), term(1, 0, {0, 1}, {0, 1})}};
  z["sos_quartic_1var"] = {{1}, 4, {term(1, 0, {2}, {2})}};
  z["sos_1_4"] = {{2, 1}, 4, {term(1, 0, {1, 0}, {1, 0}), term(1, 0, {0, 2}, {0, 2})}};
  z["sos_quartic_2var"] = {{1, 1},
                           4,
                           {term(1, 0, {2, 0}, {2, 0}), term(1, 0, {1, 1}, {1, 1}), term(1, 0, {0, 2}, {0, 2})}};
  z["tube_x1z2"] = {{2, 1}, 4, {term(0.5, 0, {1, 1}, {0, 1}), term(0.5, 0, {0, 1}, {1, 1})}};
  z["degenerate_z1_in_c3"] = {{1, 1}, 2, {term(1, 0, {1, 0}, {1, 0})}};
  return z;
}

}  // namespace oracle
