#include <gtest/gtest.h>

#include <algorithm>

#include "crsym/model.hpp"
#include "crsym/parser.hpp"
#include "crsym/zoo.hpp"

using namespace crsym;

namespace {

using Kind = Violation::Kind;

std::vector<Kind> kinds(const ValidationResult& r) {
  std::vector<Kind> k;
  for (const auto& v : r.violations) k.push_back(v.kind);
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return k;
}

ZPoly zpoly(const std::string& s, std::size_t n) {
  MixedPoly p = parse_expression(s, n);
  ZPoly z(n);
  for (const auto& [k, c] : p.terms()) z.add_term({k.z, k.zb}, c);
  return z;
}

const std::vector<Rat> kHalf{Rat(1, 2)};
const std::vector<Rat> kHalfQuarter{Rat(1, 2), Rat(1, 4)};

}  // namespace

TEST(Validate, AcceptsHyperquadric) {
  auto r = validate(kHalf, zpoly("abs2(z1)", 1));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value().n(), 1u);
}

// Each clause is falsified on its own by a single mutation.
TEST(Validate, PluriharmonicMutation) {
  auto r = validate(kHalf, zpoly("abs2(z1) + z1^2 + zb1^2", 1));
  EXPECT_EQ(kinds(r), std::vector<Kind>{Kind::pluriharmonic});
}

TEST(Validate, RealityMutation) {
  auto r = validate(kHalfQuarter, zpoly("abs2(z1) + i*z1*zb2^2", 2));
  EXPECT_EQ(kinds(r), std::vector<Kind>{Kind::reality});
}

TEST(Validate, HomogeneityMutation) {
  auto r = validate(kHalf, zpoly("abs2(z1) + abs2(z1^2)", 1));
  EXPECT_EQ(kinds(r), std::vector<Kind>{Kind::not_homogeneous});
}

TEST(Validate, WeightMutation) {
  auto r = validate({Rat(1, 4), Rat(1, 2)}, zpoly("abs2(z2) + abs2(z1^2)", 2));
  EXPECT_EQ(kinds(r), std::vector<Kind>{Kind::weight_bounds});
}

TEST(Validate, ZeroAndDimension) {
  EXPECT_EQ(kinds(validate(kHalf, ZPoly(1))), std::vector<Kind>{Kind::zero_polynomial});
  EXPECT_EQ(kinds(validate(kHalfQuarter, zpoly("abs2(z1)", 1))), std::vector<Kind>{Kind::dimension});
  EXPECT_THROW(validate(kHalf, ZPoly(1)).value(), ModelError);
}

TEST(BuildSos, RejectsBadFactors) {
  EXPECT_THROW(build_sos(kHalf, {}), ModelError);
  EXPECT_THROW(build_sos(kHalf, {parse_holo("z1^2", 1)}), ModelError);
  EXPECT_THROW(build_sos(kHalf, {parse_holo("1 + z1", 1)}), ModelError);
  EXPECT_THROW(build_sos(kHalf, {parse_holo("w", 1)}), ModelError);
}

TEST(BuildSos, ExpandsSquares) {
  Model m = build_sos(kHalfQuarter, {parse_holo("z1 + z2^2", 2)});
  EXPECT_EQ(m.P().poly(), zpoly("abs2(z1 + z2^2)", 2));
  EXPECT_TRUE(m.is_sos());
}

// The Levi matrix of sum |Q_m|^2 is the Gram matrix of the gradients.
TEST(Levi, GramMatrixOfSos) {
  std::vector<HoloPoly> Q{parse_holo("z1^2", 2), parse_holo("z1 z2", 2), parse_holo("z2^2", 2)};
  Model m = build_sos({Rat(1, 4), Rat(1, 4)}, Q);
  LeviMatrix L = levi_form(m.P());
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) {
      MixedPoly gram(2);
      for (const auto& q : Q) gram += holo_to_mixed(d_z(q, j)) * conj_holo(d_z(q, k));
      EXPECT_EQ(L[j][k], gram) << j << "," << k;
    }
  // Same P without the certificate: every sampled point is PSD.
  Model plain = validate(m.mu().vector(), m.P()).value();
  LeviVerdict v = pseudoconvexity(plain, 100, 3);
  EXPECT_EQ(v.status, LeviVerdict::Status::psd_sampled);
  EXPECT_EQ(v.samples_checked, 102u);
  EXPECT_EQ(pseudoconvexity(m).status, LeviVerdict::Status::psd_certified);
}

TEST(Levi, TubeWitnessIsExact) {
  Model m = zoo_entry("tube_x1z2")->build();
  LeviVerdict v = pseudoconvexity(m);
  ASSERT_EQ(v.status, LeviVerdict::Status::not_psd);
  ASSERT_TRUE(v.witness.has_value());
  auto minor = negative_principal_minor(evaluate(levi_form(m.P()), v.witness->point));
  ASSERT_TRUE(minor.has_value());
  EXPECT_EQ(minor->value, v.witness->minor.value);
  EXPECT_LT(v.witness->minor.value.sign(), 0);
}

TEST(Levi, SamplingIsDeterministic) {
  EXPECT_EQ(levi_sample_points(2, 10, 5), levi_sample_points(2, 10, 5));
  EXPECT_NE(levi_sample_points(2, 10, 5), levi_sample_points(2, 10, 6));
  auto pts = levi_sample_points(2, 10, 5);
  EXPECT_EQ(pts[0], (std::vector<GaussRat>{GaussRat(1), GaussRat(0)}));
  for (const auto& p : pts)
    for (const auto& c : p) {
      EXPECT_LE(abs(c.re.num()), 16);
      EXPECT_LE(c.re.den(), 16);
    }
}

TEST(NegativeMinor, Cases) {
  Matrix<GaussRat> psd{{GaussRat(1), GaussRat::i()}, {-GaussRat::i(), GaussRat(1)}};
  EXPECT_FALSE(negative_principal_minor(psd).has_value());
  Matrix<GaussRat> indefinite{{GaussRat(0), GaussRat(1)}, {GaussRat(1), GaussRat(0)}};
  auto m = negative_principal_minor(indefinite);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(m->value, Rat(-1));
}

TEST(Balance, ZooModels) {
  EXPECT_TRUE(balance_info(zoo_entry("sos_1_4")->build()).balanced);
  EXPECT_EQ(balance_info(zoo_entry("sos_1_4")->build()).kappa, 1u);
  EXPECT_FALSE(balance_info(zoo_entry("tube_x1z2")->build()).balanced);
  EXPECT_EQ(balance_info(zoo_entry("hyperquadric2")->build()).kappa, 2u);
}

// When the diagonal condition holds, the vectors 2a span R^n.
TEST(DiagonalCondition, ImpliesSpanning) {
  for (const auto& e : zoo()) {
    Model m = e.build();
    auto d = diagonal_condition(m);
    if (!d.holds) continue;
    EXPECT_EQ(rank(diagonal_exponent_vectors(m), m.n()), m.n()) << e.name;
  }
  auto tube = diagonal_condition(zoo_entry("tube_x1z2")->build());
  EXPECT_FALSE(tube.holds);
  EXPECT_EQ(tube.first_bad, 0u);
  EXPECT_FALSE(diagonal_condition(zoo_entry("degenerate_z1_in_c3")->build()).holds);
}
