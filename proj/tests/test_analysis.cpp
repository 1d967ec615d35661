#include <gtest/gtest.h>

#include "crsym/analysis.hpp"
#include "crsym/zoo.hpp"

using namespace crsym;

namespace {

Model model(const std::string& name) { return zoo_entry(name)->build(); }

const GaussRat I = GaussRat::i();

}  // namespace

TEST(RotationCheck, Cases) {
  auto ok = [](const Matrix<GaussRat>& a) { return rotation_check(a).real_part_zero; };
  EXPECT_TRUE(ok({{I, 0}, {0, -I}}));
  EXPECT_TRUE(ok({{0, 1}, {-1, 0}}));  // eigenvalues +-i
  EXPECT_TRUE(ok({{GaussRat(Rat(0), Rat(2))}}));
  EXPECT_TRUE(ok({{0, 0}, {0, 0}}));
  EXPECT_TRUE(ok({{I, 0}, {0, I}}));  // repeated, still semisimple

  auto real = rotation_check({{1, 0}, {0, 0}});
  EXPECT_TRUE(real.semisimple);
  EXPECT_FALSE(real.purely_imaginary);

  auto nil = rotation_check({{0, 1}, {0, 0}});
  EXPECT_FALSE(nil.semisimple);
  EXPECT_TRUE(nil.purely_imaginary);

  EXPECT_FALSE(ok({{I, 1}, {0, I}}));
  EXPECT_FALSE(ok({{GaussRat(Rat(1), Rat(1))}}));
  EXPECT_FALSE(ok({{0, 1}, {1, 0}}));  // eigenvalues +-1
}

TEST(LinearPart, EulerField) {
  WeightVector mu({Rat(1, 2), Rat(1, 4)});
  LinearPart lp = linear_part({euler_field(mu), Rat(0)});
  EXPECT_EQ(lp.A[0][0], GaussRat(Rat(1, 2)));
  EXPECT_EQ(lp.A[1][1], GaussRat(Rat(1, 4)));
  EXPECT_EQ(lp.A[0][1], GaussRat(0));
  EXPECT_EQ(lp.c, GaussRat(1));
  EXPECT_FALSE(lp.nonlinear_remainder);
  EXPECT_THROW(linear_part({field_dw(2), Rat(-1)}), InhomogeneousError);
}

TEST(LinearPart, FlagsNonlinearTerms) {
  WeightVector mu({Rat(1, 2), Rat(1, 4)});
  VField X(2);
  X.f(0) = holo_monomial(2, MultiIndex{0, 2}, 0);  // z2^2 d/dz1, weight 0
  EXPECT_TRUE(linear_part({X, Rat(0)}).nonlinear_remainder);
}

TEST(ClassifyG0, PseudoconvexModelsHaveOnlyRotations) {
  for (const char* name : {"hyperquadric1", "hyperquadric2", "sos_quartic_2var", "sos_1_4"}) {
    Model m = model(name);
    G0Classification g = classify_g0(full_grading(m), m);
    EXPECT_TRUE(g.violations.empty()) << name;
    EXPECT_TRUE(g.unsupported.empty()) << name;
    for (const auto& r : g.rotations) {
      EXPECT_TRUE(r.linear.c.is_zero()) << name;
      EXPECT_TRUE(tangency(r.field, m).is_zero()) << name;
    }
  }
}

TEST(ClassifyG0, TubeHasRealRotation) {
  Model m = model("tube_x1z2");
  G0Classification g = classify_g0(full_grading(m), m);
  EXPECT_FALSE(g.violations.empty());
}

TEST(ClassifyG0, RequiresEuler) {
  Model m = model("hyperquadric1");
  EXPECT_THROW(classify_g0(std::vector<GradedVField>{}, m), std::logic_error);
}

TEST(Dichotomy, Tube) {
  auto d = gn_dichotomy(model("tube_x1z2"));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].form, DichotomyForm::linear);
  EXPECT_EQ(to_string(d[1].form), std::string("none"));
  EXPECT_FALSE(d[1].note.empty());
}

TEST(Nondegeneracy, Verdicts) {
  for (const auto& e : zoo()) {
    auto v = holomorphic_nondegeneracy(e.build());
    EXPECT_EQ(v.nondegenerate, e.expect.nondegenerate) << e.name;
    EXPECT_EQ(v.degree_cap, Rat(1));
  }
  Model m = model("degenerate_z1_in_c3");
  auto v = holomorphic_nondegeneracy(m);
  ASSERT_TRUE(v.witness.has_value());
  TangencyOperator op(m);
  EXPECT_TRUE(op.complex_residue(v.witness->field).is_zero());
  EXPECT_EQ(v.witness->degree, Rat(-1, 2));
}

TEST(StructureVerdict, ZooShapes) {
  for (const auto& e : zoo()) {
    Model m = e.build();
    auto sv = structure_verdict(full_grading(m), m, pseudoconvexity(m), holomorphic_nondegeneracy(m));
    EXPECT_EQ(sv.grading_shape, e.expect.shape) << e.name;
    EXPECT_EQ(sv.jet_order, e.expect.jet_order) << e.name;
  }
}

TEST(StructureVerdict, ShapeNeedsHypotheses) {
  Model m = model("sos_1_4");
  GradingReport r = full_grading(m);
  LeviVerdict not_psd;
  not_psd.status = LeviVerdict::Status::not_psd;
  auto sv = structure_verdict(r, m, not_psd, holomorphic_nondegeneracy(m));
  EXPECT_EQ(sv.grading_shape, GradingShape::other);
}
