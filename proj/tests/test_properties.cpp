#include <gtest/gtest.h>

#include "crsym/analysis.hpp"
#include "crsym/zoo.hpp"
#include "generators.hpp"

using namespace crsym;

namespace {

constexpr int kTrials = 40;

Model model(const std::string& name) { return zoo_entry(name)->build(); }

}  // namespace

TEST(Property, SubstituteWIsARingHomomorphism) {
  std::mt19937_64 rng(11);
  Model m = model("sos_1_4");
  WSubstitution s(m.P());
  for (int t = 0; t < kTrials; ++t) {
    HoloPoly a = gen::holo(rng, 2), b = gen::holo(rng, 2);
    EXPECT_EQ(s(a * b), s(a) * s(b));
    EXPECT_EQ(s(a + b), s(a) + s(b));
  }
  EXPECT_EQ(s(HoloPoly::constant(2, 1)), MixedPoly::constant(2, 1));
}

TEST(Property, WirtingerDerivativesCommute) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < kTrials; ++t) {
    MixedPoly p = gen::mixed(rng, 2, 4);
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_EQ(wirtinger(wirtinger(p, j, false), k, true), wirtinger(wirtinger(p, k, true), j, false));
        EXPECT_EQ(wirtinger(wirtinger(p, j, false), k, false), wirtinger(wirtinger(p, k, false), j, false));
      }
    EXPECT_EQ(conj(wirtinger(p, 0, false)), wirtinger(conj(p), 0, true));
  }
}

// E(h) = d h for h weighted homogeneous of degree d.
TEST(Property, EulerIdentity) {
  std::mt19937_64 rng(13);
  WeightVector mu({Rat(1, 2), Rat(1, 4)});
  VField E = euler_field(mu);
  for (const Rat& d : {Rat(1, 4), Rat(1), Rat(3, 2), Rat(2)}) {
    for (int t = 0; t < 5; ++t) {
      HoloPoly h(2);
      for (const auto& k : weighted_monomials(mu, d)) h.add_term(k, gen::gauss(rng));
      EXPECT_EQ(E.apply(h), h * GaussRat(d));
    }
  }
}

TEST(Property, JacobiIdentity) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 15; ++t) {
    VField X = gen::field(rng, 2), Y = gen::field(rng, 2), Z = gen::field(rng, 2);
    VField s = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y));
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(Property, BracketIsADerivation) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 15; ++t) {
    VField X = gen::field(rng, 2), Y = gen::field(rng, 2);
    HoloPoly h = gen::holo(rng, 2);
    EXPECT_EQ(bracket(X, Y).apply(h), X.apply(Y.apply(h)) - Y.apply(X.apply(h)));
  }
}

TEST(Property, TangencyIsRealLinear) {
  std::mt19937_64 rng(16);
  for (const auto& e : zoo()) {
    Model m = e.build();
    TangencyOperator op(m);
    for (int t = 0; t < 5; ++t) {
      VField X = gen::field(rng, m.n()), Y = gen::field(rng, m.n());
      Rat a = gen::rat(rng), b = gen::rat(rng);
      EXPECT_EQ(op.residue(X * GaussRat(a) + Y * GaussRat(b)),
                op.residue(X) * GaussRat(a) + op.residue(Y) * GaussRat(b));
    }
  }
}

TEST(Property, TangencyResidueIsReal) {
  std::mt19937_64 rng(17);
  for (const auto& e : zoo()) {
    Model m = e.build();
    TangencyOperator op(m);
    for (int t = 0; t < 5; ++t) EXPECT_TRUE(is_real(op.residue(gen::field(rng, m.n())))) << e.name;
  }
}

TEST(Property, BracketDegreesAdd) {
  std::mt19937_64 rng(18);
  WeightVector mu({Rat(1, 2), Rat(1, 4)});
  const std::vector<Rat> degrees{Rat(-1), Rat(-1, 2), Rat(-1, 4), Rat(0), Rat(1, 4), Rat(1, 2)};
  for (const auto& a : degrees)
    for (const auto& b : degrees) {
      VField X = gen::graded_field(rng, mu, a), Y = gen::graded_field(rng, mu, b);
      VField Z = bracket(X, Y);
      if (Z.is_zero()) continue;
      EXPECT_EQ(graded_degree(Z, mu), a + b);
    }
}

TEST(Property, BracketOfSymmetriesIsSymmetry) {
  for (const char* name : {"sos_1_4", "tube_x1z2"}) {
    Model m = model(name);
    GradingReport r = full_grading(m);
    std::vector<GradedVField> all;
    for (const auto& c : r.components)
      for (const auto& X : c.basis) all.push_back({X, c.degree});
    for (const auto& X : all)
      for (const auto& Y : all) EXPECT_TRUE(tangency(bracket(X.field, Y.field), m).is_zero()) << name;
  }
}
