#include "aristotle/error.hpp"
#include "aristotle/group_models.hpp"
#include "support.hpp"

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>

using namespace aristotle;
using testing_support::maxdiff;
using testing_support::orbit_dual;
using testing_support::random_element;
using testing_support::random_vec;

namespace {

constexpr ModelId kLieModels[] = {ModelId::Base, ModelId::Central1, ModelId::Noncentral,
                                  ModelId::Double};

double gdiff(const GroupParam& a, const GroupParam& b) {
  return (a.coords() - b.coords()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Models, NamesRoundTrip) {
  for (ModelId m : kAllModels) EXPECT_EQ(parse_model(model_name(m)), m);
  EXPECT_FALSE(parse_model("central3").has_value());
}

TEST(Models, DimensionsAndLabels) {
  EXPECT_EQ(model_dim(ModelId::Base), 4u);
  EXPECT_EQ(model_dim(ModelId::Central1), 5u);
  EXPECT_EQ(model_dim(ModelId::Central2), 6u);
  EXPECT_EQ(model_dim(ModelId::Noncentral), 7u);
  EXPECT_EQ(model_dim(ModelId::Double), 8u);
  EXPECT_EQ(basis_labels(ModelId::Double),
            (std::vector<std::string>{"J", "P1", "P2", "H", "F1", "F2", "S", "K"}));
  EXPECT_EQ(dual_labels(ModelId::Central2),
            (std::vector<std::string>{"j", "p1", "p2", "E", "l", "h"}));
}

TEST(Helpers, RotationAndCross) {
  const Vec2 e1(1, 0);
  EXPECT_LT((rotation(std::numbers::pi / 2) * e1 - Vec2(0, 1)).norm(), 1e-15);
  EXPECT_EQ(cross(Vec2(1, 0), Vec2(0, 1)), 1.0);
  EXPECT_EQ(eps(Vec2(3, 5)), Vec2(5, -3));
}

TEST(Multiply, BaseLawByHand) {
  GroupParam g = GroupParam::identity(ModelId::Base);
  g.theta = std::numbers::pi / 2;
  g.x = Vec2(1, 0);
  g.t = 1;
  GroupParam h = GroupParam::identity(ModelId::Base);
  h.x = Vec2(1, 0);
  h.t = 2;
  const auto gh = multiply(g, h, ModelParams{});
  EXPECT_DOUBLE_EQ(gh.theta, std::numbers::pi / 2);
  EXPECT_NEAR(gh.x[0], 1.0, 1e-15);
  EXPECT_NEAR(gh.x[1], 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(gh.t, 3.0);
}

TEST(Multiply, CocycleByHand) {
  GroupParam g = GroupParam::identity(ModelId::Central1), h = g;
  g.x = Vec2(1, 0);
  h.x = Vec2(0, 1);
  ModelParams p;
  p.r = 2.0;
  EXPECT_DOUBLE_EQ(multiply(g, h, p).phi, 1.0 / 8.0);
  EXPECT_DOUBLE_EQ(cocycle(GroupParam::from_coords(ModelId::Base, g.coords().head(4)),
                           GroupParam::from_coords(ModelId::Base, h.coords().head(4)), p),
                   1.0 / 8.0);
}

TEST(Multiply, MixedModelsRejected) {
  EXPECT_THROW(multiply(GroupParam::identity(ModelId::Base), GroupParam::identity(ModelId::Double),
                        ModelParams{}),
               InvalidInput);
}

TEST(Multiply, AssociativeForLieModels) {
  std::mt19937_64 rng(10);
  for (ModelId m : kLieModels) {
    for (int i = 0; i < 200; ++i) {
      const auto a = random_element(m, rng), b = random_element(m, rng), c = random_element(m, rng);
      const ModelParams p;
      EXPECT_LT(gdiff(multiply(multiply(a, b, p), c, p), multiply(a, multiply(b, c, p), p)), 1e-12)
          << model_name(m);
    }
  }
}

TEST(Multiply, SecondCentralLawIsNotAssociative) {
  GroupParam a = GroupParam::identity(ModelId::Central2), b = a, c = a;
  a.t = 1;
  b.x = Vec2(1, 0);
  c.x = Vec2(0, 1);
  const ModelParams p;
  // (ab)c and a(bc) differ in psi by omega t times the cocycle of (b, c).
  const double lhs = multiply(multiply(a, b, p), c, p).psi;
  const double rhs = multiply(a, multiply(b, c, p), p).psi;
  EXPECT_DOUBLE_EQ(lhs - rhs, 0.5);
}

TEST(Inverse, RoundTripAllModels) {
  std::mt19937_64 rng(11);
  const ModelParams p;
  for (ModelId m : kAllModels) {
    const auto e = GroupParam::identity(m);
    for (int i = 0; i < 200; ++i) {
      const auto g = random_element(m, rng);
      EXPECT_LT(gdiff(multiply(g, inverse(g, p), p), e), 1e-12) << model_name(m);
      EXPECT_LT(gdiff(multiply(inverse(g, p), g, p), e), 1e-12) << model_name(m);
    }
  }
}

TEST(Cocycle, SatisfiesCocycleIdentity) {
  std::mt19937_64 rng(12);
  const ModelParams p;
  for (int i = 0; i < 500; ++i) {
    const auto a = random_element(ModelId::Base, rng), b = random_element(ModelId::Base, rng),
               c = random_element(ModelId::Base, rng);
    EXPECT_NEAR(cocycle(a, b, p) + cocycle(multiply(a, b, p), c, p),
                cocycle(b, c, p) + cocycle(a, multiply(b, c, p), p), 1e-13);
  }
}

TEST(Adjoint, IsDerivativeOfConjugation) {
  std::mt19937_64 rng(13);
  const ModelParams p;
  const double h = 1e-5;
  for (ModelId m : kLieModels) {
    const std::size_t n = model_dim(m);
    for (int s = 0; s < 10; ++s) {
      const auto g = random_element(m, rng);
      const auto gi = inverse(g, p);
      for (std::size_t i = 0; i < n; ++i) {
        auto conj = [&](double e) {
          return multiply(multiply(g, one_parameter(m, i, e), p), gi, p).coords();
        };
        const Eigen::VectorXd fd = (conj(h) - conj(-h)) / (2 * h);
        EXPECT_LT(maxdiff(fd, adjoint(g, AlgebraVector::unit(n, i), p).coords), 1e-8)
            << model_name(m) << " generator " << i;
      }
    }
  }
}

TEST(Coadjoint, PreservesPairingWithAdjoint) {
  std::mt19937_64 rng(14);
  ModelParams p;
  p.omega = 1.5;
  p.r = 0.8;
  for (ModelId m : kLieModels) {
    const auto n = static_cast<Eigen::Index>(model_dim(m));
    for (int i = 0; i < 100; ++i) {
      const auto g = random_element(m, rng);
      const DualVector xi(random_vec(rng, n, 2.0));
      const AlgebraVector x(random_vec(rng, n));
      EXPECT_NEAR(coadjoint(g, xi, p).coords.dot(adjoint(g, x, p).coords), xi.coords.dot(x.coords),
                  1e-12)
          << model_name(m);
    }
  }
}

TEST(Coadjoint, OneParameterSubgroupsMatchMatrixExponential) {
  std::mt19937_64 rng(15);
  const ModelParams p;
  for (ModelId m : kAllModels) {
    const auto t = structure(m, p);
    const std::size_t n = model_dim(m);
    for (std::size_t i = 0; i < n; ++i) {
      const double s = testing_support::uni(rng);
      const DualVector xi = orbit_dual(m, p, rng);
      AlgebraVector x = AlgebraVector::unit(n, i);
      x.coords *= s;
      const Eigen::VectorXd oracle = coad_matrix(t, x).exp() * xi.coords;
      EXPECT_LT(maxdiff(coadjoint(one_parameter(m, i, s), xi, p).coords, oracle), 1e-12)
          << model_name(m) << " generator " << basis_labels(m)[i];
    }
  }
}

TEST(Coadjoint, HomomorphismForLieModels) {
  std::mt19937_64 rng(16);
  const ModelParams p;
  for (ModelId m : kLieModels) {
    for (int i = 0; i < 100; ++i) {
      const auto g = random_element(m, rng), h = random_element(m, rng);
      const DualVector xi = orbit_dual(m, p, rng);
      EXPECT_LT(maxdiff(coadjoint(multiply(g, h, p), xi, p).coords,
                        coadjoint(g, coadjoint(h, xi, p), p).coords),
                1e-12)
          << model_name(m);
    }
  }
}

TEST(Coadjoint, SecondCentralModelBreaksHomomorphism) {
  std::mt19937_64 rng(17);
  const ModelParams p;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto g = random_element(ModelId::Central2, rng), h = random_element(ModelId::Central2, rng);
    const DualVector xi = orbit_dual(ModelId::Central2, p, rng);
    worst = std::max(worst, maxdiff(coadjoint(multiply(g, h, p), xi, p).coords,
                                    coadjoint(g, coadjoint(h, xi, p), p).coords));
  }
  EXPECT_GT(worst, 1e-3);
}

TEST(Coadjoint, DoubleExtensionTimeTranslation) {
  // p -> p - k q t with q = -f / k, i.e. p -> p + f t.
  DualVector xi(Eigen::VectorXd::Zero(8));
  xi.coords << 0, 0, 0, 0, -1, 0, 1, 1;
  GroupParam g = GroupParam::identity(ModelId::Double);
  g.t = 3;
  const auto out = coadjoint(g, xi, ModelParams{});
  EXPECT_DOUBLE_EQ(out[1], -3.0);
  EXPECT_DOUBLE_EQ(out[2], 0.0);
  EXPECT_DOUBLE_EQ(out[4], -1.0);
}

TEST(GroupExp, AgreesWithOneParameterSubgroups) {
  const ModelParams p;
  for (ModelId m : kLieModels) {
    const std::size_t n = model_dim(m);
    for (std::size_t i = 0; i < n; ++i) {
      AlgebraVector x = AlgebraVector::unit(n, i);
      x.coords *= 0.7;
      EXPECT_LT(gdiff(group_exp(m, x, p), one_parameter(m, i, 0.7)), 1e-9) << model_name(m);
    }
  }
}

TEST(GroupExp, CoadjointOfExpMatchesSeries) {
  std::mt19937_64 rng(18);
  const ModelParams p;
  for (ModelId m : kLieModels) {
    const auto t = structure(m, p);
    const auto n = static_cast<Eigen::Index>(model_dim(m));
    for (int i = 0; i < 20; ++i) {
      const AlgebraVector x(random_vec(rng, n));
      const DualVector xi = orbit_dual(m, p, rng);
      EXPECT_LT(maxdiff(coadjoint(group_exp(m, x, p), xi, p).coords,
                        exp_coadjoint(t, x, xi).coords),
                1e-7)
          << model_name(m);
    }
  }
}

TEST(GroupParam, CoordsRoundTrip) {
  std::mt19937_64 rng(19);
  for (ModelId m : kAllModels) {
    const Eigen::VectorXd c = random_vec(rng, static_cast<Eigen::Index>(model_dim(m)));
    EXPECT_EQ(GroupParam::from_coords(m, c).coords(), c);
  }
  EXPECT_THROW(GroupParam::from_coords(ModelId::Base, Eigen::VectorXd::Zero(5)), InvalidInput);
}
