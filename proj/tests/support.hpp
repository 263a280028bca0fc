#pragma once

#include "aristotle/group_models.hpp"
#include "aristotle/orbit_chart.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>

namespace testing_support {

using namespace aristotle;

inline double uni(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Eigen::VectorXd random_vec(std::mt19937_64& rng, Eigen::Index n, double scale = 1.0) {
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = uni(rng, -scale, scale);
  return v;
}

inline GroupParam random_element(ModelId model, std::mt19937_64& rng) {
  return GroupParam::from_coords(model,
                                 random_vec(rng, static_cast<Eigen::Index>(model_dim(model))));
}

// Dual point on a maximal orbit with the central coordinate at m omega r^2.
inline DualVector orbit_dual(ModelId model, const ModelParams& p, std::mt19937_64& rng) {
  Eigen::VectorXd xi = random_vec(rng, static_cast<Eigen::Index>(model_dim(model)), 2.0);
  const double l = p.m * p.omega * p.r * p.r;
  switch (model) {
    case ModelId::Base: break;
    case ModelId::Central1: xi[4] = l; break;
    case ModelId::Central2:
      xi[4] = l;
      xi[5] = uni(rng, 0.5, 2.0);
      break;
    case ModelId::Noncentral: {
      const double f = uni(rng, 0.5, 2.0), a = uni(rng, -std::numbers::pi, std::numbers::pi);
      xi[4] = f * std::cos(a);
      xi[5] = f * std::sin(a);
      xi[6] = l;
      break;
    }
    case ModelId::Double:
      xi[6] = l;
      xi[7] = uni(rng, 0.5, 2.0);
      break;
  }
  return DualVector(xi);
}

inline double maxdiff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace testing_support
