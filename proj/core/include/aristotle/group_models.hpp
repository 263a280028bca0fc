#pragma once

// The planar Aristotle group A(2) (rotations, space translations, time
// translations) and four of its extensions, each with a closed-form group law,
// inverse, adjoint and coadjoint action.
//
// Sign conventions:
//   R(theta)      counterclockwise rotation
//   a x b         a1 b2 - a2 b1
//   eps(v)        (v2, -v1), the vector eps(x) * dtheta of the adjoint action
//   [J, P1] = P2, [J, P2] = -P1   (the same pattern for F1, F2)
//
// Basis orders (group parameter in parentheses):
//   Base        J(theta) P1 P2(x) H(t)
//   Central1    ... S(phi)                      [P1, P2] = S / r^2
//   Central2    ... S(phi) N(psi)               [S, H] = omega N
//   Noncentral  J P1 P2 H F1 F2(eta) S          [P_i, H] = F_i
//   Double      J P1 P2 H F1 F2 S K(gamma)      [P_i, F_j] = delta_ij K
//
// Central2 is kept exactly as tabulated even though its bracket table violates
// the Jacobi identity ([[P1, P2], H] = omega N / r^2) and its composition law
// is not associative; the verification suite reports both defects.

#include "aristotle/lie_core.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aristotle {

enum class ModelId { Base, Central1, Central2, Noncentral, Double };

inline constexpr std::array<ModelId, 5> kAllModels = {
    ModelId::Base, ModelId::Central1, ModelId::Central2, ModelId::Noncentral, ModelId::Double};

/// CLI name: base, central1, central2, noncentral, double.
std::string_view model_name(ModelId model);
std::optional<ModelId> parse_model(std::string_view name);

std::vector<std::string> basis_labels(ModelId model);
/// Dual coordinate names, in basis order: j p1 p2 E, then l | l h | f1 f2 h | f1 f2 h k.
std::vector<std::string> dual_labels(ModelId model);
std::size_t model_dim(ModelId model);

/// The model's bracket table with the given radius and frequency.
StructureTensor structure(ModelId model, const ModelParams& params);

using Vec2 = Eigen::Vector2d;

/// Group element. Fields that do not belong to `model` stay zero.
struct GroupParam {
  ModelId model = ModelId::Base;
  double theta = 0.0;
  Vec2 x = Vec2::Zero();
  double t = 0.0;
  double phi = 0.0;    ///< Central1, Central2, Noncentral, Double
  double psi = 0.0;    ///< Central2
  Vec2 eta = Vec2::Zero();  ///< Noncentral, Double
  double gamma = 0.0;  ///< Double

  static GroupParam identity(ModelId model);

  /// Parameters in basis order (theta, x1, x2, t, ...).
  Eigen::VectorXd coords() const;
  static GroupParam from_coords(ModelId model, const Eigen::VectorXd& coords);
};

Eigen::Matrix2d rotation(double theta);
double cross(const Vec2& a, const Vec2& b);
Vec2 eps(const Vec2& v);

GroupParam multiply(const GroupParam& g, const GroupParam& h, const ModelParams& params);
GroupParam inverse(const GroupParam& g, const ModelParams& params);

/// c(g, h) = (R(-theta) x) x x' / (2 r^2) for Base-model elements.
double cocycle(const GroupParam& g, const GroupParam& h, const ModelParams& params);

/// Ad_g on algebra coordinates.
AlgebraVector adjoint(const GroupParam& g, const AlgebraVector& dx, const ModelParams& params);

/// Ad*_g xi = xi o Ad_{g^-1}.
DualVector coadjoint(const GroupParam& g, const DualVector& xi, const ModelParams& params);

/// The element whose single nonzero parameter is the one paired with basis
/// vector `index`; this is exp(s e_index).
GroupParam one_parameter(ModelId model, std::size_t index, double s);

/// exp(x) computed as (first-order element of x / 2^k)^(2^k), k = squarings.
/// Accurate to O(|x|^2 / 2^k).
GroupParam group_exp(ModelId model, const AlgebraVector& x, const ModelParams& params,
                     int squarings = 30);

}  // namespace aristotle
