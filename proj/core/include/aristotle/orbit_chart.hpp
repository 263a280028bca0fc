#pragma once

// Charts on the maximal coadjoint orbits, Casimir invariants, and the Poisson
// tensors the orbits carry.
//
//   model       chart coordinates         Casimir labels
//   Central1    (p, q)                    (l, E, s)
//   Central2    (p, q, l, alpha)          (h, s)
//   Noncentral  (j, phi_f, p, q)          (h, f, U)
//   Double      (p1, p2, q1, q2)          (h, k, s, U)
//
// with p = p1, q = -p2 / (m omega), alpha = E / (h omega), (f1, f2) =
// f (cos phi_f, sin phi_f) and q = -f / k (Double). The base model has no
// chart. The chart Poisson tensor Pi gives {z_a, z_b} = Pi_ab and the chart
// symplectic matrix is Omega = Pi^-1, so that Omega_ab = sigma(d_b, d_a).
//
// Central1, Noncentral and Double charts require the central dual coordinate
// (l or h) to equal m omega r^2: the bracket tables carry 1/r^2 while the
// invariants are written with m omega.

#include "aristotle/group_models.hpp"
#include "aristotle/lie_core.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace aristotle {

/// Below these magnitudes a chart is considered degenerate.
inline constexpr double kDegeneracyThreshold = 1e-12;

std::vector<std::string> chart_labels(ModelId model);
std::vector<std::string> casimir_labels(ModelId model);

/// True for every model that has an orbit chart (all but Base).
bool has_chart(ModelId model);

struct OrbitPoint {
  ModelId model = ModelId::Central1;
  Eigen::VectorXd z;

  /// Coordinate by chart label; throws InvalidInput for unknown names.
  double operator[](std::string_view name) const;
};

struct CasimirSet {
  ModelId model = ModelId::Central1;
  Eigen::VectorXd values;

  double operator[](std::string_view name) const;
};

CasimirSet casimirs(ModelId model, const DualVector& xi, const ModelParams& params);

/// Gradients of the Casimirs with respect to the dual coordinates, one per row.
Eigen::MatrixXd casimir_gradients(ModelId model, const DualVector& xi, const ModelParams& params);

OrbitPoint chart_from_dual(ModelId model, const DualVector& xi, const ModelParams& params);

/// Inverse of chart_from_dual given the orbit's Casimir values.
DualVector dual_from_chart(const OrbitPoint& point, const CasimirSet& invariants,
                           const ModelParams& params);

Eigen::MatrixXd poisson_tensor(const OrbitPoint& point, const ModelParams& params);

/// Omega = Pi^-1 in chart coordinates. Throws Singularity if Pi is singular.
Eigen::MatrixXd omega_matrix(const OrbitPoint& point, const ModelParams& params);

/// Basis in which the Kirillov form is restricted to the orbit directions:
/// Central1 (P1, P2), Central2 (P1, P2, H, S), Noncentral (J, F1, P1, P2),
/// Double (P1, P2, F1, F2).
std::vector<std::string> restricted_basis(ModelId model);

/// The Kirillov form at xi restricted to restricted_basis(model), with the
/// central coordinate divided by r^2 rendered as m omega.
Eigen::MatrixXd restricted_kirillov(ModelId model, const DualVector& xi, const ModelParams& params);

/// Inverse of restricted_kirillov. For Noncentral it is singular when
/// f sin(phi_f) = 0, which raises Singularity.
Eigen::MatrixXd restricted_kirillov_inverse(ModelId model, const DualVector& xi,
                                            const ModelParams& params);

using ScalarFn = std::function<double(const Eigen::VectorXd&)>;
using GradientFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Central differences with step 1e-6 * (1 + |z_i|).
Eigen::VectorXd fd_gradient(const ScalarFn& f, const Eigen::VectorXd& z);
GradientFn fd_gradient_fn(ScalarFn f);

/// Gradient of the coordinate function z -> z_index.
GradientFn coordinate_gradient(std::size_t index, std::size_t dim);

/// grad f . Pi . grad g at the point.
double poisson_bracket(const OrbitPoint& point, const GradientFn& fgrad, const GradientFn& ggrad,
                       const ModelParams& params);

/// Noncentral orbit point in the canonical chart (H, tau, p, q), where
/// H = j omega + p^2 / 2m + m omega^2 q^2 / 2 and tau = phi_f / omega.
struct CanonicalPoint {
  double energy;
  double tau;
  double p;
  double q;
};

CanonicalPoint canonicalize_noncentral(const OrbitPoint& point, const ModelParams& params);

/// H and tau of canonicalize_noncentral as functions of Noncentral chart coordinates.
ScalarFn noncentral_energy(const ModelParams& params);
ScalarFn noncentral_tau(const ModelParams& params);

}  // namespace aristotle
