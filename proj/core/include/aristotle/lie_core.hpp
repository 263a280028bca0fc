#pragma once

// Finite-dimensional real Lie algebras given by structure constants, and the
// infinitesimal (co)adjoint machinery built on them.
//
// Conventions used throughout the library:
//   [e_a, e_b] = sum_c C(a, b, c) e_c
//   (ad_x)_{cb} = sum_a C(a, b, c) x^a            so that ad_x y = [x, y]
//   coad_x      = -(ad_x)^T                        acting on dual coordinates
//   K_{ab}(xi)  = sum_c C(a, b, c) xi_c            (Kirillov form)

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aristotle {

/// Physical scales of a model. All relations hold in dimensionless units.
struct ModelParams {
  double m = 1.0;      ///< mass
  double omega = 1.0;  ///< frequency
  double r = 1.0;      ///< universe radius

  /// c = omega * r
  double light_speed() const noexcept { return omega * r; }
  /// m * omega; equals (central dual coordinate) / r^2 on the orbits we chart.
  double mass_frequency() const noexcept { return m * omega; }
  /// The value l = m omega r^2 the central dual coordinate takes (l omega = m c^2).
  double action_unit() const noexcept { return m * omega * r * r; }

  /// Throws InvalidInput unless m, omega and r are finite and positive.
  void validate() const;
};

/// Element of a Lie algebra, in the coordinates of the algebra's basis.
struct AlgebraVector {
  Eigen::VectorXd coords;

  AlgebraVector() = default;
  explicit AlgebraVector(Eigen::VectorXd c) : coords(std::move(c)) {}
  static AlgebraVector zero(std::size_t dim) { return AlgebraVector(Eigen::VectorXd::Zero(dim)); }
  static AlgebraVector unit(std::size_t dim, std::size_t index);

  std::size_t size() const noexcept { return static_cast<std::size_t>(coords.size()); }
  double operator[](std::size_t i) const { return coords[static_cast<Eigen::Index>(i)]; }
};

/// Point of the dual of a Lie algebra, in the dual basis.
struct DualVector {
  Eigen::VectorXd coords;

  DualVector() = default;
  explicit DualVector(Eigen::VectorXd c) : coords(std::move(c)) {}

  std::size_t size() const noexcept { return static_cast<std::size_t>(coords.size()); }
  double operator[](std::size_t i) const { return coords[static_cast<Eigen::Index>(i)]; }
};

/// One nonzero bracket [a, b] ∋ coefficient * c, addressed by basis label.
struct BracketTerm {
  std::string a;
  std::string b;
  std::string c;
  double coefficient;
};

/// Structure constants of a Lie algebra over a labeled basis. Immutable.
///
/// Antisymmetry is exact by construction: every term [a, b] = v c is stored as
/// C(a, b, c) += v and C(b, a, c) -= v. A term with a == b is rejected.
class StructureTensor {
 public:
  StructureTensor(std::vector<std::string> labels, std::span<const BracketTerm> terms);

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Index of a basis label; throws InvalidInput if absent.
  std::size_t index_of(std::string_view label) const;

  double operator()(std::size_t a, std::size_t b, std::size_t c) const noexcept {
    return data_[(a * dim() + b) * dim() + c];
  }

 private:
  std::vector<std::string> labels_;
  std::vector<double> data_;
};

/// [x, y]. Throws InvalidInput on dimension mismatch.
AlgebraVector bracket(const StructureTensor& t, const AlgebraVector& x, const AlgebraVector& y);

/// max over basis triples of the max-norm of [[e_a,e_b],e_c] + cyclic.
double jacobi_defect(const StructureTensor& t);

/// Matrix of ad_x, so that ad_matrix(t, x) * y == bracket(t, x, y).
Eigen::MatrixXd ad_matrix(const StructureTensor& t, const AlgebraVector& x);

/// Infinitesimal coadjoint action -(ad_x)^T on dual coordinates.
Eigen::MatrixXd coad_matrix(const StructureTensor& t, const AlgebraVector& x);

/// Kirillov form K_{ab} = xi([e_a, e_b]).
Eigen::MatrixXd kirillov_matrix(const StructureTensor& t, const DualVector& xi);

/// exp(coad_x) xi by the power series. Summation stops once the next term's
/// max-norm drops below tol * (1 + |xi|_max); more than 200 terms raises
/// NumericFailure.
DualVector exp_coadjoint(const StructureTensor& t, const AlgebraVector& x, const DualVector& xi,
                         double tol = 1e-14);

}  // namespace aristotle
