#include "aristotle/lie_core.hpp"

#include "aristotle/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace aristotle {

namespace {

constexpr int kMaxSeriesTerms = 200;

void require_dim(const StructureTensor& t, std::size_t n, const char* what) {
  if (n != t.dim()) {
    throw InvalidInput(std::string(what) + " has dimension " + std::to_string(n) +
                       ", algebra has dimension " + std::to_string(t.dim()));
  }
}

}  // namespace

void ModelParams::validate() const {
  auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!ok(m) || !ok(omega) || !ok(r)) {
    throw InvalidInput("model parameters m, omega, r must be finite and positive");
  }
}

AlgebraVector AlgebraVector::unit(std::size_t dim, std::size_t index) {
  AlgebraVector v = zero(dim);
  v.coords[static_cast<Eigen::Index>(index)] = 1.0;
  return v;
}

StructureTensor::StructureTensor(std::vector<std::string> labels,
                                 std::span<const BracketTerm> terms)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw InvalidInput("a Lie algebra needs at least one basis element");
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
    throw InvalidInput("basis labels must be distinct");
  }
  const std::size_t n = labels_.size();
  data_.assign(n * n * n, 0.0);
  for (const auto& term : terms) {
    const std::size_t a = index_of(term.a);
    const std::size_t b = index_of(term.b);
    const std::size_t c = index_of(term.c);
    if (a == b) {
      throw InvalidInput("bracket [" + term.a + ", " + term.b + "] must vanish");
    }
    data_[(a * n + b) * n + c] += term.coefficient;
    data_[(b * n + a) * n + c] -= term.coefficient;
  }
}

std::size_t StructureTensor::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw InvalidInput("unknown basis label '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

AlgebraVector bracket(const StructureTensor& t, const AlgebraVector& x, const AlgebraVector& y) {
  require_dim(t, x.size(), "first bracket argument");
  require_dim(t, y.size(), "second bracket argument");
  const std::size_t n = t.dim();
  AlgebraVector out = AlgebraVector::zero(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a] == 0.0) continue;
    for (std::size_t b = 0; b < n; ++b) {
      const double w = x[a] * y[b];
      if (w == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        out.coords[static_cast<Eigen::Index>(c)] += t(a, b, c) * w;
      }
    }
  }
  return out;
}

double jacobi_defect(const StructureTensor& t) {
  const std::size_t n = t.dim();
  // [[e_a, e_b], e_c]^d = sum_e C(a,b,e) C(e,c,d)
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    double s = 0.0;
    for (std::size_t e = 0; e < n; ++e) s += t(a, b, e) * t(e, c, d);
    return s;
  };
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const double cyc = nested(a, b, c, d) + nested(b, c, a, d) + nested(c, a, b, d);
          worst = std::max(worst, std::abs(cyc));
        }
  return worst;
}

Eigen::MatrixXd ad_matrix(const StructureTensor& t, const AlgebraVector& x) {
  require_dim(t, x.size(), "algebra vector");
  const std::size_t n = t.dim();
  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd ad = Eigen::MatrixXd::Zero(ni, ni);
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a] == 0.0) continue;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        ad(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(b)) += t(a, b, c) * x[a];
  }
  return ad;
}

Eigen::MatrixXd coad_matrix(const StructureTensor& t, const AlgebraVector& x) {
  return -ad_matrix(t, x).transpose();
}

Eigen::MatrixXd kirillov_matrix(const StructureTensor& t, const DualVector& xi) {
  require_dim(t, xi.size(), "dual vector");
  const std::size_t n = t.dim();
  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(ni, ni);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double s = 0.0;
      for (std::size_t c = 0; c < n; ++c) s += t(a, b, c) * xi[c];
      k(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = s;
    }
  return k;
}

DualVector exp_coadjoint(const StructureTensor& t, const AlgebraVector& x, const DualVector& xi,
                         double tol) {
  require_dim(t, xi.size(), "dual vector");
  if (!(tol > 0.0)) throw InvalidInput("exp_coadjoint tolerance must be positive");
  const Eigen::MatrixXd a = coad_matrix(t, x);
  const double threshold = tol * (1.0 + xi.coords.lpNorm<Eigen::Infinity>());
  Eigen::VectorXd sum = xi.coords;
  Eigen::VectorXd term = xi.coords;
  for (int k = 1; k <= kMaxSeriesTerms; ++k) {
    term = a * term / static_cast<double>(k);
    sum += term;
    if (term.lpNorm<Eigen::Infinity>() < threshold) {
      // Two consecutive small terms; one small term can precede growth when |coad_x| > k.
      const Eigen::VectorXd next = a * term / static_cast<double>(k + 1);
      if (next.lpNorm<Eigen::Infinity>() < threshold) return DualVector(sum);
    }
  }
  throw NumericFailure("exp_coadjoint: series did not converge within " +
                       std::to_string(kMaxSeriesTerms) + " terms (|x|_max = " +
                       std::to_string(x.coords.lpNorm<Eigen::Infinity>()) + ")");
}

}  // namespace aristotle
