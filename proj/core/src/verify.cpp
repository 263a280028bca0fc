#include "aristotle/verify.hpp"

#include "aristotle/dynamics.hpp"
#include "aristotle/error.hpp"
#include "aristotle/orbit_chart.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <random>
#include <sstream>

namespace aristotle {

bool Report::all_passed() const noexcept { return failures() == 0; }

std::size_t Report::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

void Report::append(Report other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
  for (auto& n : other.notes) notes.push_back(std::move(n));
}

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double max_abs(const Eigen::VectorXd& v) { return v.size() ? v.lpNorm<Eigen::Infinity>() : 0.0; }
double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

GroupParam random_group(ModelId model, Rng& rng) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(model_dim(model)));
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = uniform(rng, -1.0, 1.0);
  return GroupParam::from_coords(model, c);
}

// A dual point on a maximal orbit: the central coordinate carries the action
// unit where the chart needs it, and h, k, |f| stay away from zero.
DualVector random_dual(ModelId model, const ModelParams& params, Rng& rng) {
  const std::size_t n = model_dim(model);
  Eigen::VectorXd xi(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < xi.size(); ++i) xi[i] = uniform(rng, -2.0, 2.0);
  auto signed_away = [&rng](double lo, double hi) {
    const double v = uniform(rng, lo, hi);
    return uniform(rng, 0.0, 1.0) < 0.5 ? -v : v;
  };
  switch (model) {
    case ModelId::Base: break;
    case ModelId::Central1: xi[4] = params.action_unit(); break;
    case ModelId::Central2:
      xi[4] = params.action_unit();
      xi[5] = signed_away(0.5, 2.0);
      break;
    case ModelId::Noncentral: {
      const double f = uniform(rng, 0.5, 2.0), a = uniform(rng, -std::numbers::pi, std::numbers::pi);
      xi[4] = f * std::cos(a);
      xi[5] = f * std::sin(a);
      xi[6] = params.action_unit();
      break;
    }
    case ModelId::Double:
      xi[6] = params.action_unit();
      xi[7] = signed_away(0.5, 2.0);
      break;
  }
  return DualVector(xi);
}

Check make_check(std::string name, ModelId model, double defect, double tol, std::string detail = {}) {
  Check c;
  c.name = std::move(name);
  c.model = std::string(model_name(model));
  c.defect = defect;
  c.tolerance = tol;
  c.passed = std::isfinite(defect) && defect <= tol;
  c.detail = std::move(detail);
  return c;
}

// Printed bracket tables of the charts, written out entry by entry.
Eigen::MatrixXd tabulated_poisson(const OrbitPoint& pt, const ModelParams& params) {
  const double mw = params.mass_frequency();
  const Eigen::Index n = pt.z.size();
  Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(n, n);
  auto set = [&pi](Eigen::Index a, Eigen::Index b, double v) {
    pi(a, b) = v;
    pi(b, a) = -v;
  };
  switch (pt.model) {
    case ModelId::Central1: set(0, 1, 1.0); break;
    case ModelId::Central2:
      set(0, 1, 1.0);
      set(2, 3, 1.0);
      break;
    case ModelId::Noncentral:
      set(0, 1, 1.0);
      set(2, 3, 1.0);
      set(0, 2, mw * pt.z[3]);
      set(0, 3, -pt.z[2] / mw);
      break;
    case ModelId::Double:
      set(0, 1, -mw);
      set(0, 2, 1.0);
      set(1, 3, 1.0);
      break;
    case ModelId::Base: break;
  }
  return pi;
}

// Kirillov displays for the two central extensions, entries as printed with
// m omega standing for l / r^2.
Eigen::MatrixXd tabulated_kirillov(ModelId model, const DualVector& xi, const ModelParams& params) {
  const Eigen::Index n = static_cast<Eigen::Index>(model_dim(model));
  const double mw = params.mass_frequency();
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  k(0, 1) = xi[2];
  k(0, 2) = -xi[1];
  k(1, 0) = -xi[2];
  k(1, 2) = mw;
  k(2, 0) = xi[1];
  k(2, 1) = -mw;
  if (model == ModelId::Central2) {
    const double hw = xi[5] * params.omega;
    k(3, 4) = -hw;
    k(4, 3) = hw;
  }
  return k;
}

// Coadjoint displays as printed, for comparison with the closed forms.
std::optional<DualVector> tabulated_coadjoint(const GroupParam& g, const DualVector& xi,
                                              const ModelParams& params) {
  const Eigen::Matrix2d R = rotation(g.theta);
  const Vec2 p(xi[1], xi[2]);
  const double r2 = params.r * params.r;
  Eigen::VectorXd out = xi.coords;
  switch (g.model) {
    case ModelId::Central1: {
      const double mw = params.mass_frequency();
      out[0] = xi[0] + 0.5 * mw * g.x.squaredNorm() + cross(g.x, R * p);
      out.segment<2>(1) = R * p - mw * eps(g.x);
      return DualVector(out);
    }
    case ModelId::Noncentral: {
      const Vec2 f(xi[4], xi[5]);
      const double h = xi[6];
      out[0] = xi[0] + cross(g.x, R * p) + cross(g.eta, R * f) - h / r2 * g.x.squaredNorm();
      out.segment<2>(1) = R * p + R * f * g.t + h / r2 * eps(g.x);
      out[3] = xi[3] - g.x.dot(R * f);
      out.segment<2>(4) = R * f;
      return DualVector(out);
    }
    case ModelId::Double: {
      const Vec2 f(xi[4], xi[5]);
      const double h = xi[6], k = xi[7];
      out[0] = xi[0] + cross(g.x, R * p) + cross(g.eta, R * f) - h / (2.0 * r2) * g.x.squaredNorm();
      out.segment<2>(1) = R * p + R * f * g.t + k * (g.eta - g.x * g.t) + h / r2 * eps(g.x);
      out[3] = xi[3] - g.x.dot(R * f) + 0.5 * k * g.x.squaredNorm();
      out.segment<2>(4) = R * f - k * g.x;
      return DualVector(out);
    }
    default: return std::nullopt;
  }
}

// Adjoint displays whose printed form differs in shape from the closed forms.
std::optional<AlgebraVector> tabulated_adjoint(const GroupParam& g, const AlgebraVector& d,
                                               const ModelParams& params) {
  const Eigen::Matrix2d R = rotation(g.theta);
  const Vec2 dx(d[1], d[2]);
  const double r2 = params.r * params.r;
  AlgebraVector out = adjoint(g, d, params);
  switch (g.model) {
    case ModelId::Noncentral:
      out.coords[6] = d[6] + cross(R * g.x, dx) / r2 - g.x.squaredNorm() / (2.0 * r2) * d[0];
      return out;
    case ModelId::Double: {
      const Vec2 deta(d[4], d[5]);
      out.coords[7] = d[7] + cross(g.x, R * deta) - cross(g.eta, R * dx) -
                      cross(g.eta, g.x) * d[0] + 0.5 * g.x.squaredNorm() * d[3];
      return out;
    }
    default: return std::nullopt;
  }
}

std::string component_diffs(const std::vector<std::string>& labels, const Eigen::VectorXd& diff) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < diff.size(); ++i) {
    if (diff[i] <= 1e-10) continue;
    os << (first ? "" : ", ") << labels[static_cast<std::size_t>(i)] << " (up to " << sci(diff[i])
       << ")";
    first = false;
  }
  return os.str();
}

class Suite {
 public:
  Suite(ModelId model, const VerifyOptions& options)
      : model_(model),
        opts_(options),
        params_(options.params),
        table_(make_table(model, options)),
        rng_(options.seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(model) + 1))) {}

  Report run() {
    jacobi();
    associativity();
    identity_inverse();
    if (model_ == ModelId::Base) cocycle();
    adjoint_conjugation();
    coadjoint_subgroups();
    coadjoint_exp();
    homomorphism();
    kirillov();
    if (has_chart(model_)) {
      casimir_invariance();
      casimir_kernel();
      bracket_table();
    }
    time_flow();
    if (model_ == ModelId::Noncentral) canonicalization();
    display_notes();
    return std::move(report_);
  }

 private:
  static StructureTensor make_table(ModelId model, const VerifyOptions& options) {
    if (!options.structure) return structure(model, options.params);
    const auto& o = *options.structure;
    StructureTensor t(o.labels, o.terms);
    if (t.dim() != model_dim(model)) {
      throw InvalidInput("structure override has dimension " + std::to_string(t.dim()) +
                         ", model " + std::string(model_name(model)) + " has " +
                         std::to_string(model_dim(model)));
    }
    return t;
  }

  void add(std::string name, double defect, double tol, std::string detail = {}) {
    report_.checks.push_back(make_check(std::move(name), model_, defect, tol, std::move(detail)));
  }
  void note(const std::string& text) {
    report_.notes.push_back(std::string(model_name(model_)) + ": " + text);
  }

  double gdiff(const GroupParam& a, const GroupParam& b) const {
    return max_abs(Eigen::VectorXd(a.coords() - b.coords()));
  }

  void jacobi() {
    add("jacobi", jacobi_defect(table_), 1e-12,
        opts_.structure ? "structure override" : "built-in bracket table");
  }

  void associativity() {
    double worst = 0.0;
    for (int i = 0; i < opts_.group_samples; ++i) {
      const auto a = random_group(model_, rng_), b = random_group(model_, rng_),
                 c = random_group(model_, rng_);
      worst = std::max(worst, gdiff(multiply(multiply(a, b, params_), c, params_),
                                    multiply(a, multiply(b, c, params_), params_)));
    }
    add("associativity", worst, 1e-12, std::to_string(opts_.group_samples) + " triples");
  }

  void identity_inverse() {
    const GroupParam e = GroupParam::identity(model_);
    double worst = 0.0;
    for (int i = 0; i < opts_.group_samples; ++i) {
      const auto g = random_group(model_, rng_);
      const auto gi = inverse(g, params_);
      worst = std::max({worst, gdiff(multiply(g, e, params_), g), gdiff(multiply(e, g, params_), g),
                        gdiff(multiply(g, gi, params_), e), gdiff(multiply(gi, g, params_), e)});
    }
    add("identity_inverse", worst, 1e-12, std::to_string(opts_.group_samples) + " elements");
  }

  void cocycle() {
    double worst = 0.0;
    for (int i = 0; i < opts_.group_samples; ++i) {
      const auto a = random_group(ModelId::Base, rng_), b = random_group(ModelId::Base, rng_),
                 c = random_group(ModelId::Base, rng_);
      const double lhs =
          aristotle::cocycle(a, b, params_) + aristotle::cocycle(multiply(a, b, params_), c, params_);
      const double rhs =
          aristotle::cocycle(b, c, params_) + aristotle::cocycle(a, multiply(b, c, params_), params_);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    add("cocycle", worst, 1e-12, std::to_string(opts_.group_samples) + " triples");
  }

  // Ad_g e_i against d/ds (g exp(s e_i) g^-1) at s = 0 by central differences.
  void adjoint_conjugation() {
    const std::size_t n = model_dim(model_);
    const double h = 1e-5;
    double worst = 0.0;
    for (int sample = 0; sample < 20; ++sample) {
      const auto g = random_group(model_, rng_);
      const auto gi = inverse(g, params_);
      for (std::size_t i = 0; i < n; ++i) {
        auto conj = [&](double s) {
          return multiply(multiply(g, one_parameter(model_, i, s), params_), gi, params_).coords();
        };
        const Eigen::VectorXd fd = (conj(h) - conj(-h)) / (2.0 * h);
        const auto ad = adjoint(g, AlgebraVector::unit(n, i), params_);
        worst = std::max(worst, max_abs(Eigen::VectorXd(fd - ad.coords)));
      }
    }
    add("adjoint_conjugation", worst, 1e-6, "central differences of g exp(s e_i) g^-1");
  }

  void coadjoint_subgroups() {
    const std::size_t n = model_dim(model_);
    double worst = 0.0;
    std::string worst_label;
    for (std::size_t i = 0; i < n; ++i) {
      for (int sample = 0; sample < 5; ++sample) {
        const double s = uniform(rng_, -1.0, 1.0);
        const DualVector xi = random_dual(model_, params_, rng_);
        AlgebraVector x = AlgebraVector::unit(n, i);
        x.coords *= s;
        const auto closed = coadjoint(one_parameter(model_, i, s), xi, params_);
        const auto series = exp_coadjoint(table_, x, xi);
        const double d = max_abs(Eigen::VectorXd(closed.coords - series.coords));
        if (d > worst) {
          worst = d;
          worst_label = basis_labels(model_)[i];
        }
      }
    }
    add("coadjoint_subgroups", worst, 1e-6,
        worst_label.empty() ? "all generators" : "worst generator " + worst_label);
  }

  void coadjoint_exp() {
    const std::size_t n = model_dim(model_);
    double worst = 0.0;
    for (int sample = 0; sample < opts_.coadjoint_samples; ++sample) {
      Eigen::VectorXd c(static_cast<Eigen::Index>(n));
      for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = uniform(rng_, -1.0, 1.0);
      const AlgebraVector x(c);
      const DualVector xi = random_dual(model_, params_, rng_);
      const auto closed = coadjoint(group_exp(model_, x, params_), xi, params_);
      const auto series = exp_coadjoint(table_, x, xi);
      worst = std::max(worst, max_abs(Eigen::VectorXd(closed.coords - series.coords)));
    }
    add("coadjoint_exp", worst, 1e-6, std::to_string(opts_.coadjoint_samples) + " random exponentials");
  }

  void homomorphism() {
    double worst = 0.0;
    for (int sample = 0; sample < opts_.coadjoint_samples; ++sample) {
      const auto g = random_group(model_, rng_), h = random_group(model_, rng_);
      const DualVector xi = random_dual(model_, params_, rng_);
      const auto lhs = coadjoint(multiply(g, h, params_), xi, params_);
      const auto rhs = coadjoint(g, coadjoint(h, xi, params_), params_);
      worst = std::max(worst, max_abs(Eigen::VectorXd(lhs.coords - rhs.coords)));
    }
    add("coadjoint_homomorphism", worst, 1e-10,
        std::to_string(opts_.coadjoint_samples) + " pairs");
  }

  void kirillov() {
    double anti = 0.0;
    for (int sample = 0; sample < opts_.chart_samples; ++sample) {
      const auto k = kirillov_matrix(table_, random_dual(model_, params_, rng_));
      anti = std::max(anti, max_abs(Eigen::MatrixXd(k + k.transpose())));
    }
    add("kirillov_antisymmetry", anti, 1e-14);
    if (model_ != ModelId::Central1 && model_ != ModelId::Central2) return;
    double worst = 0.0;
    std::uniform_int_distribution<int> small(-3, 3);
    for (int sample = 0; sample < opts_.chart_samples; ++sample) {
      DualVector xi = random_dual(model_, params_, rng_);
      for (Eigen::Index i = 0; i < 4; ++i) xi.coords[i] = small(rng_);
      if (model_ == ModelId::Central2) {
        xi.coords[4] = params_.action_unit();
        xi.coords[5] = small(rng_);
      }
      const auto k = kirillov_matrix(table_, xi);
      worst = std::max(worst, max_abs(Eigen::MatrixXd(k - tabulated_kirillov(model_, xi, params_))));
    }
    add("kirillov_display", worst, 1e-12, "integer dual points, l = m omega r^2");
  }

  void casimir_invariance() {
    double worst = 0.0;
    std::string worst_name;
    const auto names = casimir_labels(model_);
    for (int sample = 0; sample < opts_.casimir_samples; ++sample) {
      const DualVector xi = random_dual(model_, params_, rng_);
      const auto g = random_group(model_, rng_);
      const Eigen::VectorXd before = casimirs(model_, xi, params_).values;
      const Eigen::VectorXd after = casimirs(model_, coadjoint(g, xi, params_), params_).values;
      for (Eigen::Index i = 0; i < before.size(); ++i) {
        const double d = std::abs(after[i] - before[i]);
        if (d > worst) {
          worst = d;
          worst_name = names[static_cast<std::size_t>(i)];
        }
      }
    }
    add("casimir_invariance", worst, 1e-9,
        worst_name.empty() ? std::to_string(opts_.casimir_samples) + " coadjoint actions"
                           : "worst invariant " + worst_name);
  }

  void casimir_kernel() {
    double worst = 0.0;
    for (int sample = 0; sample < opts_.chart_samples; ++sample) {
      const DualVector xi = random_dual(model_, params_, rng_);
      const Eigen::MatrixXd prod =
          kirillov_matrix(table_, xi) * casimir_gradients(model_, xi, params_).transpose();
      worst = std::max(worst, Eigen::JacobiSVD<Eigen::MatrixXd>(prod).singularValues()[0]);
    }
    add("casimir_kernel", worst, 1e-8, "largest singular value of K grad C");
  }

  void bracket_table() {
    double table = 0.0, inverse_defect = 0.0;
    for (int sample = 0; sample < opts_.chart_samples; ++sample) {
      const OrbitPoint pt = chart_from_dual(model_, random_dual(model_, params_, rng_), params_);
      const Eigen::MatrixXd pi = poisson_tensor(pt, params_);
      table = std::max(table, max_abs(Eigen::MatrixXd(pi - tabulated_poisson(pt, params_))));
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(pi.rows(), pi.cols());
      inverse_defect =
          std::max(inverse_defect, max_abs(Eigen::MatrixXd(pi * omega_matrix(pt, params_) - eye)));
    }
    add("bracket_table", table, 1e-12, std::to_string(opts_.chart_samples) + " chart points");
    add("poisson_symplectic_inverse", inverse_defect, 1e-10);
  }

  void time_flow() {
    double group_prop = 0.0;
    for (int sample = 0; sample < 50; ++sample) {
      const DualVector xi = random_dual(model_, params_, rng_);
      const double t1 = uniform(rng_, -2.0, 2.0), t2 = uniform(rng_, -2.0, 2.0);
      const auto once = time_flow_exact(model_, xi, t1 + t2, params_);
      const auto twice =
          time_flow_exact(model_, time_flow_exact(model_, xi, t2, params_), t1, params_);
      group_prop = std::max(group_prop, max_abs(Eigen::VectorXd(once.coords - twice.coords)));
    }
    add("time_flow_group", group_prop, 1e-12, "t1 + t2 composition");
    if (!has_chart(model_)) return;

    double worst = 0.0;
    std::string worst_name;
    const auto names = chart_labels(model_);
    for (int sample = 0; sample < 50; ++sample) {
      const DualVector xi = random_dual(model_, params_, rng_);
      const double t = uniform(rng_, -3.0, 3.0);
      const OrbitPoint z0 = chart_from_dual(model_, xi, params_);
      const OrbitPoint zt = chart_from_dual(model_, time_flow_exact(model_, xi, t, params_), params_);
      Eigen::VectorXd expected = z0.z;
      if (model_ == ModelId::Central2) expected[2] += xi[5] * params_.omega * t;
      if (model_ == ModelId::Double) {
        const double k = xi[7];
        expected[0] -= k * z0.z[2] * t;
        expected[1] -= k * z0.z[3] * t;
      }
      const Eigen::VectorXd diff = (zt.z - expected).cwiseAbs();
      Eigen::Index arg = 0;
      const double d = diff.maxCoeff(&arg);
      if (d > worst) {
        worst = d;
        worst_name = names[static_cast<std::size_t>(arg)];
      }
    }
    std::string detail;
    switch (model_) {
      case ModelId::Central2: detail = "dl/dt = h omega, p q alpha fixed"; break;
      case ModelId::Double: detail = "p(t) = p0 - k q0 t, q(t) = q0"; break;
      default: detail = "chart coordinates constant in t"; break;
    }
    if (!worst_name.empty() && worst > 1e-12) detail += "; worst coordinate " + worst_name;
    add("time_flow_motion", worst, 1e-12, detail);
  }

  void canonicalization() {
    const Hamiltonian h = noncentral_canonical(params_);
    const double inv_omega = 1.0 / params_.omega;
    const GradientFn tau_grad = [inv_omega](const Eigen::VectorXd&) {
      Eigen::VectorXd g = Eigen::VectorXd::Zero(4);
      g[1] = inv_omega;
      return g;
    };
    double worst = 0.0;
    for (int sample = 0; sample < opts_.chart_samples; ++sample) {
      const OrbitPoint pt = chart_from_dual(model_, random_dual(model_, params_, rng_), params_);
      worst = std::max(worst, std::abs(poisson_bracket(pt, h.gradient, tau_grad, params_) - 1.0));
    }
    add("canonical_pair", worst, 1e-9, "{H, tau} = 1");
  }

  void display_notes() {
    const std::size_t n = model_dim(model_);
    Eigen::VectorXd coad = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    Eigen::VectorXd ad = coad;
    bool have_coad = false, have_ad = false;
    for (int sample = 0; sample < 100; ++sample) {
      const auto g = random_group(model_, rng_);
      const DualVector xi = random_dual(model_, params_, rng_);
      if (const auto printed = tabulated_coadjoint(g, xi, params_)) {
        have_coad = true;
        coad = coad.cwiseMax((printed->coords - coadjoint(g, xi, params_).coords).cwiseAbs());
      }
      Eigen::VectorXd dc(static_cast<Eigen::Index>(n));
      for (Eigen::Index i = 0; i < dc.size(); ++i) dc[i] = uniform(rng_, -1.0, 1.0);
      const AlgebraVector d(dc);
      if (const auto printed = tabulated_adjoint(g, d, params_)) {
        have_ad = true;
        ad = ad.cwiseMax((printed->coords - adjoint(g, d, params_).coords).cwiseAbs());
      }
    }
    if (have_coad && max_abs(coad) > 1e-10) {
      note("printed coadjoint display differs from the verified closed form in " +
           component_diffs(dual_labels(model_), coad));
    }
    if (have_ad && max_abs(ad) > 1e-10) {
      note("printed adjoint display differs from the verified closed form in " +
           component_diffs(basis_labels(model_), ad));
    }

    switch (model_) {
      case ModelId::Central2:
        note("[S, H] = omega N violates the Jacobi identity and the composition law is not "
             "associative; the coadjoint formula is kept as printed and s is not invariant once "
             "time and space translations combine");
        note("the chart bracket {l, alpha} = +1 is printed with the orientation opposite to the "
             "coadjoint Lie-Poisson structure; flows on this chart use orientation +1");
        break;
      case ModelId::Noncentral:
        note("a pure time translation maps p to p + t f, so the chart coordinates p and q move "
             "unless f = 0");
        break;
      case ModelId::Double: {
        double drift = 0.0;
        for (int sample = 0; sample < 100; ++sample) {
          const DualVector xi = random_dual(model_, params_, rng_);
          const auto g = random_group(model_, rng_);
          auto printed_s = [this](const DualVector& v) {
            const Vec2 p(v[1], v[2]);
            const Vec2 q = -Vec2(v[4], v[5]) / v[7];
            return v[0] - cross(p, q) + 0.5 * params_.mass_frequency() * q.squaredNorm();
          };
          drift = std::max(drift, std::abs(printed_s(coadjoint(g, xi, params_)) - printed_s(xi)));
        }
        if (drift > 1e-9) {
          note("the printed form s = j - p x q + m omega |q|^2 / 2 is not invariant (drift " +
               sci(drift) + "); s = j + p x q - m omega |q|^2 / 2 is used");
        }
        break;
      }
      default: break;
    }
  }

  ModelId model_;
  const VerifyOptions& opts_;
  ModelParams params_;
  StructureTensor table_;
  Rng rng_;
  Report report_;
};

}  // namespace

Report verify_model(ModelId model, const VerifyOptions& options) {
  options.params.validate();
  return Suite(model, options).run();
}

Report verify_models(const std::vector<ModelId>& models, const VerifyOptions& options) {
  options.params.validate();
  std::vector<std::future<Report>> jobs;
  jobs.reserve(models.size());
  for (ModelId m : models) {
    jobs.push_back(std::async(std::launch::async, [m, &options] { return verify_model(m, options); }));
  }
  Report out;
  for (auto& job : jobs) out.append(job.get());
  return out;
}

}  // namespace aristotle
