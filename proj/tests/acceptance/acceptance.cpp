// Acceptance suite: one PASS/FAIL line per criterion.
//
//   aristotle_acceptance          run every criterion, exit 1 if any fails
//   aristotle_acceptance N        run criterion N only

#include "aristotle/dynamics.hpp"
#include "aristotle/error.hpp"
#include "aristotle/orbit_chart.hpp"
#include "aristotle/verify.hpp"
#include "../support.hpp"

#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace aristotle;
using testing_support::maxdiff;
using testing_support::orbit_dual;
using testing_support::random_element;
using testing_support::random_vec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects per-model measurements against one tolerance.
class Tally {
 public:
  explicit Tally(std::string what, double tol) : what_(std::move(what)), tol_(tol) {}

  void add(const std::string& who, double value) {
    auto& v = worst_[who];
    v = std::max(v, std::isfinite(value) ? value : INFINITY);
    if (std::find(order_.begin(), order_.end(), who) == order_.end()) order_.push_back(who);
  }

  void merge_into(Outcome& o) const {
    std::ostringstream os;
    os << what_ << " (tol " << tol_ << "):";
    for (const auto& who : order_) {
      const double v = worst_.at(who);
      const bool ok = v <= tol_;
      o.pass = o.pass && ok;
      char buf[48];
      std::snprintf(buf, sizeof buf, " %s=%.2e%s", who.c_str(), v, ok ? "" : "!");
      os << buf;
    }
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += os.str();
  }

 private:
  std::string what_;
  double tol_;
  std::map<std::string, double> worst_;
  std::vector<std::string> order_;
};

std::string name(ModelId m) { return std::string(model_name(m)); }

double gdiff(const GroupParam& a, const GroupParam& b) {
  return (a.coords() - b.coords()).cwiseAbs().maxCoeff();
}

constexpr ModelId kChartModels[] = {ModelId::Central1, ModelId::Central2, ModelId::Noncentral,
                                    ModelId::Double};

// 1. Jacobi identity of every bracket table, m = omega = r = 1.
Outcome algebra_validity() {
  const ModelParams p;
  Tally lib("jacobi_defect", 1e-12), direct("nested brackets", 1e-12);
  for (ModelId m : kAllModels) {
    const auto t = structure(m, p);
    lib.add(name(m), jacobi_defect(t));
    const std::size_t n = t.dim();
    double worst = 0.0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const auto e = [n](std::size_t i) { return AlgebraVector::unit(n, i); };
          const Eigen::VectorXd cyc = bracket(t, bracket(t, e(a), e(b)), e(c)).coords +
                                      bracket(t, bracket(t, e(b), e(c)), e(a)).coords +
                                      bracket(t, bracket(t, e(c), e(a)), e(b)).coords;
          worst = std::max(worst, cyc.cwiseAbs().maxCoeff());
        }
    direct.add(name(m), worst);
  }
  Outcome o;
  lib.merge_into(o);
  direct.merge_into(o);
  return o;
}

// 2. Associativity, identity, inverse and the two-cocycle identity.
Outcome group_validity() {
  std::mt19937_64 rng(2);
  const ModelParams p;
  Tally assoc("associativity", 1e-12), ident("identity/inverse", 1e-12), coc("cocycle", 1e-12);
  for (ModelId m : kAllModels) {
    const auto e = GroupParam::identity(m);
    for (int i = 0; i < 1000; ++i) {
      const auto a = random_element(m, rng), b = random_element(m, rng), c = random_element(m, rng);
      assoc.add(name(m), gdiff(multiply(multiply(a, b, p), c, p), multiply(a, multiply(b, c, p), p)));
      const auto ai = inverse(a, p);
      ident.add(name(m), std::max({gdiff(multiply(a, e, p), a), gdiff(multiply(e, a, p), a),
                                   gdiff(multiply(a, ai, p), e), gdiff(multiply(ai, a, p), e)}));
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_element(ModelId::Base, rng), b = random_element(ModelId::Base, rng),
               c = random_element(ModelId::Base, rng);
    coc.add("base", std::abs(cocycle(a, b, p) + cocycle(multiply(a, b, p), c, p) - cocycle(b, c, p) -
                             cocycle(a, multiply(b, c, p), p)));
  }
  Outcome o;
  assoc.merge_into(o);
  ident.merge_into(o);
  coc.merge_into(o);
  return o;
}

// 3. Closed-form coadjoint against the series on one-parameter subgroups,
// the homomorphism property, and logging of printed-display discrepancies.
Outcome coadjoint_correctness() {
  std::mt19937_64 rng(3);
  const ModelParams p;
  Tally sub("closed form vs exp_coadjoint", 1e-6), oracle("exp_coadjoint vs dense expm", 1e-12),
      hom("homomorphism", 1e-10);
  for (ModelId m : kAllModels) {
    const auto t = structure(m, p);
    const std::size_t n = model_dim(m);
    for (std::size_t i = 0; i < n; ++i) {
      for (int k = 0; k < 20; ++k) {
        const double s = testing_support::uni(rng);
        const DualVector xi = orbit_dual(m, p, rng);
        AlgebraVector x = AlgebraVector::unit(n, i);
        x.coords *= s;
        const auto series = exp_coadjoint(t, x, xi);
        sub.add(name(m), maxdiff(coadjoint(one_parameter(m, i, s), xi, p).coords, series.coords));
        oracle.add(name(m), maxdiff(series.coords, coad_matrix(t, x).exp() * xi.coords));
      }
    }
    for (int k = 0; k < 1000; ++k) {
      const auto g = random_element(m, rng), h = random_element(m, rng);
      const DualVector xi = orbit_dual(m, p, rng);
      hom.add(name(m), maxdiff(coadjoint(multiply(g, h, p), xi, p).coords,
                               coadjoint(g, coadjoint(h, xi, p), p).coords));
    }
  }
  Outcome o;
  sub.merge_into(o);
  oracle.merge_into(o);
  hom.merge_into(o);

  VerifyOptions opts;
  opts.seed = 3;
  const Report r = verify_models({ModelId::Central1, ModelId::Noncentral, ModelId::Double}, opts);
  int logged = 0;
  for (const char* prefix : {"central1: printed coadjoint", "noncentral: printed coadjoint",
                             "double: printed coadjoint"}) {
    logged += std::any_of(r.notes.begin(), r.notes.end(),
                          [prefix](const std::string& s) { return s.rfind(prefix, 0) == 0; });
  }
  o.pass = o.pass && logged == 3;
  o.detail += "; printed-display discrepancies logged for " + std::to_string(logged) + "/3 models";
  return o;
}

// 4. Kirillov matrices against the printed 5x5 and 6x6 displays, exactly.
Outcome kirillov_matrices() {
  const ModelParams p;  // l = m omega r^2 = 1
  const double mw = p.m * p.omega;
  std::size_t mismatches = 0, compared = 0;
  for (int p1 = -3; p1 <= 3; ++p1)
    for (int p2 = -3; p2 <= 3; ++p2)
      for (int h = -2; h <= 2; ++h) {
        for (ModelId m : {ModelId::Central1, ModelId::Central2}) {
          if (m == ModelId::Central1 && h != 0) continue;
          const Eigen::Index n = static_cast<Eigen::Index>(model_dim(m));
          Eigen::VectorXd xi = Eigen::VectorXd::Constant(n, h);
          xi.head<5>() << 5, p1, p2, -4, p.action_unit();
          Eigen::MatrixXd printed = Eigen::MatrixXd::Zero(n, n);
          printed.topLeftCorner(3, 3) << 0, p2, -p1, -p2, 0, mw, p1, -mw, 0;
          if (m == ModelId::Central2) {
            printed(3, 4) = -h * p.omega;
            printed(4, 3) = h * p.omega;
          }
          const auto k = kirillov_matrix(structure(m, p), DualVector(xi));
          mismatches += (k.array() != printed.array()).count();
          compared += static_cast<std::size_t>(n * n);
        }
      }
  Outcome o;
  o.pass = mismatches == 0;
  o.detail = "central1 5x5 and central2 6x6 at integer points: " + std::to_string(mismatches) +
             " of " + std::to_string(compared) + " entries differ (exact comparison)";
  return o;
}

// 5. Casimir invariance under 500 random coadjoint actions; Casimir gradients
// in the Kirillov kernel.
Outcome casimir_invariance() {
  std::mt19937_64 rng(5);
  const ModelParams p;
  Tally inv("invariance drift", 1e-9), ker("kernel singular values", 1e-8);
  for (ModelId m : kChartModels) {
    const auto t = structure(m, p);
    for (int i = 0; i < 500; ++i) {
      const DualVector xi = orbit_dual(m, p, rng);
      const auto g = random_element(m, rng);
      inv.add(name(m), maxdiff(casimirs(m, coadjoint(g, xi, p), p).values, casimirs(m, xi, p).values));
      const Eigen::MatrixXd prod = kirillov_matrix(t, xi) * casimir_gradients(m, xi, p).transpose();
      ker.add(name(m), Eigen::JacobiSVD<Eigen::MatrixXd>(prod).singularValues()[0]);
    }
  }
  Outcome o;
  inv.merge_into(o);
  ker.merge_into(o);
  return o;
}

// 6. Chart Poisson tensors against the printed bracket tables.
Outcome bracket_tables() {
  std::mt19937_64 rng(6);
  ModelParams p;
  Tally table("printed brackets", 1e-12), inv("Pi Omega - I", 1e-12);
  for (ModelId m : kChartModels) {
    for (int i = 0; i < 100; ++i) {
      const auto pt = chart_from_dual(m, orbit_dual(m, p, rng), p);
      const double mw = p.m * p.omega;
      const Eigen::Index n = pt.z.size();
      Eigen::MatrixXd printed = Eigen::MatrixXd::Zero(n, n);
      auto set = [&printed](Eigen::Index a, Eigen::Index b, double v) {
        printed(a, b) = v;
        printed(b, a) = -v;
      };
      switch (m) {
        case ModelId::Central1: set(0, 1, 1); break;  // {p, q} = 1
        case ModelId::Central2:                       // {p, q} = {l, alpha} = 1
          set(0, 1, 1);
          set(2, 3, 1);
          break;
        case ModelId::Noncentral:  // (j, phi, p, q)
          set(0, 2, mw * pt.z[3]);
          set(0, 1, 1);
          set(2, 3, 1);
          set(0, 3, -pt.z[2] / mw);
          break;
        case ModelId::Double:  // (p1, p2, q1, q2): {p_i, p_j} = -m omega eps_ij, {p_i, q^j} = delta
          set(0, 1, -mw);
          set(0, 2, 1);
          set(1, 3, 1);
          break;
        default: break;
      }
      const Eigen::MatrixXd pi = poisson_tensor(pt, p);
      table.add(name(m), maxdiff(pi, printed));
      inv.add(name(m), maxdiff(pi * omega_matrix(pt, p), Eigen::MatrixXd::Identity(n, n)));
    }
  }
  Outcome o;
  table.merge_into(o);
  inv.merge_into(o);
  return o;
}

// 7. Equations of motion from the time-translation subgroup.
Outcome equations_of_motion() {
  std::mt19937_64 rng(7);
  const ModelParams p;
  Tally motion("printed motion", 1e-12);
  for (ModelId m : kChartModels) {
    for (int i = 0; i < 100; ++i) {
      const DualVector xi = orbit_dual(m, p, rng);
      const double t = testing_support::uni(rng, -3.0, 3.0);
      const DualVector xt = time_flow_exact(m, xi, t, p);
      const Eigen::VectorXd z0 = chart_from_dual(m, xi, p).z;
      const Eigen::VectorXd zt = chart_from_dual(m, xt, p).z;
      Eigen::VectorXd expected = z0;
      switch (m) {
        case ModelId::Central2: expected[2] = xi[4] + xi[5] * p.omega * t; break;  // dl/dt = h omega
        case ModelId::Double:  // p(t) = p0 - k q0 t, q(t) = q0
          expected.head<2>() = z0.head<2>() - xi[7] * z0.tail<2>() * t;
          break;
        default: break;  // Central1, Noncentral: constant in t
      }
      motion.add(name(m), maxdiff(zt, expected));
    }
  }
  Outcome o;
  motion.merge_into(o);
  return o;
}

// 8. {H, tau} = 1 on the noncentral chart.
Outcome canonicalization() {
  std::mt19937_64 rng(8);
  ModelParams p;
  Tally pair("|{H, tau} - 1|", 1e-9);
  for (const double omega : {1.0, 0.6, 2.3}) {
    p.omega = omega;
    for (int i = 0; i < 100; ++i) {
      const auto pt = chart_from_dual(ModelId::Noncentral, orbit_dual(ModelId::Noncentral, p, rng), p);
      // H = j omega + p^2 / 2m + m omega^2 q^2 / 2, tau = phi_f / omega
      const GradientFn dh = [&p](const Eigen::VectorXd& z) {
        return Eigen::Vector4d(p.omega, 0, z[2] / p.m, p.m * p.omega * p.omega * z[3]).eval();
      };
      const GradientFn dtau = [&p](const Eigen::VectorXd&) {
        return Eigen::Vector4d(0, 1.0 / p.omega, 0, 0).eval();
      };
      pair.add("omega=" + std::to_string(omega).substr(0, 3),
               std::abs(poisson_bracket(pt, dh, dtau, p) - 1.0));
    }
  }
  Outcome o;
  pair.merge_into(o);
  return o;
}

// Cyclotron orbit of the double extension: p0 = (1, 0), q0 = 0.
struct Cyclotron {
  ModelParams p;
  DualVector xi;
  OrbitPoint z0;
  CasimirSet inv;

  Cyclotron() {
    Eigen::VectorXd v(8);
    v << 0, 1, 0, 0, 0, 0, p.action_unit(), 1;
    xi = DualVector(v);
    z0 = chart_from_dual(ModelId::Double, xi, p);
    inv = casimirs(ModelId::Double, xi, p);
  }

  Trajectory run(Integrator integ, double dt, std::size_t n) const {
    FlowSpec s;
    s.kind = FlowKind::Hamiltonian;
    s.integrator = integ;
    s.dt = dt;
    s.nsteps = n;
    return hamiltonian_flow(s, z0, inv, double_kinetic(p), p);
  }

  // Closed form of dp/dt = omega (p2, -p1), dq/dt = p / m.
  Eigen::Vector4d exact(double t) const {
    const double w = p.omega, c = std::cos(w * t), s = std::sin(w * t);
    return {c, -s, s / (p.m * w), (c - 1.0) / (p.m * w)};
  }
};

// 9. Period of the momentum circle under implicit midpoint, dt = 1e-3.
Outcome magnetic_dynamics() {
  const Cyclotron cyc;
  const double dt = 1e-3, period = 2.0 * std::numbers::pi / cyc.p.omega;
  const auto n = static_cast<std::size_t>(std::ceil(period / dt)) + 10;
  const Trajectory traj = cyc.run(Integrator::ImplicitMidpoint, dt, n);

  double swept = 0.0, measured = NAN, radius = 0.0;
  double prev = std::atan2(traj.points[0].z[1], traj.points[0].z[0]);
  for (std::size_t i = 1; i < traj.size(); ++i) {
    const Eigen::VectorXd& z = traj.points[i].z;
    radius = std::max(radius, std::abs(std::hypot(z[0], z[1]) - 1.0));
    const double a = std::atan2(z[1], z[0]);
    double step = prev - a;  // clockwise sweep
    if (step < -std::numbers::pi) step += 2 * std::numbers::pi;
    if (step > std::numbers::pi) step -= 2 * std::numbers::pi;
    prev = a;
    if (std::isnan(measured) && swept + step >= 2 * std::numbers::pi) {
      measured = traj.times[i - 1] + (2 * std::numbers::pi - swept) / step * dt;
    }
    swept += step;
  }
  const Drift d = invariant_drift(traj);
  double casimir = 0.0;
  for (const char* c : {"h", "k", "s", "U"}) casimir = std::max(casimir, d[c]);

  Outcome o;
  Tally period_err("period error", 1e-6), drift("drift", 1e-9), circle("| |p| - 1 |", 1e-9);
  period_err.add("T", std::abs(measured - period));
  drift.add("casimirs", casimir);
  drift.add("H", d["H"]);
  circle.add("max", radius);
  period_err.merge_into(o);
  drift.merge_into(o);
  circle.merge_into(o);
  return o;
}

// 10. RK4 global error ratios under step halving.
Outcome integrator_order() {
  const Cyclotron cyc;
  const double horizon = 6.4;
  std::vector<double> errors;
  for (double dt : {0.1, 0.05, 0.025, 0.0125}) {
    const auto n = static_cast<std::size_t>(std::llround(horizon / dt));
    const Trajectory traj = cyc.run(Integrator::Rk4, dt, n);
    errors.push_back((traj.points.back().z - Eigen::VectorXd(cyc.exact(horizon))).cwiseAbs().maxCoeff());
  }
  Outcome o;
  std::ostringstream os;
  os << "error ratios in [14, 18]:";
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double ratio = errors[i - 1] / errors[i];
    const bool ok = ratio >= 14.0 && ratio <= 18.0;
    o.pass = o.pass && ok;
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.3f%s", ratio, ok ? "" : "!");
    os << buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "; finest error %.2e", errors.back());
  o.detail = os.str() + buf;
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "algebra validity", algebra_validity},
      {2, "group validity", group_validity},
      {3, "coadjoint correctness", coadjoint_correctness},
      {4, "kirillov matrices", kirillov_matrices},
      {5, "casimir invariance", casimir_invariance},
      {6, "bracket tables", bracket_tables},
      {7, "equations of motion", equations_of_motion},
      {8, "canonicalization", canonicalization},
      {9, "magnetic dynamics", magnetic_dynamics},
      {10, "integrator order", integrator_order},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (argc > 2 || (argc > 1 && (only < 1 || only > static_cast<int>(criteria.size())))) {
    std::fprintf(stderr, "usage: %s [criterion 1-%zu]\n", argv[0], criteria.size());
    return 2;
  }

  int failed = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] criterion %2d %-22s %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str());
  }
  return failed ? 1 : 0;
}
