#include "aristotle/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>

namespace aristotle {

void FlowSpec::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidInput("time step must be positive");
  if (nsteps < 1) throw InvalidInput("at least one step is required");
  if (!(solver_tol > 0.0)) throw InvalidInput("solver tolerance must be positive");
  if (max_iterations < 1) throw InvalidInput("solver iteration cap must be positive");
}

double Drift::operator[](std::string_view name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InvalidInput("no drift recorded for '" + std::string(name) + "'");
  return max_abs[it - names.begin()];
}

int flow_orientation(ModelId model) {
  // The central2 chart tabulates {l, alpha} = +1, opposite to the sign the
  // other charts inherit from the coadjoint action.
  return model == ModelId::Central2 ? 1 : -1;
}

DualVector time_flow_exact(ModelId model, const DualVector& xi0, double t,
                           const ModelParams& params) {
  GroupParam g = GroupParam::identity(model);
  g.t = t;
  return coadjoint(g, xi0, params);
}

Trajectory sample_time_flow(ModelId model, const DualVector& xi0, const FlowSpec& spec,
                            const ModelParams& params) {
  spec.validate();
  Trajectory out;
  out.model = model;
  out.times.reserve(spec.nsteps + 1);
  out.points.reserve(spec.nsteps + 1);
  out.casimir_series.reserve(spec.nsteps + 1);
  for (std::size_t i = 0; i <= spec.nsteps; ++i) {
    const double t = static_cast<double>(i) * spec.dt;
    const DualVector xi = time_flow_exact(model, xi0, t, params);
    out.times.push_back(t);
    out.points.push_back(chart_from_dual(model, xi, params));
    out.casimir_series.push_back(casimirs(model, xi, params));
  }
  return out;
}

namespace {

bool all_finite(const Eigen::VectorXd& v) { return v.allFinite(); }

class VectorField {
 public:
  VectorField(ModelId model, const Hamiltonian& h, const ModelParams& params)
      : model_(model),
        sign_(static_cast<double>(flow_orientation(model))),
        hamiltonian_(h),
        params_(params) {
    if (!hamiltonian_.gradient) hamiltonian_.gradient = fd_gradient_fn(hamiltonian_.value);
  }

  Eigen::VectorXd operator()(const Eigen::VectorXd& z) const {
    const OrbitPoint point{model_, z};
    return sign_ * (poisson_tensor(point, params_) * hamiltonian_.gradient(z));
  }

  double energy(const Eigen::VectorXd& z) const { return hamiltonian_.value(z); }

 private:
  ModelId model_;
  double sign_;
  Hamiltonian hamiltonian_;
  ModelParams params_;
};

Eigen::VectorXd rk4_step(const VectorField& f, const Eigen::VectorXd& z, double dt) {
  const Eigen::VectorXd k1 = f(z);
  const Eigen::VectorXd k2 = f(z + 0.5 * dt * k1);
  const Eigen::VectorXd k3 = f(z + 0.5 * dt * k2);
  const Eigen::VectorXd k4 = f(z + dt * k3);
  return z + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// z1 = z0 + dt f((z0 + z1) / 2), solved by fixed-point iteration.
Eigen::VectorXd midpoint_step(const VectorField& f, const Eigen::VectorXd& z, double dt,
                              const FlowSpec& spec, std::size_t step) {
  Eigen::VectorXd next = z + dt * f(z);
  for (int it = 0; it < spec.max_iterations; ++it) {
    const Eigen::VectorXd update = z + dt * f(0.5 * (z + next));
    const double change = (update - next).lpNorm<Eigen::Infinity>();
    next = update;
    if (change <= spec.solver_tol * (1.0 + next.lpNorm<Eigen::Infinity>())) return next;
  }
  throw NumericFailure("implicit midpoint did not converge within " +
                       std::to_string(spec.max_iterations) + " iterations at step " +
                       std::to_string(step));
}

}  // namespace

Trajectory hamiltonian_flow(const FlowSpec& spec, const OrbitPoint& z0,
                            const CasimirSet& invariants, const Hamiltonian& hamiltonian,
                            const ModelParams& params) {
  spec.validate();
  params.validate();
  if (!hamiltonian.value) throw InvalidInput("Hamiltonian flow needs a Hamiltonian");
  if (z0.model != invariants.model) {
    throw InvalidInput("initial point and invariants belong to different models");
  }
  const ModelId model = z0.model;
  const VectorField field(model, hamiltonian, params);

  Trajectory out;
  out.model = model;
  auto record = [&](double t, const Eigen::VectorXd& z) {
    const OrbitPoint point{model, z};
    out.times.push_back(t);
    out.points.push_back(point);
    out.casimir_series.push_back(casimirs(model, dual_from_chart(point, invariants, params), params));
    out.energy.push_back(field.energy(z));
  };

  Eigen::VectorXd z = z0.z;
  record(0.0, z);
  for (std::size_t step = 1; step <= spec.nsteps; ++step) {
    Eigen::VectorXd next;
    try {
      next = spec.integrator == Integrator::Rk4 ? rk4_step(field, z, spec.dt)
                                                : midpoint_step(field, z, spec.dt, spec, step);
    } catch (const FlowSingularity&) {
      throw;
    } catch (const NumericFailure&) {
      throw;
    } catch (const Error& e) {
      throw FlowSingularity(step, e.what(), std::move(out));
    }
    if (!all_finite(next)) throw FlowSingularity(step, "non-finite state", std::move(out));
    z = std::move(next);
    try {
      record(static_cast<double>(step) * spec.dt, z);
    } catch (const Error& e) {
      throw FlowSingularity(step, e.what(), std::move(out));
    }
  }
  return out;
}

Drift invariant_drift(const Trajectory& trajectory) {
  if (trajectory.size() == 0) throw InvalidInput("trajectory is empty");
  Drift d;
  d.names = casimir_labels(trajectory.model);
  const bool with_energy = !trajectory.energy.empty();
  if (with_energy) d.names.emplace_back("H");
  d.max_abs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d.names.size()));
  const Eigen::VectorXd& first = trajectory.casimir_series.front().values;
  const Eigen::Index nc = first.size();
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const Eigen::VectorXd dev = (trajectory.casimir_series[i].values - first).cwiseAbs();
    d.max_abs.head(nc) = d.max_abs.head(nc).cwiseMax(dev);
    if (with_energy) {
      d.max_abs[nc] =
          std::max(d.max_abs[nc], std::abs(trajectory.energy[i] - trajectory.energy.front()));
    }
  }
  return d;
}

Hamiltonian orbit_energy(ModelId model, const CasimirSet& invariants, const ModelParams& params) {
  if (invariants.model != model) throw InvalidInput("invariants belong to a different model");
  if (!has_chart(model)) throw InvalidInput("model has no orbit chart");
  Hamiltonian h;
  h.value = [model, invariants, params](const Eigen::VectorXd& z) {
    return dual_from_chart(OrbitPoint{model, z}, invariants, params)[3];
  };
  const double mw = params.mass_frequency();
  switch (model) {
    case ModelId::Central2: {
      const double h_omega = invariants["h"] * params.omega;  // E = alpha h omega
      h.gradient = [h_omega](const Eigen::VectorXd&) {
        return Eigen::Vector4d(0.0, 0.0, 0.0, h_omega).eval();
      };
      break;
    }
    case ModelId::Noncentral: {
      // E = U - (f / m omega) (p sin phi_f + m omega q cos phi_f)
      const double f = invariants["f"];
      h.gradient = [f, mw](const Eigen::VectorXd& z) {
        const double c = std::cos(z[1]), s = std::sin(z[1]);
        return Eigen::Vector4d(0.0, -f / mw * (z[2] * c - mw * z[3] * s), -f / mw * s, -f * c)
            .eval();
      };
      break;
    }
    case ModelId::Double: {
      const double k = invariants["k"];  // E = U + k |q|^2 / 2
      h.gradient = [k](const Eigen::VectorXd& z) {
        return Eigen::Vector4d(0.0, 0.0, k * z[2], k * z[3]).eval();
      };
      break;
    }
    default:
      h.gradient = fd_gradient_fn(h.value);
      break;
  }
  return h;
}

Hamiltonian double_kinetic(const ModelParams& params) {
  const double m = params.m;
  return {[m](const Eigen::VectorXd& z) { return 0.5 * (z[0] * z[0] + z[1] * z[1]) / m; },
          [m](const Eigen::VectorXd& z) {
            Eigen::VectorXd g = Eigen::VectorXd::Zero(4);
            g[0] = z[0] / m;
            g[1] = z[1] / m;
            return g;
          }};
}

Hamiltonian noncentral_canonical(const ModelParams& params) {
  return {noncentral_energy(params), [params](const Eigen::VectorXd& z) {
            Eigen::VectorXd g(4);
            g << params.omega, 0.0, z[2] / params.m, params.m * params.omega * params.omega * z[3];
            return g;
          }};
}

}  // namespace aristotle
