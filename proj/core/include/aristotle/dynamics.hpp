#pragma once

// Time evolution on coadjoint orbits.
//
// Two kinds of flow are provided. The group time flow applies the coadjoint
// action of a pure time translation and is exact. The Hamiltonian flow
// integrates z' = sign * Pi(z) grad H(z) in chart coordinates for a
// caller-supplied H, where sign = flow_orientation(model). With that sign the
// orbit energy E generates the group time flow on every chart.

#include "aristotle/error.hpp"
#include "aristotle/group_models.hpp"
#include "aristotle/orbit_chart.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

namespace aristotle {

enum class FlowKind { GroupTime, Hamiltonian };
enum class Integrator { Rk4, ImplicitMidpoint };

struct FlowSpec {
  FlowKind kind = FlowKind::Hamiltonian;
  Integrator integrator = Integrator::ImplicitMidpoint;
  double dt = 1e-3;
  std::size_t nsteps = 10000;
  double solver_tol = 1e-12;   ///< implicit midpoint fixed-point tolerance
  int max_iterations = 50;     ///< implicit midpoint fixed-point cap

  void validate() const;
};

struct Hamiltonian {
  ScalarFn value;
  GradientFn gradient;  ///< may be empty; central differences are used then
};

/// Drift of each named invariant: max over steps of |value - initial value|.
struct Drift {
  std::vector<std::string> names;
  Eigen::VectorXd max_abs;

  double operator[](std::string_view name) const;
};

struct Trajectory {
  ModelId model = ModelId::Central1;
  std::vector<double> times;
  std::vector<OrbitPoint> points;
  std::vector<CasimirSet> casimir_series;
  std::vector<double> energy;  ///< H per step; empty for group time flows

  std::size_t size() const noexcept { return times.size(); }
};

/// Raised when the flow leaves the chart or produces non-finite values.
/// Carries everything integrated before the failing step.
class FlowSingularity : public NumericFailure {
 public:
  FlowSingularity(std::size_t step, const std::string& reason, Trajectory partial)
      : NumericFailure("flow singularity at step " + std::to_string(step) + ": " + reason),
        step_(step),
        partial_(std::move(partial)) {}

  std::size_t step() const noexcept { return step_; }
  const Trajectory& partial() const noexcept { return partial_; }

 private:
  std::size_t step_;
  Trajectory partial_;
};

/// Sign relating z' to Pi grad H; see the header comment.
int flow_orientation(ModelId model);

/// Coadjoint action of the pure time translation by t.
DualVector time_flow_exact(ModelId model, const DualVector& xi0, double t,
                           const ModelParams& params);

/// time_flow_exact sampled at t = 0, dt, ..., nsteps * dt, in chart coordinates.
Trajectory sample_time_flow(ModelId model, const DualVector& xi0, const FlowSpec& spec,
                            const ModelParams& params);

/// Integrates the Hamiltonian flow starting at z0 on the orbit labelled by
/// `invariants`. Casimirs are re-evaluated from the reconstructed dual point
/// at every step.
Trajectory hamiltonian_flow(const FlowSpec& spec, const OrbitPoint& z0,
                            const CasimirSet& invariants, const Hamiltonian& hamiltonian,
                            const ModelParams& params);

/// Per-invariant drift, including "H" when the trajectory records energy.
Drift invariant_drift(const Trajectory& trajectory);

/// The energy E of the dual point expressed in chart coordinates on the orbit
/// labelled by `invariants`. Its Hamiltonian flow is the group time flow.
Hamiltonian orbit_energy(ModelId model, const CasimirSet& invariants, const ModelParams& params);

/// Kinetic energy |p|^2 / 2m on the double-extension chart (cyclotron motion).
Hamiltonian double_kinetic(const ModelParams& params);

/// H = j omega + p^2 / 2m + m omega^2 q^2 / 2 on the noncentral chart.
Hamiltonian noncentral_canonical(const ModelParams& params);

}  // namespace aristotle
