#include "aristotle/orbit_chart.hpp"

#include "aristotle/error.hpp"

#include <algorithm>
#include <cmath>

namespace aristotle {

namespace {

double lookup(const std::vector<std::string>& names, const Eigen::VectorXd& values,
              std::string_view name, const char* what) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    throw InvalidInput("unknown " + std::string(what) + " '" + std::string(name) + "'");
  }
  return values[it - names.begin()];
}

void require_chart(ModelId model) {
  if (!has_chart(model)) {
    throw InvalidInput("model " + std::string(model_name(model)) + " has no orbit chart");
  }
}

void require_dual(ModelId model, const DualVector& xi) {
  if (xi.size() != model_dim(model)) {
    throw InvalidInput("dual vector has dimension " + std::to_string(xi.size()) + ", model " +
                       std::string(model_name(model)) + " needs " +
                       std::to_string(model_dim(model)));
  }
}

void require_point(const OrbitPoint& point) {
  require_chart(point.model);
  if (static_cast<std::size_t>(point.z.size()) != chart_labels(point.model).size()) {
    throw InvalidInput("orbit point has the wrong number of coordinates for model " +
                       std::string(model_name(point.model)));
  }
}

void require_nondegenerate(const char* quantity, double value) {
  if (!(std::abs(value) >= kDegeneracyThreshold)) {
    throw ChartDegeneracy(quantity, std::abs(value), kDegeneracyThreshold);
  }
}

// The central dual coordinate paired with S must be m omega r^2.
void require_action_unit(const char* name, double value, const ModelParams& params) {
  const double expected = params.action_unit();
  if (std::abs(value - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
    throw InvalidInput(std::string("dual coordinate ") + name + " = " + std::to_string(value) +
                       " must equal m*omega*r^2 = " + std::to_string(expected) +
                       " for this orbit chart");
  }
}

Vec2 seg(const Eigen::VectorXd& v, Eigen::Index i) { return Vec2(v[i], v[i + 1]); }

}  // namespace

std::vector<std::string> chart_labels(ModelId model) {
  switch (model) {
    case ModelId::Base: return {};
    case ModelId::Central1: return {"p", "q"};
    case ModelId::Central2: return {"p", "q", "l", "alpha"};
    case ModelId::Noncentral: return {"j", "phi_f", "p", "q"};
    case ModelId::Double: return {"p1", "p2", "q1", "q2"};
  }
  return {};
}

std::vector<std::string> casimir_labels(ModelId model) {
  switch (model) {
    case ModelId::Base: return {};
    case ModelId::Central1: return {"l", "E", "s"};
    case ModelId::Central2: return {"h", "s"};
    case ModelId::Noncentral: return {"h", "f", "U"};
    case ModelId::Double: return {"h", "k", "s", "U"};
  }
  return {};
}

bool has_chart(ModelId model) { return model != ModelId::Base; }

double OrbitPoint::operator[](std::string_view name) const {
  return lookup(chart_labels(model), z, name, "chart coordinate");
}

double CasimirSet::operator[](std::string_view name) const {
  return lookup(casimir_labels(model), values, name, "invariant");
}

CasimirSet casimirs(ModelId model, const DualVector& xi, const ModelParams& params) {
  require_chart(model);
  require_dual(model, xi);
  params.validate();
  const Eigen::VectorXd& v = xi.coords;
  const double mw = params.mass_frequency();
  const double j = v[0];
  const Vec2 p = seg(v, 1);
  const double energy = v[3];

  CasimirSet out{model, Eigen::VectorXd()};
  switch (model) {
    case ModelId::Base:
      break;
    case ModelId::Central1:
      require_action_unit("l", v[4], params);
      out.values = Eigen::Vector3d(v[4], energy, j + p.squaredNorm() / (2.0 * mw));
      break;
    case ModelId::Central2:
      require_nondegenerate("h", v[5]);
      out.values = Eigen::Vector2d(v[5], j + p.squaredNorm() / (2.0 * mw));
      break;
    case ModelId::Noncentral: {
      const Vec2 f = seg(v, 4);
      require_action_unit("h", v[6], params);
      require_nondegenerate("f", f.norm());
      out.values = Eigen::Vector3d(v[6], f.norm(), energy + cross(p, f) / mw);
      break;
    }
    case ModelId::Double: {
      const double k = v[7];
      require_action_unit("h", v[6], params);
      require_nondegenerate("k", k);
      const Vec2 q = -seg(v, 4) / k;
      out.values = Eigen::Vector4d(v[6], k, j + cross(p, q) - 0.5 * mw * q.squaredNorm(),
                                   energy - 0.5 * k * q.squaredNorm());
      break;
    }
  }
  return out;
}

Eigen::MatrixXd casimir_gradients(ModelId model, const DualVector& xi, const ModelParams& params) {
  require_chart(model);
  require_dual(model, xi);
  params.validate();
  const Eigen::VectorXd& v = xi.coords;
  const double mw = params.mass_frequency();
  const Vec2 p = seg(v, 1);
  const auto n = static_cast<Eigen::Index>(model_dim(model));
  const auto rows = static_cast<Eigen::Index>(casimir_labels(model).size());
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(rows, n);

  switch (model) {
    case ModelId::Base:
      break;
    case ModelId::Central1:
      g(0, 4) = 1.0;
      g(1, 3) = 1.0;
      g.row(2).head<3>() << 1.0, p[0] / mw, p[1] / mw;
      break;
    case ModelId::Central2:
      g(0, 5) = 1.0;
      g.row(1).head<3>() << 1.0, p[0] / mw, p[1] / mw;
      break;
    case ModelId::Noncentral: {
      const Vec2 f = seg(v, 4);
      require_nondegenerate("f", f.norm());
      g(0, 6) = 1.0;
      g(1, 4) = f[0] / f.norm();
      g(1, 5) = f[1] / f.norm();
      // U = E + (p1 f2 - p2 f1) / (m omega)
      g.row(2) << 0.0, f[1] / mw, -f[0] / mw, 1.0, -p[1] / mw, p[0] / mw, 0.0;
      break;
    }
    case ModelId::Double: {
      const double k = v[7];
      require_nondegenerate("k", k);
      const Vec2 q = -seg(v, 4) / k;
      g(0, 6) = 1.0;
      g(1, 7) = 1.0;
      // s = j + p x q - m omega |q|^2 / 2 with q = -f / k
      const Vec2 ds_dq(-p[1] - mw * q[0], p[0] - mw * q[1]);
      g.row(2) << 1.0, q[1], -q[0], 0.0, -ds_dq[0] / k, -ds_dq[1] / k, 0.0,
          -ds_dq.dot(q) / k;
      // U = E - k |q|^2 / 2 = E - |f|^2 / 2k
      g.row(3) << 0.0, 0.0, 0.0, 1.0, q[0], q[1], 0.0, 0.5 * q.squaredNorm();
      break;
    }
  }
  return g;
}

OrbitPoint chart_from_dual(ModelId model, const DualVector& xi, const ModelParams& params) {
  require_chart(model);
  require_dual(model, xi);
  params.validate();
  const Eigen::VectorXd& v = xi.coords;
  const double mw = params.mass_frequency();
  OrbitPoint out{model, Eigen::VectorXd()};
  switch (model) {
    case ModelId::Base:
      break;
    case ModelId::Central1:
      require_action_unit("l", v[4], params);
      out.z = Eigen::Vector2d(v[1], -v[2] / mw);
      break;
    case ModelId::Central2:
      require_nondegenerate("h", v[5]);
      out.z = Eigen::Vector4d(v[1], -v[2] / mw, v[4], v[3] / (v[5] * params.omega));
      break;
    case ModelId::Noncentral: {
      require_action_unit("h", v[6], params);
      require_nondegenerate("f", std::hypot(v[4], v[5]));
      out.z = Eigen::Vector4d(v[0], std::atan2(v[5], v[4]), v[1], -v[2] / mw);
      break;
    }
    case ModelId::Double:
      require_action_unit("h", v[6], params);
      require_nondegenerate("k", v[7]);
      out.z = Eigen::Vector4d(v[1], v[2], -v[4] / v[7], -v[5] / v[7]);
      break;
  }
  return out;
}

DualVector dual_from_chart(const OrbitPoint& point, const CasimirSet& invariants,
                           const ModelParams& params) {
  require_point(point);
  if (invariants.model != point.model) {
    throw InvalidInput("invariants belong to a different model than the orbit point");
  }
  params.validate();
  const Eigen::VectorXd& z = point.z;
  const Eigen::VectorXd& c = invariants.values;
  const double mw = params.mass_frequency();
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(model_dim(point.model)));

  switch (point.model) {
    case ModelId::Base:
      break;
    case ModelId::Central1: {
      const double p = z[0], q = z[1];
      v << c[2] - p * p / (2.0 * mw) - 0.5 * mw * q * q, p, -mw * q, c[1], c[0];
      break;
    }
    case ModelId::Central2: {
      const double p = z[0], q = z[1];
      require_nondegenerate("h", c[0]);
      v << c[1] - p * p / (2.0 * mw) - 0.5 * mw * q * q, p, -mw * q, z[3] * c[0] * params.omega,
          z[2], c[0];
      break;
    }
    case ModelId::Noncentral: {
      const double f = c[1];
      require_nondegenerate("f", f);
      const Vec2 p(z[2], -mw * z[3]);
      const Vec2 fv(f * std::cos(z[1]), f * std::sin(z[1]));
      v << z[0], p[0], p[1], c[2] - cross(p, fv) / mw, fv[0], fv[1], c[0];
      break;
    }
    case ModelId::Double: {
      const double k = c[1];
      require_nondegenerate("k", k);
      const Vec2 p = seg(z, 0);
      const Vec2 q = seg(z, 2);
      v << c[2] - cross(p, q) + 0.5 * mw * q.squaredNorm(), p[0], p[1],
          c[3] + 0.5 * k * q.squaredNorm(), -k * q[0], -k * q[1], c[0], k;
      break;
    }
  }
  return DualVector(std::move(v));
}

Eigen::MatrixXd poisson_tensor(const OrbitPoint& point, const ModelParams& params) {
  require_point(point);
  params.validate();
  const double mw = params.mass_frequency();
  const auto n = point.z.size();
  Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(n, n);
  auto set = [&pi](Eigen::Index a, Eigen::Index b, double v) {
    pi(a, b) = v;
    pi(b, a) = -v;
  };
  switch (point.model) {
    case ModelId::Base:
      break;
    case ModelId::Central1:
      set(0, 1, 1.0);  // {p, q}
      break;
    case ModelId::Central2:
      set(0, 1, 1.0);  // {p, q}
      set(2, 3, 1.0);  // {l, alpha}
      break;
    case ModelId::Noncentral: {
      const double p = point.z[2], q = point.z[3];
      set(0, 1, 1.0);      // {j, phi_f}
      set(2, 3, 1.0);      // {p, q}
      set(0, 2, mw * q);   // {j, p}
      set(0, 3, -p / mw);  // {j, q}
      break;
    }
    case ModelId::Double:
      set(0, 1, -mw);  // {p1, p2} = F_12 = -m omega
      set(0, 2, 1.0);  // {p_i, q_i}
      set(1, 3, 1.0);
      break;
  }
  return pi;
}

Eigen::MatrixXd omega_matrix(const OrbitPoint& point, const ModelParams& params) {
  const Eigen::MatrixXd pi = poisson_tensor(point, params);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(pi);
  if (!lu.isInvertible()) {
    throw Singularity("Poisson tensor is singular at this orbit point");
  }
  return lu.inverse();
}

std::vector<std::string> restricted_basis(ModelId model) {
  switch (model) {
    case ModelId::Base: return {};
    case ModelId::Central1: return {"P1", "P2"};
    case ModelId::Central2: return {"P1", "P2", "H", "S"};
    case ModelId::Noncentral: return {"J", "F1", "P1", "P2"};
    case ModelId::Double: return {"P1", "P2", "F1", "F2"};
  }
  return {};
}

Eigen::MatrixXd restricted_kirillov(ModelId model, const DualVector& xi, const ModelParams& params) {
  require_chart(model);
  require_dual(model, xi);
  const StructureTensor t = structure(model, params);
  const Eigen::MatrixXd k = kirillov_matrix(t, xi);
  const auto names = restricted_basis(model);
  const auto n = static_cast<Eigen::Index>(names.size());
  std::vector<Eigen::Index> idx;
  for (const auto& name : names) idx.push_back(static_cast<Eigen::Index>(t.index_of(name)));
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) out(a, b) = k(idx[a], idx[b]);
  return out;
}

Eigen::MatrixXd restricted_kirillov_inverse(ModelId model, const DualVector& xi,
                                            const ModelParams& params) {
  const Eigen::MatrixXd k = restricted_kirillov(model, xi, params);
  if (model == ModelId::Noncentral) {
    // det = (m omega f sin phi_f)^2; f sin phi_f is the f2 coordinate.
    const double f_sin = xi[5];
    if (!(std::abs(f_sin) >= kDegeneracyThreshold)) {
      throw Singularity("restricted Kirillov form is singular: f sin(phi_f) = " +
                        std::to_string(f_sin));
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(k);
  if (!lu.isInvertible()) throw Singularity("restricted Kirillov form is singular");
  return lu.inverse();
}

Eigen::VectorXd fd_gradient(const ScalarFn& f, const Eigen::VectorXd& z) {
  Eigen::VectorXd grad(z.size());
  Eigen::VectorXd probe = z;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double step = 1e-6 * (1.0 + std::abs(z[i]));
    probe[i] = z[i] + step;
    const double up = f(probe);
    probe[i] = z[i] - step;
    const double down = f(probe);
    probe[i] = z[i];
    grad[i] = (up - down) / (2.0 * step);
  }
  return grad;
}

GradientFn fd_gradient_fn(ScalarFn f) {
  return [f = std::move(f)](const Eigen::VectorXd& z) { return fd_gradient(f, z); };
}

GradientFn coordinate_gradient(std::size_t index, std::size_t dim) {
  if (index >= dim) throw InvalidInput("coordinate index out of range");
  return [index, dim](const Eigen::VectorXd&) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    e[static_cast<Eigen::Index>(index)] = 1.0;
    return e;
  };
}

double poisson_bracket(const OrbitPoint& point, const GradientFn& fgrad, const GradientFn& ggrad,
                       const ModelParams& params) {
  const Eigen::MatrixXd pi = poisson_tensor(point, params);
  const Eigen::VectorXd df = fgrad(point.z);
  const Eigen::VectorXd dg = ggrad(point.z);
  if (df.size() != point.z.size() || dg.size() != point.z.size()) {
    throw InvalidInput("gradient has the wrong dimension for this chart");
  }
  return df.dot(pi * dg);
}

ScalarFn noncentral_energy(const ModelParams& params) {
  return [params](const Eigen::VectorXd& z) {
    const double j = z[0], p = z[2], q = z[3];
    return j * params.omega + p * p / (2.0 * params.m) +
           0.5 * params.m * params.omega * params.omega * q * q;
  };
}

ScalarFn noncentral_tau(const ModelParams& params) {
  return [params](const Eigen::VectorXd& z) { return z[1] / params.omega; };
}

CanonicalPoint canonicalize_noncentral(const OrbitPoint& point, const ModelParams& params) {
  if (point.model != ModelId::Noncentral) {
    throw InvalidInput("canonicalize_noncentral takes a noncentral orbit point");
  }
  require_point(point);
  params.validate();
  return {noncentral_energy(params)(point.z), noncentral_tau(params)(point.z), point.z[2],
          point.z[3]};
}

}  // namespace aristotle
