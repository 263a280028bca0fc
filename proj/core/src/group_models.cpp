#include "aristotle/group_models.hpp"

#include "aristotle/error.hpp"

#include <cmath>

namespace aristotle {

namespace {

bool has_phi(ModelId m) { return m != ModelId::Base; }

void require_same_model(const GroupParam& g, const GroupParam& h) {
  if (g.model != h.model) {
    throw InvalidInput("cannot compose elements of " + std::string(model_name(g.model)) + " and " +
                       std::string(model_name(h.model)));
  }
}

void require_dim(ModelId model, std::size_t n, const char* what) {
  if (n != model_dim(model)) {
    throw InvalidInput(std::string(what) + " has dimension " + std::to_string(n) + ", model " +
                       std::string(model_name(model)) + " has dimension " +
                       std::to_string(model_dim(model)));
  }
}

Vec2 seg(const Eigen::VectorXd& v, Eigen::Index i) { return Vec2(v[i], v[i + 1]); }

// Basis positions shared by all models.
constexpr Eigen::Index kJ = 0, kP = 1, kH = 3;

}  // namespace

std::string_view model_name(ModelId model) {
  switch (model) {
    case ModelId::Base: return "base";
    case ModelId::Central1: return "central1";
    case ModelId::Central2: return "central2";
    case ModelId::Noncentral: return "noncentral";
    case ModelId::Double: return "double";
  }
  return "unknown";
}

std::optional<ModelId> parse_model(std::string_view name) {
  for (ModelId m : kAllModels)
    if (model_name(m) == name) return m;
  return std::nullopt;
}

std::vector<std::string> basis_labels(ModelId model) {
  switch (model) {
    case ModelId::Base: return {"J", "P1", "P2", "H"};
    case ModelId::Central1: return {"J", "P1", "P2", "H", "S"};
    case ModelId::Central2: return {"J", "P1", "P2", "H", "S", "N"};
    case ModelId::Noncentral: return {"J", "P1", "P2", "H", "F1", "F2", "S"};
    case ModelId::Double: return {"J", "P1", "P2", "H", "F1", "F2", "S", "K"};
  }
  return {};
}

std::vector<std::string> dual_labels(ModelId model) {
  switch (model) {
    case ModelId::Base: return {"j", "p1", "p2", "E"};
    case ModelId::Central1: return {"j", "p1", "p2", "E", "l"};
    case ModelId::Central2: return {"j", "p1", "p2", "E", "l", "h"};
    case ModelId::Noncentral: return {"j", "p1", "p2", "E", "f1", "f2", "h"};
    case ModelId::Double: return {"j", "p1", "p2", "E", "f1", "f2", "h", "k"};
  }
  return {};
}

std::size_t model_dim(ModelId model) { return basis_labels(model).size(); }

StructureTensor structure(ModelId model, const ModelParams& params) {
  params.validate();
  const double inv_r2 = 1.0 / (params.r * params.r);
  std::vector<BracketTerm> terms = {{"J", "P1", "P2", 1.0}, {"J", "P2", "P1", -1.0}};
  switch (model) {
    case ModelId::Base:
      break;
    case ModelId::Central1:
      terms.push_back({"P1", "P2", "S", inv_r2});
      break;
    case ModelId::Central2:
      terms.push_back({"P1", "P2", "S", inv_r2});
      terms.push_back({"S", "H", "N", params.omega});
      break;
    case ModelId::Noncentral:
    case ModelId::Double:
      terms.push_back({"J", "F1", "F2", 1.0});
      terms.push_back({"J", "F2", "F1", -1.0});
      terms.push_back({"P1", "P2", "S", inv_r2});
      terms.push_back({"P1", "H", "F1", 1.0});
      terms.push_back({"P2", "H", "F2", 1.0});
      if (model == ModelId::Double) {
        terms.push_back({"P1", "F1", "K", 1.0});
        terms.push_back({"P2", "F2", "K", 1.0});
      }
      break;
  }
  return StructureTensor(basis_labels(model), terms);
}

GroupParam GroupParam::identity(ModelId model) {
  GroupParam g;
  g.model = model;
  return g;
}

Eigen::VectorXd GroupParam::coords() const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(model_dim(model)));
  v[kJ] = theta;
  v[kP] = x[0];
  v[kP + 1] = x[1];
  v[kH] = t;
  switch (model) {
    case ModelId::Base: break;
    case ModelId::Central1: v[4] = phi; break;
    case ModelId::Central2: v[4] = phi; v[5] = psi; break;
    case ModelId::Noncentral: v[4] = eta[0]; v[5] = eta[1]; v[6] = phi; break;
    case ModelId::Double: v[4] = eta[0]; v[5] = eta[1]; v[6] = phi; v[7] = gamma; break;
  }
  return v;
}

GroupParam GroupParam::from_coords(ModelId model, const Eigen::VectorXd& v) {
  require_dim(model, static_cast<std::size_t>(v.size()), "group parameter vector");
  GroupParam g = identity(model);
  g.theta = v[kJ];
  g.x = seg(v, kP);
  g.t = v[kH];
  switch (model) {
    case ModelId::Base: break;
    case ModelId::Central1: g.phi = v[4]; break;
    case ModelId::Central2: g.phi = v[4]; g.psi = v[5]; break;
    case ModelId::Noncentral: g.eta = seg(v, 4); g.phi = v[6]; break;
    case ModelId::Double: g.eta = seg(v, 4); g.phi = v[6]; g.gamma = v[7]; break;
  }
  return g;
}

Eigen::Matrix2d rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

double cross(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

Vec2 eps(const Vec2& v) { return Vec2(v[1], -v[0]); }

namespace {

double cocycle_unchecked(const GroupParam& g, const GroupParam& h, const ModelParams& params) {
  return cross(rotation(-g.theta) * g.x, h.x) / (2.0 * params.r * params.r);
}

}  // namespace

GroupParam multiply(const GroupParam& g, const GroupParam& h, const ModelParams& params) {
  require_same_model(g, h);
  const Eigen::Matrix2d rot = rotation(g.theta);
  GroupParam out = GroupParam::identity(g.model);
  out.theta = g.theta + h.theta;
  out.x = rot * h.x + g.x;
  out.t = g.t + h.t;
  if (has_phi(g.model)) out.phi = g.phi + h.phi + cocycle_unchecked(g, h, params);
  switch (g.model) {
    case ModelId::Base:
    case ModelId::Central1:
      break;
    case ModelId::Central2:
      out.psi = g.psi + h.psi - params.omega * g.t * h.phi;
      break;
    case ModelId::Noncentral:
      out.eta = rot * h.eta - rot * h.x * g.t + g.eta;
      break;
    case ModelId::Double:
      out.eta = rot * h.eta + g.eta + g.x * h.t;
      out.gamma = g.gamma + h.gamma + 0.5 * g.x.dot(rot * h.eta) -
                  0.5 * (g.eta + g.x * h.t).dot(rot * h.x);
      break;
  }
  return out;
}

GroupParam inverse(const GroupParam& g, const ModelParams& params) {
  const Eigen::Matrix2d back = rotation(-g.theta);
  GroupParam out = GroupParam::identity(g.model);
  out.theta = -g.theta;
  out.x = -(back * g.x);
  out.t = -g.t;
  if (has_phi(g.model)) out.phi = -g.phi;
  switch (g.model) {
    case ModelId::Base:
    case ModelId::Central1:
      break;
    case ModelId::Central2:
      out.psi = -g.psi - params.omega * g.t * g.phi;
      break;
    case ModelId::Noncentral:
      out.eta = -(back * (g.eta + g.x * g.t));
      break;
    case ModelId::Double:
      out.eta = -(back * (g.eta - g.x * g.t));
      out.gamma = -g.gamma;
      break;
  }
  return out;
}

double cocycle(const GroupParam& g, const GroupParam& h, const ModelParams& params) {
  if (g.model != ModelId::Base || h.model != ModelId::Base) {
    throw InvalidInput("cocycle takes elements of the base model");
  }
  params.validate();
  return cocycle_unchecked(g, h, params);
}

AlgebraVector adjoint(const GroupParam& g, const AlgebraVector& dx, const ModelParams& params) {
  require_dim(g.model, dx.size(), "algebra vector");
  const Eigen::VectorXd& d = dx.coords;
  const Eigen::Matrix2d rot = rotation(g.theta);
  const double inv_r2 = 1.0 / (params.r * params.r);
  const double dtheta = d[kJ];
  const Vec2 dxv = seg(d, kP);
  const double dt = d[kH];

  Eigen::VectorXd out = d;
  out.segment<2>(kP) = rot * dxv + eps(g.x) * dtheta;
  // S coordinate, wherever the model has one.
  auto shifted_phi = [&](double dphi) {
    return dphi + cross(g.x, rot * dxv) * inv_r2 - 0.5 * g.x.squaredNorm() * inv_r2 * dtheta;
  };
  switch (g.model) {
    case ModelId::Base:
      break;
    case ModelId::Central1:
      out[4] = shifted_phi(d[4]);
      break;
    case ModelId::Central2:
      out[4] = shifted_phi(d[4]);
      out[5] = d[5] - params.omega * g.t * d[4] + params.omega * g.phi * dt;
      break;
    case ModelId::Noncentral: {
      const Vec2 deta = seg(d, 4);
      out.segment<2>(4) = rot * deta - g.t * (rot * dxv) + g.x * dt + eps(g.eta) * dtheta;
      out[6] = shifted_phi(d[6]);
      break;
    }
    case ModelId::Double: {
      const Vec2 deta = seg(d, 4);
      out.segment<2>(4) =
          rot * deta - g.t * (rot * dxv) + g.x * dt + eps(g.eta - g.x * g.t) * dtheta;
      out[6] = shifted_phi(d[6]);
      out[7] = d[7] + g.x.dot(rot * deta) - g.eta.dot(rot * dxv) + cross(g.x, g.eta) * dtheta +
               0.5 * g.x.squaredNorm() * dt;
      break;
    }
  }
  return AlgebraVector(std::move(out));
}

DualVector coadjoint(const GroupParam& g, const DualVector& xi, const ModelParams& params) {
  require_dim(g.model, xi.size(), "dual vector");
  const Eigen::VectorXd& v = xi.coords;
  const Eigen::Matrix2d rot = rotation(g.theta);
  const double inv_r2 = 1.0 / (params.r * params.r);
  const double j = v[kJ];
  const Vec2 p = seg(v, kP);
  const double energy = v[kH];
  const Vec2 rp = rot * p;
  const double x2 = g.x.squaredNorm();

  Eigen::VectorXd out = v;
  switch (g.model) {
    case ModelId::Base:
      out[kJ] = j + cross(g.x, rp);
      out.segment<2>(kP) = rp;
      break;
    case ModelId::Central1: {
      const double l = v[4];
      out[kJ] = j + cross(g.x, rp) - 0.5 * l * inv_r2 * x2;
      out.segment<2>(kP) = rp + l * inv_r2 * eps(g.x);
      break;
    }
    case ModelId::Central2: {
      const double l = v[4], h = v[5];
      const double l_moved = l + h * params.omega * g.t;
      out[kJ] = j + cross(g.x, rp) - 0.5 * l_moved * inv_r2 * x2;
      out.segment<2>(kP) = rp + l_moved * inv_r2 * eps(g.x);
      out[kH] = energy - h * params.omega * g.phi;
      out[4] = l_moved;
      break;
    }
    case ModelId::Noncentral: {
      const Vec2 rf = rot * seg(v, 4);
      const double h = v[6];
      out[kJ] = j + cross(g.x, rp) + cross(g.eta, rf) + g.t * cross(g.x, rf) - 0.5 * h * inv_r2 * x2;
      out.segment<2>(kP) = rp + g.t * rf + h * inv_r2 * eps(g.x);
      out[kH] = energy - g.x.dot(rf);
      out.segment<2>(4) = rf;
      break;
    }
    case ModelId::Double: {
      const Vec2 rf = rot * seg(v, 4);
      const double h = v[6], k = v[7];
      out[kJ] = j + cross(g.x, rp) + cross(g.eta, rf) + k * cross(g.x, g.eta) - 0.5 * h * inv_r2 * x2;
      out.segment<2>(kP) = rp + g.t * rf + k * (g.eta - g.t * g.x) + h * inv_r2 * eps(g.x);
      out[kH] = energy - g.x.dot(rf) + 0.5 * k * x2;
      out.segment<2>(4) = rf - k * g.x;
      break;
    }
  }
  return DualVector(std::move(out));
}

GroupParam one_parameter(ModelId model, std::size_t index, double s) {
  const auto n = model_dim(model);
  if (index >= n) throw InvalidInput("basis index out of range");
  Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  c[static_cast<Eigen::Index>(index)] = s;
  return GroupParam::from_coords(model, c);
}

GroupParam group_exp(ModelId model, const AlgebraVector& x, const ModelParams& params,
                     int squarings) {
  require_dim(model, x.size(), "algebra vector");
  if (squarings < 0 || squarings > 60) throw InvalidInput("squarings must lie in [0, 60]");
  GroupParam g = GroupParam::from_coords(model, x.coords * std::ldexp(1.0, -squarings));
  for (int i = 0; i < squarings; ++i) g = multiply(g, g, params);
  return g;
}

}  // namespace aristotle
