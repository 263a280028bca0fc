#include "cli.hpp"

#include "aristotle/error.hpp"
#include "aristotle/orbit_chart.hpp"
#include "aristotle/trajectory_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace aristotle::cli {

using nlohmann::json;

namespace {

ModelId model_from(const std::string& name) {
  if (auto m = parse_model(name)) return *m;
  throw InvalidInput("unknown model '" + name + "' (expected base, central1, central2, "
                     "noncentral or double)");
}

Integrator integrator_from(const std::string& name) {
  if (name == "rk4") return Integrator::Rk4;
  if (name == "midpoint" || name == "implicit-midpoint") return Integrator::ImplicitMidpoint;
  throw InvalidInput("unknown integrator '" + name + "' (expected rk4 or midpoint)");
}

FlowKind flow_from(const std::string& name) {
  if (name == "group") return FlowKind::GroupTime;
  if (name == "hamiltonian") return FlowKind::Hamiltonian;
  throw InvalidInput("unknown flow '" + name + "' (expected group or hamiltonian)");
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const char* where) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!ok.count(key)) throw InvalidInput(std::string("unknown key '") + key + "' in " + where);
  }
}

std::string num(double v) { return format_double(v); }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void print_matrix(std::ostream& out, const std::string& title, const std::vector<std::string>& labels,
                  const Eigen::MatrixXd& m) {
  out << title;
  for (const auto& l : labels) out << ' ' << l;
  out << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << "  ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%12.6g", m(i, j) == 0.0 ? 0.0 : m(i, j));
      out << buf;
    }
    out << '\n';
  }
}

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json named(const std::vector<std::string>& names, const Eigen::VectorXd& v) {
  json obj = json::object();
  for (std::size_t i = 0; i < names.size(); ++i) obj[names[i]] = v[static_cast<Eigen::Index>(i)];
  return obj;
}

ModelId require_model(const RunConfig& config) {
  if (!config.model) throw InvalidInput("--model is required for this command");
  return *config.model;
}

void require_chart_model(ModelId model) {
  if (!has_chart(model)) {
    throw InvalidInput("model " + std::string(model_name(model)) + " has no orbit chart");
  }
}

DualVector dual_point(const RunConfig& config, ModelId model) {
  const std::vector<double> xi = config.xi ? *config.xi : default_xi(model, config.params);
  if (xi.size() != model_dim(model)) {
    throw InvalidInput("--xi has " + std::to_string(xi.size()) + " entries, model " +
                       std::string(model_name(model)) + " needs " +
                       std::to_string(model_dim(model)));
  }
  return DualVector(Eigen::Map<const Eigen::VectorXd>(xi.data(), static_cast<Eigen::Index>(xi.size())));
}

json report_json(const Report& report, const RunConfig& config) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"model", c.model},
                      {"status", c.passed ? "pass" : "fail"},
                      {"defect", c.defect},
                      {"tolerance", c.tolerance},
                      {"detail", c.detail}});
  }
  return {{"seed", config.seed},
          {"params", {{"m", config.params.m}, {"omega", config.params.omega}, {"r", config.params.r}}},
          {"passed", report.all_passed()},
          {"failures", report.failures()},
          {"checks", std::move(checks)},
          {"notes", report.notes}};
}

void write_to(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot open '" + path + "' for writing");
  file << text;
}

std::string trajectory_text(const Trajectory& traj, const RunConfig& config,
                            const std::string& status, const std::string& diagnostic) {
  std::ostringstream os;
  if (config.format == "csv") {
    write_csv(traj, os);
    return os.str();
  }
  json rows = json::array();
  std::ostringstream csv;
  write_csv(traj, csv);
  std::istringstream in(csv.str());
  const CsvTable table = read_csv(in);
  for (const auto& r : table.rows) rows.push_back(r);
  json drift = json::object();
  if (traj.size() > 0) {
    const Drift d = invariant_drift(traj);
    for (std::size_t i = 0; i < d.names.size(); ++i) {
      drift[d.names[i]] = d.max_abs[static_cast<Eigen::Index>(i)];
    }
  }
  const json doc = {
      {"model", model_name(traj.model)},
      {"params", {{"m", config.params.m}, {"omega", config.params.omega}, {"r", config.params.r}}},
      {"flow",
       {{"kind", config.flow.kind == FlowKind::GroupTime ? "group" : "hamiltonian"},
        {"integrator", config.flow.integrator == Integrator::Rk4 ? "rk4" : "midpoint"},
        {"hamiltonian", config.hamiltonian},
        {"dt", config.flow.dt},
        {"steps", config.flow.nsteps}}},
      {"columns", table.header},
      {"rows", std::move(rows)},
      {"drift", std::move(drift)},
      {"status", status},
      {"diagnostic", diagnostic}};
  return doc.dump(2) + "\n";
}

Hamiltonian pick_hamiltonian(const RunConfig& config, ModelId model, const CasimirSet& invariants) {
  if (config.hamiltonian == "energy") return orbit_energy(model, invariants, config.params);
  if (config.hamiltonian == "kinetic") {
    if (model != ModelId::Double) throw InvalidInput("the kinetic Hamiltonian needs --model double");
    return double_kinetic(config.params);
  }
  if (config.hamiltonian == "canonical") {
    if (model != ModelId::Noncentral) {
      throw InvalidInput("the canonical Hamiltonian needs --model noncentral");
    }
    return noncentral_canonical(config.params);
  }
  throw InvalidInput("unknown Hamiltonian '" + config.hamiltonian +
                     "' (expected energy, kinetic or canonical)");
}

}  // namespace

std::vector<double> default_xi(ModelId model, const ModelParams& params) {
  const double l = params.action_unit();
  switch (model) {
    case ModelId::Base: return {0, 1, 0, 0};
    case ModelId::Central1: return {0, 1, 0, 0, l};
    case ModelId::Central2: return {0, 1, 0, 0, l, 1};
    case ModelId::Noncentral: return {0, 0, 0, 0, 0, 1, l};
    case ModelId::Double: return {0, 0, 0, 0, -1, 0, l, 1};
  }
  return {};
}

RunConfig load_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("config must be a JSON object");
  reject_unknown(doc,
                 {"model", "params", "seed", "xi", "at", "flow", "output", "report", "f", "g",
                  "structure"},
                 "config");
  RunConfig c;
  try {
    if (doc.contains("model")) {
      const auto name = doc["model"].get<std::string>();
      if (name != "all") c.model = model_from(name);
    }
    if (doc.contains("params")) {
      const auto& p = doc["params"];
      reject_unknown(p, {"m", "omega", "r"}, "params");
      c.params.m = p.value("m", c.params.m);
      c.params.omega = p.value("omega", c.params.omega);
      c.params.r = p.value("r", c.params.r);
    }
    c.seed = doc.value("seed", c.seed);
    if (doc.contains("xi")) c.xi = doc["xi"].get<std::vector<double>>();
    if (doc.contains("at")) c.at = doc["at"].get<std::vector<double>>();
    if (doc.contains("flow")) {
      const auto& f = doc["flow"];
      reject_unknown(f, {"kind", "integrator", "hamiltonian", "dt", "steps"}, "flow");
      if (f.contains("kind")) c.flow.kind = flow_from(f["kind"].get<std::string>());
      if (f.contains("integrator")) c.flow.integrator = integrator_from(f["integrator"].get<std::string>());
      c.hamiltonian = f.value("hamiltonian", c.hamiltonian);
      c.flow.dt = f.value("dt", c.flow.dt);
      if (f.contains("steps")) {
        const auto steps = f["steps"].get<long long>();
        if (steps < 0) throw InvalidInput("flow.steps must not be negative");
        c.flow.nsteps = static_cast<std::size_t>(steps);
      }
    }
    if (doc.contains("output")) {
      const auto& o = doc["output"];
      reject_unknown(o, {"path", "format"}, "output");
      c.out = o.value("path", c.out);
      c.format = o.value("format", c.format);
    }
    c.report = doc.value("report", c.report);
    c.f = doc.value("f", c.f);
    c.g = doc.value("g", c.g);
    if (doc.contains("structure")) {
      const auto& s = doc["structure"];
      reject_unknown(s, {"labels", "brackets"}, "structure");
      StructureOverride o;
      o.labels = s.at("labels").get<std::vector<std::string>>();
      for (const auto& term : s.value("brackets", json::array())) {
        if (!term.is_array() || term.size() != 4) {
          throw InvalidInput("structure.brackets entries must be [a, b, c, coefficient]");
        }
        o.terms.push_back({term[0].get<std::string>(), term[1].get<std::string>(),
                           term[2].get<std::string>(), term[3].get<double>()});
      }
      c.structure = std::move(o);
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad config value: ") + e.what());
  }
  return c;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream&) {
  VerifyOptions options;
  options.params = config.params;
  options.seed = config.seed;
  options.structure = config.structure;
  if (config.structure && !config.model) {
    throw InvalidInput("a structure override needs a single --model");
  }
  std::vector<ModelId> models;
  if (config.model) {
    models.push_back(*config.model);
  } else {
    models.assign(kAllModels.begin(), kAllModels.end());
  }
  const Report report = verify_models(models, options);

  out << pad("model", 12) << pad("check", 28) << pad("status", 8) << pad("defect", 12)
      << pad("tolerance", 12) << "detail\n";
  for (const auto& c : report.checks) {
    char defect[32], tol[32];
    std::snprintf(defect, sizeof defect, "%.3g", c.defect);
    std::snprintf(tol, sizeof tol, "%.0e", c.tolerance);
    out << pad(c.model, 12) << pad(c.name, 28) << pad(c.passed ? "pass" : "FAIL", 8)
        << pad(defect, 12) << pad(tol, 12) << c.detail << '\n';
  }
  if (!report.notes.empty()) {
    out << "\nnotes:\n";
    for (const auto& n : report.notes) out << "  - " << n << '\n';
  }
  out << '\n' << report.checks.size() - report.failures() << '/' << report.checks.size()
      << " checks passed\n";
  if (!config.report.empty()) write_to(config.report, report_json(report, config).dump(2) + "\n", out);
  return report.all_passed() ? kOk : kCheckFailed;
}

int cmd_orbit(const RunConfig& config, std::ostream& out, std::ostream&) {
  const ModelId model = require_model(config);
  config.params.validate();
  const DualVector xi = dual_point(config, model);
  const StructureTensor table = structure(model, config.params);
  const Eigen::MatrixXd kirillov = kirillov_matrix(table, xi);

  if (!has_chart(model)) {
    if (config.format == "json") {
      out << json{{"model", model_name(model)}, {"kirillov", matrix_json(kirillov)}}.dump(2) << '\n';
    } else {
      out << "model " << model_name(model) << '\n';
      print_matrix(out, "kirillov", basis_labels(model), kirillov);
      out << "no orbit chart for this model\n";
    }
    return kOk;
  }

  const OrbitPoint point = chart_from_dual(model, xi, config.params);
  const CasimirSet invariants = casimirs(model, xi, config.params);
  const Eigen::MatrixXd restricted = restricted_kirillov(model, xi, config.params);
  const Eigen::MatrixXd pi = poisson_tensor(point, config.params);
  const Eigen::MatrixXd omega = omega_matrix(point, config.params);

  if (config.format == "json") {
    const json doc = {{"model", model_name(model)},
                      {"xi", named(dual_labels(model), xi.coords)},
                      {"kirillov", matrix_json(kirillov)},
                      {"restricted_basis", restricted_basis(model)},
                      {"restricted_kirillov", matrix_json(restricted)},
                      {"chart", named(chart_labels(model), point.z)},
                      {"poisson_tensor", matrix_json(pi)},
                      {"omega", matrix_json(omega)},
                      {"casimirs", named(casimir_labels(model), invariants.values)}};
    out << doc.dump(2) << '\n';
    return kOk;
  }

  out << "model " << model_name(model) << "\nxi";
  const auto dl = dual_labels(model);
  for (std::size_t i = 0; i < dl.size(); ++i) out << ' ' << dl[i] << '=' << num(xi[i]);
  out << '\n';
  print_matrix(out, "kirillov", basis_labels(model), kirillov);
  print_matrix(out, "restricted kirillov", restricted_basis(model), restricted);
  out << "chart";
  const auto cl = chart_labels(model);
  for (std::size_t i = 0; i < cl.size(); ++i) {
    out << ' ' << cl[i] << '=' << num(point.z[static_cast<Eigen::Index>(i)]);
  }
  out << '\n';
  print_matrix(out, "poisson tensor", cl, pi);
  print_matrix(out, "omega (inverse poisson tensor)", cl, omega);
  out << "casimirs";
  const auto kl = casimir_labels(model);
  for (std::size_t i = 0; i < kl.size(); ++i) {
    out << ' ' << kl[i] << '=' << num(invariants.values[static_cast<Eigen::Index>(i)]);
  }
  out << '\n';
  return kOk;
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ModelId model = require_model(config);
  require_chart_model(model);
  config.params.validate();
  config.flow.validate();
  if (config.format != "csv" && config.format != "json") {
    throw InvalidInput("unknown format '" + config.format + "' (expected csv or json)");
  }
  const DualVector xi = dual_point(config, model);

  Trajectory traj;
  try {
    if (config.flow.kind == FlowKind::GroupTime) {
      traj = sample_time_flow(model, xi, config.flow, config.params);
    } else {
      const OrbitPoint z0 = chart_from_dual(model, xi, config.params);
      const CasimirSet invariants = casimirs(model, xi, config.params);
      traj = hamiltonian_flow(config.flow, z0, invariants, pick_hamiltonian(config, model, invariants),
                              config.params);
    }
  } catch (const FlowSingularity& e) {
    write_to(config.out, trajectory_text(e.partial(), config, "flow singularity", e.what()), out);
    err << "error: " << e.what() << " (" << e.partial().size() << " rows written)\n";
    return kNumeric;
  }
  write_to(config.out, trajectory_text(traj, config, "complete", ""), out);
  return kOk;
}

int cmd_bracket(const RunConfig& config, std::ostream& out, std::ostream&) {
  const ModelId model = require_model(config);
  require_chart_model(model);
  config.params.validate();
  const auto labels = chart_labels(model);
  if (config.at.size() != labels.size()) {
    throw InvalidInput("--at has " + std::to_string(config.at.size()) + " entries, the " +
                       std::string(model_name(model)) + " chart has " +
                       std::to_string(labels.size()));
  }
  auto index = [&labels](const std::string& name) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == name) return i;
    }
    throw InvalidInput("unknown chart coordinate '" + name + "'");
  };
  const std::size_t fi = index(config.f), gi = index(config.g);
  const OrbitPoint point{
      model, Eigen::Map<const Eigen::VectorXd>(config.at.data(), static_cast<Eigen::Index>(config.at.size()))};
  const double value = poisson_bracket(point, coordinate_gradient(fi, labels.size()),
                                       coordinate_gradient(gi, labels.size()), config.params);
  out << '{' << config.f << ", " << config.g << "} = " << num(value) << '\n';
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coadjoint orbits of the planar Aristotle group and its extensions"};
  app.require_subcommand(1);

  std::string config_path, model, flow, integrator, hamiltonian, outpath, format, report, f, g;
  double m = 0, omega = 0, r = 0, dt = 0;
  std::uint64_t seed = 0;
  long long steps = 0;
  std::vector<double> xi, at;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON configuration document");
    sub->add_option("--model", model, "base, central1, central2, noncentral or double");
    sub->add_option("--m", m, "mass");
    sub->add_option("--omega", omega, "frequency");
    sub->add_option("--r", r, "universe radius");
  };

  auto* verify = app.add_subcommand("verify", "run the property suites");
  common(verify);
  verify->add_option("--seed", seed, "seed for all random sampling");
  verify->add_option("--report", report, "write a JSON report to this path");

  auto* orbit = app.add_subcommand("orbit", "Kirillov form, chart and invariants at a dual point");
  common(orbit);
  orbit->add_option("--xi", xi, "dual point, comma separated")->delimiter(',');
  orbit->add_option("--format", format, "text or json");

  auto* simulate = app.add_subcommand("simulate", "integrate a flow and write the trajectory");
  common(simulate);
  simulate->add_option("--xi", xi, "initial dual point, comma separated")->delimiter(',');
  simulate->add_option("--flow", flow, "group or hamiltonian");
  simulate->add_option("--integrator", integrator, "rk4 or midpoint");
  simulate->add_option("--hamiltonian", hamiltonian, "energy, kinetic or canonical");
  simulate->add_option("--dt", dt, "time step");
  simulate->add_option("--steps", steps, "number of steps");
  simulate->add_option("--out", outpath, "output path (stdout when omitted)");
  simulate->add_option("--format", format, "csv or json");

  auto* bracket = app.add_subcommand("bracket", "Poisson bracket of two chart coordinates");
  common(bracket);
  bracket->add_option("--at", at, "chart point, comma separated")->delimiter(',');
  bracket->add_option("--f", f, "first chart coordinate");
  bracket->add_option("--g", g, "second chart coordinate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  auto given = [sub](const char* name) { return sub->count(name) > 0; };

  try {
    RunConfig config;
    if (given("--config")) {
      std::ifstream file(config_path);
      if (!file) throw InvalidInput("cannot read config '" + config_path + "'");
      std::ostringstream text;
      text << file.rdbuf();
      config = load_config(text.str());
    }
    if (given("--model")) config.model = model == "all" ? std::nullopt : std::optional(model_from(model));
    if (given("--m")) config.params.m = m;
    if (given("--omega")) config.params.omega = omega;
    if (given("--r")) config.params.r = r;
    if (sub == verify) {
      if (given("--seed")) config.seed = seed;
      if (given("--report")) config.report = report;
      return cmd_verify(config, out, err);
    }
    if (sub == orbit) {
      if (given("--xi")) config.xi = xi;
      if (given("--format")) config.format = format;
      return cmd_orbit(config, out, err);
    }
    if (sub == simulate) {
      if (given("--xi")) config.xi = xi;
      if (given("--flow")) config.flow.kind = flow_from(flow);
      if (given("--integrator")) config.flow.integrator = integrator_from(integrator);
      if (given("--hamiltonian")) config.hamiltonian = hamiltonian;
      if (given("--dt")) config.flow.dt = dt;
      if (given("--steps")) {
        if (steps < 0) throw InvalidInput("--steps must not be negative");
        config.flow.nsteps = static_cast<std::size_t>(steps);
      }
      if (given("--out")) config.out = outpath;
      if (given("--format")) config.format = format;
      return cmd_simulate(config, out, err);
    }
    if (given("--at")) config.at = at;
    if (given("--f")) config.f = f;
    if (given("--g")) config.g = g;
    return cmd_bracket(config, out, err);
  } catch (const InvalidInput& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ChartDegeneracy& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const Error& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumeric;
  }
}

}  // namespace aristotle::cli
