#include "metriq/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "metriq/biorth.hpp"
#include "metriq/intertwiner.hpp"
#include "metriq/matrix_io.hpp"
#include "metriq/swanson.hpp"
#include "metriq/transform.hpp"

namespace metriq::cli {

namespace {

using nlohmann::ordered_json;

struct Report {
  ordered_json inputs = ordered_json::object();
  ordered_json scalars = ordered_json::object();
  ordered_json residuals = ordered_json::array();
  ordered_json dumps = ordered_json::object();
  bool any_fail = false;

  void input(const std::string& path) { inputs[path] = file_digest(path); }
  void scalar(const std::string& name, const ordered_json& v) { scalars[name] = v; }
  void residual(const std::string& name, double value, double tol) {
    const bool pass = value <= tol;
    residuals.push_back(
        {{"name", name}, {"value", value}, {"tolerance", tol}, {"pass", pass}});
    any_fail = any_fail || !pass;
  }
};

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "metriq";
  for (const auto& a : args) s += " " + a;
  return s;
}

void emit(const Report& r, const std::string& command, const std::string& format,
          std::ostream& out) {
  if (format == "csv") {
    for (auto it = r.scalars.begin(); it != r.scalars.end(); ++it)
      if (!it.value().is_array()) out << it.key() << "," << it.value().dump() << "\n";
    for (const auto& res : r.residuals)
      out << res["name"].get<std::string>() << "," << res["value"].dump() << ","
          << res["tolerance"].dump() << "," << (res["pass"].get<bool>() ? 1 : 0)
          << "\n";
    for (auto it = r.dumps.begin(); it != r.dumps.end(); ++it)
      for (const auto& row : it.value())
        out << row[0].dump() << "," << row[1].dump() << "\n";
    return;
  }
  ordered_json j;
  j["command"] = command;
  j["inputs"] = r.inputs;
  j["scalars"] = r.scalars;
  j["residuals"] = r.residuals;
  if (!r.dumps.empty()) j["dumps"] = r.dumps;
  j["timing_ms"] = 0.0;  // patched by the caller
  out << j.dump(2) << "\n";
}

MetricOperator metric_from_file(const std::string& path, Report& rep) {
  rep.input(path);
  LoadedMatrix lm = load_matrix(path);
  return MetricOperator::make(lm.matrix);
}

void biorth_residuals(const ComplexMatrix& a, const MetricOperator& metric,
                      const BiorthogonalBasis& basis, double ts, Report& rep) {
  const std::size_t n = basis.eigenvalues.size();
  const ComplexMatrix eye = ComplexMatrix::identity(n);

  double ortho = 0.0;
  const ComplexMatrix gram = basis.eta_kets.adjoint() * basis.h_kets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ortho = std::max(ortho, std::abs(gram(i, j) - eye(i, j)));
  rep.residual("biorthogonal_orthonormality", ortho, 1e-10 * ts);
  rep.residual("biorthogonal_completeness", completeness_residual(basis), 1e-10 * ts);

  const double anorm = a.frobenius_norm();
  ComplexMatrix av = a * basis.h_kets;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      av(i, j) -= basis.eigenvalues[j] * basis.h_kets(i, j);
  rep.residual("right_eigenvectors", av.frobenius_norm() / anorm, 1e-9 * ts);

  ComplexMatrix wa = basis.eta_kets.adjoint() * a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      wa(i, j) -= basis.eigenvalues[i] * std::conj(basis.eta_kets(j, i));
  rep.residual("left_eigenvectors", wa.frobenius_norm() / anorm, 1e-9 * ts);

  ComplexMatrix resolution(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        resolution(i, j) += basis.eigenvalues[k] * basis.h_kets(i, k) *
                            std::conj(basis.eta_kets(j, k));
  rep.residual("spectral_resolution", (resolution - a).frobenius_norm() / anorm,
               1e-10 * ts);
  rep.residual("quasi_hermiticity", quasi_hermiticity_residual(metric, a),
               1e-10 * ts);
}

struct SwansonCliParams {
  SwansonParams p;
  std::size_t trunc = 64;
  std::size_t quad = 0;  // 0: pick 2N + 32

  void attach(CLI::App* cmd, bool with_model_flags) {
    cmd->add_option("--omega", p.omega, "oscillator frequency")->required();
    cmd->add_option("--alpha", p.alpha, "a^2 coupling");
    cmd->add_option("--beta", p.beta, "a^dag^2 coupling");
    cmd->add_option("--mass", p.mass, "mass m");
    cmd->add_option("--hbar", p.hbar, "reduced Planck constant");
    cmd->add_option("--z", p.z, "similarity-transformation branch parameter");
    if (with_model_flags) {
      cmd->add_option("--trunc", trunc, "basis truncation N");
      cmd->add_option("--quad", quad, "quadrature node count (default 2N + 32)");
    }
  }

  SwansonModel build() const {
    return build_model(p, trunc, quad == 0 ? 2 * trunc + 32 : quad);
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();

  CLI::App app{"quasi-Hermitian quantum systems toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  double tol_scale = 1.0;
  std::uint64_t seed = 0;
  if (const char* env = std::getenv("METRIQ_SEED")) seed = std::strtoull(env, nullptr, 10);
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol-scale", tol_scale, "multiply every tolerance");
  app.add_option("--seed", seed, "random seed");

  Report rep;
  int exit_code = 0;

  // solve-metric
  auto* sm = app.add_subcommand("solve-metric", "find a positive-definite metric");
  sm->fallthrough();  // global options may follow the subcommand
  std::string sm_input, sm_out;
  std::size_t sm_trials = 1000;
  sm->add_option("--input", sm_input, "operator matrix file")->required();
  sm->add_option("--out", sm_out, "write the metric here");
  sm->add_option("--trials", sm_trials, "random combination budget");
  sm->callback([&] {
    rep.input(sm_input);
    const ComplexMatrix a = load_matrix(sm_input).matrix;
    try {
      IntertwinerSolution sol = solve_metric(a, sm_trials, seed);
      rep.scalar("metric_found", true);
      rep.scalar("nullspace_dim", sol.nullspace_dim);
      rep.scalar("seed", seed);
      rep.residual("intertwining", sol.residual, 1e-9 * tol_scale);
      if (!sm_out.empty()) save_matrix(sm_out, sol.metric.eta(), MatrixKind::metric);
    } catch (const MetricNotFound& e) {
      rep.scalar("metric_found", false);
      rep.scalar("detail", e.what());
      rep.any_fail = true;
    }
  });

  // diag
  auto* dg = app.add_subcommand("diag", "bi-orthogonal diagonalization");
  dg->fallthrough();  // global options may follow the subcommand
  std::string dg_input, dg_metric, dg_out;
  dg->add_option("--input", dg_input, "operator matrix file")->required();
  dg->add_option("--metric", dg_metric, "metric matrix file (solved if absent)");
  dg->add_option("--out-kets", dg_out, "write the eigenket columns here");
  dg->callback([&] {
    rep.input(dg_input);
    const ComplexMatrix a = load_matrix(dg_input).matrix;
    MetricOperator metric = dg_metric.empty()
                                ? solve_metric(a, 1000, seed).metric
                                : metric_from_file(dg_metric, rep);
    QuasiHermitianSystem sys =
        QuasiHermitianSystem::make(a, metric, 1e-9 * tol_scale);
    BiorthogonalBasis basis = diagonalize(sys);
    rep.scalar("eigenvalues", basis.eigenvalues);
    biorth_residuals(a, metric, basis, tol_scale, rep);
    if (!dg_out.empty()) save_matrix(dg_out, basis.h_kets);
  });

  // verify
  auto* vf = app.add_subcommand("verify", "check the quasi-Hermitian identities");
  vf->fallthrough();  // global options may follow the subcommand
  std::string vf_input, vf_metric;
  vf->add_option("--input", vf_input, "operator matrix file")->required();
  vf->add_option("--metric", vf_metric, "metric matrix file")->required();
  vf->callback([&] {
    rep.input(vf_input);
    const ComplexMatrix a = load_matrix(vf_input).matrix;
    MetricOperator metric = metric_from_file(vf_metric, rep);
    rep.residual("quasi_hermiticity", quasi_hermiticity_residual(metric, a),
                 1e-10 * tol_scale);
    rep.residual("eta_adjoint_involution",
                 (eta_adjoint(metric, eta_adjoint(metric, a)) - a).frobenius_norm() /
                     std::max(a.frobenius_norm(), 1.0),
                 1e-10 * tol_scale);
    QuasiHermitianSystem sys =
        QuasiHermitianSystem::make(a, metric, 1e-9 * tol_scale);
    BiorthogonalBasis basis = diagonalize(sys);
    rep.scalar("eigenvalues", basis.eigenvalues);
    biorth_residuals(a, metric, basis, tol_scale, rep);
  });

  // transform
  auto* tf = app.add_subcommand(
      "transform", "representation change against a Hermitian reference");
  tf->fallthrough();  // global options may follow the subcommand
  std::string tf_input, tf_metric, tf_obs;
  tf->add_option("--input", tf_input, "operator matrix file")->required();
  tf->add_option("--metric", tf_metric, "metric matrix file")->required();
  tf->add_option("--observable", tf_obs, "Hermitian reference matrix file")
      ->required();
  tf->callback([&] {
    rep.input(tf_input);
    rep.input(tf_obs);
    const ComplexMatrix a = load_matrix(tf_input).matrix;
    const ComplexMatrix b = load_matrix(tf_obs).matrix;
    MetricOperator metric = metric_from_file(tf_metric, rep);
    QuasiHermitianSystem sys =
        QuasiHermitianSystem::make(a, metric, 1e-9 * tol_scale);
    BiorthogonalBasis basis = diagonalize(sys);
    HermitianBasis hb = HermitianBasis::from_operator(b);
    TransformTable table = build_table(hb, basis, metric);
    rep.scalar("b_eigenvalues", table.b_eigenvalues);
    rep.scalar("a_eigenvalues", table.a_eigenvalues);

    const ComplexMatrix rev_eta = basis.h_kets.adjoint() * metric.eta() * hb.kets;
    const ComplexMatrix rev_h = basis.h_kets.adjoint() * hb.kets;
    rep.residual("factor_conjugation_eta",
                 (rev_eta - table.factors_eta.adjoint()).frobenius_norm(),
                 1e-12 * tol_scale);
    rep.residual("factor_conjugation_h",
                 (rev_h - table.factors_h.adjoint()).frobenius_norm(),
                 1e-12 * tol_scale);
    rep.residual("contraction_roundtrip", roundtrip_residual(table),
                 1e-10 * tol_scale);
  });

  // swanson
  auto* sw = app.add_subcommand("swanson", "the non-Hermitian oscillator model");
  sw->fallthrough();  // global options may follow the subcommand
  sw->require_subcommand(1);

  auto* sp = sw->add_subcommand("spectrum", "closed-form energies");
  sp->fallthrough();  // global options may follow the subcommand
  SwansonCliParams sp_par;
  sp_par.attach(sp, false);
  std::size_t sp_count = 10;
  sp->add_option("-n,--levels", sp_count, "number of levels");
  sp->callback([&] {
    rep.scalar("Omega", swanson_Omega(sp_par.p));
    std::vector<double> energies(sp_count);
    ordered_json dump = ordered_json::array();
    for (std::size_t n = 0; n < sp_count; ++n) {
      energies[n] = swanson_energy(sp_par.p, n);
      dump.push_back({n, energies[n]});
    }
    rep.scalar("energies", energies);
    rep.dumps["spectrum"] = dump;
  });

  auto* wf = sw->add_subcommand("wavefunctions", "eigenfunction samples");
  wf->fallthrough();  // global options may follow the subcommand
  SwansonCliParams wf_par;
  wf_par.attach(wf, true);
  std::size_t wf_level = 0;
  double wf_xmin = -5.0, wf_xmax = 5.0;
  std::size_t wf_samples = 201;
  wf->add_option("-n,--level", wf_level, "eigenfunction index");
  wf->add_option("--xmin", wf_xmin, "left edge");
  wf->add_option("--xmax", wf_xmax, "right edge");
  wf->add_option("--samples", wf_samples, "sample count");
  wf->callback([&] {
    SwansonModel model = wf_par.build();
    ordered_json dump = ordered_json::array();
    for (std::size_t i = 0; i < wf_samples; ++i) {
      const double x =
          wf_xmin + (wf_xmax - wf_xmin) * static_cast<double>(i) /
                        static_cast<double>(wf_samples - 1);
      dump.push_back({x, eigenfunction_U(model, wf_level, x)});
    }
    rep.scalar("level", wf_level);
    rep.scalar("energy", energy(model, wf_level));
    rep.dumps["wavefunction"] = dump;
  });

  auto* sv = sw->add_subcommand("verify", "model identity checks");
  sv->fallthrough();  // global options may follow the subcommand
  SwansonCliParams sv_par;
  sv_par.attach(sv, true);
  sv->callback([&] {
    SwansonModel model = sv_par.build();
    rep.scalar("Omega", model.Omega);
    rep.scalar("M", model.M);
    rep.scalar("L", model.Lcap);
    rep.scalar("gamma", model.gamma);
    rep.scalar("hermitian_limit", model.hermitian_limit);
    for (const CheckResult& c : verify_model(model).checks)
      rep.residual(c.name, c.residual, c.tolerance * tol_scale);
  });

  auto* se = sw->add_subcommand("expand", "spectral expansion of a Gaussian");
  se->fallthrough();  // global options may follow the subcommand
  SwansonCliParams se_par;
  se_par.trunc = 40;
  se_par.attach(se, true);
  double se_width = 1.0;
  se->add_option("--width", se_width, "Gaussian width");
  se->callback([&] {
    SwansonModel model = se_par.build();
    ComplexVector coeffs(model.N);
    for (std::size_t n = 0; n < model.N; ++n) {
      double s = 0.0;
      for (std::size_t k = 0; k < model.grid.nodes.size(); ++k) {
        const double t = model.grid.nodes[k];
        const double x = model.Lcap * t;
        s += model.Lcap * model.grid.scaled_weights[k] *
             hermite_function(n, x, model.Lcap) *
             std::exp(-x * x / (2.0 * se_width * se_width));
      }
      coeffs[n] = s;
    }
    std::vector<double> re(model.N);
    for (std::size_t n = 0; n < model.N; ++n) re[n] = coeffs[n].real();
    rep.scalar("coefficients_re", re);

    const std::size_t interior = model.N - 2;
    auto interior_diff = [&](const ComplexVector& x, const ComplexVector& y) {
      double s = 0.0;
      for (std::size_t i = 0; i < interior; ++i) s += std::norm(x[i] - y[i]);
      return std::sqrt(s) / norm2(coeffs);
    };
    rep.residual("spectral_apply_H",
                 interior_diff(spectral_apply(model, coeffs, SwansonSide::H),
                               model.Hmat * coeffs),
                 1e-6 * tol_scale);
    rep.residual("spectral_apply_Hdag",
                 interior_diff(spectral_apply(model, coeffs, SwansonSide::H_dagger),
                               model.Hdagmat * coeffs),
                 1e-6 * tol_scale);
  });

  std::vector<const char*> argv;
  argv.push_back("metriq");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }

  if (rep.any_fail) exit_code = 1;

  std::ostringstream body;
  emit(rep, join_args(args), format, body);
  std::string text = body.str();
  if (format == "json") {
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    char ts[64];
    std::snprintf(ts, sizeof(ts), "\"timing_ms\": %.3f", ms);
    const std::string placeholder = "\"timing_ms\": 0.0";
    const auto pos = text.rfind(placeholder);
    if (pos != std::string::npos) text.replace(pos, placeholder.size(), ts);
  }
  out << text;
  return exit_code;
}

}  // namespace metriq::cli
