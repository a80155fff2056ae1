#include "cli.hpp"

#include "report.hpp"

#include "cxwidths/errors.hpp"
#include "cxwidths/harmonic_basis.hpp"
#include "cxwidths/harmonic_dims.hpp"
#include "cxwidths/levy.hpp"
#include "cxwidths/multipliers.hpp"
#include "cxwidths/sphere_mc.hpp"
#include "cxwidths/widths.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace cxw::cli {

namespace {

using report::Json;

struct Opts {
  int d = 2;
  int m = 0;
  int n = 0;
  int k = 0;
  int lmax = 10;
  int M1 = 0;
  int M2 = 1;
  int N = 3;
  std::string grading = "max";
  std::string family = "id";
  std::string p = "2";
  std::string q = "2";
  double gamma = 1.0;
  double xi = 0.0;
  double r = 1.0;
  double eps = 0.5;
  std::size_t nmax = 1000000;
  std::size_t samples = 1000;
  std::size_t sphere_samples = 1000;
  std::size_t omega_samples = 10000;
  std::size_t chunk = sphere_mc::kDefaultChunk;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string format = "json";
  std::string out;
  std::string theorem;
  std::string model = "power";
  std::size_t lo = 1000;
  std::size_t hi = 0;
  std::string input = "-";
  int j = 0;
};

double parse_exponent(const std::string& s, const char* name) {
  if (s == "inf" || s == "infinity" || s == "Inf") return INFINITY;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size() && v >= 1.0) return v;
  } catch (const std::exception&) {
  }
  throw ArgumentError(fmt::format("--{} must be a number >= 1 or 'inf', got '{}'", name, s));
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json fit_json(const widths::FitResult& f) {
  Json j;
  j["model"] = widths::to_string(f.model);
  j["slope"] = f.slope;
  j["intercept"] = f.intercept;
  j["residual"] = f.residual_rms;
  if (f.model == widths::Model::power_log) j["log_coef"] = f.log_coef;
  if (f.model == widths::Model::stretched) j["exponent"] = f.exponent;
  j["lo"] = f.lo;
  j["hi"] = f.hi;
  j["points"] = f.points;
  return j;
}

widths::WidthTable read_width_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("widths fit: empty input");
  if (line.rfind("n,d_n", 0) != 0) throw DataError("widths fit: expected header 'n,d_n'");
  std::vector<double> values;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw DataError(fmt::format("widths fit: line {} has no comma", lineno));
    try {
      const auto n = std::stoull(line.substr(0, comma));
      if (n != values.size()) throw DataError(fmt::format("widths fit: line {} out of order", lineno));
      values.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::logic_error&) {
      throw DataError(fmt::format("widths fit: cannot parse line {}", lineno));
    }
  }
  return widths::WidthTable::from_values(std::move(values));
}

struct Outcome {
  std::string text;
  bool pass = true;
};

Outcome cmd_dims(const Opts& o) {
  const Grading g = parse_grading(o.grading);
  if (o.lmax < 0) throw ArgumentError("--lmax must be >= 0");
  const auto ls = harmonic_dims::layers(o.d, o.lmax, g);
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& s : ls) {
      Json r;
      r["l"] = s.l;
      r["a_l"] = s.a_l;
      r["d_l"] = s.d_l.str();
      r["cum_dim"] = s.cum_dim.str();
      rows.push_back(std::move(r));
    }
    Json j;
    j["d"] = o.d;
    j["grading"] = o.grading;
    j["layers"] = std::move(rows);
    return {report::dump_json(j)};
  }
  report::Csv csv({"l", "a_l", "d_l", "cum_dim"});
  for (const auto& s : ls) csv.row({std::to_string(s.l), std::to_string(s.a_l), s.d_l.str(), s.cum_dim.str()});
  return {csv.str()};
}

Outcome cmd_basis(const Opts& o) {
  const auto h = harmonic_basis::build_harmonic_basis(o.d, {o.m, o.n});
  return {report::dump_json(report::basis_to_json(h))};
}

Outcome cmd_check_addition(const Opts& o) {
  const auto rep = harmonic_basis::verify_addition(o.d, {o.m, o.n}, o.samples, o.seed, o.chunk);
  Json j;
  j["check"] = "addition";
  j["d"] = o.d;
  j["m"] = o.m;
  j["n"] = o.n;
  j["samples"] = o.samples;
  j["seed"] = o.seed;
  j["max_deviation"] = rep.max_deviation;
  j["max_diag_deviation"] = rep.max_diag_deviation;
  j["tol"] = o.tol;
  const bool pass = rep.max_deviation < o.tol && rep.max_diag_deviation < o.tol;
  j["pass"] = pass;
  return {report::dump_json(j), pass};
}

Outcome cmd_check_gegenbauer(const Opts& o) {
  const double dev = harmonic_basis::verify_gegenbauer(o.d, o.k, o.samples, o.seed, o.chunk);
  Json j;
  j["check"] = "gegenbauer";
  j["d"] = o.d;
  j["k"] = o.k;
  j["samples"] = o.samples;
  j["seed"] = o.seed;
  j["max_deviation"] = dev;
  j["tol"] = o.tol;
  j["pass"] = dev < o.tol;
  return {report::dump_json(j), dev < o.tol};
}

Outcome cmd_check_nikolskii(const Opts& o) {
  const double p = parse_exponent(o.p, "p");
  const auto rep = levy::nikolskii_check(o.d, o.M1, o.M2, p, o.samples, o.seed, o.omega_samples, o.chunk);
  Json j;
  j["check"] = "nikolskii";
  j["d"] = o.d;
  j["M1"] = o.M1;
  j["M2"] = o.M2;
  j["p"] = p;
  j["s"] = rep.s;
  j["trials"] = rep.trials;
  j["omega_samples"] = o.omega_samples;
  j["seed"] = o.seed;
  j["sup_violations"] = rep.sup_violations;
  j["p_violations"] = rep.p_violations;
  j["worst_sup_ratio"] = rep.worst_sup_ratio;
  j["worst_p_ratio"] = rep.worst_p_ratio;
  const bool pass = rep.sup_violations == 0 && rep.p_violations == 0;
  j["pass"] = pass;
  return {report::dump_json(j), pass};
}

Outcome cmd_check_dim_bounds(const Opts& o) {
  const auto rep = harmonic_dims::check_dim_bounds(o.d, 1, o.lmax);
  Json j;
  j["check"] = "dim-bounds";
  j["d"] = o.d;
  j["lmin"] = rep.lmin;
  j["lmax"] = rep.lmax;
  j["lead"] = rep.lead;
  j["final_ratio"] = rep.rows.back().ratio;
  j["final_ratio_error"] = rep.final_ratio_error;
  j["monotone_trend"] = rep.monotone_trend;
  j["C1"] = rep.C1;
  j["C2"] = rep.C2;
  j["C3"] = rep.C3;
  j["cum_lower_violations"] = rep.cum_lower_violations;
  Json bd;
  bd["skipped"] = rep.bidegree_bound_skipped;
  bd["note"] = rep.skip_reason;
  bd["pairs_checked"] = rep.bidegree_pairs_checked;
  bd["pairs_skipped"] = rep.bidegree_pairs_skipped;
  bd["lower_violations"] = rep.bidegree_lower_violations;
  bd["upper_C"] = rep.bidegree_upper_C;
  j["bidegree_bound"] = std::move(bd);
  const bool pass = rep.cum_lower_violations == 0 && rep.bidegree_lower_violations == 0;
  j["pass"] = pass;
  return {report::dump_json(j), pass};
}

Outcome cmd_levy(const Opts& o) {
  const double p = parse_exponent(o.p, "p");
  const auto fam = multipliers::parse_family(o.family, o.d, parse_grading(o.grading));
  const auto prob = levy::make_levy_problem(o.d, o.M1, o.M2, fam, p);
  const auto est = levy::levy_mean_mc(prob, o.sphere_samples, o.omega_samples, o.seed, o.chunk);
  Json j;
  j["estimate"] = est.value;
  j["stderr"] = est.std_error;
  if (o.M1 >= 0) {
    const auto b = levy::levy_bounds(prob);
    j["lower"] = b.lower;
    j["upper"] = b.upper ? Json(*b.upper) : Json("unknown-constant");
    j["case"] = levy::to_string(b.which);
    j["empirical_C"] = b.structural_factor > 0.0 ? Json(est.value / b.structural_factor) : Json(nullptr);
    j["structural_factor"] = b.structural_factor;
    j["permuted"] = b.permuted;
    j["monotone"] = b.monotone;
    j["inconsistent"] = b.inconsistent;
  } else {
    j["lower"] = nullptr;
    j["upper"] = nullptr;
    j["case"] = nullptr;
    j["empirical_C"] = nullptr;
  }
  j["d"] = o.d;
  j["M1"] = o.M1;
  j["M2"] = o.M2;
  j["family"] = fam.spec();
  j["grading"] = to_string(fam.grading);
  j["p"] = p;
  j["s"] = prob.s;
  j["parseval"] = levy::levy_mean_parseval(prob);
  j["sphere_samples"] = o.sphere_samples;
  j["omega_samples"] = o.omega_samples;
  j["seed"] = o.seed;
  return {report::dump_json(j)};
}

Outcome cmd_seq(const Opts& o) {
  const auto fam = multipliers::parse_family(o.family, o.d, parse_grading(o.grading));
  const auto plan = multipliers::plan_beta(fam, o.d, o.N, o.eps);
  Json j;
  j["family"] = fam.spec();
  j["grading"] = to_string(fam.grading);
  j["d"] = o.d;
  j["N"] = plan.N;
  j["eps"] = plan.eps;
  j["Nk"] = plan.Nk;
  j["M"] = plan.M;
  Json mk = Json::array();
  for (const auto& v : plan.mk) mk.push_back(v.str());
  j["mk"] = std::move(mk);
  j["beta"] = plan.beta.str();
  j["theta12"] = plan.theta12.str();
  Json th = Json::array();
  for (const auto& v : plan.thetas) th.push_back(v.str());
  j["thetas"] = std::move(th);
  Json kc = Json::array();
  for (const auto& [p, v] : plan.kclass_ratio) {
    Json e;
    e["p"] = p;
    e["ratio"] = v;
    kc.push_back(std::move(e));
  }
  j["kclass_ratio"] = std::move(kc);
  j["C_eps"] = plan.C_eps;
  j["plateaus"] = plan.plateaus;
  return {report::dump_json(j)};
}

Outcome cmd_widths_spectrum(const Opts& o) {
  const auto fam = multipliers::parse_family(o.family, o.d, parse_grading(o.grading));
  const auto t = widths::l2_width_table(fam, o.d, o.nmax);
  if (!t.warning.empty()) std::cerr << "warning: " << t.warning << "\n";
  if (o.format == "json") {
    Json j;
    j["family"] = fam.spec();
    j["grading"] = to_string(fam.grading);
    j["d"] = o.d;
    j["non_compact"] = t.non_compact;
    j["zero_tail"] = t.zero_tail;
    j["d_n"] = t.values;
    return {report::dump_json(j)};
  }
  std::string text = "n,d_n\n";
  text.reserve(t.values.size() * 28);
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    text += std::to_string(i);
    text += ',';
    text += report::format_double(t.values[i]);
    text += '\n';
  }
  return {text};
}

Outcome cmd_widths_fit(const Opts& o) {
  widths::WidthTable t;
  if (o.input == "-") {
    t = read_width_csv(std::cin);
  } else {
    std::ifstream f(o.input);
    if (!f) throw DataError("widths fit: cannot open '" + o.input + "'");
    t = read_width_csv(f);
  }
  const auto model = widths::parse_model(o.model);
  const widths::FitRange range{o.lo, o.hi};
  widths::FitResult fit;
  if (model == widths::Model::stretched) {
    fit = widths::fit_stretched(t, o.d, o.r, range);
  } else {
    fit = widths::fit_power(t, range, model == widths::Model::power_log);
  }
  return {report::dump_json(fit_json(fit))};
}

Outcome cmd_widths_bounds(const Opts& o) {
  widths::BoundSpec s;
  s.theorem = o.theorem;
  s.d = o.d;
  s.gamma = o.gamma;
  s.xi = o.xi;
  s.r = o.r;
  s.p = parse_exponent(o.p, "p");
  s.q = parse_exponent(o.q, "q");
  const auto v = widths::bound_eval(s, static_cast<double>(o.m));
  Json j;
  j["theorem"] = s.theorem;
  j["d"] = s.d;
  j["gamma"] = s.gamma;
  j["xi"] = s.xi;
  j["r"] = s.r;
  j["p"] = s.p;
  j["q"] = s.q;
  j["m"] = o.m;
  j["lower"] = optional_number(v.lower);
  j["upper"] = optional_number(v.upper);
  j["constant"] = optional_number(v.constant);
  j["note"] = v.note;
  return {report::dump_json(j)};
}

Outcome cmd_widths_compare(const Opts& o) {
  const auto fam = multipliers::parse_family(o.family, o.d, Grading::max);
  const auto rep = widths::grading_compare(fam, o.d, o.nmax, {o.lo, o.hi});
  Json j;
  j["family"] = fam.spec();
  j["d"] = o.d;
  j["nmax"] = o.nmax;
  j["model"] = rep.model;
  j["non_compact"] = rep.non_compact;
  if (!rep.non_compact) {
    j["slope_star"] = rep.slope_star;
    j["slope_max"] = rep.slope_max;
    j["ratio"] = rep.ratio;
    j["expected_ratio"] = rep.expected_ratio;
    j["agree"] = rep.agree;
    j["fit_star"] = fit_json(rep.fit_star);
    j["fit_max"] = fit_json(rep.fit_max);
  }
  j["note"] = rep.note;
  return {report::dump_json(j)};
}

Outcome cmd_project(const Opts& o) {
  const auto h = harmonic_basis::build_harmonic_basis(o.d, {o.m, o.n});
  if (o.j < 0 || static_cast<std::size_t>(o.j) >= h.size()) throw ArgumentError("--j out of range");
  const auto w = sphere_mc::sample_omega(o.d, 1, o.seed, o.chunk, 7).front();
  const auto idx = static_cast<std::size_t>(o.j);
  const auto est = harmonic_basis::project_mc(
      [&](const sphere_mc::SpherePoint& z) { return harmonic_basis::eval_basis_function(h, idx, z); }, o.d,
      {o.m, o.n}, w, o.samples, o.seed, o.chunk);
  const auto exact = harmonic_basis::eval_basis_function(h, idx, w);
  Json j;
  j["d"] = o.d;
  j["m"] = o.m;
  j["n"] = o.n;
  j["j"] = o.j;
  j["samples"] = o.samples;
  j["seed"] = o.seed;
  j["estimate_re"] = est.value.real();
  j["estimate_im"] = est.value.imag();
  j["stderr"] = est.std_error;
  j["exact_re"] = exact.real();
  j["exact_im"] = exact.imag();
  j["within_3_stderr"] = std::abs(est.value - exact) <= 3.0 * est.std_error;
  return {report::dump_json(j)};
}

void add_common(CLI::App* c, Opts& o) {
  c->add_option("--out", o.out, "Write output to this path instead of stdout");
}

void add_random(CLI::App* c, Opts& o) {
  c->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  c->add_option("--chunk", o.chunk, "Samples per independently seeded chunk")->capture_default_str()->check(CLI::PositiveNumber);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Opts o;
  CLI::App app{"Laboratory for n-widths of multiplier operators on complex spheres"};
  app.name("cxwidths");
  app.require_subcommand(1);
  app.fallthrough(false);

  const auto grading_check = CLI::IsMember({"star", "max"});
  const auto format_check = CLI::IsMember({"csv", "json"});

  auto* dims = app.add_subcommand("dims", "Layer dimensions a_l, d_l and dim T_l of the bidegree grading");
  dims->add_option("--d", o.d, "Complex dimension")->required()->check(CLI::Range(2, 64));
  dims->add_option("--lmax", o.lmax, "Largest level")->required();
  dims->add_option("--grading", o.grading)->check(grading_check)->capture_default_str();
  dims->add_option("--format", o.format, "csv or json")->check(format_check)->default_val("csv");
  add_common(dims, o);

  auto* basis = app.add_subcommand("basis", "Exact orthogonal basis of H_{m,n} (complex spherical harmonics) as JSON");
  basis->add_option("--d", o.d)->required();
  basis->add_option("--m", o.m)->required();
  basis->add_option("--n", o.n)->required();
  add_common(basis, o);

  auto* check = app.add_subcommand("check", "Numerical identity checks; exit 1 when a check fails");
  check->require_subcommand(1);
  auto* c_add = check->add_subcommand("addition", "Addition formula: sum conj(Y_j(w)) Y_j(z) against (d_{m,n}/omega_d) R_{m,n}(<z,w>)");
  c_add->add_option("--d", o.d)->required();
  c_add->add_option("--m", o.m)->required();
  c_add->add_option("--n", o.n)->required();
  c_add->add_option("--samples", o.samples, "Random (z,w) pairs")->capture_default_str();
  c_add->add_option("--tol", o.tol)->capture_default_str()->check(CLI::PositiveNumber);
  add_random(c_add, o);
  add_common(c_add, o);
  auto* c_geg = check->add_subcommand("gegenbauer", "Zonal harmonics of total degree k summed against the real-sphere Gegenbauer kernel");
  c_geg->add_option("--d", o.d)->required();
  c_geg->add_option("--k", o.k, "Total degree m+n")->required();
  c_geg->add_option("--samples", o.samples)->capture_default_str();
  c_geg->add_option("--tol", o.tol)->capture_default_str()->check(CLI::PositiveNumber);
  add_random(c_geg, o);
  add_common(c_geg, o);
  auto* c_nik = check->add_subcommand("nikolskii", "Nikolskii inequalities ||t||_inf <= (s/omega)^{1/p}||t||_p and ||t||_p <= (s/omega)^{1/2-1/p}||t||_2");
  c_nik->add_option("--d", o.d)->required();
  c_nik->add_option("--M1", o.M1, "Window start level (exclusive); -1 includes constants")->required();
  c_nik->add_option("--M2", o.M2, "Window end level (inclusive)")->required();
  c_nik->add_option("--p", o.p, "Exponent >= 1 or inf")->capture_default_str();
  c_nik->add_option("--samples", o.samples, "Random polynomials")->capture_default_str();
  c_nik->add_option("--omega-samples", o.omega_samples, "Sphere points for the L^p norms")->default_val(20000);
  add_random(c_nik, o);
  add_common(c_nik, o);
  auto* c_dim = check->add_subcommand("dim-bounds", "Growth of dim H_l and dim T_l and the pointwise bounds for d_{m,n}");
  c_dim->add_option("--d", o.d)->required();
  c_dim->add_option("--lmax", o.lmax)->required();
  add_common(c_dim, o);

  auto* levy_cmd = app.add_subcommand("levy", "Levy mean of ||Lambda_s J(x)||_p on the window M1 < l <= M2, with the two-sided bounds");
  levy_cmd->add_option("--d", o.d)->required();
  levy_cmd->add_option("--M1", o.M1)->required();
  levy_cmd->add_option("--M2", o.M2)->required();
  levy_cmd->add_option("--family", o.family, "Multiplier spec, e.g. exp:gamma=1,r=1")->capture_default_str();
  levy_cmd->add_option("--grading", o.grading)->check(grading_check)->capture_default_str();
  levy_cmd->add_option("--p", o.p, "Exponent >= 1 or inf")->capture_default_str();
  levy_cmd->add_option("--sphere-samples", o.sphere_samples, "Outer samples on S^{s-1}")->capture_default_str();
  levy_cmd->add_option("--omega-samples", o.omega_samples, "Inner cloud size; 0 with p=2 uses Parseval")->capture_default_str();
  add_random(levy_cmd, o);
  add_common(levy_cmd, o);

  auto* seq = app.add_subcommand("seq", "Level sequence N_k, M, m_k, beta and the K_{eps,p} ratio");
  seq->add_option("--family", o.family)->required();
  seq->add_option("--grading", o.grading)->check(grading_check)->capture_default_str();
  seq->add_option("--d", o.d)->capture_default_str();
  seq->add_option("--N", o.N)->capture_default_str();
  seq->add_option("--eps", o.eps)->capture_default_str()->check(CLI::PositiveNumber);
  add_common(seq, o);

  auto* widths_cmd = app.add_subcommand("widths", "Exact L2 widths, rate fits and bound formulas");
  widths_cmd->require_subcommand(1);
  auto* w_spec = widths_cmd->add_subcommand("spectrum", "Kolmogorov widths d_n(L2 -> L2) from the sorted multiplier spectrum");
  w_spec->add_option("--family", o.family)->required();
  w_spec->add_option("--grading", o.grading)->check(grading_check)->capture_default_str();
  w_spec->add_option("--d", o.d)->capture_default_str();
  w_spec->add_option("--nmax", o.nmax)->capture_default_str();
  w_spec->add_option("--format", o.format, "csv or json")->check(format_check)->default_val("csv");
  add_common(w_spec, o);
  auto* w_fit = widths_cmd->add_subcommand("fit", "Fit a rate model to a width CSV (n,d_n)");
  w_fit->add_option("input", o.input, "CSV path, '-' for stdin")->capture_default_str();
  w_fit->add_option("--model", o.model, "power, power_log or stretched")
      ->check(CLI::IsMember({"power", "power_log", "stretched"}))
      ->capture_default_str();
  w_fit->add_option("--d", o.d)->capture_default_str();
  w_fit->add_option("--r", o.r)->capture_default_str();
  w_fit->add_option("--lo", o.lo)->capture_default_str();
  w_fit->add_option("--hi", o.hi, "0 means last entry")->capture_default_str();
  add_common(w_fit, o);
  auto* w_bounds = widths_cmd->add_subcommand("bounds", "Evaluate a width bound formula (structural factor, constants omitted)");
  w_bounds->add_option("--theorem", o.theorem)->required()->check(CLI::IsMember(widths::bound_ids()));
  w_bounds->add_option("--d", o.d)->capture_default_str();
  w_bounds->add_option("--gamma", o.gamma)->capture_default_str();
  w_bounds->add_option("--xi", o.xi)->capture_default_str();
  w_bounds->add_option("--r", o.r)->capture_default_str();
  w_bounds->add_option("--p", o.p)->capture_default_str();
  w_bounds->add_option("--q", o.q)->capture_default_str();
  w_bounds->add_option("--m", o.m, "Width index")->required();
  add_common(w_bounds, o);
  auto* w_cmp = widths_cmd->add_subcommand("compare-gradings", "Fitted rates under star and max gradings for the same lambda");
  w_cmp->add_option("--family", o.family)->required();
  w_cmp->add_option("--d", o.d)->capture_default_str();
  w_cmp->add_option("--nmax", o.nmax)->capture_default_str();
  w_cmp->add_option("--lo", o.lo)->capture_default_str();
  add_common(w_cmp, o);

  auto* project = app.add_subcommand("project", "Monte Carlo projection of a basis function onto H_{m,n} via the zonal kernel");
  project->add_option("--d", o.d)->required();
  project->add_option("--m", o.m)->required();
  project->add_option("--n", o.n)->required();
  project->add_option("--j", o.j, "Basis index of the projected function")->capture_default_str();
  project->add_option("--samples", o.samples)->capture_default_str();
  add_random(project, o);
  add_common(project, o);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Outcome res;
    if (*dims) res = cmd_dims(o);
    else if (*basis) res = cmd_basis(o);
    else if (*c_add) res = cmd_check_addition(o);
    else if (*c_geg) res = cmd_check_gegenbauer(o);
    else if (*c_nik) res = cmd_check_nikolskii(o);
    else if (*c_dim) res = cmd_check_dim_bounds(o);
    else if (*levy_cmd) res = cmd_levy(o);
    else if (*seq) res = cmd_seq(o);
    else if (*w_spec) res = cmd_widths_spectrum(o);
    else if (*w_fit) res = cmd_widths_fit(o);
    else if (*w_bounds) res = cmd_widths_bounds(o);
    else if (*w_cmp) res = cmd_widths_compare(o);
    else if (*project) res = cmd_project(o);
    else {
      err << app.help();
      return 2;
    }
    if (!report::write_output(res.text, o.out.empty() ? std::nullopt : std::optional<std::string>(o.out), out)) {
      err << "error: cannot write output to '" << o.out << "'\n";
      return 1;
    }
    return res.pass ? 0 : 1;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace cxw::cli
