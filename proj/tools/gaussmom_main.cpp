// gaussmom: exact-and-numeric Gaussian moment toolkit.
//
// Every subcommand emits one machine-readable record (or an array, for
// sweeps) as canonical JSON or CSV. Exact values always travel as decimal
// num/den strings next to their float rendering.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gaussmom/fractional.hpp"
#include "gaussmom/gamma_coeff.hpp"
#include "gaussmom/json_io.hpp"
#include "gaussmom/moments.hpp"
#include "gaussmom/power_series.hpp"
#include "gaussmom/special_functions.hpp"
#include "gaussmom/tsallis.hpp"

namespace gm = gaussmom;
using gm::Json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct OutputOptions {
  std::string format = "json";
  std::string out_path;
};

// CSV/table float rendering honors GAUSSMOM_FLOAT_DIGITS (1..17);
// JSON floats always use the shortest round-trip decimal.
int float_digits() {
  if (const char* env = std::getenv("GAUSSMOM_FLOAT_DIGITS")) {
    const int digits = std::atoi(env);
    if (digits >= 1 && digits <= 17) return digits;
  }
  return 17;
}

std::string format_float(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string csv_cell(const Json& v, int digits) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_float(v.get<double>(), digits);
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "";
  return v.dump();
}

std::string flat_key(const std::string& pointer) {
  std::string key = pointer.substr(1);  // drop leading '/'
  for (auto& ch : key) {
    if (ch == '/') ch = '.';
  }
  return key;
}

std::string to_csv(const Json& payload) {
  const int digits = float_digits();
  std::vector<const Json*> rows;
  if (payload.is_array()) {
    for (const auto& row : payload) rows.push_back(&row);
  } else {
    rows.push_back(&payload);
  }
  std::string out;
  bool wrote_header = false;
  for (const Json* row : rows) {
    const Json flat = row->flatten();
    if (!wrote_header) {
      bool first = true;
      for (const auto& item : flat.items()) {
        if (!first) out += ',';
        out += flat_key(item.key());
        first = false;
      }
      out += '\n';
      wrote_header = true;
    }
    bool first = true;
    for (const auto& item : flat.items()) {
      if (!first) out += ',';
      out += csv_cell(item.value(), digits);
      first = false;
    }
    out += '\n';
  }
  return out;
}

void emit(const Json& payload, const OutputOptions& options) {
  const std::string text =
      options.format == "csv" ? to_csv(payload) : gm::canonical_dump(payload) + "\n";
  if (options.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(options.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + options.out_path + "'");
  out << text;
}

Json half_int_record(const gm::HalfIntValue& v) {
  return Json{{"exact", gm::to_json(v)}, {"float", v.to_double()}};
}

Json moment_record(const gm::MomentResult& result, Json inputs, bool odd) {
  Json record = gm::to_json(result);
  record["command"] = "moment";
  record["inputs"] = std::move(inputs);
  record["sqrt_pi_power"] = odd ? 0 : 1;
  return record;
}

Json gamma_coef_value(unsigned n, gm::GammaCoeffMethod method) {
  const auto coeff = gm::make_gamma_coefficient(n, method);
  return Json{{"exact", gm::to_json(coeff.value)}, {"float", coeff.value.to_double()}};
}

gm::MomentResult run_moment(unsigned n, double alpha, const std::string& method, double tol) {
  if (method == "closed") return gm::moment_closed({n, alpha});
  if (method == "gamma-form") return gm::moment_gamma_form({n, alpha});
  return gm::moment_quadrature({n, alpha}, tol);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numeric Gaussian moment integrals, half-integer gamma values, "
               "Tsallis number densities and fractional-derivative closed forms"};
  app.set_version_flag("--version", std::string("gaussmom ") + kVersion);
  app.require_subcommand(1);

  OutputOptions output;
  app.add_option("--format,-f", output.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out,-o", output.out_path, "write the record to a file instead of stdout");

  // ---- moment ------------------------------------------------------------
  auto* moment = app.add_subcommand("moment", "Gaussian moment of x^(2n) (or x^(2n+1))");
  unsigned moment_n = 0;
  double moment_alpha = 1.0;
  std::string moment_method = "closed";
  double moment_tol = 1e-10;
  bool moment_odd = false;
  moment->add_option("--n", moment_n, "moment half-order; the integrand power is 2n")
      ->required();
  moment->add_option("--alpha", moment_alpha, "exponent scale, must be > 0")->required();
  moment->add_option("--method", moment_method, "evaluation route")
      ->check(CLI::IsMember({"closed", "gamma-form", "quadrature"}))
      ->capture_default_str();
  moment->add_option("--tol", moment_tol, "relative tolerance (quadrature)")
      ->capture_default_str();
  moment->add_flag("--odd", moment_odd, "integrate x^(2n+1) instead; zero by symmetry");
  moment->callback([&] {
    Json inputs{{"n", moment_n},
                {"alpha", moment_alpha},
                {"method", moment_method},
                {"odd", moment_odd}};
    if (moment_method == "quadrature") inputs["tol"] = moment_tol;
    const auto result = moment_odd ? gm::moment_odd(moment_n, moment_alpha)
                                   : run_moment(moment_n, moment_alpha, moment_method, moment_tol);
    emit(moment_record(result, std::move(inputs), moment_odd), output);
  });

  // ---- gamma-coef ----------------------------------------------------------
  auto* gamma_coef = app.add_subcommand("gamma-coef", "the coefficient gamma_{2n}");
  unsigned gc_n = 0;
  std::string gc_method = "product";
  gamma_coef->add_option("--n", gc_n, "coefficient index (of gamma_{2n})")->required();
  gamma_coef
      ->add_option("--method", gc_method,
                   "one of product|recurrence|double-factorial|jet, or 'all' to "
                   "compute every path and compare")
      ->check(CLI::IsMember({"product", "recurrence", "double-factorial", "jet", "all"}))
      ->capture_default_str();
  gamma_coef->callback([&] {
    Json record{{"command", "gamma-coef"}, {"inputs", Json{{"n", gc_n}, {"method", gc_method}}}};
    if (gc_method == "all") {
      Json values;
      bool all_equal = true;
      const auto reference = gm::gamma_coeff_product(gc_n);
      for (auto method : {gm::GammaCoeffMethod::product, gm::GammaCoeffMethod::recurrence,
                          gm::GammaCoeffMethod::double_factorial, gm::GammaCoeffMethod::jet}) {
        values[gm::to_string(method)] = gamma_coef_value(gc_n, method);
        all_equal = all_equal && gm::make_gamma_coefficient(gc_n, method).value == reference;
      }
      record["values"] = std::move(values);
      record["all_equal"] = all_equal;
    } else {
      record.update(gamma_coef_value(gc_n, gm::gamma_coeff_method_from_string(gc_method)));
      record["method"] = gc_method;
    }
    emit(record, output);
  });

  // ---- special -------------------------------------------------------------
  auto* special = app.add_subcommand("special", "gamma and factorial functions");
  special->require_subcommand(1);

  auto* gamma_half = special->add_subcommand("gamma-half", "Gamma(1/2 + n) or Gamma(1/2 - n)");
  unsigned gh_n = 0;
  bool gh_minus = false;
  gamma_half->add_option("--n", gh_n, "half-integer offset")->required();
  gamma_half->add_flag("--minus", gh_minus, "evaluate at 1/2 - n instead of 1/2 + n");
  gamma_half->callback([&] {
    const auto value = gh_minus ? gm::gamma_half_minus(gh_n) : gm::gamma_half_plus(gh_n);
    Json record = half_int_record(value);
    record["command"] = "special-gamma-half";
    record["inputs"] = Json{{"n", gh_n}, {"sign", gh_minus ? "minus" : "plus"}};
    emit(record, output);
  });

  auto* factorial_cmd = special->add_subcommand("factorial", "(n + 1/2)! exactly, or m! numerically");
  unsigned fact_half_n = 0;
  double fact_m = 0.0;
  double fact_tol = 1e-10;
  auto* fact_half_opt =
      factorial_cmd->add_option("--half", fact_half_n, "evaluate (n + 1/2)! exactly");
  auto* fact_m_opt =
      factorial_cmd->add_option("--m", fact_m, "evaluate m! by the Euler integral, m > -1");
  factorial_cmd->add_option("--tol", fact_tol, "relative tolerance (numeric path)")
      ->capture_default_str();
  fact_half_opt->excludes(fact_m_opt);
  factorial_cmd->callback([&] {
    Json record;
    if (fact_half_opt->count() > 0) {
      record = half_int_record(gm::half_factorial(fact_half_n));
      record["inputs"] = Json{{"half_n", fact_half_n}};
    } else if (fact_m_opt->count() > 0) {
      const auto r = gm::factorial_numeric(fact_m, fact_tol);
      record["float"] = r.value;
      record["error_estimate"] = r.error_estimate;
      record["inputs"] = Json{{"m", fact_m}, {"tol", fact_tol}};
    } else {
      throw CLI::ValidationError("special factorial", "pass either --half or --m");
    }
    record["command"] = "special-factorial";
    emit(record, output);
  });

  auto* gamma_numeric_cmd =
      special->add_subcommand("gamma", "Gamma(t) by the Euler integral, t > 0");
  double gn_t = 1.0;
  double gn_tol = 1e-10;
  gamma_numeric_cmd->add_option("--t", gn_t, "argument")->required();
  gamma_numeric_cmd->add_option("--tol", gn_tol, "relative tolerance")->capture_default_str();
  gamma_numeric_cmd->callback([&] {
    const auto r = gm::gamma_numeric(gn_t, gn_tol);
    emit(Json{{"command", "special-gamma"},
              {"inputs", Json{{"t", gn_t}, {"tol", gn_tol}}},
              {"float", r.value},
              {"error_estimate", r.error_estimate}},
         output);
  });

  auto* gamma_rec = special->add_subcommand(
      "gamma-recurrence", "both sides of Gamma(p+1) = p Gamma(p) at half-integer p");
  std::string gr_p = "1/2";
  gamma_rec->add_option("--p", gr_p, "half-integer argument, e.g. 9/2")->required();
  gamma_rec->callback([&] {
    const auto p = gm::BigRational::from_string(gr_p);
    const auto [lhs, rhs] = gm::gamma_recurrence_check(p);
    emit(Json{{"command", "special-gamma-recurrence"},
              {"inputs", Json{{"p", gr_p}}},
              {"lhs", half_int_record(lhs)},
              {"rhs", half_int_record(rhs)},
              {"equal", lhs == rhs}},
         output);
  });

  auto* hyp = special->add_subcommand("hyp2f1", "Gauss hypergeometric function 2F1(a,b;c;z)");
  double hy_a = 1.0, hy_b = 1.0, hy_c = 2.0, hy_z = 0.0;
  double hy_tol = 1e-10;
  std::string hy_method = "series";
  hyp->add_option("--a", hy_a)->required();
  hyp->add_option("--b", hy_b)->required();
  hyp->add_option("--c", hy_c)->required();
  hyp->add_option("--z", hy_z)->required();
  hyp->add_option("--method", hy_method, "series (|z| < 1) or integral (c > b > 0)")
      ->check(CLI::IsMember({"series", "integral"}))
      ->capture_default_str();
  hyp->add_option("--tol", hy_tol, "relative tolerance")->capture_default_str();
  hyp->callback([&] {
    const gm::Hyp2F1Params params{hy_a, hy_b, hy_c, hy_z};
    const auto r = hy_method == "series" ? gm::hyp2f1_series(params, hy_tol)
                                         : gm::hyp2f1_integral(params, hy_tol);
    emit(Json{{"command", "special-hyp2f1"},
              {"inputs", Json{{"a", hy_a},
                              {"b", hy_b},
                              {"c", hy_c},
                              {"z", hy_z},
                              {"method", hy_method},
                              {"tol", hy_tol}}},
              {"float", r.value},
              {"error_estimate", r.error_estimate}},
         output);
  });

  // ---- tsallis -------------------------------------------------------------
  auto* tsallis = app.add_subcommand("tsallis", "non-extensive statistics application");
  tsallis->require_subcommand(1);

  std::string ts_units = "natural";
  gm::SpeciesThermo ts_species;
  const auto add_state_options = [&](CLI::App* cmd) {
    cmd->add_option("--g", ts_species.g, "degeneracy")->capture_default_str();
    cmd->add_option("--mass", ts_species.mass, "particle mass")->capture_default_str();
    cmd->add_option("--mu", ts_species.mu, "chemical potential")->capture_default_str();
    cmd->add_option("--T", ts_species.T, "temperature")->capture_default_str();
    cmd->add_option("--q", ts_species.q, "non-extensivity parameter")->capture_default_str();
    cmd->add_option("--units", ts_units, "unit system")
        ->check(CLI::IsMember({"natural", "si"}))
        ->capture_default_str();
  };
  const auto constants_of = [&] {
    return ts_units == "si" ? gm::PhysicalConstants::si() : gm::PhysicalConstants::natural();
  };
  const auto species_inputs = [&] {
    return Json{{"g", ts_species.g}, {"mass", ts_species.mass}, {"mu", ts_species.mu},
                {"T", ts_species.T}, {"q", ts_species.q},       {"units", ts_units}};
  };

  auto* entropy = tsallis->add_subcommand("entropy", "entropy of a probability vector, in k_B");
  std::vector<double> ent_p;
  double ent_q = 1.0;
  entropy->add_option("--p", ent_p, "comma-separated probabilities")
      ->required()
      ->delimiter(',');
  entropy->add_option("--q", ent_q, "non-extensivity parameter")->capture_default_str();
  entropy->callback([&] {
    emit(Json{{"command", "tsallis-entropy"},
              {"inputs", Json{{"p", ent_p}, {"q", ent_q}}},
              {"entropy_kB", gm::tsallis_entropy(ent_p, ent_q)}},
         output);
  });

  auto* qexp = tsallis->add_subcommand("qexp", "deformed exponential [1+(q-1)x]^(1/(q-1))");
  double qe_x = 0.0, qe_q = 1.0;
  qexp->add_option("--x", qe_x)->required();
  qexp->add_option("--q", qe_q)->required();
  qexp->callback([&] {
    emit(Json{{"command", "tsallis-qexp"},
              {"inputs", Json{{"x", qe_x}, {"q", qe_q}}},
              {"float", gm::q_exponential(qe_x, qe_q)}},
         output);
  });

  auto* occupation = tsallis->add_subcommand("occupation", "fermion occupation number");
  double occ_energy = 0.0;
  std::string occ_variant = "exact";
  occupation->add_option("--energy", occ_energy, "particle energy")->required();
  occupation->add_option("--variant", occ_variant, "evaluation variant")
      ->check(CLI::IsMember({"exact", "first-order", "boltzmann"}))
      ->capture_default_str();
  add_state_options(occupation);
  occupation->callback([&] {
    const auto constants = constants_of();
    double value = 0.0;
    if (occ_variant == "exact") {
      value = gm::occupation_exact(occ_energy, ts_species, constants);
    } else if (occ_variant == "first-order") {
      value = gm::occupation_first_order(occ_energy, ts_species, constants);
    } else {
      value = gm::occupation_boltzmann_limit(occ_energy, ts_species, constants);
    }
    Json inputs = species_inputs();
    inputs["energy"] = occ_energy;
    inputs["variant"] = occ_variant;
    emit(Json{{"command", "tsallis-occupation"},
              {"inputs", std::move(inputs)},
              {"float", value},
              {"unit_system", ts_units}},
         output);
  });

  auto* density = tsallis->add_subcommand("density", "particle number density");
  std::string dens_route = "both";
  double dens_tol = 1e-10;
  add_state_options(density);
  density->add_option("--route", dens_route, "closed, integral, quadrature, or both")
      ->check(CLI::IsMember({"both", "closed", "integral", "quadrature"}))
      ->capture_default_str();
  density->add_option("--tol", dens_tol, "relative tolerance (quadrature route)")
      ->capture_default_str();
  density->callback([&] {
    const auto constants = constants_of();
    Json inputs = species_inputs();
    inputs["route"] = dens_route;
    inputs["tol"] = dens_tol;
    Json record{{"command", "tsallis-density"},
                {"inputs", std::move(inputs)},
                {"unit_system", ts_units}};
    const bool want_closed = dens_route != "integral" && dens_route != "quadrature";
    const bool want_integral = dens_route != "closed";
    double closed = 0.0, integral = 0.0;
    if (want_closed) {
      closed = gm::density_closed(ts_species, constants);
      record["density_closed"] = closed;
    }
    if (want_integral) {
      const auto route = dens_route == "quadrature" ? gm::DensityRoute::quadrature
                                                    : gm::DensityRoute::closed_moments;
      integral = gm::density_integral(ts_species, constants, dens_tol, route);
      record["density_integral"] = integral;
    }
    if (want_closed && want_integral) {
      record["relative_difference"] = std::abs(integral - closed) / std::abs(closed);
    }
    emit(record, output);
  });

  // ---- frac ----------------------------------------------------------------
  auto* frac = app.add_subcommand("frac", "fractional-derivative closed forms");
  frac->require_subcommand(1);

  auto* power = frac->add_subcommand("power", "D^alpha t^theta by the power rule");
  double fp_theta = 1.0, fp_alpha = 0.5, fp_t = 1.0;
  int fp_m = 0;
  power->add_option("--theta", fp_theta, "power of t, > -1")->required();
  power->add_option("--alpha", fp_alpha, "derivative order, > 0")->required();
  power->add_option("--t", fp_t, "evaluation point, > 0")->required();
  auto* fp_m_opt = power->add_option("--m", fp_m, "window integer; default ceil(alpha)");
  power->callback([&] {
    const auto order = fp_m_opt->count() > 0 ? gm::FracOrder(fp_alpha, fp_m)
                                             : gm::FracOrder::canonical(fp_alpha);
    emit(Json{{"command", "frac-power"},
              {"inputs", Json{{"theta", fp_theta},
                              {"alpha", order.alpha},
                              {"m", order.m},
                              {"t", fp_t}}},
              {"float", gm::frac_derivative_power(fp_theta, order, fp_t)}},
         output);
  });

  auto* reciprocal = frac->add_subcommand(
      "reciprocal", "k-th derivative of (1-x)^(-1) at 0 via jet arithmetic (equals k!)");
  unsigned fr_k = 0;
  reciprocal->add_option("--k", fr_k, "derivative order")->required();
  reciprocal->callback([&] {
    const gm::BigRational value{gm::kth_derivative_reciprocal(fr_k)};
    emit(Json{{"command", "frac-reciprocal"},
              {"inputs", Json{{"k", fr_k}}},
              {"exact", gm::to_json(value)},
              {"float", value.to_double()}},
         output);
  });

  unsigned fd_n = 0;
  int fd_m = -1;
  double fd_x = 0.5;
  const auto add_half_derivative_options = [&](CLI::App* cmd) {
    cmd->add_option("--n", fd_n, "half-order index: the order is n + 1/2")->required();
    cmd->add_option("--m", fd_m, "window integer kept symbolic; default n + 1");
    cmd->add_option("--x", fd_x, "evaluation point in (0, 1)")->required();
  };
  const auto regularized_record = [](unsigned n) {
    return half_int_record(gm::regularized_half_derivative_at_zero(n));
  };

  auto* rl = frac->add_subcommand("rl", "Riemann-Liouville (n+1/2)-derivative of (1-x)^(-1)");
  add_half_derivative_options(rl);
  rl->callback([&] {
    const int m = fd_m >= 0 ? fd_m : static_cast<int>(fd_n) + 1;
    const double value = gm::rl_half_derivative(fd_n, m, fd_x);
    const double limit = 1.0 / gm::gamma_half_minus(fd_n).to_double();
    emit(Json{{"command", "frac-rl"},
              {"inputs", Json{{"n", fd_n}, {"m", m}, {"x", fd_x}}},
              {"float", value},
              {"asymptote", Json{{"exponent", -(static_cast<double>(fd_n) + 0.5)},
                                 {"scaled_value", value * std::pow(fd_x, fd_n + 0.5)},
                                 {"limit", limit}}},
              {"regularized", regularized_record(fd_n)}},
         output);
  });

  auto* caputo = frac->add_subcommand("caputo", "Caputo (n+1/2)-derivative of (1-x)^(-1)");
  add_half_derivative_options(caputo);
  caputo->callback([&] {
    const int m = fd_m >= 0 ? fd_m : static_cast<int>(fd_n) + 1;
    const double value = gm::caputo_half_derivative(fd_n, m, fd_x);
    const double exponent = static_cast<double>(m) - static_cast<double>(fd_n) - 0.5;
    const long long d = static_cast<long long>(m) - static_cast<long long>(fd_n);
    const double gamma_den = d >= 0
                                 ? gm::gamma_half_plus(static_cast<unsigned>(d)).to_double()
                                 : gm::gamma_half_minus(static_cast<unsigned>(-d)).to_double();
    const double limit =
        gm::BigRational(gm::factorial(static_cast<unsigned>(m))).to_double() / gamma_den;
    emit(Json{{"command", "frac-caputo"},
              {"inputs", Json{{"n", fd_n}, {"m", m}, {"x", fd_x}}},
              {"float", value},
              {"asymptote", Json{{"exponent", exponent},
                                 {"scaled_value", value * std::pow(fd_x, -exponent)},
                                 {"limit", limit}}},
              {"regularized", regularized_record(fd_n)}},
         output);
  });

  auto* regularized = frac->add_subcommand(
      "regularized", "the finite value at 0: ((2n+1)/2)! in place of the endpoint limit");
  unsigned freg_n = 0;
  regularized->add_option("--n", freg_n, "half-order index")->required();
  regularized->callback([&] {
    Json record = regularized_record(freg_n);
    record["command"] = "frac-regularized";
    record["inputs"] = Json{{"n", freg_n}};
    emit(record, output);
  });

  // ---- table ---------------------------------------------------------------
  auto* table = app.add_subcommand("table", "sweeps over n or alpha");
  std::string tb_what = "gamma-coef";
  unsigned tb_n_max = 10;
  unsigned tb_n = 0;
  double tb_alpha = 1.0;
  std::vector<double> tb_alphas;
  std::string tb_method = "closed";
  double tb_tol = 1e-10;
  table->add_option("--what", tb_what, "quantity to sweep")
      ->check(CLI::IsMember({"gamma-coef", "gamma-half", "moment"}))
      ->capture_default_str();
  table->add_option("--n-max", tb_n_max, "sweep n = 0..n-max")->capture_default_str();
  table->add_option("--n", tb_n, "fixed n for an alpha sweep (moment)")->capture_default_str();
  table->add_option("--alpha", tb_alpha, "fixed alpha for an n sweep (moment)")
      ->capture_default_str();
  auto* tb_alphas_opt =
      table->add_option("--alphas", tb_alphas, "comma-separated alpha grid (moment)")
          ->delimiter(',');
  table->add_option("--method", tb_method, "moment method")
      ->check(CLI::IsMember({"closed", "gamma-form", "quadrature"}))
      ->capture_default_str();
  table->add_option("--tol", tb_tol, "relative tolerance (quadrature)")->capture_default_str();
  table->callback([&] {
    Json rows = Json::array();
    if (tb_what == "gamma-coef") {
      for (unsigned n = 0; n <= tb_n_max; ++n) {
        Json row = gamma_coef_value(n, gm::GammaCoeffMethod::product);
        row["n"] = n;
        rows.push_back(std::move(row));
      }
    } else if (tb_what == "gamma-half") {
      for (unsigned n = 0; n <= tb_n_max; ++n) {
        rows.push_back(Json{{"n", n},
                            {"plus", half_int_record(gm::gamma_half_plus(n))},
                            {"minus", half_int_record(gm::gamma_half_minus(n))}});
      }
    } else if (tb_alphas_opt->count() > 0) {
      for (double alpha : tb_alphas) {
        const auto result = run_moment(tb_n, alpha, tb_method, tb_tol);
        rows.push_back(moment_record(
            result, Json{{"n", tb_n}, {"alpha", alpha}, {"method", tb_method}}, false));
      }
    } else {
      for (unsigned n = 0; n <= tb_n_max; ++n) {
        const auto result = run_moment(n, tb_alpha, tb_method, tb_tol);
        rows.push_back(moment_record(
            result, Json{{"n", n}, {"alpha", tb_alpha}, {"method", tb_method}}, false));
      }
    }
    emit(rows, output);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
