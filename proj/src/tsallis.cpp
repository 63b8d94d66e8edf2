#include "gaussmom/tsallis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gaussmom/moments.hpp"

namespace gaussmom {
namespace {

void validate_species(const SpeciesThermo& s) {
  if (!(s.T > 0.0)) throw std::domain_error("SpeciesThermo: temperature must be > 0");
  if (!(s.g > 0.0)) throw std::domain_error("SpeciesThermo: degeneracy must be > 0");
  if (!(s.mass > 0.0)) throw std::domain_error("SpeciesThermo: mass must be > 0");
}

// x^2 e^x / (e^x + 1)^2 evaluated through e^(-|x|) so large |x| cannot
// overflow; the expression is symmetric in the sign of x.
double fd_correction_kernel(double x) {
  const double t = std::exp(-std::abs(x));
  const double denom = 1.0 + t;
  return x * x * t / (denom * denom);
}

double fermi_dirac(double x) {
  if (x >= 0.0) {
    const double t = std::exp(-x);
    return t / (1.0 + t);
  }
  return 1.0 / (std::exp(x) + 1.0);
}

}  // namespace

double beta_of(const SpeciesThermo& species, const PhysicalConstants& constants) {
  validate_species(species);
  return 1.0 / (constants.k_B * species.T);
}

double q_exponential(double x, double q) {
  if (q == 1.0) return std::exp(x);
  const double eps = q - 1.0;
  const double bracket = 1.0 + eps * x;
  if (!(bracket > 0.0)) {
    std::ostringstream msg;
    msg << "q_exponential: cutoff violated, bracket 1 + (q-1)x = " << bracket << " at x = " << x
        << ", q = " << q;
    throw std::domain_error(msg.str());
  }
  // log1p keeps the exponent accurate when q is close to 1
  return std::exp(std::log1p(eps * x) / eps);
}

double tsallis_entropy(const std::vector<double>& p, double q) {
  if (p.empty()) throw std::domain_error("tsallis_entropy: empty probability vector");
  double sum = 0.0;
  for (double pi : p) {
    if (pi < 0.0) throw std::domain_error("tsallis_entropy: negative probability");
    sum += pi;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "tsallis_entropy: probabilities sum to " << sum << ", not 1";
    throw std::domain_error(msg.str());
  }

  if (q == 1.0) {
    double s = 0.0;
    for (double pi : p) {
      if (pi > 0.0) s -= pi * std::log(pi);
    }
    return s;
  }
  double power_sum = 0.0;
  for (double pi : p) {
    if (pi > 0.0) power_sum += std::pow(pi, q);
  }
  return (1.0 - power_sum) / (q - 1.0);
}

double occupation_exact(double energy, const SpeciesThermo& species,
                        const PhysicalConstants& constants) {
  const double x = beta_of(species, constants) * (energy - species.mu);
  return 1.0 / (q_exponential(x, species.q) + 1.0);
}

double occupation_first_order(double energy, const SpeciesThermo& species,
                              const PhysicalConstants& constants) {
  const double x = beta_of(species, constants) * (energy - species.mu);
  return fermi_dirac(x) + 0.5 * (species.q - 1.0) * fd_correction_kernel(x);
}

double occupation_boltzmann_limit(double energy, const SpeciesThermo& species,
                                  const PhysicalConstants& constants) {
  const double x = beta_of(species, constants) * (energy - species.mu);
  return std::exp(-x) * (1.0 + 0.5 * (species.q - 1.0) * x * x);
}

double density_closed(const SpeciesThermo& species, const PhysicalConstants& constants) {
  validate_species(species);
  const double kT = constants.k_B * species.T;
  const double rest_energy = species.mass * constants.c * constants.c;
  const double x = (rest_energy - species.mu) / kT;
  const double prefactor =
      species.g *
      std::pow(species.mass * kT / (2.0 * std::numbers::pi * constants.hbar * constants.hbar),
               1.5);
  const double braces = 1.0 + 0.5 * (species.q - 1.0) * (x * x + 3.0 * x + 15.0 / 4.0);
  return prefactor * std::exp(-x) * braces;
}

std::array<double, 4> density_integral_terms(const SpeciesThermo& species,
                                             const PhysicalConstants& constants, double tol,
                                             DensityRoute route) {
  validate_species(species);
  const double pi = std::numbers::pi;
  const double beta = beta_of(species, constants);
  const double m = species.mass;
  const double rest_energy = m * constants.c * constants.c;
  const double delta = rest_energy - species.mu;  // m c^2 - mu
  const double alpha = beta / (2.0 * m);
  const double boltz = std::exp(-beta * delta);
  const double eps = species.q - 1.0;

  const auto momentum_integral = [&](unsigned n) {
    if (route == DensityRoute::quadrature) {
      return moment_quadrature({n, alpha}, tol / 4.0).float_value;
    }
    return moment_closed({n, alpha}).float_value;
  };
  const double I2 = momentum_integral(1);
  const double I4 = momentum_integral(2);
  const double I6 = momentum_integral(3);

  // The four-term grouping of the phase-space integral, transcribed with
  // the p^2, p^2, p^4, p^6 weights in that order.
  const double shell = 2.0 * pi * species.g / std::pow(2.0 * pi * constants.hbar, 3);
  std::array<double, 4> terms{};
  terms[0] = shell * boltz * I2;
  terms[1] = shell * 0.5 * eps * beta * beta * delta * delta * boltz * I2;
  terms[2] = shell * 0.5 * eps * beta * beta * (delta / m) * boltz * I4;
  terms[3] = (shell / (2.0 * pi)) * 0.5 * eps * beta * beta * boltz * (pi / (2.0 * m * m)) * I6;
  return terms;
}

double density_integral(const SpeciesThermo& species, const PhysicalConstants& constants,
                        double tol, DensityRoute route) {
  const auto terms = density_integral_terms(species, constants, tol, route);
  return terms[0] + terms[1] + terms[2] + terms[3];
}

}  // namespace gaussmom
