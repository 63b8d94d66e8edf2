#pragma once

#include <array>
#include <string>
#include <vector>

#include "gaussmom/rational.hpp"

namespace gaussmom {

/// Unit system constants. Natural units set all three to exactly 1; SI mode
/// carries fixed CODATA-2018 values and never recomputes them.
struct PhysicalConstants {
  double k_B = 1.0;
  double hbar = 1.0;
  double c = 1.0;

  static PhysicalConstants natural() { return {1.0, 1.0, 1.0}; }
  static PhysicalConstants si() { return {1.380649e-23, 1.054571817e-34, 299792458.0}; }
};

/// One particle species in a thermal state: degeneracy g, mass, chemical
/// potential mu, temperature T and the non-extensivity parameter q.
/// beta = 1/(k_B T) is always derived, never stored.
struct SpeciesThermo {
  double g = 1.0;
  double mass = 1.0;
  double mu = 0.0;
  double T = 1.0;
  double q = 1.0;
};

double beta_of(const SpeciesThermo& species, const PhysicalConstants& constants);

/// [1 + (q-1) x]^(1/(q-1)), the deformed exponential; exactly e^x at q = 1.
/// Throws when the bracket 1 + (q-1) x is not positive (the cutoff), naming
/// the offending bracket value.
double q_exponential(double x, double q);

/// Entropy of a probability vector in units of k_B:
/// (1 - sum p_i^q) / (q - 1), with the q = 1 branch -sum p_i ln p_i.
/// The vector must be nonnegative and normalized to 1 within 1e-12.
double tsallis_entropy(const std::vector<double>& p, double q);

/// Fermion occupation 1 / (e_{2-q}^{beta (E - mu)} + 1), exact in q.
double occupation_exact(double energy, const SpeciesThermo& species,
                        const PhysicalConstants& constants);

/// First order in (q-1): Fermi-Dirac plus
/// (q-1)/2 * x^2 e^x / (e^x + 1)^2 at x = beta (E - mu).
double occupation_first_order(double energy, const SpeciesThermo& species,
                              const PhysicalConstants& constants);

/// Large-x form e^(-x) (1 + (q-1)/2 * x^2); meaningful for beta (E - mu) >> 1.
double occupation_boltzmann_limit(double energy, const SpeciesThermo& species,
                                  const PhysicalConstants& constants);

/// Closed-form number density
///   g (m k_B T / (2 pi hbar^2))^(3/2) e^((mu - m c^2)/(k_B T))
///     * {1 + (q-1)/2 [x^2 + 3x + 15/4]},  x = (m c^2 - mu)/(k_B T).
/// The braces are exactly 1 at q = 1, so the classical density is recovered
/// bit-for-bit.
double density_closed(const SpeciesThermo& species, const PhysicalConstants& constants);

enum class DensityRoute { closed_moments, quadrature };

/// The four-term momentum-integral assembly of the same density, with the
/// p^2, p^4, p^6 Gaussian integrals (alpha = beta/2m) evaluated either by
/// their closed forms or, when route = quadrature, fully numerically. Terms
/// are exposed separately so each transcribed prefactor can be pinned by a
/// test.
std::array<double, 4> density_integral_terms(const SpeciesThermo& species,
                                             const PhysicalConstants& constants, double tol,
                                             DensityRoute route);

double density_integral(const SpeciesThermo& species, const PhysicalConstants& constants,
                        double tol, DensityRoute route = DensityRoute::closed_moments);

}  // namespace gaussmom
