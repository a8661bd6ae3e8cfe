#pragma once

#include <complex>
#include <numbers>

namespace wgpair {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

// Physical configuration. Units: energies in M, distances in 1/M, c = 1.
struct ModelParams {
  double M = 1.0;        // waveguide mode cutoff, sets the unit scale
  double omega0 = 1.1;   // atomic excitation energy, must exceed M
  double lambda = 1e-2;  // coupling strength
  double d = 0.0;        // interatomic distance, >= 0
  void validate() const; // throws std::invalid_argument on violation
};

// s = +1 symmetric (triplet), s = -1 antisymmetric (singlet) atomic superposition
enum class Sector : int { symmetric = 1, antisymmetric = -1 };
inline constexpr double sgn(Sector s) { return static_cast<double>(static_cast<int>(s)); }
inline constexpr Sector kSectors[2] = {Sector::symmetric, Sector::antisymmetric};

// On-shell derived quantities at omega(k0) = omega0.
struct OnShellParams {
  double k0;          // sqrt(omega0^2 - M^2)
  double c0;          // group velocity k0/omega0, in (0,1)
  double g0;          // lambda/sqrt(omega0)
  double delta0;      // distance-independent Lamb-type shift
  double gamma_atom;  // isolated-atom decay rate 4*pi*g0^2/c0
};

double omega(const ModelParams& p, double k);       // dispersion sqrt(k^2+M^2)
double form_factor(const ModelParams& p, double k); // g(k) = lambda/(k^2+M^2)^{1/4}
cplx vertex_v(const ModelParams& p, Sector s, double k);
OnShellParams on_shell(const ModelParams& p);

// geometry given as k0*d in units of pi (0.5 means pi/2)
ModelParams params_from_k0d(double M, double omega0, double lambda, double k0d_in_pi);

}  // namespace wgpair
