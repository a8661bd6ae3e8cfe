#include "wgpair/model.hpp"

#include <cmath>
#include <stdexcept>

namespace wgpair {

void ModelParams::validate() const {
  if (!(M > 0.0)) throw std::invalid_argument("M must be positive");
  if (!(omega0 > M)) throw std::invalid_argument("omega0 must exceed the cutoff M");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (!(d >= 0.0)) throw std::invalid_argument("d must be non-negative");
}

double omega(const ModelParams& p, double k) { return std::hypot(k, p.M); }

double form_factor(const ModelParams& p, double k) {
  return p.lambda / std::sqrt(std::sqrt(k * k + p.M * p.M));
}

cplx vertex_v(const ModelParams& p, Sector s, double k) {
  return form_factor(p, k) * (1.0 + sgn(s) * std::polar(1.0, k * p.d)) / std::sqrt(2.0);
}

OnShellParams on_shell(const ModelParams& p) {
  p.validate();
  OnShellParams o;
  o.k0 = std::sqrt((p.omega0 - p.M) * (p.omega0 + p.M));
  o.c0 = o.k0 / p.omega0;
  o.g0 = p.lambda / std::sqrt(p.omega0);
  o.gamma_atom = 4.0 * pi * o.g0 * o.g0 / o.c0;
  o.delta0 = (2.0 * p.lambda * p.lambda / o.k0) * std::log((p.omega0 + o.k0) / p.M);
  return o;
}

ModelParams params_from_k0d(double M, double omega0, double lambda, double k0d_in_pi) {
  ModelParams p{M, omega0, lambda, 0.0};
  p.validate();
  const double k0 = std::sqrt((omega0 - M) * (omega0 + M));
  p.d = k0d_in_pi * pi / k0;
  if (!(p.d >= 0.0)) throw std::invalid_argument("k0d must be non-negative");
  return p;
}

}  // namespace wgpair
