#pragma once

#include <functional>
#include <vector>

#include "wgpair/model.hpp"

namespace wgpair {

struct QuadResult {
  cplx value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
  QuadResult& operator+=(const QuadResult& o) {
    value += o.value;
    abs_error_estimate += o.abs_error_estimate;
    evaluations += o.evaluations;
    converged = converged && o.converged;
    return *this;
  }
};

// simple pole on the real axis; residue_density is the coefficient of 1/(x - location)
struct PoleSpec {
  double location = 0.0;
  cplx residue_density{0.0, 0.0};
};

// cos(wavenumber*k) factor present in the integrand tail; 0 means non-oscillatory
struct Oscillation {
  double wavenumber = 0.0;
};

using Integrand = std::function<cplx(double)>;
using RealFn = std::function<double(double)>;

// adaptive Gauss-Legendre 7/15 with worst-segment refinement; tol is absolute
QuadResult integrate_interval(const Integrand& f, double a, double b, double tol,
                              const std::vector<double>& breakpoints = {});

// [a, inf), rational map k = a + t/(1-t^2); oscillatory tails summed over
// half-period cells with iterated averaging
QuadResult integrate_halfline(const Integrand& f, double a, double tol, Oscillation osc = {},
                              const std::vector<double>& breakpoints = {});

// whole real line
QuadResult integrate_line(const Integrand& f, double tol, Oscillation osc = {},
                          const std::vector<double>& breakpoints = {});

// Cauchy principal value over [a,b], pole strictly inside; the singular part
// residue_density/(x-p) is subtracted and reintegrated in closed form.
// Returns the PV only; the caller composes PV -/+ i*pi*residue_density.
QuadResult principal_value(const Integrand& f, const PoleSpec& pole, double a, double b,
                           double tol);
QuadResult principal_value_line(const Integrand& f, const PoleSpec& pole, double tol);

// bracketed root: bisection refined by secant (Illinois damping); tol is absolute
double find_root(const RealFn& f, double a, double b, double tol);

class Chebyshev {
 public:
  Chebyshev() = default;
  // interpolant of degree n-1 through the n Chebyshev-Gauss nodes of [a,b]
  static Chebyshev fit(const RealFn& f, double a, double b, int n);
  double operator()(double x) const;
  Chebyshev derivative() const;
  double lo() const { return a_; }
  double hi() const { return b_; }
  const std::vector<double>& coeffs() const { return c_; }

 private:
  double a_ = 0.0, b_ = 1.0;
  std::vector<double> c_;
};

}  // namespace wgpair
