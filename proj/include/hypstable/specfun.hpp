#pragma once

#include <complex>

#include "hypstable/precision.hpp"

namespace hypstable {

/// Gamma function of a complex argument (Lanczos approximation, reflection
/// formula for Re(z) < 1/2). Throws std::domain_error at the poles.
std::complex<double> complex_gamma(std::complex<double> z);

/// Gamma function on the real line, sign included.
double gamma_real(double x);

/// log|Gamma(x)| together with the sign of Gamma(x).
double log_gamma_real(double x, int& sign);

/// Digamma function on the real line (non-pole arguments).
double digamma(double x);

/// Pochhammer symbol (z)_a = Gamma(z+a)/Gamma(z), computed in log space.
double pochhammer(double z, double a);

/// Gauss hypergeometric function 2F1(a,b;c;z) for real parameters and z < 1.
/// Direct series for small |z|, Pfaff transformation for z < 0, and the
/// 1-z connection formulas (including the integer log case) near z = 1.
double hyp2f1(double a, double b, double c, double z,
              const EvalPrecision& prec = {});

/// Legendre function of the first kind P^mu_nu(z) for z > 1.
double legendre_p(double mu, double nu, double z,
                  const EvalPrecision& prec = {});

/// Regularized incomplete beta function I_x(p, q), x in [0,1], p,q > 0.
double reg_inc_beta(double x, double p, double q,
                    const EvalPrecision& prec = {});

/// Natural log of the complete beta function B(p, q), p,q > 0.
double log_beta(double p, double q);

}  // namespace hypstable
