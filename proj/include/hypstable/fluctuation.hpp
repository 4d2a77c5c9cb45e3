#pragma once

#include <complex>

#include "hypstable/model.hpp"
#include "hypstable/precision.hpp"

namespace hypstable {

/// Laplace exponent of the descending ladder height subordinator,
/// normalized so that kappa_desc(0) = 1 (unit killing rate).
double kappa_desc(double lambda, const ProcessParams& params);

/// Laplace exponent of the ascending ladder height subordinator;
/// kappa_asc(0) = 0 (no killing: the process drifts to +infinity).
double kappa_asc(double lambda, const ProcessParams& params);

/// Analytic continuations of the ladder exponents to complex arguments,
/// used to assemble the Wiener-Hopf product.
std::complex<double> kappa_desc_complex(std::complex<double> lambda,
                                        const ProcessParams& params);
std::complex<double> kappa_asc_complex(std::complex<double> lambda,
                                       const ProcessParams& params);

/// Characteristic exponent in closed gamma-ratio form,
/// equal to kappa_asc(-i lambda) * kappa_desc(i lambda).
/// Defined for alpha < dim and at the alpha = dim = 1 boundary,
/// where it reduces to lambda * tanh(pi lambda / 2).
std::complex<double> char_exponent_closed(double lambda,
                                          const ProcessParams& params);

/// Renewal density of the descending ladder height; total mass 1.
double renewal_density_desc(double y, const ProcessParams& params);

/// Renewal density of the ascending ladder height; satisfies
/// lambda * LT(v)(lambda) * kappa_asc(lambda) = 1.
double renewal_density_asc(double y, const ProcessParams& params);

/// Tail of the ascending ladder height Levy measure, closed form.
double ladder_levy_tail_asc(double x, const ProcessParams& params);

/// Upper tail of the jump measure: integral of levy_density over (u, inf),
/// u > 0, summed in closed hypergeometric form (term-by-term integral of
/// the density's defining series).
double levy_tail_upper(double u, const ProcessParams& params,
                       const EvalPrecision& prec = {});

/// Ascending-ladder Levy tail recovered through the friendship identity
/// integral int_0^inf v_desc(l) * levy_tail_upper(l + r) dl; the module's
/// central cross-check against ladder_levy_tail_asc.
double vigon_tail_numeric(double r, const LevyCharacteristics& chars);

}  // namespace hypstable
