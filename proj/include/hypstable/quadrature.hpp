#pragma once

#include <functional>

#include "hypstable/precision.hpp"

namespace hypstable {

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
double integrate(const Integrand& f, double a, double b,
                 const EvalPrecision& prec = {});

/// Integration over [a, b] where the integrand behaves like
/// (x-a)^(gamma_a - 1) near a and (b-x)^(gamma_b - 1) near b, with
/// gamma in (0, 1]. The algebraic endpoint singularities are removed
/// by power substitutions before adaptive integration.
double integrate_endpoint_power(const Integrand& f, double a, double b,
                                double gamma_a, double gamma_b,
                                const EvalPrecision& prec = {});

/// Integration of f over [a, infinity) for integrands bounded by
/// C exp(-decay_rate x); substitutes to a finite interval.
double integrate_to_inf(const Integrand& f, double a, double decay_rate,
                        const EvalPrecision& prec = {});

/// Semi-infinite integral with an algebraic singularity of order
/// gamma_a - 1 at the left endpoint and exponential tail decay.
double integrate_to_inf_power(const Integrand& f, double a, double gamma_a,
                              double decay_rate,
                              const EvalPrecision& prec = {});

}  // namespace hypstable
