#pragma once

#include <complex>
#include <utility>

#include "hypstable/precision.hpp"

namespace hypstable {

/// Qualitative regime of the process determined by (alpha, dim).
enum class Regime {
    StrictlyTransient,  // alpha < d
    CauchyBoundary,     // alpha = d = 1
    HitsPoints,         // 1 < alpha < d (transient and hits points)
};

/// Stability index alpha in (0,2) and spatial dimension d >= 1 with
/// alpha <= d. Validation is eager: every downstream formula assumes
/// alpha <= d.
struct ProcessParams {
    double alpha;
    int dim;

    ProcessParams(double alpha_, int dim_);

    Regime regime() const;
    bool strictly_transient() const { return alpha < double(dim); }
    bool hits_points() const { return alpha > 1.0 && alpha < double(dim); }

    /// Throws std::domain_error unless alpha < dim.
    void require_transient(const char* what) const;
    /// Throws std::domain_error unless 1 < alpha < dim.
    void require_hits_points(const char* what) const;
};

/// Normalizing constant 2^alpha alpha (d/2)_{alpha/2} / Gamma(1 - alpha/2)
/// shared by the jump-density expressions.
double levy_prefactor(const ProcessParams& params);

/// Hypergeometric kernel of the radial generator, |z| < 1.
double f_bar(double z, const ProcessParams& params,
             const EvalPrecision& prec = {});

/// Truncation function of the generator; compactly supported on (-1, 1).
double truncation_ell(double y, const ProcessParams& params);

/// Jump (Levy) density of the log-radial process at y != 0.
double levy_density(double y, const ProcessParams& params,
                    const EvalPrecision& prec = {});

/// Same density evaluated through the generator form (f_bar route);
/// kept as an independent algebraic route for cross-checking.
double levy_density_generator_form(double y, const ProcessParams& params,
                                   const EvalPrecision& prec = {});

/// d = 1 decomposition into a Lamperti-stable part and a compound-Poisson
/// part; returns (pi1, pi2) with pi1 + pi2 = levy_density(y; alpha, 1).
std::pair<double, double> levy_density_d1_split(double y, double alpha,
                                                const EvalPrecision& prec = {});

/// Drift constant b = PV-int (ell(y) - y 1{|y|<=1}) Pi(dy), evaluated as the
/// symmetric limit around 0 (the integrand's odd singular part cancels).
double drift_b(const ProcessParams& params, const EvalPrecision& prec = {});

/// Immutable bundle of process parameters, drift and precision.
struct LevyCharacteristics {
    ProcessParams params;
    double drift;
    EvalPrecision precision;

    explicit LevyCharacteristics(const ProcessParams& p,
                                 const EvalPrecision& prec = {})
        : params(p), drift(drift_b(p, prec)), precision(prec) {}
};

/// Characteristic exponent evaluated by direct quadrature of the
/// Levy-Khintchine integral. Serves as the numeric cross-check of the
/// closed form in the fluctuation module.
std::complex<double> char_exponent_numeric(double lambda,
                                           const LevyCharacteristics& chars);

}  // namespace hypstable
