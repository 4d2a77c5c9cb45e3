#include "hypstable/fluctuation.hpp"

#include <cmath>

#include "hypstable/quadrature.hpp"
#include "hypstable/specfun.hpp"

namespace hypstable {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double kappa_desc(double lambda, const ProcessParams& params) {
    params.require_transient("kappa_desc");
    if (lambda < 0.0)
        throw std::domain_error("kappa_desc: lambda must be >= 0");
    double a = params.alpha, d = params.dim;
    int s = 0;  // all gamma arguments positive here
    double lg = log_gamma_real((d + lambda) / 2.0, s) +
                log_gamma_real((d - a) / 2.0, s) -
                log_gamma_real(d / 2.0, s) -
                log_gamma_real((d - a + lambda) / 2.0, s);
    return std::exp(lg);
}

double kappa_asc(double lambda, const ProcessParams& params) {
    params.require_transient("kappa_asc");
    if (lambda < 0.0)
        throw std::domain_error("kappa_asc: lambda must be >= 0");
    if (lambda == 0.0) return 0.0;  // 1/Gamma(0) = 0
    double a = params.alpha, d = params.dim;
    int s = 0;
    double lg = a * std::log(2.0) + log_gamma_real(d / 2.0, s) +
                log_gamma_real((lambda + a) / 2.0, s) -
                log_gamma_real((d - a) / 2.0, s) -
                log_gamma_real(lambda / 2.0, s);
    return std::exp(lg);
}

std::complex<double> kappa_desc_complex(std::complex<double> lambda,
                                        const ProcessParams& params) {
    params.require_transient("kappa_desc");
    double a = params.alpha, d = params.dim;
    return complex_gamma((d + lambda) / 2.0) *
           gamma_real((d - a) / 2.0) /
           (gamma_real(d / 2.0) * complex_gamma((d - a + lambda) / 2.0));
}

std::complex<double> kappa_asc_complex(std::complex<double> lambda,
                                       const ProcessParams& params) {
    params.require_transient("kappa_asc");
    if (lambda == 0.0) return 0.0;
    double a = params.alpha, d = params.dim;
    return std::pow(2.0, a) * gamma_real(d / 2.0) *
           complex_gamma((lambda + a) / 2.0) /
           (gamma_real((d - a) / 2.0) * complex_gamma(lambda / 2.0));
}

std::complex<double> char_exponent_closed(double lambda,
                                          const ProcessParams& params) {
    if (lambda == 0.0) return 0.0;  // the Gamma(-i*0/2) pole is never evaluated
    double a = params.alpha, d = params.dim;
    std::complex<double> il(0.0, lambda);
    return std::pow(2.0, a) * complex_gamma((-il + a) / 2.0) *
           complex_gamma((il + d) / 2.0) /
           (complex_gamma(-il / 2.0) * complex_gamma((il + d - a) / 2.0));
}

double renewal_density_desc(double y, const ProcessParams& params) {
    params.require_transient("renewal_density_desc");
    if (!(y > 0.0))
        throw std::domain_error("renewal_density_desc: y must be > 0");
    double a = params.alpha, d = params.dim;
    double pref = 2.0 * gamma_real(d / 2.0) /
                  (gamma_real((d - a) / 2.0) * gamma_real(a / 2.0));
    return pref * std::exp((2.0 - d) * y) *
           std::pow(std::expm1(2.0 * y), a / 2.0 - 1.0);
}

double renewal_density_asc(double y, const ProcessParams& params) {
    params.require_transient("renewal_density_asc");
    if (!(y > 0.0))
        throw std::domain_error("renewal_density_asc: y must be > 0");
    double a = params.alpha, d = params.dim;
    double pref = gamma_real((d - a) / 2.0) /
                  (std::pow(2.0, a - 1.0) * gamma_real(d / 2.0) *
                   gamma_real(a / 2.0));
    return pref * std::pow(-std::expm1(-2.0 * y), a / 2.0 - 1.0);
}

double ladder_levy_tail_asc(double x, const ProcessParams& params) {
    params.require_transient("ladder_levy_tail_asc");
    if (!(x > 0.0))
        throw std::domain_error("ladder_levy_tail_asc: x must be > 0");
    double a = params.alpha, d = params.dim;
    double pref = std::pow(2.0, a) * std::sin(a * kPi / 2.0) / kPi *
                  gamma_real(d / 2.0) * gamma_real(a / 2.0) /
                  gamma_real((d - a) / 2.0);
    return pref * std::exp(-a * x) * std::pow(-std::expm1(-2.0 * x), -a / 2.0);
}

double levy_tail_upper(double u, const ProcessParams& params,
                       const EvalPrecision& prec) {
    if (!(u > 0.0))
        throw std::domain_error("levy_tail_upper: u must be > 0");
    double a = params.alpha, d = params.dim;
    // term-by-term integration of the density series lowers the second
    // parameter by one and divides by alpha
    return levy_prefactor(params) / a * std::exp(-a * u) *
           hyp2f1((d + a) / 2.0, a / 2.0, d / 2.0, std::exp(-2.0 * u), prec);
}

double vigon_tail_numeric(double r, const LevyCharacteristics& chars) {
    const ProcessParams& p = chars.params;
    p.require_transient("vigon_tail_numeric");
    if (!(r > 0.0))
        throw std::domain_error("vigon_tail_numeric: r must be > 0");
    EvalPrecision qp = chars.precision;
    qp.rel_tol = std::max(qp.rel_tol, 1e-10);
    auto f = [&](double l) {
        return renewal_density_desc(l, p) * levy_tail_upper(l + r, p, qp);
    };
    // v_desc(l) ~ l^{alpha/2 - 1} at 0; product decays like e^{-d l}
    return integrate_to_inf_power(f, 0.0, p.alpha / 2.0, double(p.dim), qp);
}

}  // namespace hypstable
