#include "hypstable/model.hpp"

#include <cmath>
#include <string>

#include "hypstable/quadrature.hpp"
#include "hypstable/specfun.hpp"

namespace hypstable {

ProcessParams::ProcessParams(double alpha_, int dim_) : alpha(alpha_), dim(dim_) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::domain_error("ProcessParams: alpha must lie in (0, 2)");
    if (dim < 1)
        throw std::domain_error("ProcessParams: dim must be a positive integer");
    if (alpha > double(dim))
        throw std::domain_error(
            "ProcessParams: requires alpha <= dim (log-radial process is "
            "only defined for alpha <= d)");
}

Regime ProcessParams::regime() const {
    if (alpha < double(dim))
        return alpha > 1.0 ? Regime::HitsPoints : Regime::StrictlyTransient;
    return Regime::CauchyBoundary;  // alpha == dim forces alpha = d = 1
}

void ProcessParams::require_transient(const char* what) const {
    if (!strictly_transient())
        throw std::domain_error(std::string(what) +
                                ": requires alpha < dim (transient regime)");
}

void ProcessParams::require_hits_points(const char* what) const {
    if (!hits_points())
        throw std::domain_error(std::string(what) +
                                ": requires 1 < alpha < dim (point-hitting regime)");
}

double levy_prefactor(const ProcessParams& params) {
    double a = params.alpha, d = params.dim;
    return std::pow(2.0, a) * a * pochhammer(d / 2.0, a / 2.0) /
           gamma_real(1.0 - a / 2.0);
}

double f_bar(double z, const ProcessParams& params, const EvalPrecision& prec) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("f_bar: requires |z| < 1");
    double a = params.alpha, d = params.dim;
    double q = (a + d) / 4.0;
    return levy_prefactor(params) * hyp2f1(q, q + 0.5, d / 2.0, z, prec);
}

double truncation_ell(double y, const ProcessParams& params) {
    if (std::abs(y) >= 1.0) return 0.0;
    double a = params.alpha, d = params.dim;
    return y / (1.0 + y * y) * std::exp((1.0 - d) * y) *
           std::pow(1.0 + std::exp(2.0 * y), (a + d) / 2.0 - 1.0);
}

double levy_density(double y, const ProcessParams& params,
                    const EvalPrecision& prec) {
    if (y == 0.0) throw std::domain_error("levy_density: y must be nonzero");
    double a = params.alpha, d = params.dim;
    double t = std::abs(y);
    // positive-side form; the exchange identity pi(-t) = e^{(a-d)t} pi(t)
    // supplies the negative side with the same well-conditioned argument
    double pos = levy_prefactor(params) * std::exp(-a * t) *
                 hyp2f1((a + d) / 2.0, a / 2.0 + 1.0, d / 2.0,
                        std::exp(-2.0 * t), prec);
    return y > 0.0 ? pos : std::exp((a - d) * t) * pos;
}

double levy_density_generator_form(double y, const ProcessParams& params,
                                   const EvalPrecision& prec) {
    if (y == 0.0) throw std::domain_error("levy_density: y must be nonzero");
    double a = params.alpha, d = params.dim;
    double e2y = std::exp(2.0 * y);
    double z = 4.0 * e2y / ((e2y + 1.0) * (e2y + 1.0));
    return std::exp(d * y) * std::pow(1.0 + e2y, -(a + d) / 2.0) *
           f_bar(z, params, prec);
}

std::pair<double, double> levy_density_d1_split(double y, double alpha,
                                                const EvalPrecision& prec) {
    (void)prec;
    if (y == 0.0) throw std::domain_error("levy_density_d1_split: y != 0");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error(
            "levy_density_d1_split: requires d = 1 and alpha in (0, 1]");
    double c = std::pow(2.0, alpha - 1.0) * alpha *
               pochhammer(0.5, alpha / 2.0) / gamma_real(1.0 - alpha / 2.0);
    double ey = std::exp(y);
    double pi1 = c * ey / std::pow(std::abs(ey - 1.0), alpha + 1.0);
    double pi2 = c * ey / std::pow(ey + 1.0, alpha + 1.0);
    return {pi1, pi2};
}

namespace {

// (ell(y) - y 1{|y|<=1}) pi(y), symmetrized: psi(y) + psi(-y) for y > 0.
// The symmetrization cancels the odd |y|^{-alpha} part, leaving an
// integrable |y|^{1-alpha} singularity at the origin.
double drift_integrand_sym(double y, const ProcessParams& params,
                           const EvalPrecision& prec) {
    auto one_side = [&](double v) {
        return (truncation_ell(v, params) - v) * levy_density(v, params, prec);
    };
    return one_side(y) + one_side(-y);
}

}  // namespace

double drift_b(const ProcessParams& params, const EvalPrecision& prec) {
    if (params.alpha == 1.0 && params.dim == 1) return 0.0;  // odd integrand
    EvalPrecision qp = prec;
    qp.rel_tol = std::max(prec.rel_tol, 1e-11);
    double gamma0 = 2.0 - params.alpha;  // integrand ~ y^{(2-alpha)-1} at 0
    return integrate_endpoint_power(
        [&](double y) { return drift_integrand_sym(y, params, qp); }, 0.0, 1.0,
        gamma0, 1.0, qp);
}

std::complex<double> char_exponent_numeric(double lambda,
                                           const LevyCharacteristics& chars) {
    const ProcessParams& p = chars.params;
    const EvalPrecision& prec = chars.precision;
    if (lambda == 0.0) return {0.0, 0.0};
    double a = p.alpha, d = p.dim;
    EvalPrecision qp = prec;
    qp.rel_tol = std::max(prec.rel_tol, 1e-10);
    qp.max_quad_subdivisions = std::max(prec.max_quad_subdivisions, 4000);

    // cancellation-stable 1 - cos x and x - sin x (the naive forms round to
    // zero near the origin, which derails the adaptive quadrature against
    // the |y|^{-alpha-1} density blow-up)
    auto one_minus_cos = [](double x) {
        double s = std::sin(0.5 * x);
        return 2.0 * s * s;
    };
    auto x_minus_sin = [](double x) {
        if (std::abs(x) < 1e-2) {
            double x2 = x * x;
            return x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0));
        }
        return x - std::sin(x);
    };

    // fold to (0, inf): pi(-y) = e^{(a-d)y} pi(y)
    auto folded_re = [&](double y) {
        double pi_pos = levy_density(y, p, qp);
        double pi_neg = std::exp((a - d) * y) * pi_pos;
        return one_minus_cos(lambda * y) * (pi_pos + pi_neg);
    };
    auto folded_im = [&](double y) {
        double pi_pos = levy_density(y, p, qp);
        double pi_neg = std::exp((a - d) * y) * pi_pos;
        double osc = y <= 1.0 ? x_minus_sin(lambda * y) : -std::sin(lambda * y);
        return osc * (pi_pos - pi_neg);
    };

    // interior piece on (0,1] with the algebraic singularity at 0 removed;
    // the folded integrands are O(y^{1-alpha}) there
    double g0 = 2.0 - a;
    double re = integrate_endpoint_power(folded_re, 0.0, 1.0, g0, 1.0, qp);
    double im = integrate_endpoint_power(folded_im, 0.0, 1.0, g0, 1.0, qp);
    // tail: integrands bounded by const * e^{-alpha y}; truncation point set
    // so the e^{-alpha y} remainder bound is below tolerance
    double y_max = std::max(5.0, -std::log(qp.rel_tol * 0.01) / a + 1.0);
    int panels = std::max(8, int(std::ceil((y_max - 1.0) * (1.0 + lambda))));
    double tail_re = 0.0, tail_im = 0.0;
    double step = (y_max - 1.0) / panels;
    for (int i = 0; i < panels; ++i) {
        double lo = 1.0 + i * step, hi = lo + step;
        tail_re += integrate(folded_re, lo, hi, qp);
        tail_im += integrate(folded_im, lo, hi, qp);
    }
    return {re + tail_re, lambda * chars.drift + im + tail_im};
}

}  // namespace hypstable
