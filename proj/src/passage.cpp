#include "hypstable/passage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypstable/quadrature.hpp"
#include "hypstable/specfun.hpp"

namespace hypstable {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sin_half_alpha_pi(double alpha) { return std::sin(alpha * kPi / 2.0); }

}  // namespace

double blumenthal_exit_density(const Eigen::VectorXd& y,
                               const Eigen::VectorXd& z,
                               const ProcessParams& params) {
    params.require_transient("blumenthal_exit_density");
    if (y.size() != z.size() || y.size() != params.dim)
        throw std::domain_error(
            "blumenthal_exit_density: points must have dimension dim");
    double ny2 = y.squaredNorm(), nz2 = z.squaredNorm();
    bool y_in = ny2 < 1.0, z_in = nz2 < 1.0;
    if (y_in == z_in)
        throw std::domain_error(
            "blumenthal_exit_density: exactly one point must lie inside the "
            "unit sphere");
    double a = params.alpha, d = params.dim;
    double pref = std::pow(kPi, -(d / 2.0 + 1.0)) * gamma_real(d / 2.0) *
                  sin_half_alpha_pi(a);
    return pref * std::pow(std::abs(1.0 - ny2), a / 2.0) *
           std::pow(std::abs(1.0 - nz2), -a / 2.0) *
           std::pow((y - z).norm(), -double(params.dim));
}

double overshoot_density(double theta, double u, const ProcessParams& params) {
    params.require_transient("overshoot_density");
    if (!(u > 0.0)) throw std::domain_error("overshoot_density: u must be > 0");
    if (theta < 0.0)
        throw std::domain_error("overshoot_density: theta must be >= 0");
    double a = params.alpha;
    return 2.0 / kPi * sin_half_alpha_pi(a) * std::exp(2.0 * (u + theta)) *
           std::pow(-std::expm1(-2.0 * u), a / 2.0) *
           std::pow(std::expm1(2.0 * theta), -a / 2.0) /
           std::expm1(2.0 * (theta + u));
}

double overshoot_cdf(double theta, double u, const ProcessParams& params,
                     const EvalPrecision& prec) {
    params.require_transient("overshoot_cdf");
    if (theta <= 0.0) return 0.0;
    double a = params.alpha;
    return integrate_endpoint_power(
        [&](double t) { return overshoot_density(t, u, params); }, 0.0, theta,
        1.0 - a / 2.0, 1.0, prec);
}

double overshoot_mass(double u, const ProcessParams& params,
                      const EvalPrecision& prec) {
    params.require_transient("overshoot_mass");
    double a = params.alpha;
    // density ~ theta^{-alpha/2} at 0 and ~ e^{-alpha theta} at infinity
    return integrate_to_inf_power(
        [&](double t) { return overshoot_density(t, u, params); }, 0.0,
        1.0 - a / 2.0, a, prec);
}

std::vector<double> overshoot_cdf_grid(const std::vector<double>& sorted_thetas,
                                       double u, const ProcessParams& params,
                                       const EvalPrecision& prec) {
    params.require_transient("overshoot_cdf_grid");
    std::vector<double> out;
    out.reserve(sorted_thetas.size());
    double prev_t = 0.0, acc = 0.0;
    for (double t : sorted_thetas) {
        if (t < prev_t)
            throw std::domain_error("overshoot_cdf_grid: grid must be sorted");
        if (t > prev_t) {
            if (prev_t == 0.0)
                acc = overshoot_cdf(t, u, params, prec);
            else
                acc += integrate(
                    [&](double s) { return overshoot_density(s, u, params); },
                    prev_t, t, prec);
            prev_t = t;
        }
        out.push_back(acc);
    }
    return out;
}

double undershoot_density(double theta, double v, const ProcessParams& params) {
    params.require_transient("undershoot_density");
    if (!(v < 0.0)) throw std::domain_error("undershoot_density: v must be < 0");
    if (theta < 0.0)
        throw std::domain_error("undershoot_density: theta must be >= 0");
    double a = params.alpha, d = params.dim;
    return 2.0 / kPi * sin_half_alpha_pi(a) * std::exp(d * (v - theta)) *
           std::pow(std::expm1(-2.0 * v), a / 2.0) *
           std::pow(-std::expm1(-2.0 * theta), -a / 2.0) /
           (-std::expm1(2.0 * (v - theta)));
}

double undershoot_mass(double v, const ProcessParams& params,
                       const EvalPrecision& prec) {
    params.require_transient("undershoot_mass");
    double a = params.alpha;
    return integrate_to_inf_power(
        [&](double t) { return undershoot_density(t, v, params); }, 0.0,
        1.0 - a / 2.0, double(params.dim), prec);
}

double infimum_law(double z, const ProcessParams& params, LawKind kind,
                   const EvalPrecision& prec) {
    params.require_transient("infimum_law");
    if (z < 0.0) throw std::domain_error("infimum_law: z must be >= 0");
    double a = params.alpha, d = params.dim;
    if (kind == LawKind::CDF)
        return reg_inc_beta(-std::expm1(-2.0 * z), a / 2.0, (d - a) / 2.0,
                            prec);
    double pref = 2.0 * gamma_real(d / 2.0) /
                  (gamma_real((d - a) / 2.0) * gamma_real(a / 2.0));
    return pref * std::exp(-(d - 2.0) * z) *
           std::pow(std::expm1(2.0 * z), a / 2.0 - 1.0);
}

double potential_density_u(double x, double y, const ProcessParams& params,
                           const EvalPrecision& prec) {
    params.require_hits_points("potential_density_u");
    if (!(x > 0.0 && y > 0.0))
        throw std::domain_error("potential_density_u: radii must be > 0");
    double a = params.alpha, d = params.dim;
    if (x == y) {
        double pref = std::pow(kPi, -0.5) * std::pow(2.0, d / 2.0 - 2.0) *
                      gamma_real((a - 1.0) / 2.0) * gamma_real(d / 2.0) *
                      gamma_real((d - a) / 2.0) /
                      (gamma_real((a + d) / 2.0 - 1.0) * gamma_real(a / 2.0));
        return pref * std::pow(x, a - d);
    }
    double diff = std::abs(x * x - y * y);
    double arg = (x * x + y * y) / diff;
    double pref = std::pow(2.0, d / 2.0 - a) * gamma_real(d / 2.0) *
                  gamma_real((d - a) / 2.0) / gamma_real(a / 2.0);
    return pref * std::pow(x * y, 1.0 - d / 2.0) *
           std::pow(diff, a / 2.0 - 1.0) *
           legendre_p(1.0 - d / 2.0, -a / 2.0, arg, prec);
}

double hit_point_prob(double y, const ProcessParams& params,
                      const EvalPrecision& prec) {
    params.require_hits_points("hit_point_prob");
    if (y == 0.0)
        throw std::domain_error(
            "hit_point_prob: y = 0 rejected (degenerate Legendre argument)");
    double a = params.alpha, d = params.dim;
    double pref = std::pow(2.0, 2.0 - a) * std::sqrt(kPi) *
                  gamma_real((d + a) / 2.0 - 1.0) /
                  gamma_real((a - 1.0) / 2.0);
    double e2y = std::exp(2.0 * y);
    double arg = (1.0 + e2y) / std::abs(1.0 - e2y);
    return pref * std::exp((d / 2.0 - 1.0) * y) *
           std::pow(std::abs(std::expm1(-2.0 * y)), a / 2.0 - 1.0) *
           legendre_p(1.0 - d / 2.0, -a / 2.0, arg, prec);
}

HittingMatrix::HittingMatrix(std::vector<double> pts,
                             const ProcessParams& params,
                             const EvalPrecision& prec)
    : points(std::move(pts)) {
    params.require_hits_points("HittingMatrix");
    if (points.empty())
        throw std::domain_error("HittingMatrix: point set must be nonempty");
    std::sort(points.begin(), points.end());
    if (points.front() <= 0.0)
        throw std::domain_error("HittingMatrix: radii must be > 0");
    double scale = points.back();
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i] - points[i - 1] < 1e-12 * scale)
            throw std::domain_error(
                "HittingMatrix: points coincide within tolerance");
    int n = int(points.size());
    U.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v = potential_density_u(points[i], points[j], params, prec);
            U(i, j) = v;
            U(j, i) = v;
        }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(U);
    K = lu.inverse();
    auto inf_norm = [](const Eigen::MatrixXd& m) {
        return m.cwiseAbs().rowwise().sum().maxCoeff();
    };
    condition = inf_norm(U) * inf_norm(K);
}

MultiPointHit multi_point_hitting(const std::vector<double>& points, double x,
                                  const ProcessParams& params,
                                  const EvalPrecision& prec) {
    if (!(x > 0.0))
        throw std::domain_error("multi_point_hitting: start radius must be > 0");
    HittingMatrix hm(points, params, prec);
    int n = int(hm.points.size());
    Eigen::VectorXd h(n);
    for (int i = 0; i < n; ++i) {
        // starting exactly on a target point hits it immediately
        if (x == hm.points[i]) {
            MultiPointHit out{1.0, std::vector<double>(n, 0.0)};
            out.first_hit[i] = 1.0;
            return out;
        }
        h(i) = potential_density_u(x, hm.points[i], params, prec);
    }
    Eigen::VectorXd fh = hm.K * h;  // K symmetric
    MultiPointHit out;
    out.first_hit.assign(fh.data(), fh.data() + n);
    out.prob_any = fh.sum();
    return out;
}

double two_point_hitting_f(double x, double a, double b,
                           const ProcessParams& params,
                           const EvalPrecision& prec) {
    auto u = [&](double s, double t) {
        return potential_density_u(s, t, params, prec);
    };
    double num = u(x, a) / u(b, a) - u(x, b) / u(b, b);
    double den = u(a, a) / u(b, a) - u(a, b) / u(b, b);
    return num / den;
}

namespace {

// e^{(2-d)w} (e^{2w}-1)^{alpha/2-1}: kernel shared by the descending-ladder
// renewal density and the joint passage laws
double desc_kernel(double w, const ProcessParams& params) {
    double a = params.alpha, d = params.dim;
    return std::exp((2.0 - d) * w) *
           std::pow(std::expm1(2.0 * w), a / 2.0 - 1.0);
}

double triple_constant(const ProcessParams& params) {
    double a = params.alpha, d = params.dim;
    return 4.0 * a * gamma_real((a + d) / 2.0) * sin_half_alpha_pi(a) /
           (kPi * gamma_real(d / 2.0) * gamma_real(a / 2.0));
}

double quadruple_constant(const ProcessParams& params) {
    double a = params.alpha, d = params.dim;
    double ga2 = gamma_real(a / 2.0);
    return 8.0 * a * gamma_real((a + d) / 2.0) * sin_half_alpha_pi(a) /
           (kPi * gamma_real((d - a) / 2.0) * ga2 * ga2);
}

// e^{-alpha t} 2F1((alpha+d)/2, alpha/2+1; d/2; e^{-2t}): jump density
// stripped of its constant prefactor
double jump_kernel(double t, const ProcessParams& params,
                   const EvalPrecision& prec) {
    return levy_density(t, params, prec) / levy_prefactor(params);
}

}  // namespace

double triple_law_first_passage(double u, double v, double y, double x,
                                const ProcessParams& params,
                                const EvalPrecision& prec) {
    params.require_transient("triple_law_first_passage");
    if (!(x > 0.0 && u > 0.0 && y >= 0.0 && y <= x && v >= y))
        throw std::domain_error(
            "triple_law_first_passage: requires 0 <= y <= x, v >= y, u > 0");
    double a = params.alpha;
    return triple_constant(params) *
           std::pow(-std::expm1(-2.0 * (x - y)), a / 2.0 - 1.0) *
           desc_kernel(v - y, params) * jump_kernel(u + v, params, prec);
}

double triple_law_overshoot_marginal(double u, double x,
                                     const ProcessParams& params,
                                     const EvalPrecision& prec) {
    params.require_transient("triple_law_overshoot_marginal");
    if (!(x > 0.0 && u > 0.0))
        throw std::domain_error(
            "triple_law_overshoot_marginal: requires x > 0, u > 0");
    double a = params.alpha, d = params.dim;
    auto inner = [&](double y) {
        // substitute w = v - y; kernel ~ w^{alpha/2-1} at 0, decays e^{-d w}
        return integrate_to_inf_power(
            [&](double w) {
                return desc_kernel(w, params) *
                       jump_kernel(u + y + w, params, prec);
            },
            0.0, a / 2.0, d, prec);
    };
    double outer = integrate_endpoint_power(
        [&](double y) {
            return std::pow(-std::expm1(-2.0 * (x - y)), a / 2.0 - 1.0) *
                   inner(y);
        },
        0.0, x, 1.0, a / 2.0, prec);
    return triple_constant(params) * outer;
}

double quadruple_law_last_passage(double v, double u, double y, double w,
                                  double x, const ProcessParams& params,
                                  const EvalPrecision& prec) {
    params.require_transient("quadruple_law_last_passage");
    if (!(x > 0.0 && v > 0.0 && y >= 0.0 && y < x + v && u > 0.0 && w >= u))
        throw std::domain_error(
            "quadruple_law_last_passage: requires v > 0, 0 <= y < x + v, "
            "0 < u <= w");
    double a = params.alpha;
    return quadruple_constant(params) * desc_kernel(v, params) *
           desc_kernel(w - u, params) *
           std::pow(-std::expm1(-2.0 * (x + v - y)), a / 2.0 - 1.0) *
           jump_kernel(w + y, params, prec);
}

namespace {

// int_0^w desc_kernel(s) ds in closed incomplete-beta form
double desc_kernel_primitive(double w, const ProcessParams& params,
                             const EvalPrecision& prec) {
    double a = params.alpha, d = params.dim;
    return 0.5 * std::exp(log_beta(a / 2.0, (d - a) / 2.0)) *
           reg_inc_beta(-std::expm1(-2.0 * w), a / 2.0, (d - a) / 2.0, prec);
}

// W(y) = int_0^inf desc_kernel_primitive(w) jump_kernel(w + y) dw,
// i.e. the quadruple law with u and w integrated out (up to constants);
// behaves like y^{-alpha/2} near 0 and decays like e^{-alpha y}
double quadruple_uw_integrated(double y, const ProcessParams& params,
                               const EvalPrecision& prec) {
    double a = params.alpha;
    return integrate_to_inf(
        [&](double w) {
            return desc_kernel_primitive(w, params, prec) *
                   jump_kernel(w + y, params, prec);
        },
        0.0, a, prec);
}

double quadruple_y_integrated(double v, double x, const ProcessParams& params,
                              const EvalPrecision& prec) {
    double a = params.alpha;
    return integrate_endpoint_power(
        [&](double y) {
            return std::pow(-std::expm1(-2.0 * (x + v - y)), a / 2.0 - 1.0) *
                   quadruple_uw_integrated(y, params, prec);
        },
        0.0, x + v, 1.0 - a / 2.0, a / 2.0, prec);
}

}  // namespace

double quadruple_law_v_marginal(double v, double x,
                                const ProcessParams& params,
                                const EvalPrecision& prec) {
    params.require_transient("quadruple_law_v_marginal");
    if (!(x > 0.0 && v > 0.0))
        throw std::domain_error(
            "quadruple_law_v_marginal: requires x > 0, v > 0");
    EvalPrecision qp = prec;
    qp.rel_tol = std::max(prec.rel_tol, 1e-8);
    return quadruple_constant(params) * desc_kernel(v, params) *
           quadruple_y_integrated(v, x, params, qp);
}

double quadruple_law_total_mass(double x, const ProcessParams& params,
                                const EvalPrecision& prec) {
    params.require_transient("quadruple_law_total_mass");
    if (!(x > 0.0))
        throw std::domain_error("quadruple_law_total_mass: requires x > 0");
    double a = params.alpha, d = params.dim;
    EvalPrecision qp = prec;
    qp.rel_tol = std::max(prec.rel_tol, 1e-6);
    return quadruple_constant(params) *
           integrate_to_inf_power(
               [&](double v) {
                   return desc_kernel(v, params) *
                          quadruple_y_integrated(v, x, params, qp);
               },
               0.0, a / 2.0, d - a, qp);
}

double potential_kernel_r(double x, double u, double k,
                          const ProcessParams& params,
                          const EvalPrecision& prec) {
    params.require_transient("potential_kernel_r");
    if (!(k > 0.0))
        throw std::domain_error("potential_kernel_r: k must be > 0");
    if (x < 0.0 || u < 0.0)
        throw std::domain_error("potential_kernel_r: x, u must be >= 0");
    double a = params.alpha, d = params.dim;
    double lo = std::max(u - x, 0.0);
    if (!(lo < u)) return 0.0;  // empty range when x = 0 or u = 0
    // singularity order at the lower endpoint: alpha/2 from whichever factor
    // vanishes there, alpha - 1 if both do (u = x)
    double g1 = lo == 0.0 ? a / 2.0 : 1.0;
    double g2 = x + lo - u == 0.0 ? a / 2.0 : 1.0;
    double ga2 = gamma_real(a / 2.0);
    double pref = k * std::pow(2.0, 2.0 - a) / (ga2 * ga2);
    return pref * integrate_endpoint_power(
                      [&](double y) {
                          return std::pow(-std::expm1(-2.0 * y), a / 2.0 - 1.0) *
                                 std::exp((2.0 - d) * (x + y - u)) *
                                 std::pow(std::expm1(2.0 * (x + y - u)),
                                          a / 2.0 - 1.0);
                      },
                      lo, u, g1 + g2 - 1.0, 1.0, prec);
}

double expected_sigma_minus(double x, double k, const ProcessParams& params,
                            const EvalPrecision& prec) {
    params.require_transient("expected_sigma_minus");
    if (!(x > 1.0))
        throw std::domain_error("expected_sigma_minus: requires x > 1");
    if (!(k > 0.0))
        throw std::domain_error("expected_sigma_minus: k must be > 0");
    double a = params.alpha, d = params.dim;
    double beta_full = std::exp(log_beta(d / 2.0, a / 2.0));
    double tail =
        1.0 - reg_inc_beta(1.0 / (x * x), d / 2.0, a / 2.0, prec);
    return k * std::pow(x, a) / (2.0 * gamma_real(a)) * beta_full * tail;
}

}  // namespace hypstable
