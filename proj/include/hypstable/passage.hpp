#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hypstable/model.hpp"
#include "hypstable/precision.hpp"

namespace hypstable {

enum class LawKind { Density, CDF };

/// Exit density of the stable process from the unit ball: density in z of
/// the position at first exit (started at y inside) or first entrance
/// (started at y outside). Exactly one of |y|, |z| must be inside.
double blumenthal_exit_density(const Eigen::VectorXd& y,
                               const Eigen::VectorXd& z,
                               const ProcessParams& params);

/// Density in theta > 0 of the overshoot above level u > 0 at first
/// upward passage. Integrates to one.
double overshoot_density(double theta, double u, const ProcessParams& params);

/// CDF of the overshoot law at theta >= 0.
double overshoot_cdf(double theta, double u, const ProcessParams& params,
                     const EvalPrecision& prec = {});

/// Total mass of the overshoot density (quadrature; equals 1).
double overshoot_mass(double u, const ProcessParams& params,
                      const EvalPrecision& prec = {});

/// Overshoot CDF evaluated on a sorted grid of abscissae by cumulative
/// incremental quadrature (one panel per gap instead of one full
/// integral per point).
std::vector<double> overshoot_cdf_grid(const std::vector<double>& sorted_thetas,
                                       double u, const ProcessParams& params,
                                       const EvalPrecision& prec = {});

/// Defective density in theta > 0 of the undershoot below level v < 0.
/// Total mass is the probability of ever passing below v.
double undershoot_density(double theta, double v, const ProcessParams& params);

/// Quadrature total mass of the undershoot density; equals
/// 1 - infimum_law(-v, CDF).
double undershoot_mass(double v, const ProcessParams& params,
                       const EvalPrecision& prec = {});

/// Law of the negative of the all-time infimum (z >= 0): density or CDF.
/// CDF is the regularized incomplete beta I_{1-e^{-2z}}(a/2, (d-a)/2).
double infimum_law(double z, const ProcessParams& params, LawKind kind,
                   const EvalPrecision& prec = {});

/// Potential density u(x, y) of the radial process, x, y > 0;
/// symmetric, finite on the diagonal. Requires 1 < alpha < dim.
double potential_density_u(double x, double y, const ProcessParams& params,
                           const EvalPrecision& prec = {});

/// Probability that the log-radial process ever hits level y != 0,
/// starting from 0. Requires 1 < alpha < dim.
double hit_point_prob(double y, const ProcessParams& params,
                      const EvalPrecision& prec = {});

/// Dense matrix of pairwise potential densities over a finite point set
/// together with its inverse, used for multi-point hitting probabilities.
struct HittingMatrix {
    std::vector<double> points;  // strictly increasing radii
    Eigen::MatrixXd U;           // U(i,j) = u(points[i], points[j])
    Eigen::MatrixXd K;           // U^{-1}
    double condition;            // inf-norm condition estimate of U

    HittingMatrix(std::vector<double> pts, const ProcessParams& params,
                  const EvalPrecision& prec = {});
};

struct MultiPointHit {
    double prob_any;                // probability of ever hitting the set
    std::vector<double> first_hit;  // per-point first-hit probabilities
};

/// Port's formula: first-hit decomposition of the hitting probability of a
/// finite set of radii, started from radius x.
MultiPointHit multi_point_hitting(const std::vector<double>& points, double x,
                                  const ProcessParams& params,
                                  const EvalPrecision& prec = {});

/// Closed two-point form: probability, starting from radius x, of hitting
/// radius a before radius b (and hitting a at all if b is never hit).
double two_point_hitting_f(double x, double a, double b,
                           const ProcessParams& params,
                           const EvalPrecision& prec = {});

/// Joint density at first passage above level x of
/// (overshoot u, undershoot v below x, undershoot y of the running supremum).
/// Domain: 0 <= y <= x, v >= y, u > 0.
double triple_law_first_passage(double u, double v, double y, double x,
                                const ProcessParams& params,
                                const EvalPrecision& prec = {});

/// Marginal of the triple law over (v, y): recovers the overshoot density.
double triple_law_overshoot_marginal(double u, double x,
                                     const ProcessParams& params,
                                     const EvalPrecision& prec = {});

/// Joint density at the last passage below level x of
/// (-initial infimum v, last-passage undershoots y, w and overshoot u).
/// Domain: v > 0, 0 <= y < x + v, 0 < u <= w.
double quadruple_law_last_passage(double v, double u, double y, double w,
                                  double x, const ProcessParams& params,
                                  const EvalPrecision& prec = {});

/// Marginal of the quadruple law in v (integrating out u, y, w);
/// equals the infimum density at v, independent of x.
double quadruple_law_v_marginal(double v, double x,
                                const ProcessParams& params,
                                const EvalPrecision& prec = {});

/// Total mass of the quadruple law over its domain (iterated quadrature).
double quadruple_law_total_mass(double x, const ProcessParams& params,
                                const EvalPrecision& prec = {});

/// Potential kernel of the radial process killed below level one, up to the
/// unknown positive constant k (surfaced as an explicit argument).
double potential_kernel_r(double x, double u, double k,
                          const ProcessParams& params,
                          const EvalPrecision& prec = {});

/// Expected time spent above level one before first passage below it,
/// started from x > 1, up to the same constant k.
double expected_sigma_minus(double x, double k, const ProcessParams& params,
                            const EvalPrecision& prec = {});

}  // namespace hypstable
