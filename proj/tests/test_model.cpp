#include <cmath>
#include <complex>

#include <doctest.h>

#include "hypstable/model.hpp"

using namespace hypstable;

namespace {
constexpr double kPi = 3.14159265358979323846;

void check_rel(double got, double want, double tol = 1e-11) {
    CHECK(std::abs(got - want) <= tol * std::abs(want));
}
}  // namespace

TEST_CASE("parameter validation is eager") {
    CHECK_THROWS_AS(ProcessParams(2.0, 3), std::domain_error);
    CHECK_THROWS_AS(ProcessParams(0.0, 3), std::domain_error);
    CHECK_THROWS_AS(ProcessParams(-0.5, 3), std::domain_error);
    CHECK_THROWS_AS(ProcessParams(1.5, 1), std::domain_error);
    CHECK_THROWS_AS(ProcessParams(1.0, 0), std::domain_error);
    CHECK(ProcessParams(1.0, 1).regime() == Regime::CauchyBoundary);
    CHECK(ProcessParams(0.7, 2).regime() == Regime::StrictlyTransient);
    CHECK(ProcessParams(1.5, 3).regime() == Regime::HitsPoints);
    CHECK_FALSE(ProcessParams(1.0, 1).strictly_transient());
    CHECK_THROWS_AS(ProcessParams(1.0, 1).require_transient("x"),
                    std::domain_error);
    CHECK_THROWS_AS(ProcessParams(0.7, 2).require_hits_points("x"),
                    std::domain_error);
}

TEST_CASE("jump density d=1 closed-form split values") {
    // alpha = 1/2, y = 1: both parts against their displayed closed forms
    double C = 0.199471140200716339;
    auto [pi1, pi2] = levy_density_d1_split(1.0, 0.5);
    check_rel(pi1, 0.240731518962622073);
    check_rel(pi2, 0.075624252646374512);
    check_rel(pi1, C * std::exp(1.0) / std::pow(std::exp(1.0) - 1.0, 1.5));
    check_rel(pi2, C * std::exp(1.0) / std::pow(std::exp(1.0) + 1.0, 1.5));
    // negative side uses (1 - e^y)^{-alpha-1}
    auto [n1, n2] = levy_density_d1_split(-0.5, 0.5);
    check_rel(n1, C * std::exp(-0.5) /
                      std::pow(1.0 - std::exp(-0.5), 1.5));
}

TEST_CASE("d=1 split sums to the density") {
    for (double alpha : {0.3, 0.5, 0.8, 1.0}) {
        ProcessParams p(alpha, 1);
        for (double y : {-3.0, -1.0, -0.1, 0.1, 1.0, 3.0}) {
            auto [pi1, pi2] = levy_density_d1_split(y, alpha);
            check_rel(pi1 + pi2, levy_density(y, p), 1e-10);
        }
    }
    CHECK_THROWS_AS(levy_density_d1_split(1.0, 1.5), std::domain_error);
}

TEST_CASE("exchange identity relates the two sides of the jump density") {
    for (auto [alpha, dim] : {std::pair{0.5, 1}, {1.0, 3}, {1.5, 2}}) {
        ProcessParams p(alpha, dim);
        for (int i = 1; i <= 20; ++i) {
            double y = 0.25 * i;
            double lhs = levy_density(-y, p);
            double rhs = std::exp((alpha - dim) * y) * levy_density(y, p);
            check_rel(lhs, rhs, 1e-9);
        }
    }
}

TEST_CASE("density route agrees with the generator form") {
    for (auto [alpha, dim] : {std::pair{1.0, 3}, {0.5, 2}, {1.5, 3}}) {
        ProcessParams p(alpha, dim);
        for (double y : {-2.0, -0.25, 0.1, 0.7, 3.0})
            check_rel(levy_density(y, p),
                      levy_density_generator_form(y, p), 1e-9);
    }
}

TEST_CASE("tail decay rate and origin blow-up exponent") {
    ProcessParams p(1.0, 3);
    check_rel(levy_density(20.0, p) * std::exp(20.0) / levy_prefactor(p), 1.0,
              1e-6);
    // log-log slope near the origin approaches -(alpha + 1)
    for (auto [alpha, dim] : {std::pair{0.6, 2}, {1.4, 3}}) {
        ProcessParams q(alpha, dim);
        double slope = (std::log(levy_density(1e-4, q)) -
                        std::log(levy_density(1e-3, q))) /
                       (std::log(1e-4) - std::log(1e-3));
        CHECK(std::abs(slope + alpha + 1.0) < 0.05);
    }
}

TEST_CASE("truncation function is compactly supported and near-linear at 0") {
    ProcessParams p(1.0, 2);
    CHECK(truncation_ell(1.0, p) == 0.0);
    CHECK(truncation_ell(-1.5, p) == 0.0);
    double slope = truncation_ell(1e-7, p) / 1e-7;
    check_rel(slope, std::pow(2.0, (1.0 + 2.0) / 2.0 - 1.0), 1e-6);
}

TEST_CASE("drift values") {
    CHECK(drift_b(ProcessParams(1.0, 1)) == 0.0);
    check_rel(drift_b(ProcessParams(0.5, 2)), -0.205992358351599358, 1e-9);
    check_rel(drift_b(ProcessParams(1.5, 3)), -0.872336355686148433, 1e-9);
    check_rel(drift_b(ProcessParams(1.0, 3)), -0.603555004199139341, 1e-9);
}

TEST_CASE("characteristic exponent by quadrature") {
    ProcessParams p(1.0, 1);
    LevyCharacteristics chars(p);
    CHECK(char_exponent_numeric(0.0, chars) == std::complex<double>(0.0, 0.0));
    auto v = char_exponent_numeric(1.0, chars);
    check_rel(v.real(), std::tanh(kPi / 2.0), 1e-8);
    CHECK(std::abs(v.imag()) < 1e-10);

    ProcessParams q(0.8, 2);
    LevyCharacteristics qc(q);
    for (double l : {0.5, 2.0}) {
        auto plus = char_exponent_numeric(l, qc);
        auto minus = char_exponent_numeric(-l, qc);
        CHECK(plus.real() > 0.0);
        check_rel(minus.real(), plus.real(), 1e-10);
        check_rel(minus.imag(), -plus.imag(), 1e-8);
    }
}

TEST_CASE("f_bar domain is the open unit interval") {
    ProcessParams p(1.0, 2);
    CHECK_THROWS_AS(f_bar(1.0, p), std::domain_error);
    CHECK(f_bar(0.0, p) == doctest::Approx(levy_prefactor(p)));
}
