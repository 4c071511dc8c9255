#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eqg/special.hpp"

using namespace eqg;

namespace {

// Reference values computed with mpmath at 30 digits, q = 0.3, p = 0.1.
constexpr double big_theta_half = 0.32886706409684301569;
constexpr double small_theta_03 = -0.70603950099703124311;
constexpr double poch_half = 0.47236244381657223655;
constexpr double gamma_half = 2.3119761109532503423;
constexpr double rho_half_n2 = 2.8565522706612361156;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("frozen reference values") {
    const EllipticParams P;
    const Theta th(P);
    CHECK(rel(theta_big(0.5, 0.1, P.order()), big_theta_half) < 1e-14);
    CHECK(rel(th.big(0.5), big_theta_half) < 1e-14);
    CHECK(rel(th(0.3), small_theta_03) < 1e-14);
    CHECK(rel(q_pochhammer(0.5, {0.1}), poch_half) < 1e-14);
    CHECK(rel(elliptic_gamma(0.5, 0.1, 0.2), gamma_half) < 1e-13);
    CHECK(rel(rho_plus(0.5, 2, P), rho_half_n2) < 1e-12);
}

TEST_CASE("theta is odd under inversion") {
    const Theta th(EllipticParams{});
    CHECK(rel(th(2.0) / th(0.5), -1.0) < 1e-14);
    for (double z : {0.2, 0.7, 1.9, 4.5}) CHECK(std::abs(th(1.0 / z) + th(z)) < 1e-13 * std::abs(th(z)));
}

TEST_CASE("quasi-periodicity and zeros") {
    const cplx p = 0.1;
    for (double z : {0.15, 0.8, 2.2, 9.0})
        CHECK(std::abs(theta_big(p * z, p) + theta_big(z, p) / z) < 1e-13 * std::abs(theta_big(z, p) / z));
    for (int k = -2; k <= 2; ++k) CHECK(std::abs(theta_big(std::pow(p, k), p)) < 1e-14);
}

TEST_CASE("gamma shift relations") {
    const cplx p = 0.1, q = 0.3;
    for (double z : {0.15, 0.5, 0.9}) {
        CHECK(rel(elliptic_gamma(p * z, p, q), theta_big(z, q) / q_pochhammer(q, {q}) * elliptic_gamma(z, p, q)) < 1e-12);
        CHECK(rel(elliptic_gamma(q * z, p, q), theta_big(z, p) / q_pochhammer(p, {p}) * elliptic_gamma(z, p, q)) < 1e-12);
    }
}

TEST_CASE("log-argument evaluation agrees and resolves near-zero arguments") {
    const Theta th(EllipticParams{});
    for (double x : {-1.3, -0.2, 0.37, 0.9, 2.1}) CHECK(rel(th.power(x), th(q_power(0.3, x))) < 1e-13);
    // theta(q^{2x}) ~ 2x log q (p;p)^3 for small x
    const double x = 1e-9;
    const cplx expect = 2.0 * x * std::log(0.3) * std::pow(q_pochhammer(0.1, {0.1}), 3);
    CHECK(rel(th.power(x), expect) < 1e-8);
}

TEST_CASE("truncation order") {
    EllipticParams P;
    CHECK(P.order() == 20);  // ceil(11 + rounding) + 8
    P.truncation_order = 40;
    CHECK(P.order() == 40);
    CHECK(rel(Theta(P)(0.7), Theta(EllipticParams{})(0.7)) < 1e-15);
}

TEST_CASE("errors") {
    const Theta th(EllipticParams{});
    CHECK_THROWS_AS(th.denom(1.0, "test"), DegenerateError);
    CHECK_THROWS_AS(th.denom_power(0.0, "test"), DegenerateError);
    CHECK_THROWS_AS(elliptic_gamma(1.0, 0.1, 0.3), PoleError);
    CHECK_THROWS_AS(theta_big(0.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(q_pochhammer(0.5, {1.2}), std::domain_error);
    EllipticParams bad;
    bad.p = 1.5;
    CHECK_THROWS_AS(Theta{bad}, std::domain_error);
}
