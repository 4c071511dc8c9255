#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqg/rmatrix.hpp"

using namespace eqg;

TEST_CASE("frozen vertex weight") {
    // mpmath at 30 digits: b(0.4, Pi*) at lambda = (0.37, 0)
    const Theta th(EllipticParams{});
    const PairImage img = rbar_map(0.4, DynExponents{0.37, 0.0}, 0, 1, th);
    REQUIRE(img.size == 2);
    CHECK(img.terms[0].first == 0);
    CHECK(img.terms[0].second == 1);
    CHECK(std::abs(img.terms[0].coeff - (-1.272062956727789774)) < 1e-13);
}

TEST_CASE("ice rule and permutation at z = 1") {
    const EllipticParams P;
    for (int N : {2, 3, 4}) {
        DynExponents d(std::vector<cplx>(N, 0.0));
        for (int a = 0; a + 1 < N; ++a) d.lambda[a] = 0.37 - 0.11 * a;
        CHECK(check_ice_rule(rbar_matrix(0.8, d, P, N)));
        CHECK(check_ice_rule(rtilde_matrix(0.8, d, P, N)));
        const RMatrix R = rbar_matrix(1.0, d, P, N);
        for (int i1 = 0; i1 < N; ++i1)
            for (int i2 = 0; i2 < N; ++i2)
                for (int j1 = 0; j1 < N; ++j1)
                    for (int j2 = 0; j2 < N; ++j2)
                        CHECK(std::abs(R.at(i1, i2, j1, j2) - ((i1 == j2 && i2 == j1) ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("dynamical Yang-Baxter equation and unitarity") {
    const EllipticParams P;
    CHECK(check_dybe(1.3, 0.7, 2.1, DynExponents{0.37, 0.0}, P, 2) < 1e-11);
    CHECK(check_dybe(0.45, 1.9, 1.1, DynExponents{0.37, 0.11, 0.0}, P, 3) < 1e-11);
    CHECK(check_unitarity(1.7, DynExponents{0.37, 0.0}, P, 2) < 1e-12);
    CHECK(check_unitarity(0.6, DynExponents{0.37, 0.11, 0.0}, P, 3) < 1e-12);
}

TEST_CASE("cancelled form is theta(q^2 z) times Rbar") {
    const EllipticParams P;
    const Theta th(P);
    const DynExponents d{0.37, 0.11, 0.0};
    const RMatrix A = rtilde_matrix(1.4, d, P, 3), B = rbar_matrix(1.4, d, P, 3);
    for (std::size_t i = 0; i < A.entries.size(); ++i)
        CHECK(std::abs(A.entries[i] - th(0.09 * 1.4) * B.entries[i]) < 1e-13 * (1.0 + std::abs(A.entries[i])));
    // entire in z: finite where Rbar has its pole
    CHECK_THROWS_AS(rbar_matrix(1.0 / 0.09, d, P, 3), DegenerateError);
    CHECK_NOTHROW(rtilde_matrix(1.0 / 0.09, d, P, 3));
}

TEST_CASE("S-tilde involution and braid relation") {
    const EllipticParams P;
    const DynExponents d{0.37, 0.11, 0.0};
    const std::vector<cplx> zs{1.1, 0.7, 0.45};
    TensorVector v(3, 3);
    for (std::size_t i = 0; i < v.coeffs.size(); ++i) v.coeffs[i] = std::sin(1.0 + static_cast<double>(i));
    for (int i = 0; i < 2; ++i) {
        const auto [a, za] = stilde_apply(i, v, d, zs, P);
        const auto [b, zb] = stilde_apply(i, a, d, za, P);
        CHECK(rel_residual(b, v) < 1e-12);
        CHECK(zb == zs);
    }
    auto chain = [&](std::initializer_list<int> order) {
        TensorVector x = v;
        std::vector<cplx> z = zs;
        for (int i : order) std::tie(x, z) = stilde_apply(i, x, d, z, P);
        return x;
    };
    CHECK(rel_residual(chain({0, 1, 0}), chain({1, 0, 1})) < 1e-12);
    CHECK_THROWS_AS(stilde_apply(2, v, d, zs, P), std::domain_error);
}
