#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqg/gt_bases.hpp"
#include "eqg/minors.hpp"

using namespace eqg;

namespace {

const std::vector<cplx> w3{1.1, 0.7, 0.45};
const DynExponents lam2{0.37, 0.0};
const DynExponents lam3{0.37, 0.11, 0.0};

}  // namespace

TEST_CASE("frozen coefficients of xi-tilde 112") {
    // mpmath at 30 digits, N = 2, w = (1.1, 0.7, 0.45), lambda = (0.37, 0)
    const TensorVector x = build_xi_tilde(parse_index_word("112", 2), 2, lam2, w3, EllipticParams{});
    CHECK(std::abs(x[parse_index_word("211", 2)] - 0.16193072472550566282) < 1e-14);
    CHECK(std::abs(x[parse_index_word("121", 2)] - (-0.072866462681073765774)) < 1e-14);
    CHECK(std::abs(x[parse_index_word("112", 2)] - 0.045985232533811389365) < 1e-14);
    CHECK(std::abs(x[parse_index_word("122", 2)]) == 0.0);
}

TEST_CASE("the all-ones vector is its own GT vector") {
    const TensorVector x = build_xi_tilde(Index{0, 0, 0}, 3, lam3, w3, EllipticParams{});
    CHECK(x.content() == std::vector<int>{3, 0, 0});
    CHECK(std::abs(x[{0, 0, 0}]) > 0.0);
}

TEST_CASE("eigenvectors of the A family, N = 3, n = 3") {
    const EllipticParams P;
    for (const Index& mu : all_indices(3, 3)) {
        const DynVector xv = [&](const DynExponents& d) { return build_xi_tilde(mu, 3, d, w3, P); };
        const TensorVector x = xv(lam3);
        for (int l = 1; l <= 3; ++l)
            for (cplx z : {cplx(0.8), cplx(1.7)})
                CHECK(rel_residual(apply_operator(A_operator(l, 3, z, P), xv, lam3, w3, P), eigenvalue_a(l, z, mu, 3, w3, P) * x) < 1e-11);
    }
}

TEST_CASE("three constructions agree up to the stated factors") {
    const EllipticParams P;
    for (const Index& mu : all_indices(3, 3)) {
        const TensorVector t = build_xi_tilde(mu, 3, lam3, w3, P);
        CHECK(rel_residual(build_xi_minor(mu, 3, lam3, w3, P), relation_factor(mu, 3, w3, P) * t) < 1e-12);
        CHECK(rel_residual(t, normalization_n(mu, 3, w3, P) * build_xi_prime(mu, 3, lam3, w3, P)) < 1e-12);
        CHECK(rel_residual(build_xi_prime(mu, 3, lam3, w3, P, Ascent::First), build_xi_prime(mu, 3, lam3, w3, P, Ascent::Last)) < 1e-12);
    }
}

TEST_CASE("diagonal coefficient and column recursion") {
    const EllipticParams P;
    for (const Index& mu : all_indices(3, 3)) {
        CHECK(rel_residual(zk_partition(mu, 0, 3, lam3, w3, P), xtilde_diagonal(mu, 3, w3, P)) < 1e-12);
        CHECK(rel_residual(zk_partition(mu, 3, 3, lam3, w3, P), 1.0) < 1e-15);
        for (int k = 0; k < 3; ++k)
            CHECK(rel_residual(zk_partition(mu, k, 3, lam3, w3, P), wk_factor(mu, k, 3, w3, P) * zk_partition(mu, k + 1, 3, lam3, w3, P)) < 1e-12);
    }
}

TEST_CASE("worked normalization, N = 2") {
    const EllipticParams P;
    const Theta th(P);
    const cplx q2 = th.q2();
    const cplx expect = th.theta_q2() * th(q2 * w3[2] / w3[0]) * th(q2 * w3[2] / w3[1]);
    CHECK(rel_residual(normalization_n(Index{0, 0, 1}, 2, w3, P), expect) < 1e-14);
}
