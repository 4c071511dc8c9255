#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqg/gt_bases.hpp"
#include "eqg/weight_functions.hpp"

using namespace eqg;

namespace {

const std::vector<cplx> w3{1.1, 0.7, 0.45};
const DynExponents lam2{0.37, 0.0};
const DynExponents lam3{0.37, 0.11, 0.0};

}  // namespace

TEST_CASE("worked example values, N = 2, I = ({1,2},{3})") {
    const EllipticParams P;
    const Theta th(P);
    const cplx q2 = th.q2(), t2 = th.theta_q2();
    const cplx Ps = lam2.pi_star(0, 1, P.q);
    const cplx r31 = w3[2] / w3[0], r32 = w3[2] / w3[1];
    const Index I{0, 0, 1};
    CHECK(rel_residual(w_tilde_at({1, 0, 0}, I, 2, w3, lam2, P).value,
                       th(Ps * r31 / q2) * t2 / (th(q2 * r31) * th(Ps / q2))) < 1e-13);
    CHECK(rel_residual(w_tilde_at({0, 1, 0}, I, 2, w3, lam2, P).value,
                       th(r31) * th(Ps * r32) * t2 / (th(q2 * r31) * th(q2 * r32) * th(Ps))) < 1e-13);
    CHECK(rel_residual(w_tilde_at({0, 0, 1}, I, 2, w3, lam2, P).value,
                       th(r31) * th(r32) / (th(q2 * r31) * th(q2 * r32))) < 1e-13);
}

TEST_CASE("diagonal closed form") {
    const EllipticParams P;
    for (const Index& mu : all_indices(3, 3))
        CHECK(rel_residual(w_tilde_at(mu, mu, 3, w3, lam3, P).value, w_tilde_diagonal(mu, w3, P)) < 1e-12);
}

TEST_CASE("partial order") {
    CHECK(partial_order_leq({0, 1}, {0, 1}, 2));
    CHECK(partial_order_leq({0, 1}, {1, 0}, 2) != partial_order_leq({1, 0}, {0, 1}, 2));
}

TEST_CASE("change of basis is triangular and expands xi-prime") {
    const EllipticParams P;
    const ChangeOfBasis X = change_of_basis({1, 1, 1}, lam3, w3, P);
    REQUIRE(X.size() == 6);
    for (std::size_t i = 0; i < X.size(); ++i) {
        CHECK(std::abs(X.at(i, i)) > 1e-6);
        for (std::size_t j = 0; j < X.size(); ++j)
            if (!partial_order_leq(X.labels[i], X.labels[j], 3)) CHECK(std::abs(X.at(i, j)) < 1e-12);
    }
    for (const Index& I : all_indices(3, 3))
        CHECK(rel_residual(build_xi_prime(I, 3, lam3, w3, P), weight_function_expansion(I, 3, lam3, w3, P)) < 1e-12);
}

TEST_CASE("serial and parallel evaluation agree") {
    const EllipticParams P;
    const std::vector<cplx> w4{1.1, 0.7, 0.45, 1.9};
    const ChangeOfBasis A = change_of_basis({2, 1, 1}, lam3, w4, P, Exec::Serial);
    const ChangeOfBasis B = change_of_basis({2, 1, 1}, lam3, w4, P, Exec::Parallel);
    REQUIRE(A.matrix.size() == B.matrix.size());
    for (std::size_t i = 0; i < A.matrix.size(); ++i) CHECK(rel_residual(A.matrix[i], B.matrix[i]) < 1e-14);
    const Index mu{0, 1, 0, 2};
    const TriangularVars tv = specialize({0, 0, 1, 2}, 3, w4);
    CHECK(rel_residual(w_tilde(mu, 3, tv, lam3, P, Exec::Serial), w_tilde(mu, 3, tv, lam3, P, Exec::Parallel)) < 1e-14);
}

TEST_CASE("partition identity") {
    const EllipticParams P;
    for (const Index& I : all_indices(2, 3))
        for (const Index& mu : indices_with_content(content_of(I, 2)))
            CHECK(verify_partition_identity(I, mu, 2, lam2, w3, P) < 1e-12);
    CHECK(verify_partition_identity({0, 1, 2}, {2, 1, 0}, 3, lam3, w3, P) < 1e-12);
}
