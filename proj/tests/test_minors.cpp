#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "eqg/gt_bases.hpp"
#include "eqg/minors.hpp"

using namespace eqg;

namespace {

TensorVector sample_vector(int N, int n) {
    TensorVector v(N, n);
    for (std::size_t i = 0; i < v.coeffs.size(); ++i) v.coeffs[i] = std::cos(0.3 + 1.7 * static_cast<double>(i));
    return v;
}

}  // namespace

TEST_CASE("sgn* of the identity is one") {
    const EllipticParams P;
    CHECK(sgn_star({0, 1, 2}, {0, 1, 2}, DynExponents{0.37, 0.11, 0.0}, P) == cplx(1.0));
}

TEST_CASE("one-by-one minors are L entries") {
    const EllipticParams P;
    const DynExponents d{0.37, 0.11, 0.0};
    const std::vector<cplx> w{1.1, 0.7};
    const TensorVector v = sample_vector(3, 2);
    CHECK(rel_residual(apply_minor({{1}, {2}, 0.8}, v, d, w, P), apply_l_entry(1, 2, 0.8, v, d, w, P)) < 1e-15);
}

TEST_CASE("exchange property, N = 3") {
    const EllipticParams P;
    const DynExponents d{0.37, 0.11, 0.0};
    const std::vector<cplx> w{1.1, 0.7};
    const TensorVector v = sample_vector(3, 2);
    const std::vector<int> J{0, 1, 2};
    const TensorVector ref = apply_minor({J, J, 0.9}, v, d, w, P);
    std::vector<int> tau{0, 1, 2};
    while (std::next_permutation(tau.begin(), tau.end())) {
        std::vector<int> K(3);
        for (int a = 0; a < 3; ++a) K[a] = J[tau[a]];
        Operator op = minor_operator({J, K, 0.9}, P);
        for (LWord& word : op)
            word.scalars.push_back({0, [&](const DynExponents& dd, const std::vector<int>&) { return sgn_star(J, tau, dd, P); }, "sgn"});
        CHECK(rel_residual(apply_operator(op, v, d, w, P), ref) < 1e-12);
    }
}

TEST_CASE("expansions agree with the defining sum") {
    const EllipticParams P;
    const DynExponents d{0.37, 0.11, 0.0};
    const std::vector<cplx> w{1.1, 0.7};
    const TensorVector v = sample_vector(3, 2);
    for (const MinorSpec& s : {MinorSpec{{0, 1}, {1, 2}, 1.3}, MinorSpec{{0, 2}, {0, 1}, 0.6}, MinorSpec{{0, 1, 2}, {0, 1, 2}, 0.8}}) {
        const TensorVector ref = apply_minor(s, v, d, w, P);
        CHECK(rel_residual(apply_operator(minor_operator_column(s, P), v, d, w, P), ref) < 1e-12);
        CHECK(rel_residual(apply_operator(minor_operator_rowsum(s, P), v, d, w, P), ref) < 1e-12);
    }
}

TEST_CASE("quantum determinant acts by a scalar") {
    const EllipticParams P;
    const DynExponents d{0.37, 0.11, 0.0};
    const std::vector<cplx> w{1.1, 0.7};
    const cplx e = eigenvalue_a(1, 0.9, Index{0, 0}, 3, w, P);
    for (const Index& mu : all_indices(3, 2)) {
        const TensorVector b = TensorVector::basis(3, mu);
        CHECK(rel_residual(apply_A(1, 0.9, b, d, w, P), e * b) < 1e-12);
    }
}

TEST_CASE("commuting families, N = 3, n = 2") {
    const EllipticParams P;
    const DynExponents d{0.37, 0.11, 0.0};
    const std::vector<cplx> w{1.1, 0.7};
    const TensorVector v = sample_vector(3, 2);
    const cplx z = 0.85, u = 1.45;
    auto comm = [&](const Operator& X, const Operator& Y) {
        return rel_residual(apply_operator(compose(X, Y), v, d, w, P), apply_operator(compose(Y, X), v, d, w, P));
    };
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            CHECK(comm(A_operator(a, 3, z, P), A_operator(b, 3, u, P)) < 1e-12);
            if (b >= 2 && a != b) {
                CHECK(comm(A_operator(a, 3, z, P), B_operator(b, 3, u, P)) < 1e-12);
                CHECK(comm(A_operator(a, 3, z, P), C_operator(b, 3, u, P)) < 1e-12);
            }
        }
    CHECK(comm(B_operator(2, 3, z, P), C_operator(3, 3, u, P)) < 1e-12);
    CHECK(comm(B_operator(2, 3, z, P), B_operator(2, 3, u, P)) < 1e-12);
    CHECK(comm(C_operator(3, 3, z, P), C_operator(3, 3, u, P)) < 1e-12);
}

TEST_CASE("minor specs") {
    const MinorSpec a = A_spec(2, 3, 1.0), b = B_spec(2, 3, 1.0), c = C_spec(2, 3, 1.0);
    CHECK(a.rows == std::vector<int>{1, 2});
    CHECK(a.cols == std::vector<int>{1, 2});
    CHECK(b.rows == std::vector<int>{0, 2});
    CHECK(b.cols == std::vector<int>{1, 2});
    CHECK(c.rows == b.cols);
    CHECK(c.cols == b.rows);
    CHECK_THROWS(A_operator(0, 3, 1.0, EllipticParams{}));
    CHECK_THROWS(B_operator(1, 3, 1.0, EllipticParams{}));
}
