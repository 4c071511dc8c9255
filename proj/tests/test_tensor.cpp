#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqg/rmatrix.hpp"
#include "eqg/tensor.hpp"

using namespace eqg;

TEST_CASE("index words and encoding") {
    const Index mu = parse_index_word("231213", 3);
    CHECK(mu == Index{1, 2, 0, 1, 0, 2});
    CHECK(index_word(mu) == "231213");
    CHECK(decode(encode(mu, 3), 3, 6) == mu);
    CHECK(encode({1, 0}, 2) == 2);
    CHECK(content_of(mu, 3) == std::vector<int>{2, 2, 2});
    CHECK(indices_with_content({2, 1}).size() == 3);
    CHECK(all_indices(3, 4).size() == 81);
    CHECK_THROWS_AS(parse_index_word("14", 3), std::domain_error);
    const PartitionI I = PartitionI::from_index(parse_index_word("112", 2), 2);
    CHECK(I.sets == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(I.to_index() == Index{0, 0, 1});
}

TEST_CASE("one site: L entries are R-tilde weights") {
    const EllipticParams P;
    const Theta th(P);
    const DynExponents d{0.37, 0.11, 0.0};
    const std::vector<cplx> w{0.8};
    const cplx z = 1.3;
    for (int l = 0; l < 3; ++l)
        for (int j = 0; j < 3; ++j) {
            const PairImage img = rtilde_map(z / w[0], d, l, j, th);
            for (int k = 0; k < 3; ++k) {
                const TensorVector out = apply_l_entry(k, l, z, TensorVector::basis(3, {j}), d, w, P);
                for (int s = 0; s < 3; ++s) {
                    cplx expect = 0.0;
                    for (int t = 0; t < img.size; ++t)
                        if (img.terms[t].first == k && img.terms[t].second == s) expect += img.terms[t].coeff;
                    CHECK(std::abs(out[{s}] - expect) < 1e-13 * (1.0 + std::abs(expect)));
                }
            }
        }
}

TEST_CASE("word composition threads the dynamical shift") {
    const EllipticParams P;
    const DynExponents d{0.37, 0.0};
    const std::vector<cplx> w{1.1, 0.7};
    const TensorVector v = TensorVector::basis(2, {1, 0});
    // L_{01}(z) L_{10}(u): the right factor sees lambda shifted by e_1, the column of the left one
    LWord word{{{0, 1, 1.3}, {1, 0, 0.6}}, {}};
    const TensorVector inner = apply_l_entry(1, 0, 0.6, v, d.shifted(1), w, P);
    const TensorVector outer = apply_l_entry(0, 1, 1.3, inner, d, w, P);
    CHECK(rel_residual(apply_lword(word, v, d, w, P), outer) < 1e-14);
    CHECK(word.column_weight(2) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(apply_operator(Operator{}, v, d, w, P), std::domain_error);
}

TEST_CASE("partition function: sequential and enumerated agree") {
    const EllipticParams P;
    const DynExponents d{0.37, 0.11, 0.0};
    const std::vector<cplx> w{1.1, 0.7, 0.45};
    const std::vector<int> K{0, 1}, L{1, 2};
    const std::vector<cplx> zs{0.9, 1.6};
    const Index alpha{0, 1, 2};
    int nonzero = 0;
    for (const Index& beta : all_indices(3, 3)) {
        const cplx seq = partition_z(K, L, zs, alpha, beta, d, w, P);
        const cplx en = partition_z(K, L, zs, alpha, beta, d, w, P, PartitionMode::Enumerate, Exec::Serial);
        const cplx par = partition_z(K, L, zs, alpha, beta, d, w, P, PartitionMode::Enumerate, Exec::Parallel);
        CHECK(rel_residual(seq, en) < 1e-12);
        CHECK(rel_residual(seq, par) < 1e-12);
        nonzero += std::abs(seq) > 1e-12;
    }
    CHECK(nonzero > 0);
    CHECK_THROWS_AS(partition_z({0}, {0, 1}, zs, alpha, alpha, d, w, P), std::domain_error);
}
