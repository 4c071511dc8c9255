// Standard basis of the n-fold tensor product of the N-dimensional vector
// representation. Internally every index is 0-based: mu_i in [0, N), site i in [0, n).
// Linear index is row-major: sum mu_i N^{n-1-i}.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eqg/special.hpp"

namespace eqg {

using Index = std::vector<int>;

std::size_t ipow(int base, int exp);
std::size_t encode(const Index& mu, int N);
Index decode(std::size_t idx, int N, int n);
std::vector<int> content_of(const Index& mu, int N);
// All mu with given content, in increasing linear order.
std::vector<Index> indices_with_content(const std::vector<int>& content);
std::vector<Index> all_indices(int N, int n);

// Parses a 1-based index word such as "231213" into a 0-based index.
Index parse_index_word(const std::string& word, int N);
std::string index_word(const Index& mu);

// Ordered partition (I_1, ..., I_N) of the sites; I_l = { i : mu_i = l }.
struct PartitionI {
    std::vector<std::vector<int>> sets;

    static PartitionI from_index(const Index& mu, int N);
    Index to_index() const;
    int N() const { return static_cast<int>(sets.size()); }
    int n() const;
};

struct TensorVector {
    int N = 0;
    int n = 0;
    std::vector<cplx> coeffs;

    TensorVector() = default;
    TensorVector(int N_, int n_);
    static TensorVector basis(int N, const Index& mu);

    cplx& operator[](const Index& mu) { return coeffs[encode(mu, N)]; }
    cplx operator[](const Index& mu) const { return coeffs[encode(mu, N)]; }

    // Content of the support when homogeneous, nullopt when mixed or zero.
    std::optional<std::vector<int>> content(double cutoff = 0.0) const;
    double max_abs() const;

    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    TensorVector& operator*=(cplx s);
};

TensorVector operator+(TensorVector a, const TensorVector& b);
TensorVector operator-(TensorVector a, const TensorVector& b);
TensorVector operator*(cplx s, TensorVector a);

double max_abs_diff(const TensorVector& a, const TensorVector& b);
// Residual relative to max(|a|, |b|) when that exceeds 1e-6, absolute otherwise.
double rel_residual(const TensorVector& a, const TensorVector& b);
double rel_residual(cplx a, cplx b);

struct Proportionality {
    cplx factor;       // a ~ factor * b
    double residual;   // ||a - factor b|| / ||a||
};
// Proportionality via the largest-magnitude coefficient of b, then a full residual.
Proportionality proportionality(const TensorVector& a, const TensorVector& b);

}  // namespace eqg
