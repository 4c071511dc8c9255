#pragma once

#include <vector>

#include "eqg/special.hpp"

namespace eqg {

// Dynamical exponents lambda plus an integer shift; Pi*_{j,k} = q^{2(lambda_j + s_j - lambda_k - s_k)}.
struct DynExponents {
    std::vector<cplx> lambda;
    std::vector<int> shift;

    DynExponents() = default;
    explicit DynExponents(std::vector<cplx> lam)
        : lambda(std::move(lam)), shift(lambda.size(), 0) {}
    DynExponents(std::initializer_list<double> lam) : shift(lam.size(), 0) {
        for (double x : lam) lambda.emplace_back(x);
    }

    int N() const { return static_cast<int>(lambda.size()); }
    cplx exponent(int a) const { return lambda[a] + static_cast<double>(shift[a]); }
    cplx pi_star(int j, int k, cplx q) const { return q_power(q, exponent(j) - exponent(k)); }

    DynExponents shifted(int a, int by = 1) const {
        DynExponents d = *this;
        d.shift[a] += by;
        return d;
    }
    DynExponents shifted(const std::vector<int>& content) const {
        DynExponents d = *this;
        for (std::size_t a = 0; a < content.size(); ++a) d.shift[a] += content[a];
        return d;
    }
    // Folds the integer shift into lambda.
    DynExponents flattened() const {
        DynExponents d;
        for (int a = 0; a < N(); ++a) d.lambda.push_back(exponent(a));
        d.shift.assign(lambda.size(), 0);
        return d;
    }
};

// The non-starred dynamical parameter on a weight-homogeneous vector:
// Pi_{j,k} = q^{2(lambda + content)_{j,k}}.
struct DynWeight {
    DynExponents dyn;
    std::vector<int> content;

    cplx pi(int j, int k, cplx q) const {
        return q_power(q, dyn.exponent(j) + static_cast<double>(content[j]) - dyn.exponent(k) -
                              static_cast<double>(content[k]));
    }
};

}  // namespace eqg
