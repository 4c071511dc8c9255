#pragma once

#include <utility>
#include <vector>

#include "eqg/basis.hpp"
#include "eqg/dynamics.hpp"

namespace eqg {

// Dense N^2 x N^2 matrix on V (x) V; row/col index (i1, i2) -> i1 N + i2.
struct RMatrix {
    int N = 0;
    std::vector<cplx> entries;
    cplx spectral_point;
    DynExponents dyn;

    cplx& at(int i1, int i2, int j1, int j2) { return entries[(i1 * N + i2) * N * N + j1 * N + j2]; }
    cplx at(int i1, int i2, int j1, int j2) const { return entries[(i1 * N + i2) * N * N + j1 * N + j2]; }
};

// Image of a two-site basis vector: at most two terms (ice rule).
struct PairTerm {
    int first;
    int second;
    cplx coeff;
};
struct PairImage {
    int size = 0;
    PairTerm terms[2];
};

// Rbar(z, Pi*) v_{k1} (x) v_{k2}.
PairImage rbar_map(cplx z, const DynExponents& dyn, int k1, int k2, const Theta& th);
// theta(q^2 z) Rbar(z, Pi*) in the cancelled form (entire in z).
PairImage rtilde_map(cplx z, const DynExponents& dyn, int k1, int k2, const Theta& th);

RMatrix rbar_matrix(cplx z, const DynExponents& dyn, const EllipticParams& params, int N);
RMatrix rtilde_matrix(cplx z, const DynExponents& dyn, const EllipticParams& params, int N);

// True when every entry violating the multiset rule is exactly zero.
bool check_ice_rule(const RMatrix& R);

double check_dybe(cplx z1, cplx z2, cplx z3, const DynExponents& dyn, const EllipticParams& params, int N);
double check_unitarity(cplx z, const DynExponents& dyn, const EllipticParams& params, int N);

// P^{(i,i+1)} Rbar^{(i,i+1)}(z_i/z_{i+1}, Pi* shifted by the contents of slots < i),
// followed by swapping z_i and z_{i+1}.
std::pair<TensorVector, std::vector<cplx>> stilde_apply(int i, const TensorVector& v, const DynExponents& dyn,
                                                        const std::vector<cplx>& zs, const EllipticParams& params);

}  // namespace eqg
