// Quantum minors l(z)_I^J at level 0 and the operators A_l, B_m, C_m.
// Rows/columns are 0-based label lists.
#pragma once

#include <vector>

#include "eqg/tensor.hpp"

namespace eqg {

struct MinorSpec {
    std::vector<int> rows;
    std::vector<int> cols;  // any order; increasing gives the standard minor
    cplx z;
};

// Product over inversions a<b, sigma(a)>sigma(b) of f(J[sigma a], J[sigma b]) with
// f(x,y) = theta(q^2 Pi*_{xy}) / theta(Pi*_{yx}) for x > y and the reciprocal of
// f(y,x) for x < y. For increasing J this is the usual sgn*.
cplx sgn_star(const std::vector<int>& J, const std::vector<int>& sigma, const DynExponents& dyn,
              const EllipticParams& params);

// Sum over sigma of [sgn*_J(sigma) leftmost] L_{I0 J(sigma0)}(z) L_{I1 J(sigma1)}(z q^-2) ...
Operator minor_operator(const MinorSpec& spec, const EllipticParams& params);

// Sum over sigma of [sgn_I(sigma) leftmost] L_{I(sigma(k-1)) J(k-1)}(z q^{-2(k-1)}) ... L_{I(sigma0) J0}(z),
// with sgn_I built from Pi_{ab} = q^{-2(lambda + content)_{ab}} of the vector it multiplies.
Operator minor_operator_rowsum(const MinorSpec& spec, const EllipticParams& params);

// Expansion along the first column:
// sum_l [prod_{a<l} theta(q^2 Pi_{I_l I_a}) / theta(Pi_{I_a I_l})] l(zq^-2)_{I\I_l}^{J\J_0} L_{I_l J_0}(z),
// Pi as in minor_operator_rowsum.
Operator minor_operator_column(const MinorSpec& spec, const EllipticParams& params);

Operator A_operator(int l, int N, cplx z, const EllipticParams& params);  // l in [1, N]
Operator B_operator(int m, int N, cplx z, const EllipticParams& params);  // m in [2, N]
Operator C_operator(int m, int N, cplx z, const EllipticParams& params);  // m in [2, N]
MinorSpec A_spec(int l, int N, cplx z);
MinorSpec B_spec(int m, int N, cplx z);
MinorSpec C_spec(int m, int N, cplx z);

TensorVector apply_minor(const MinorSpec& spec, const TensorVector& v, const DynExponents& dyn,
                         const std::vector<cplx>& w, const EllipticParams& params);
TensorVector apply_A(int l, cplx z, const TensorVector& v, const DynExponents& dyn, const std::vector<cplx>& w,
                     const EllipticParams& params);
TensorVector apply_B(int m, cplx z, const TensorVector& v, const DynExponents& dyn, const std::vector<cplx>& w,
                     const EllipticParams& params);
TensorVector apply_C(int m, cplx z, const TensorVector& v, const DynExponents& dyn, const std::vector<cplx>& w,
                     const EllipticParams& params);

}  // namespace eqg
