// Elliptic weight functions W~_I(t, w, Pi*) and the change of basis between
// the standard basis and the GT basis xi'.
#pragma once

#include <vector>

#include "eqg/basis.hpp"
#include "eqg/dynamics.hpp"
#include "eqg/tensor.hpp"

namespace eqg {

// t[l-1] holds t^{(l)}_1..t^{(l)}_{lambda^{(l)}} for l = 1..N-1; t^{(N)} = w.
struct TriangularVars {
    std::vector<std::vector<cplx>> t;
    std::vector<cplx> w;
};

// t^{(l)} = w restricted to the sites with label <= l, in increasing site order.
TriangularVars specialize(const Index& mu, int N, const std::vector<cplx>& w);

cplx u_tilde(const Index& mu, int N, const TriangularVars& vars, const DynExponents& dyn,
             const EllipticParams& params);
cplx w_tilde(const Index& mu, int N, const TriangularVars& vars, const DynExponents& dyn,
             const EllipticParams& params, Exec exec = Exec::Serial);

// W~_J at the specialization w_I; falls back to perturbation plus Richardson
// extrapolation when a raw pole is hit.
struct SpecializedValue {
    cplx value;
    bool extrapolated;
};
SpecializedValue w_tilde_at(const Index& J, const Index& I, int N, const std::vector<cplx>& w,
                            const DynExponents& dyn, const EllipticParams& params, Exec exec = Exec::Serial);

// Closed form of W~_I(w_I): prod over a<b, mu_a < mu_b of theta(w_b/w_a)/theta(q^2 w_b/w_a).
cplx w_tilde_diagonal(const Index& mu, const std::vector<cplx>& w, const EllipticParams& params);

// I <= J iff the sorted site lists of labels <= l compare entrywise for every l.
bool partial_order_leq(const Index& I, const Index& J, int N);

struct ChangeOfBasis {
    std::vector<Index> labels;  // all indices of one content, increasing linear order
    std::vector<cplx> matrix;   // row I, column J: W~_J(w_I, w, Pi* shifted by content)
    std::size_t size() const { return labels.size(); }
    cplx at(std::size_t i, std::size_t j) const { return matrix[i * labels.size() + j]; }
};
ChangeOfBasis change_of_basis(const std::vector<int>& content, const DynExponents& dyn,
                              const std::vector<cplx>& w, const EllipticParams& params,
                              Exec exec = Exec::Serial);

// The expansion sum_J W~_J(w_I, Pi* shifted by content) v_J.
TensorVector weight_function_expansion(const Index& I, int N, const DynExponents& dyn,
                                       const std::vector<cplx>& w, const EllipticParams& params);

// |Z - N(w) W~_J(w_I, shifted Pi*)| for the word of xi~_I and the target mu.
double verify_partition_identity(const Index& I, const Index& mu, int N, const DynExponents& dyn,
                                 const std::vector<cplx>& w, const EllipticParams& params);

}  // namespace eqg
