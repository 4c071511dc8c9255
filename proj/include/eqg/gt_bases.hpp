// Gelfand-Tsetlin bases of the n-fold vector representation tensor product.
// Partitions are carried as 0-based label words mu (I_l = { i : mu_i = l-1 }).
#pragma once

#include <vector>

#include "eqg/minors.hpp"
#include "eqg/tensor.hpp"

namespace eqg {

// L_{N-2,N-1}(w_{I_N}) ... L_{0,1}(w_{I_2 u ... u I_N}), each block in decreasing site order.
LWord xi_tilde_word(const Index& mu, int N, const std::vector<cplx>& w);
TensorVector build_xi_tilde(const Index& mu, int N, const DynExponents& dyn, const std::vector<cplx>& w,
                            const EllipticParams& params);

Operator xi_minor_operator(const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params);
TensorVector build_xi_minor(const Index& mu, int N, const DynExponents& dyn, const std::vector<cplx>& w,
                            const EllipticParams& params);

enum class Ascent { First, Last };
TensorVector build_xi_prime(const Index& mu, int N, const DynExponents& dyn, const std::vector<cplx>& w,
                            const EllipticParams& params, Ascent path = Ascent::First);
DynVector xi_prime_vector(const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params);

// prod_{k=1}^{N-l+1} lambda_{N-l+1,k}(q^{-2k+2} z)
cplx eigenvalue_a(int l, cplx z, const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params);
// Eigenvalue of the diagonal action: A_j(z) xi' = K_j(z) A_{j+1}(z q^-2) xi'.
cplx k_eigenvalue(int j, cplx z, const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params);

// xi_I = relation_factor * xi~_I
cplx relation_factor(const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params);
cplx xtilde_diagonal(const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params);
// xi~_I = normalization_n * xi'_I
cplx normalization_n(const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params);

// Column recursion: Z_k over sites k..n-1 (0-based), Z_n = 1, Z_0 = X~_II.
cplx zk_partition(const Index& mu, int k, int N, const DynExponents& dyn, const std::vector<cplx>& w,
                  const EllipticParams& params);
cplx wk_factor(const Index& mu, int k, int N, const std::vector<cplx>& w, const EllipticParams& params);

}  // namespace eqg
