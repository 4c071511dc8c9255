// gl_2 specialization: evaluation-representation weights, the Drinfeld theta
// function and the GT basis of the n-fold 2-dimensional vector representation.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eqg/tensor.hpp"

namespace eqg {

// Eigenvalues of k+_1(z), k+_2(z) on v^l_m of V_l(a), with lambda_1 = l, lambda_2 = 0.
std::pair<cplx, cplx> gl2_evaluation_weights(int l, cplx a, int m, cplx z, const EllipticParams& params);

// P_{l,a}(z) = prod_{k=1}^l Theta_p(q^{-l+2k-1} z / a)
cplx drinfeld_theta(int l, cplx a, cplx z, const EllipticParams& params);

// |k1(q^-1 z)/k2(q^-1 z) - q^-l P(q^2 z)/P(z)| relative, at m = 0.
double drinfeld_ratio_residual(int l, cplx a, cplx z, const EllipticParams& params);
// |k1(z)/k2(z) - theta(q^{l+2} z/a)/theta(q^{-l+2} z/a)| relative, at m = 0.
double highest_weight_ratio_residual(int l, cplx a, cplx z, const EllipticParams& params);

struct NamedResidual {
    std::string name;
    double residual;
};

struct Gl2Result {
    std::vector<NamedResidual> residuals;
    std::vector<cplx> lowering_scalars;  // measured D_j per site
};

// xi_gamma = prod_{gamma_i = 1} B_2(w_i) zeta
TensorVector build_xi_gamma(const Index& gamma, const DynExponents& dyn, const std::vector<cplx>& w,
                            const EllipticParams& params);

Gl2Result gl2_suite(int n, const DynExponents& dyn, const std::vector<cplx>& w, const std::vector<cplx>& z_points,
                    const EllipticParams& params);

}  // namespace eqg
