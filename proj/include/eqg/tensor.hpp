// L-operator action on the n-fold tensor product and evaluation of L-words.
//
// L_{kl}(z) acts through a row of R-tilde vertices: the auxiliary line enters
// site 0 carrying l and must leave site n-1 carrying k; site s uses z / w_s,
// and the dynamical argument at site s is shifted by e_{out} for every
// outgoing site state of the sites before s.
//
// In a word, the factor (or scalar) at position j from the left sees the
// dynamical argument shifted by e_{l_i} for every factor i < j.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eqg/basis.hpp"
#include "eqg/dynamics.hpp"

namespace eqg {

enum class Exec { Serial, Parallel };

struct LFactor {
    int row;
    int col;
    cplx z;
};

// Scalar evaluated at the shifted dynamical argument and the content of the
// basis vector it multiplies.
using DynScalarFn = std::function<cplx(const DynExponents&, const std::vector<int>&)>;

struct PositionedScalar {
    int position;
    DynScalarFn fn;
    std::string tag;
};

struct LWord {
    std::vector<LFactor> factors;
    std::vector<PositionedScalar> scalars;

    // Sum of e_{col} over all factors.
    std::vector<int> column_weight(int N) const;
};

LWord concat(const LWord& left, const LWord& right);

// A finite sum of words.
using Operator = std::vector<LWord>;
Operator compose(const Operator& left, const Operator& right);
Operator single(const LWord& w);

// Vectors whose coefficients depend on the dynamical argument.
using DynVector = std::function<TensorVector(const DynExponents&)>;
DynVector constant(TensorVector v);

TensorVector apply_l_entry(int k, int l, cplx z, const TensorVector& v, const DynExponents& dyn,
                           const std::vector<cplx>& w, const EllipticParams& params);
// Dense matrix (row-major, N^n x N^n) of L_{kl}(z).
std::vector<cplx> l_entry_matrix(int k, int l, cplx z, const DynExponents& dyn, const std::vector<cplx>& w,
                                 const EllipticParams& params);

TensorVector apply_lword(const LWord& word, const TensorVector& v, const DynExponents& dyn,
                         const std::vector<cplx>& w, const EllipticParams& params);
// (W v)(lambda) = T_W(lambda) v(lambda + column weight of W), summed over the words.
TensorVector apply_operator(const Operator& op, const DynVector& v, const DynExponents& dyn,
                            const std::vector<cplx>& w, const EllipticParams& params);
TensorVector apply_operator(const Operator& op, const TensorVector& v, const DynExponents& dyn,
                            const std::vector<cplx>& w, const EllipticParams& params);

enum class PartitionMode { Sequential, Enumerate };

// Coefficient of v_beta in L_{K[m-1] L[m-1]}(zs[m-1]) ... L_{K[0] L[0]}(zs[0]) v_alpha.
cplx partition_z(const std::vector<int>& K, const std::vector<int>& L, const std::vector<cplx>& zs,
                 const Index& alpha, const Index& beta, const DynExponents& dyn, const std::vector<cplx>& w,
                 const EllipticParams& params, PartitionMode mode = PartitionMode::Sequential,
                 Exec exec = Exec::Serial);

inline constexpr double enumeration_cap = 1e7;

}  // namespace eqg
