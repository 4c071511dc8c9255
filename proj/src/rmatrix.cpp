#include "eqg/rmatrix.hpp"

#include <algorithm>

namespace eqg {

PairImage rbar_map(cplx z, const DynExponents& dyn, int k1, int k2, const Theta& th) {
    PairImage out;
    if (k1 == k2) {
        out.terms[out.size++] = {k1, k2, 1.0};
        return out;
    }
    const cplx q2 = th.q2();
    const cplx az = th.denom(q2 * z, "Rbar a(z)");
    if (k1 < k2) {
        const cplx x = dyn.exponent(k1) - dyn.exponent(k2);
        const cplx P = q_power(th.q(), x);
        const cplx tP = th.denom_power(x, "Rbar b");
        const cplx b = th.power(x + 1.0) * th.power(x - 1.0) * th(z) / (tP * tP * az);
        const cplx cb = th.theta_q2() * th(z / P) / (th.denom_power(-x, "Rbar cbar") * az);
        out.terms[out.size++] = {k1, k2, b};
        out.terms[out.size++] = {k2, k1, cb};
    } else {
        const cplx x = dyn.exponent(k2) - dyn.exponent(k1);
        const cplx bb = th(z) / az;
        const cplx c = th.theta_q2() * th(z * q_power(th.q(), x)) / (th.denom_power(x, "Rbar c") * az);
        out.terms[out.size++] = {k1, k2, bb};
        out.terms[out.size++] = {k2, k1, c};
    }
    return out;
}

PairImage rtilde_map(cplx z, const DynExponents& dyn, int k1, int k2, const Theta& th) {
    PairImage out;
    const cplx q2 = th.q2();
    if (k1 == k2) {
        out.terms[out.size++] = {k1, k2, th(q2 * z)};
        return out;
    }
    if (k1 < k2) {
        const cplx x = dyn.exponent(k1) - dyn.exponent(k2);
        const cplx tP = th.denom_power(x, "Rtilde b");
        out.terms[out.size++] = {k1, k2, th.power(x + 1.0) * th.power(x - 1.0) * th(z) / (tP * tP)};
        out.terms[out.size++] = {k2, k1,
                                 th.theta_q2() * th(z / q_power(th.q(), x)) / th.denom_power(-x, "Rtilde cbar")};
    } else {
        const cplx x = dyn.exponent(k2) - dyn.exponent(k1);
        out.terms[out.size++] = {k1, k2, th(z)};
        out.terms[out.size++] = {k2, k1, th.theta_q2() * th(z * q_power(th.q(), x)) / th.denom_power(x, "Rtilde c")};
    }
    return out;
}

namespace {

template <class Map>
RMatrix build(cplx z, const DynExponents& dyn, const EllipticParams& params, int N, Map map) {
    const Theta th(params);
    RMatrix R{N, std::vector<cplx>(ipow(N, 4), 0.0), z, dyn};
    for (int j1 = 0; j1 < N; ++j1)
        for (int j2 = 0; j2 < N; ++j2) {
            const PairImage img = map(z, dyn, j1, j2, th);
            for (int t = 0; t < img.size; ++t) R.at(img.terms[t].first, img.terms[t].second, j1, j2) += img.terms[t].coeff;
        }
    return R;
}

// Applies Rbar on slots (a, b) of a 3-site vector; the dynamical argument
// for basis element mu is dyn shifted by e_{mu_c} for every slot c in shift_slots.
TensorVector apply_pair(const TensorVector& v, int a, int b, cplx z, const DynExponents& dyn,
                        const std::vector<int>& shift_slots, const Theta& th) {
    TensorVector out(v.N, v.n);
    for (std::size_t idx = 0; idx < v.coeffs.size(); ++idx) {
        const cplx c = v.coeffs[idx];
        if (c == 0.0) continue;
        Index mu = decode(idx, v.N, v.n);
        DynExponents d = dyn;
        for (int s : shift_slots) d = d.shifted(mu[s]);
        const PairImage img = rbar_map(z, d, mu[a], mu[b], th);
        for (int t = 0; t < img.size; ++t) {
            Index nu = mu;
            nu[a] = img.terms[t].first;
            nu[b] = img.terms[t].second;
            out[nu] += c * img.terms[t].coeff;
        }
    }
    return out;
}

}  // namespace

RMatrix rbar_matrix(cplx z, const DynExponents& dyn, const EllipticParams& params, int N) {
    return build(z, dyn, params, N, rbar_map);
}

RMatrix rtilde_matrix(cplx z, const DynExponents& dyn, const EllipticParams& params, int N) {
    return build(z, dyn, params, N, rtilde_map);
}

bool check_ice_rule(const RMatrix& R) {
    const int N = R.N;
    for (int i1 = 0; i1 < N; ++i1)
        for (int i2 = 0; i2 < N; ++i2)
            for (int j1 = 0; j1 < N; ++j1)
                for (int j2 = 0; j2 < N; ++j2) {
                    const bool allowed = (i1 == j1 && i2 == j2) || (i1 == j2 && i2 == j1);
                    if (!allowed && R.at(i1, i2, j1, j2) != 0.0) return false;
                }
    return true;
}

double check_dybe(cplx z1, cplx z2, cplx z3, const DynExponents& dyn, const EllipticParams& params, int N) {
    const Theta th(params);
    double worst = 0.0;
    for (std::size_t idx = 0; idx < ipow(N, 3); ++idx) {
        const TensorVector v = TensorVector::basis(N, decode(idx, N, 3));
        // R12(s+h3) R13(s) R23(s+h1)
        TensorVector lhs = apply_pair(v, 1, 2, z2 / z3, dyn, {0}, th);
        lhs = apply_pair(lhs, 0, 2, z1 / z3, dyn, {}, th);
        lhs = apply_pair(lhs, 0, 1, z1 / z2, dyn, {2}, th);
        // R23(s) R13(s+h2) R12(s)
        TensorVector rhs = apply_pair(v, 0, 1, z1 / z2, dyn, {}, th);
        rhs = apply_pair(rhs, 0, 2, z1 / z3, dyn, {1}, th);
        rhs = apply_pair(rhs, 1, 2, z2 / z3, dyn, {}, th);
        worst = std::max(worst, rel_residual(lhs, rhs));
    }
    return worst;
}

double check_unitarity(cplx z, const DynExponents& dyn, const EllipticParams& params, int N) {
    const Theta th(params);
    double worst = 0.0;
    for (std::size_t idx = 0; idx < ipow(N, 2); ++idx) {
        const Index mu = decode(idx, N, 2);
        const TensorVector v = TensorVector::basis(N, mu);
        TensorVector w(N, 2);
        for (std::size_t j = 0; j < v.coeffs.size(); ++j) {
            if (v.coeffs[j] == 0.0) continue;
            const Index nu = decode(j, N, 2);
            const PairImage a = rbar_map(z, dyn, nu[0], nu[1], th);
            for (int s = 0; s < a.size; ++s) {
                // P, then Rbar(1/z), then P
                const PairImage b = rbar_map(1.0 / z, dyn, a.terms[s].second, a.terms[s].first, th);
                for (int t = 0; t < b.size; ++t)
                    w[{b.terms[t].second, b.terms[t].first}] += v.coeffs[j] * a.terms[s].coeff * b.terms[t].coeff;
            }
        }
        worst = std::max(worst, max_abs_diff(w, v));
    }
    return worst;
}

std::pair<TensorVector, std::vector<cplx>> stilde_apply(int i, const TensorVector& v, const DynExponents& dyn,
                                                        const std::vector<cplx>& zs, const EllipticParams& params) {
    if (i < 0 || i + 1 >= v.n) throw std::domain_error("stilde_apply: position out of range");
    if (static_cast<int>(zs.size()) != v.n) throw std::domain_error("stilde_apply: spectral point count");
    const Theta th(params);
    const cplx z = zs[i] / zs[i + 1];
    TensorVector out(v.N, v.n);
    for (std::size_t idx = 0; idx < v.coeffs.size(); ++idx) {
        const cplx c = v.coeffs[idx];
        if (c == 0.0) continue;
        const Index mu = decode(idx, v.N, v.n);
        std::vector<int> cont(v.N, 0);
        for (int s = 0; s < i; ++s) ++cont[mu[s]];
        const PairImage img = rbar_map(z, dyn.shifted(cont), mu[i], mu[i + 1], th);
        for (int t = 0; t < img.size; ++t) {
            Index nu = mu;
            nu[i] = img.terms[t].second;
            nu[i + 1] = img.terms[t].first;
            out[nu] += c * img.terms[t].coeff;
        }
    }
    std::vector<cplx> zz = zs;
    std::swap(zz[i], zz[i + 1]);
    return {out, zz};
}

}  // namespace eqg
