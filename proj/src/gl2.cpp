#include "eqg/gl2.hpp"

#include <algorithm>

#include "eqg/gt_bases.hpp"

namespace eqg {

std::pair<cplx, cplx> gl2_evaluation_weights(int l, cplx a, int m, cplx z, const EllipticParams& params) {
    if (l < 0 || m < 0 || m > l) throw std::domain_error("gl2 weights: need 0 <= m <= l");
    const cplx q = params.q, p = params.p;
    const cplx q4 = std::pow(q, 4);
    const int ord = params.order();
    const cplx x = z / a;
    auto qp = [&](int e) { return std::pow(q, e); };
    auto Th = [&](cplx u) { return theta_big(u, p, ord); };
    auto G = [&](cplx u) { return elliptic_gamma(u, q4, p, ord); };
    const double lam1 = l, lam2 = 0.0;
    const cplx k1 = std::pow(q, -lam1 + m) * guarded_div(Th(qp(l) * x), Th(qp(-l + 2 * m) * x), "k1") *
                    G(qp(l) * x) * G(qp(2 - l) * x) / (G(qp(l + 2) * x) * G(qp(-l) * x));
    const cplx k2 = std::pow(q, -lam2 - m) * guarded_div(Th(qp(-l + 2 * m + 2) * x), Th(qp(l + 2) * x), "k2") *
                    G(qp(4 + l) * x) * G(qp(2 - l) * x) / (G(qp(l + 2) * x) * G(qp(4 - l) * x));
    return {k1, k2};
}

cplx drinfeld_theta(int l, cplx a, cplx z, const EllipticParams& params) {
    cplx r = 1.0;
    for (int k = 1; k <= l; ++k) r *= theta_big(std::pow(params.q, -l + 2 * k - 1) * z / a, params.p, params.order());
    return r;
}

double drinfeld_ratio_residual(int l, cplx a, cplx z, const EllipticParams& params) {
    const cplx zq = z / params.q;
    const auto [k1, k2] = gl2_evaluation_weights(l, a, 0, zq, params);
    const cplx lhs = k1 / k2;
    const cplx rhs = std::pow(params.q, -l) *
                     guarded_div(drinfeld_theta(l, a, params.q * params.q * z, params), drinfeld_theta(l, a, z, params),
                                 "Drinfeld theta");
    return rel_residual(lhs, rhs);
}

double highest_weight_ratio_residual(int l, cplx a, cplx z, const EllipticParams& params) {
    const Theta th(params);
    const auto [k1, k2] = gl2_evaluation_weights(l, a, 0, z, params);
    const cplx q = params.q;
    const cplx rhs = th(std::pow(q, l + 2) * z / a) / th.denom(std::pow(q, 2 - l) * z / a, "highest weight");
    return rel_residual(k1 / k2, rhs);
}

TensorVector build_xi_gamma(const Index& gamma, const DynExponents& dyn, const std::vector<cplx>& w,
                            const EllipticParams& params) {
    return build_xi_tilde(gamma, 2, dyn, w, params);
}

namespace {

Operator lop(int row, int col, cplx z) { return single(LWord{{{row, col, z}}, {}}); }

DynVector xi_gamma_vector(const Index& gamma, const std::vector<cplx>& w, const EllipticParams& params) {
    return [=](const DynExponents& d) { return build_xi_gamma(gamma, d, w, params); };
}

void keep_max(std::vector<NamedResidual>& out, const std::string& name, double r) {
    for (auto& e : out)
        if (e.name == name) {
            e.residual = std::max(e.residual, r);
            return;
        }
    out.push_back({name, r});
}

}  // namespace

Gl2Result gl2_suite(int n, const DynExponents& dyn, const std::vector<cplx>& w, const std::vector<cplx>& z_points,
                    const EllipticParams& params) {
    if (dyn.N() != 2) throw std::domain_error("gl2 suite requires N = 2");
    if (static_cast<int>(w.size()) != n) throw std::domain_error("gl2 suite: w length mismatch");
    const Theta th(params);
    const cplx q2 = th.q2();
    const cplx tt = std::pow(th.theta_q2() * th(1.0 / q2), n);
    Gl2Result res;
    auto& R = res.residuals;
    for (const char* name : {"gl2.A1_action", "gl2.A2_action", "gl2.B2_raising", "gl2.B2_annihilation",
                             "gl2.C2_kills_zeta", "gl2.C2_proportional", "gl2.C2_scalar_gamma_independent",
                             "gl2.C2B2_descent"})
        R.push_back({name, 0.0});

    const Index zero(n, 0);
    const TensorVector zeta = TensorVector::basis(2, zero);
    for (int j = 0; j < n; ++j)
        keep_max(R, "gl2.C2_kills_zeta", apply_operator(lop(1, 0, w[j]), zeta, dyn, w, params).max_abs());

    // D_j(lambda): the lowering scalar measured on xi_{delta_j}
    auto lowering = [&](const Index& gamma, int j, const DynExponents& d) {
        Index down = gamma;
        down[j] = 0;
        const TensorVector img = apply_operator(lop(1, 0, w[j] / q2), xi_gamma_vector(gamma, w, params), d, w, params);
        const Proportionality pr = proportionality(img, build_xi_gamma(down, d, w, params));
        return std::make_pair(pr, -pr.factor / tt);
    };
    auto measured = [&](int j, const DynExponents& d) {
        Index g(n, 0);
        g[j] = 1;
        return lowering(g, j, d).second;
    };
    res.lowering_scalars.assign(n, 0.0);
    for (int j = 0; j < n; ++j) res.lowering_scalars[j] = measured(j, dyn);

    for (std::size_t code = 0; code < ipow(2, n); ++code) {
        const Index gamma = decode(code, 2, n);
        const DynVector xg = xi_gamma_vector(gamma, w, params);
        const TensorVector xv = xg(dyn);
        for (cplx z : z_points) {
            cplx e1 = 1.0, e2 = 1.0;
            for (int i = 0; i < n; ++i) {
                e1 *= th(q2 * z / w[i]) * th(z / (q2 * w[i]));
                e2 *= th((gamma[i] ? q2 : cplx(1.0)) * z / w[i]);
            }
            keep_max(R, "gl2.A1_action", rel_residual(apply_operator(A_operator(1, 2, z, params), xg, dyn, w, params), e1 * xv));
            keep_max(R, "gl2.A2_action", rel_residual(apply_operator(A_operator(2, 2, z, params), xg, dyn, w, params), e2 * xv));
        }
        int weight = 0;
        for (int j = 0; j < n; ++j) {
            if (gamma[j] == 0) {
                Index up = gamma;
                up[j] = 1;
                keep_max(R, "gl2.B2_raising",
                         rel_residual(apply_operator(lop(0, 1, w[j]), xg, dyn, w, params), build_xi_gamma(up, dyn, w, params)));
                continue;
            }
            ++weight;
            keep_max(R, "gl2.B2_annihilation",
                     apply_operator(lop(0, 1, w[j] / q2), xg, dyn, w, params).max_abs() / xv.max_abs());
            const auto [pr, D] = lowering(gamma, j, dyn);
            keep_max(R, "gl2.C2_proportional", pr.residual);
            keep_max(R, "gl2.C2_scalar_gamma_independent", rel_residual(D, res.lowering_scalars[j]));
        }
        if (weight == 0) continue;
        // C_2(q^-2 w_j) for every j in gamma, composed; the factor at position t
        // sees lambda + t e_1, so its scalar is D_j measured there
        Operator desc = single(LWord{});
        cplx expect = 1.0;
        int t = 0;
        for (int j = 0; j < n; ++j)
            if (gamma[j]) {
                desc = compose(desc, lop(1, 0, w[j] / q2));
                expect *= -tt * measured(j, dyn.shifted(0, t++));
            }
        keep_max(R, "gl2.C2B2_descent", rel_residual(apply_operator(desc, xg, dyn, w, params), expect * zeta));
    }
    return res;
}

}  // namespace eqg
