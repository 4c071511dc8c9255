#include "eqg/minors.hpp"

#include <algorithm>
#include <numeric>

namespace eqg {

namespace {

void check_spec(const MinorSpec& s) {
    if (s.rows.size() != s.cols.size() || s.rows.empty()) throw std::domain_error("minor: |I| must equal |J| > 0");
}

std::vector<int> identity_perm(std::size_t k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Pi_{ab} = q^{-2((lambda + content)_a - (lambda + content)_b)}
cplx pi_inverted(const DynExponents& d, const std::vector<int>& c, int a, int b, cplx q) {
    return q_power(q, -(d.exponent(a) + static_cast<double>(c[a]) - d.exponent(b) - static_cast<double>(c[b])));
}

}  // namespace

cplx sgn_star(const std::vector<int>& J, const std::vector<int>& sigma, const DynExponents& dyn,
              const EllipticParams& params) {
    const Theta th(params);
    auto f = [&](int x, int y) -> cplx {
        const cplx e = dyn.exponent(x) - dyn.exponent(y);
        if (x > y) return th.power(e + 1.0) / th.denom_power(-e, "sgn*");
        return th.denom_power(e, "sgn*") / th.denom_power(1.0 - e, "sgn*");
    };
    cplx r = 1.0;
    const std::size_t k = J.size();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (sigma[a] > sigma[b]) r *= f(J[sigma[a]], J[sigma[b]]);
    return r;
}

Operator minor_operator(const MinorSpec& spec, const EllipticParams& params) {
    check_spec(spec);
    const std::size_t k = spec.rows.size();
    const cplx qm2 = 1.0 / (params.q * params.q);
    Operator op;
    std::vector<int> sigma = identity_perm(k);
    do {
        LWord w;
        w.scalars.push_back({0,
                             [J = spec.cols, sigma, params](const DynExponents& d, const std::vector<int>&) {
                                 return sgn_star(J, sigma, d, params);
                             },
                             "sgn*"});
        cplx z = spec.z;
        for (std::size_t a = 0; a < k; ++a) {
            w.factors.push_back({spec.rows[a], spec.cols[sigma[a]], z});
            z *= qm2;
        }
        op.push_back(std::move(w));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return op;
}

Operator minor_operator_rowsum(const MinorSpec& spec, const EllipticParams& params) {
    check_spec(spec);
    const std::size_t k = spec.rows.size();
    const cplx qm2 = 1.0 / (params.q * params.q);
    Operator op;
    std::vector<int> sigma = identity_perm(k);
    do {
        LWord w;
        w.scalars.push_back({0,
                             [I = spec.rows, sigma, params](const DynExponents& d, const std::vector<int>& c) {
                                 const Theta th(params);
                                 cplx r = 1.0;
                                 for (std::size_t a = 0; a < I.size(); ++a)
                                     for (std::size_t b = a + 1; b < I.size(); ++b)
                                         if (sigma[a] > sigma[b]) {
                                             const int x = I[sigma[a]], y = I[sigma[b]];
                                             r *= th(th.q2() * pi_inverted(d, c, x, y, params.q)) /
                                                  th.denom(pi_inverted(d, c, y, x, params.q), "sgn_I");
                                         }
                                 return r;
                             },
                             "sgn_I"});
        for (int a = static_cast<int>(k) - 1; a >= 0; --a)
            w.factors.push_back({spec.rows[sigma[a]], spec.cols[a], spec.z * std::pow(qm2, a)});
        op.push_back(std::move(w));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return op;
}

Operator minor_operator_column(const MinorSpec& spec, const EllipticParams& params) {
    check_spec(spec);
    const std::size_t k = spec.rows.size();
    if (k == 1) return minor_operator(spec, params);
    const cplx qm2 = 1.0 / (params.q * params.q);
    Operator op;
    for (std::size_t l = 0; l < k; ++l) {
        MinorSpec sub;
        for (std::size_t a = 0; a < k; ++a)
            if (a != l) sub.rows.push_back(spec.rows[a]);
        sub.cols.assign(spec.cols.begin() + 1, spec.cols.end());
        sub.z = spec.z * qm2;
        LWord head;
        head.scalars.push_back({0,
                                [I = spec.rows, l, params](const DynExponents& d, const std::vector<int>& c) {
                                    const Theta th(params);
                                    cplx r = 1.0;
                                    for (std::size_t a = 0; a < l; ++a)
                                        r *= th(th.q2() * pi_inverted(d, c, I[l], I[a], params.q)) /
                                             th.denom(pi_inverted(d, c, I[a], I[l], params.q), "column expansion");
                                    return r;
                                },
                                "column"});
        LWord tail;
        tail.factors.push_back({spec.rows[l], spec.cols[0], spec.z});
        for (const LWord& s : minor_operator(sub, params)) op.push_back(concat(concat(head, s), tail));
    }
    return op;
}

MinorSpec A_spec(int l, int N, cplx z) {
    if (l < 1 || l > N) throw std::domain_error("A_l: l out of range");
    MinorSpec s{{}, {}, z};
    for (int a = l - 1; a < N; ++a) {
        s.rows.push_back(a);
        s.cols.push_back(a);
    }
    return s;
}

MinorSpec B_spec(int m, int N, cplx z) {
    if (m < 2 || m > N) throw std::domain_error("B_m: m out of range");
    MinorSpec s{{m - 2}, {m - 1}, z};
    for (int a = m; a < N; ++a) {
        s.rows.push_back(a);
        s.cols.push_back(a);
    }
    return s;
}

MinorSpec C_spec(int m, int N, cplx z) {
    MinorSpec s = B_spec(m, N, z);
    std::swap(s.rows, s.cols);
    return s;
}

Operator A_operator(int l, int N, cplx z, const EllipticParams& params) { return minor_operator(A_spec(l, N, z), params); }
Operator B_operator(int m, int N, cplx z, const EllipticParams& params) { return minor_operator(B_spec(m, N, z), params); }
Operator C_operator(int m, int N, cplx z, const EllipticParams& params) { return minor_operator(C_spec(m, N, z), params); }

TensorVector apply_minor(const MinorSpec& spec, const TensorVector& v, const DynExponents& dyn,
                         const std::vector<cplx>& w, const EllipticParams& params) {
    return apply_operator(minor_operator(spec, params), v, dyn, w, params);
}

TensorVector apply_A(int l, cplx z, const TensorVector& v, const DynExponents& dyn, const std::vector<cplx>& w,
                     const EllipticParams& params) {
    return apply_operator(A_operator(l, v.N, z, params), v, dyn, w, params);
}

TensorVector apply_B(int m, cplx z, const TensorVector& v, const DynExponents& dyn, const std::vector<cplx>& w,
                     const EllipticParams& params) {
    return apply_operator(B_operator(m, v.N, z, params), v, dyn, w, params);
}

TensorVector apply_C(int m, cplx z, const TensorVector& v, const DynExponents& dyn, const std::vector<cplx>& w,
                     const EllipticParams& params) {
    return apply_operator(C_operator(m, v.N, z, params), v, dyn, w, params);
}

}  // namespace eqg
