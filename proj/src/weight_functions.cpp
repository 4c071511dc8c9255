#include "eqg/weight_functions.hpp"

#include <algorithm>

#include "eqg/gt_bases.hpp"

namespace eqg {

namespace {

std::vector<int> sites_upto(const Index& mu, int l) {  // sites with 1-based label <= l
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(mu.size()); ++i)
        if (mu[i] <= l - 1) out.push_back(i);
    return out;
}

std::size_t factorial(std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 2; i <= k; ++i) r *= i;
    return r;
}

// Permutation of size k with the given rank (factorial number system).
void unrank(std::size_t rank, std::size_t k, std::vector<int>& perm) {
    std::vector<int> pool(k);
    for (std::size_t i = 0; i < k; ++i) pool[i] = static_cast<int>(i);
    perm.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t f = factorial(k - 1 - i);
        const std::size_t d = rank / f;
        rank %= f;
        perm[i] = pool[d];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    }
}

void check_vars(const Index& mu, int N, const TriangularVars& vars) {
    if (static_cast<int>(vars.t.size()) != N - 1) throw std::domain_error("weight function: need N-1 levels of t");
    if (vars.w.size() != mu.size()) throw std::domain_error("weight function: w length mismatch");
    for (int l = 1; l < N; ++l)
        if (vars.t[l - 1].size() != sites_upto(mu, l).size())
            throw std::domain_error("weight function: level size does not match the partition");
}

}  // namespace

TriangularVars specialize(const Index& mu, int N, const std::vector<cplx>& w) {
    TriangularVars v;
    v.w = w;
    for (int l = 1; l < N; ++l) {
        std::vector<cplx> t;
        for (int i : sites_upto(mu, l)) t.push_back(w[i]);
        v.t.push_back(std::move(t));
    }
    return v;
}

cplx u_tilde(const Index& mu, int N, const TriangularVars& vars, const DynExponents& dyn,
             const EllipticParams& params) {
    check_vars(mu, N, vars);
    const Theta th(params);
    const cplx q2 = th.q2();
    const int n = static_cast<int>(mu.size());
    auto level = [&](int l) -> const std::vector<cplx>& { return l == N ? vars.w : vars.t[l - 1]; };
    cplx r = 1.0;
    for (int l = 1; l < N; ++l) {
        const auto Ia = sites_upto(mu, l);
        const auto Ib = sites_upto(mu, l + 1);
        const auto& ta = level(l);
        const auto& tb = level(l + 1);
        for (std::size_t a = 0; a < Ia.size(); ++a) {
            const int s = Ia[a];
            const std::size_t b = static_cast<std::size_t>(std::find(Ib.begin(), Ib.end(), s) - Ib.begin());
            int C = 0;
            for (int j = s + 1; j < n; ++j) C += (mu[j] == mu[s]) - (mu[j] == l);
            const cplx shiftP = std::pow(q2, -C) * dyn.pi_star(mu[s], l, params.q);
            r *= th(shiftP * tb[b] / ta[a]) * th.theta_q2() /
                 (th.denom(q2 * tb[b] / ta[a], "U~ pole") * th.denom(shiftP, "U~ dynamical"));
            for (std::size_t b2 = 0; b2 < Ib.size(); ++b2)
                if (Ib[b2] > s) r *= th(tb[b2] / ta[a]) / th.denom(q2 * tb[b2] / ta[a], "U~ pole");
            for (std::size_t a2 = a + 1; a2 < Ia.size(); ++a2)
                r *= th(ta[a] / (q2 * ta[a2])) / th.denom(ta[a] / ta[a2], "U~ pole");
        }
    }
    return r;
}

cplx w_tilde(const Index& mu, int N, const TriangularVars& vars, const DynExponents& dyn,
             const EllipticParams& params, Exec exec) {
    check_vars(mu, N, vars);
    const std::size_t levels = vars.t.size();
    std::vector<std::size_t> sizes(levels), counts(levels);
    std::size_t total = 1;
    for (std::size_t l = 0; l < levels; ++l) {
        sizes[l] = vars.t[l].size();
        counts[l] = factorial(sizes[l]);
        total *= counts[l];
    }
    auto term = [&](std::size_t flat, TriangularVars& tv, std::vector<int>& perm) {
        for (std::size_t l = 0; l < levels; ++l) {
            unrank(flat % counts[l], sizes[l], perm);
            flat /= counts[l];
            for (std::size_t a = 0; a < sizes[l]; ++a) tv.t[l][a] = vars.t[l][perm[a]];
        }
        return u_tilde(mu, N, tv, dyn, params);
    };
    const auto n_terms = static_cast<long long>(total);
    if (exec == Exec::Serial) {
        TriangularVars tv = vars;
        std::vector<int> perm;
        cplx sum = 0.0;
        for (long long f = 0; f < n_terms; ++f) sum += term(static_cast<std::size_t>(f), tv, perm);
        return sum;
    }
    double re = 0.0, im = 0.0;
    bool failed = false;
    std::string message;
#pragma omp parallel reduction(+ : re, im)
    {
        TriangularVars tv = vars;
        std::vector<int> perm;
#pragma omp for schedule(static)
        for (long long f = 0; f < n_terms; ++f) {
            try {
                const cplx v = term(static_cast<std::size_t>(f), tv, perm);
                re += v.real();
                im += v.imag();
            } catch (const std::exception& e) {
#pragma omp critical
                {
                    failed = true;
                    message = e.what();
                }
            }
        }
    }
    if (failed) throw DegenerateError(message);
    return {re, im};
}

SpecializedValue w_tilde_at(const Index& J, const Index& I, int N, const std::vector<cplx>& w,
                            const DynExponents& dyn, const EllipticParams& params, Exec exec) {
    const TriangularVars base = specialize(I, N, w);
    try {
        return {w_tilde(J, N, base, dyn, params, exec), false};
    } catch (const DegenerateError&) {
    }
    // Distinct relative perturbations of every t; first-order Richardson in eps.
    auto perturbed = [&](double eps) {
        TriangularVars v = base;
        for (std::size_t l = 0; l < v.t.size(); ++l)
            for (std::size_t a = 0; a < v.t[l].size(); ++a)
                v.t[l][a] *= 1.0 + eps * static_cast<double>(1 + l + 2 * a) / 7.0;
        return w_tilde(J, N, v, dyn, params, exec);
    };
    const double eps = 1e-6;
    return {2.0 * perturbed(eps / 2) - perturbed(eps), true};
}

cplx w_tilde_diagonal(const Index& mu, const std::vector<cplx>& w, const EllipticParams& params) {
    const Theta th(params);
    cplx r = 1.0;
    for (std::size_t a = 0; a < mu.size(); ++a)
        for (std::size_t b = a + 1; b < mu.size(); ++b)
            if (mu[a] < mu[b]) r *= th(w[b] / w[a]) / th.denom(th.q2() * w[b] / w[a], "W~ diagonal");
    return r;
}

bool partial_order_leq(const Index& I, const Index& J, int N) {
    if (content_of(I, N) != content_of(J, N)) return false;
    for (int l = 1; l < N; ++l) {
        const auto a = sites_upto(I, l), b = sites_upto(J, l);
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] > b[k]) return false;
    }
    return true;
}

ChangeOfBasis change_of_basis(const std::vector<int>& content, const DynExponents& dyn,
                              const std::vector<cplx>& w, const EllipticParams& params, Exec exec) {
    const int N = static_cast<int>(content.size());
    ChangeOfBasis X;
    X.labels = indices_with_content(content);
    const std::size_t m = X.labels.size();
    X.matrix.assign(m * m, 0.0);
    const DynExponents shifted = dyn.shifted(content);
    const auto cells = static_cast<long long>(m * m);
    if (exec == Exec::Serial) {
        for (long long c = 0; c < cells; ++c)
            X.matrix[c] = w_tilde_at(X.labels[c % m], X.labels[c / m], N, w, shifted, params).value;
        return X;
    }
    bool failed = false;
    std::string message;
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < cells; ++c) {
        try {
            X.matrix[c] = w_tilde_at(X.labels[c % m], X.labels[c / m], N, w, shifted, params).value;
        } catch (const std::exception& e) {
#pragma omp critical
            {
                failed = true;
                message = e.what();
            }
        }
    }
    if (failed) throw DegenerateError(message);
    return X;
}

TensorVector weight_function_expansion(const Index& I, int N, const DynExponents& dyn,
                                       const std::vector<cplx>& w, const EllipticParams& params) {
    const auto content = content_of(I, N);
    const DynExponents shifted = dyn.shifted(content);
    TensorVector v(N, static_cast<int>(I.size()));
    for (const Index& J : indices_with_content(content)) v[J] = w_tilde_at(J, I, N, w, shifted, params).value;
    return v;
}

double verify_partition_identity(const Index& I, const Index& mu, int N, const DynExponents& dyn,
                                 const std::vector<cplx>& w, const EllipticParams& params) {
    if (content_of(I, N) != content_of(mu, N)) throw std::domain_error("partition identity: contents differ");
    const LWord word = xi_tilde_word(I, N, w);
    std::vector<int> K, L;
    std::vector<cplx> zs;
    for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
        K.push_back(it->row);
        L.push_back(it->col);
        zs.push_back(it->z);
    }
    const cplx Z = partition_z(K, L, zs, Index(I.size(), 0), mu, dyn, w, params);
    const cplx rhs = normalization_n(I, N, w, params) *
                     w_tilde_at(mu, I, N, w, dyn.shifted(content_of(mu, N)), params).value;
    return rel_residual(Z, rhs);
}

}  // namespace eqg
