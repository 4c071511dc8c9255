#include "eqg/gt_bases.hpp"

#include <algorithm>

#include "eqg/rmatrix.hpp"
#include "eqg/weight_functions.hpp"

namespace eqg {

namespace {

// Sites whose 1-based group lies in [lo, hi].
std::vector<int> group_sites(const Index& mu, int lo, int hi) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(mu.size()); ++i)
        if (mu[i] >= lo - 1 && mu[i] <= hi - 1) out.push_back(i);
    return out;
}

void check_labels(const Index& mu, int N, const std::vector<cplx>& w) {
    if (mu.size() != w.size()) throw std::domain_error("partition length does not match evaluation points");
    for (int m : mu)
        if (m < 0 || m >= N) throw std::domain_error("partition label out of range");
}

}  // namespace

LWord xi_tilde_word(const Index& mu, int N, const std::vector<cplx>& w) {
    check_labels(mu, N, w);
    LWord word;
    for (int g = N - 1; g >= 1; --g)
        for (int i = static_cast<int>(mu.size()) - 1; i >= 0; --i)
            if (mu[i] >= g) word.factors.push_back({g - 1, g, w[i]});
    return word;
}

TensorVector build_xi_tilde(const Index& mu, int N, const DynExponents& dyn, const std::vector<cplx>& w,
                            const EllipticParams& params) {
    const TensorVector zeta = TensorVector::basis(N, Index(mu.size(), 0));
    return apply_lword(xi_tilde_word(mu, N, w), zeta, dyn, w, params);
}

Operator xi_minor_operator(const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params) {
    check_labels(mu, N, w);
    Operator op = single(LWord{});
    for (int g = N - 1; g >= 1; --g)
        for (int i = static_cast<int>(mu.size()) - 1; i >= 0; --i)
            if (mu[i] >= g) op = compose(op, B_operator(g + 1, N, w[i], params));
    return op;
}

TensorVector build_xi_minor(const Index& mu, int N, const DynExponents& dyn, const std::vector<cplx>& w,
                            const EllipticParams& params) {
    const TensorVector zeta = TensorVector::basis(N, Index(mu.size(), 0));
    return apply_operator(xi_minor_operator(mu, N, w, params), zeta, dyn, w, params);
}

TensorVector build_xi_prime(const Index& mu, int N, const DynExponents& dyn, const std::vector<cplx>& w,
                            const EllipticParams& params, Ascent path) {
    check_labels(mu, N, w);
    const int n = static_cast<int>(mu.size());
    int pos = -1;
    for (int i = 0; i + 1 < n; ++i)
        if (mu[i] < mu[i + 1]) {
            pos = i;
            if (path == Ascent::First) break;
        }
    if (pos < 0) return TensorVector::basis(N, mu);  // mu is already I^max
    Index J = mu;
    std::swap(J[pos], J[pos + 1]);
    std::vector<cplx> ws = w;
    std::swap(ws[pos], ws[pos + 1]);
    const TensorVector v = build_xi_prime(J, N, dyn, ws, params, path);
    return stilde_apply(pos, v, dyn, ws, params).first;
}

DynVector xi_prime_vector(const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params) {
    return [=](const DynExponents& d) { return build_xi_prime(mu, N, d, w, params); };
}

cplx eigenvalue_a(int l, cplx z, const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params) {
    check_labels(mu, N, w);
    if (l < 1 || l > N) throw std::domain_error("eigenvalue_a: l out of range");
    const Theta th(params);
    const int j = N - l + 1;
    cplx r = 1.0;
    cplx zz = z;
    for (int k = 1; k <= j; ++k) {
        for (std::size_t m = 0; m < mu.size(); ++m) {
            const bool raised = k == 1 && mu[m] >= N - j;
            r *= th((raised ? th.q2() : cplx(1.0)) * zz / w[m]);
        }
        zz /= th.q2();
    }
    return r;
}

cplx k_eigenvalue(int j, cplx z, const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params) {
    check_labels(mu, N, w);
    if (j < 1 || j > N) throw std::domain_error("k_eigenvalue: j out of range");
    const Theta th(params);
    const cplx q2 = th.q2();
    cplx r = 1.0;
    for (std::size_t a = 0; a < mu.size(); ++a) {
        r *= th(q2 * z / w[a]);
        if (mu[a] < j - 1) r *= th(z / w[a]) / th.denom(q2 * z / w[a], "K eigenvalue");
        if (mu[a] > j - 1) r *= th(z / (q2 * w[a])) / th.denom(z / w[a], "K eigenvalue");
    }
    return r;
}

cplx relation_factor(const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params) {
    check_labels(mu, N, w);
    const Theta th(params);
    cplx r = 1.0;
    const int n = static_cast<int>(mu.size());
    for (int j = 0; j < n; ++j)
        for (int l = 1; l <= N - 1; ++l)
            for (int a = 1; a <= N - l - 1; ++a)
                for (int s = 0; s < n; ++s)
                    if (mu[s] >= l) r *= th(std::pow(th.q2(), -a) * w[s] / w[j]);
    return r;
}

cplx xtilde_diagonal(const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params) {
    check_labels(mu, N, w);
    const Theta th(params);
    const cplx q2 = th.q2();
    const auto cont = content_of(mu, N);
    int e = 0;
    for (int k = 2; k <= N; ++k) e += (k - 1) * cont[k - 1];
    cplx r = std::pow(th.theta_q2(), e);
    for (int l = 1; l <= N - 1; ++l) {
        const auto top = group_sites(mu, N - l + 1, N);
        for (int j : top) {
            for (int k : group_sites(mu, 1, N - l - 1)) r *= th(w[j] / w[k]);
            for (int k : group_sites(mu, N - l, N))
                if (j < k) r *= th(q2 * w[j] / w[k]);
            for (int k : top)
                if (j > k) r *= th(q2 * w[j] / w[k]);
            for (int k : group_sites(mu, N - l, N - l))
                if (j > k) r *= th(w[j] / w[k]);
        }
    }
    return r;
}

cplx normalization_n(const Index& mu, int N, const std::vector<cplx>& w, const EllipticParams& params) {
    return guarded_div(xtilde_diagonal(mu, N, w, params), w_tilde_diagonal(mu, w, params), "N(w)");
}

cplx zk_partition(const Index& mu, int k, int N, const DynExponents& dyn, const std::vector<cplx>& w,
                  const EllipticParams& params) {
    check_labels(mu, N, w);
    const int n = static_cast<int>(mu.size());
    if (k < 0 || k > n) throw std::domain_error("zk_partition: column out of range");
    if (k == n) return 1.0;
    // rows in application order: group g carries w_j for j in groups g+1..N;
    // it enters column k with index g when j lies left of k, g+1 otherwise
    std::vector<LFactor> rows;
    for (int g = 1; g <= N - 1; ++g)
        for (int j : group_sites(mu, g + 1, N)) rows.push_back({g - 1, (j < k ? g : g + 1) - 1, w[j]});
    LWord word;
    word.factors.assign(rows.rbegin(), rows.rend());
    const Index head(mu.begin(), mu.begin() + k);
    const Index tail(mu.begin() + k, mu.end());
    const std::vector<cplx> ws(w.begin() + k, w.end());
    const TensorVector zeta = TensorVector::basis(N, Index(n - k, 0));
    return apply_lword(word, zeta, dyn.shifted(content_of(head, N)), ws, params)[tail];
}

cplx wk_factor(const Index& mu, int k, int N, const std::vector<cplx>& w, const EllipticParams& params) {
    check_labels(mu, N, w);
    const Theta th(params);
    const cplx q2 = th.q2();
    const int l = mu[k] + 1;
    cplx r = 1.0;
    for (int g = l + 2; g <= N; ++g)
        for (int j : group_sites(mu, g, N)) r *= th(w[j] / w[k]);
    for (int j : group_sites(mu, l + 1, N)) r *= j > k ? th(w[j] / w[k]) : th(q2 * w[j] / w[k]);
    for (int g = l; g >= 2; --g) {
        r *= th.theta_q2();
        for (int j : group_sites(mu, g, N))
            if (j != k) r *= th(q2 * w[j] / w[k]);
    }
    return r;
}

}  // namespace eqg
