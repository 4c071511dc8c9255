#include "eqg/tensor.hpp"


#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "eqg/rmatrix.hpp"

namespace eqg {

std::vector<int> LWord::column_weight(int N) const {
    std::vector<int> c(N, 0);
    for (const LFactor& f : factors) ++c[f.col];
    return c;
}

LWord concat(const LWord& left, const LWord& right) {
    LWord out = left;
    const int off = static_cast<int>(left.factors.size());
    out.factors.insert(out.factors.end(), right.factors.begin(), right.factors.end());
    for (PositionedScalar s : right.scalars) {
        s.position += off;
        out.scalars.push_back(std::move(s));
    }
    return out;
}

Operator compose(const Operator& left, const Operator& right) {
    Operator out;
    out.reserve(left.size() * right.size());
    for (const LWord& a : left)
        for (const LWord& b : right) out.push_back(concat(a, b));
    return out;
}

Operator single(const LWord& w) { return Operator{w}; }

DynVector constant(TensorVector v) {
    return [v = std::move(v)](const DynExponents&) { return v; };
}

namespace {

void check_sites(const TensorVector& v, const std::vector<cplx>& w) {
    if (static_cast<int>(w.size()) != v.n) throw std::domain_error("evaluation points do not match tensor length");
}

}  // namespace

TensorVector apply_l_entry(int k, int l, cplx z, const TensorVector& v, const DynExponents& dyn,
                           const std::vector<cplx>& w, const EllipticParams& params) {
    check_sites(v, w);
    const int N = v.N, n = v.n;
    if (k < 0 || k >= N || l < 0 || l >= N) throw std::domain_error("L entry index out of range");
    const Theta th(params);
    TensorVector out(N, n);

    // Vertex images depend on (site, aux in, site in, accumulated output content).
    std::unordered_map<std::uint64_t, PairImage> cache;
    std::vector<int> cont(N, 0);
    Index mu, outs(n);
    cplx coeff = 0.0;
    const std::uint64_t radix = static_cast<std::uint64_t>(n) + 1;

    auto vertex = [&](int s, int aux, int sin) -> const PairImage& {
        std::uint64_t key = static_cast<std::uint64_t>(s);
        key = key * N + aux;
        key = key * N + sin;
        for (int a = 0; a < N; ++a) key = key * radix + cont[a];
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        return cache.emplace(key, rtilde_map(z / w[s], dyn.shifted(cont), aux, sin, th)).first->second;
    };

    std::function<void(int, int, cplx)> rec = [&](int s, int aux, cplx wt) {
        if (s == n) {
            if (aux == k) out[outs] += wt;
            return;
        }
        const PairImage img = vertex(s, aux, mu[s]);
        for (int t = 0; t < img.size; ++t) {
            const PairTerm& tm = img.terms[t];
            if (tm.coeff == 0.0) continue;
            outs[s] = tm.second;
            ++cont[tm.second];
            rec(s + 1, tm.first, wt * tm.coeff);
            --cont[tm.second];
        }
    };

    for (std::size_t idx = 0; idx < v.coeffs.size(); ++idx) {
        coeff = v.coeffs[idx];
        if (coeff == 0.0) continue;
        mu = decode(idx, N, n);
        rec(0, l, coeff);
    }
    return out;
}

std::vector<cplx> l_entry_matrix(int k, int l, cplx z, const DynExponents& dyn, const std::vector<cplx>& w,
                                 const EllipticParams& params) {
    const int N = dyn.N(), n = static_cast<int>(w.size());
    const std::size_t dim = ipow(N, n);
    std::vector<cplx> M(dim * dim, 0.0);
    for (std::size_t j = 0; j < dim; ++j) {
        const TensorVector col = apply_l_entry(k, l, z, TensorVector::basis(N, decode(j, N, n)), dyn, w, params);
        for (std::size_t i = 0; i < dim; ++i) M[i * dim + j] = col.coeffs[i];
    }
    return M;
}

TensorVector apply_lword(const LWord& word, const TensorVector& v, const DynExponents& dyn,
                         const std::vector<cplx>& w, const EllipticParams& params) {
    check_sites(v, w);
    const int N = v.N;
    const int m = static_cast<int>(word.factors.size());
    // prefix[j] = shifted dynamical argument seen at position j
    std::vector<DynExponents> prefix;
    prefix.reserve(m + 1);
    prefix.push_back(dyn);
    for (int j = 0; j < m; ++j) prefix.push_back(prefix.back().shifted(word.factors[j].col));

    auto apply_scalars_at = [&](int pos, TensorVector& x) {
        for (const PositionedScalar& s : word.scalars) {
            if (s.position != pos) continue;
            if (s.position < 0 || s.position > m) throw std::domain_error("scalar position out of range");
            std::unordered_map<std::size_t, cplx> by_content;
            for (std::size_t idx = 0; idx < x.coeffs.size(); ++idx) {
                if (x.coeffs[idx] == 0.0) continue;
                const auto c = content_of(decode(idx, N, x.n), N);
                std::size_t key = 0;
                for (int a : c) key = key * (x.n + 1) + a;
                auto it = by_content.find(key);
                if (it == by_content.end()) it = by_content.emplace(key, s.fn(prefix[pos], c)).first;
                x.coeffs[idx] *= it->second;
            }
        }
    };

    TensorVector x = v;
    for (int pos = m; pos >= 0; --pos) {
        apply_scalars_at(pos, x);
        if (pos > 0) {
            const LFactor& f = word.factors[pos - 1];
            x = apply_l_entry(f.row, f.col, f.z, x, prefix[pos - 1], w, params);
        }
    }
    return x;
}

TensorVector apply_operator(const Operator& op, const DynVector& v, const DynExponents& dyn,
                            const std::vector<cplx>& w, const EllipticParams& params) {
    TensorVector out;
    bool first = true;
    for (const LWord& word : op) {
        const TensorVector base = v(dyn.shifted(word.column_weight(dyn.N())));
        TensorVector t = apply_lword(word, base, dyn, w, params);
        if (first) {
            out = std::move(t);
            first = false;
        } else {
            out += t;
        }
    }
    if (first) throw std::domain_error("apply_operator: empty operator");
    return out;
}

TensorVector apply_operator(const Operator& op, const TensorVector& v, const DynExponents& dyn,
                            const std::vector<cplx>& w, const EllipticParams& params) {
    return apply_operator(op, constant(v), dyn, w, params);
}

namespace {

cplx partition_sequential(const std::vector<int>& K, const std::vector<int>& L, const std::vector<cplx>& zs,
                          const Index& alpha, const Index& beta, const DynExponents& dyn,
                          const std::vector<cplx>& w, const EllipticParams& params) {
    LWord word;
    for (int r = static_cast<int>(K.size()) - 1; r >= 0; --r) word.factors.push_back({K[r], L[r], zs[r]});
    const TensorVector out = apply_lword(word, TensorVector::basis(dyn.N(), alpha), dyn, w, params);
    return out[beta];
}

// One lattice configuration: vertical states vert[r][s] (r = 0..m), horizontal
// states hor[r][s] (s = 0..n). Returns 0 when any vertex violates the ice rule.
struct Lattice {
    int N, n, m;
    const std::vector<int>& K;
    const std::vector<int>& L;
    const std::vector<cplx>& zs;
    const Index& alpha;
    const Index& beta;
    const std::vector<DynExponents>& row_dyn;
    const std::vector<cplx>& w;
    const Theta& th;

    std::size_t count() const { return ipow(N, n * (m - 1) + m * (n - 1)); }

    cplx weight(std::size_t cfg, std::vector<int>& vert, std::vector<int>& hor) const {
        // decode free edges
        for (int s = 0; s < n; ++s) {
            vert[s] = alpha[s];
            vert[m * n + s] = beta[s];
        }
        for (int r = 1; r < m; ++r)
            for (int s = 0; s < n; ++s) {
                vert[r * n + s] = static_cast<int>(cfg % N);
                cfg /= N;
            }
        for (int r = 0; r < m; ++r) {
            hor[r * (n + 1)] = L[r];
            hor[r * (n + 1) + n] = K[r];
            for (int s = 1; s < n; ++s) {
                hor[r * (n + 1) + s] = static_cast<int>(cfg % N);
                cfg /= N;
            }
        }
        // cheap ice-rule screen before any theta evaluation
        for (int r = 0; r < m; ++r)
            for (int s = 0; s < n; ++s) {
                const int ai = hor[r * (n + 1) + s], ao = hor[r * (n + 1) + s + 1];
                const int si = vert[r * n + s], so = vert[(r + 1) * n + s];
                if (!((ai == ao && si == so) || (ai == so && si == ao))) return 0.0;
            }
        cplx wt = 1.0;
        std::vector<int> cont(N);
        for (int r = 0; r < m; ++r) {
            std::fill(cont.begin(), cont.end(), 0);
            for (int s = 0; s < n; ++s) {
                const int ai = hor[r * (n + 1) + s], ao = hor[r * (n + 1) + s + 1];
                const int si = vert[r * n + s], so = vert[(r + 1) * n + s];
                const PairImage img = rtilde_map(zs[r] / w[s], row_dyn[r].shifted(cont), ai, si, th);
                cplx v = 0.0;
                for (int t = 0; t < img.size; ++t)
                    if (img.terms[t].first == ao && img.terms[t].second == so) v += img.terms[t].coeff;
                if (v == 0.0) return 0.0;
                wt *= v;
                ++cont[so];
            }
        }
        return wt;
    }
};

}  // namespace

cplx partition_z(const std::vector<int>& K, const std::vector<int>& L, const std::vector<cplx>& zs,
                 const Index& alpha, const Index& beta, const DynExponents& dyn, const std::vector<cplx>& w,
                 const EllipticParams& params, PartitionMode mode, Exec exec) {
    const int m = static_cast<int>(K.size());
    const int N = dyn.N(), n = static_cast<int>(w.size());
    if (static_cast<int>(L.size()) != m || static_cast<int>(zs.size()) != m)
        throw std::domain_error("partition_z: K, L, zs length mismatch");
    if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
        throw std::domain_error("partition_z: boundary length mismatch");
    if (m == 0) return alpha == beta ? 1.0 : 0.0;
    if (mode == PartitionMode::Sequential) return partition_sequential(K, L, zs, alpha, beta, dyn, w, params);

    const double states = std::pow(static_cast<double>(N), n * (m - 1) + m * (n - 1));
    if (states > enumeration_cap) throw std::domain_error("partition_z: enumeration exceeds the state cap");

    // Row r is the r-th factor applied; it sees e_{L[r']} for every r' > r.
    std::vector<DynExponents> row_dyn(m, dyn);
    for (int r = m - 2; r >= 0; --r) row_dyn[r] = row_dyn[r + 1].shifted(L[r + 1]);

    const Theta th(params);
    const Lattice lat{N, n, m, K, L, zs, alpha, beta, row_dyn, w, th};
    const auto total = static_cast<long long>(lat.count());

    if (exec == Exec::Serial) {
        std::vector<int> vert((m + 1) * n), hor(m * (n + 1));
        cplx sum = 0.0;
        for (long long c = 0; c < total; ++c) sum += lat.weight(static_cast<std::size_t>(c), vert, hor);
        return sum;
    }

    double re = 0.0, im = 0.0;
#pragma omp parallel reduction(+ : re, im)
    {
        std::vector<int> vert((m + 1) * n), hor(m * (n + 1));
#pragma omp for schedule(static)
        for (long long c = 0; c < total; ++c) {
            const cplx v = lat.weight(static_cast<std::size_t>(c), vert, hor);
            re += v.real();
            im += v.imag();
        }
    }
    return {re, im};
}

}  // namespace eqg
