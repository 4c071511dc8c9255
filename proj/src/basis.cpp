#include "eqg/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eqg {

std::size_t ipow(int base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
    return r;
}

std::size_t encode(const Index& mu, int N) {
    std::size_t idx = 0;
    for (int m : mu) {
        if (m < 0 || m >= N) throw std::domain_error("basis index out of range");
        idx = idx * N + m;
    }
    return idx;
}

Index decode(std::size_t idx, int N, int n) {
    Index mu(n);
    for (int i = n - 1; i >= 0; --i) {
        mu[i] = static_cast<int>(idx % N);
        idx /= N;
    }
    return mu;
}

std::vector<int> content_of(const Index& mu, int N) {
    std::vector<int> c(N, 0);
    for (int m : mu) ++c[m];
    return c;
}

std::vector<Index> all_indices(int N, int n) {
    std::vector<Index> out;
    const std::size_t dim = ipow(N, n);
    out.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) out.push_back(decode(i, N, n));
    return out;
}

std::vector<Index> indices_with_content(const std::vector<int>& content) {
    Index mu;
    for (std::size_t a = 0; a < content.size(); ++a) mu.insert(mu.end(), content[a], static_cast<int>(a));
    std::vector<Index> out;
    do {
        out.push_back(mu);
    } while (std::next_permutation(mu.begin(), mu.end()));
    return out;
}

Index parse_index_word(const std::string& word, int N) {
    Index mu;
    for (char ch : word) {
        if (ch == ',' || ch == ' ') continue;
        const int v = ch - '0';
        if (v < 1 || v > N) throw std::domain_error("index word entry out of range: " + word);
        mu.push_back(v - 1);
    }
    return mu;
}

std::string index_word(const Index& mu) {
    std::string s;
    for (int m : mu) s.push_back(static_cast<char>('1' + m));
    return s;
}

PartitionI PartitionI::from_index(const Index& mu, int N) {
    PartitionI I;
    I.sets.assign(N, {});
    for (std::size_t i = 0; i < mu.size(); ++i) I.sets[mu[i]].push_back(static_cast<int>(i));
    return I;
}

int PartitionI::n() const {
    int n = 0;
    for (const auto& s : sets) n += static_cast<int>(s.size());
    return n;
}

Index PartitionI::to_index() const {
    const int n_ = n();
    Index mu(n_, -1);
    for (int l = 0; l < N(); ++l)
        for (int i : sets[l]) {
            if (i < 0 || i >= n_ || mu[i] != -1) throw std::domain_error("PartitionI: not a partition of the sites");
            mu[i] = l;
        }
    return mu;
}

TensorVector::TensorVector(int N_, int n_) : N(N_), n(n_), coeffs(ipow(N_, n_), 0.0) {}

TensorVector TensorVector::basis(int N, const Index& mu) {
    TensorVector v(N, static_cast<int>(mu.size()));
    v[mu] = 1.0;
    return v;
}

std::optional<std::vector<int>> TensorVector::content(double cutoff) const {
    std::optional<std::vector<int>> c;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (std::abs(coeffs[i]) <= cutoff) continue;
        auto ci = content_of(decode(i, N, n), N);
        if (!c) c = ci;
        else if (*c != ci) return std::nullopt;
    }
    return c;
}

double TensorVector::max_abs() const {
    double m = 0.0;
    for (const cplx& c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    if (o.coeffs.size() != coeffs.size()) throw std::domain_error("TensorVector size mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
    if (o.coeffs.size() != coeffs.size()) throw std::domain_error("TensorVector size mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
}

TensorVector& TensorVector::operator*=(cplx s) {
    for (cplx& c : coeffs) c *= s;
    return *this;
}

TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
TensorVector operator*(cplx s, TensorVector a) { return a *= s; }

double max_abs_diff(const TensorVector& a, const TensorVector& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw std::domain_error("TensorVector size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) m = std::max(m, std::abs(a.coeffs[i] - b.coeffs[i]));
    return m;
}

double rel_residual(const TensorVector& a, const TensorVector& b) {
    const double ref = std::max(a.max_abs(), b.max_abs());
    const double d = max_abs_diff(a, b);
    return ref > 1e-6 ? d / ref : d;
}

double rel_residual(cplx a, cplx b) {
    const double ref = std::max(std::abs(a), std::abs(b));
    const double d = std::abs(a - b);
    return ref > 1e-6 ? d / ref : d;
}

Proportionality proportionality(const TensorVector& a, const TensorVector& b) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < b.coeffs.size(); ++i)
        if (std::abs(b.coeffs[i]) > std::abs(b.coeffs[k])) k = i;
    if (std::abs(b.coeffs[k]) == 0.0) throw std::domain_error("proportionality: reference vector is zero");
    const cplx f = a.coeffs[k] / b.coeffs[k];
    const double na = a.max_abs();
    const double d = max_abs_diff(a, f * b);
    return {f, na > 0 ? d / na : d};
}

}  // namespace eqg
