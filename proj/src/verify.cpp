#include "eqg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <numeric>

#include "eqg/gl2.hpp"
#include "eqg/gt_bases.hpp"
#include "eqg/linalg.hpp"
#include "eqg/rmatrix.hpp"
#include "eqg/weight_functions.hpp"

namespace eqg {

using json = nlohmann::json;

EllipticParams RunConfig::params() const {
    EllipticParams p_;
    p_.q = q;
    p_.p = p;
    p_.truncation_order = truncation;
    // products are truncated far below the comparison tolerance
    p_.tol = std::min(tol, 1e-11);
    return p_;
}

void RunConfig::validate() const {
    if (N < 2 || N > 4) throw std::invalid_argument("N must lie in [2, 4]");
    if (n < 1 || n > 6) throw std::invalid_argument("n must lie in [1, 6]");
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0, 1)");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0, 1)");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (truncation < 0) throw std::invalid_argument("truncation must be >= 0");
    if (!lambda.empty() && static_cast<int>(lambda.size()) != N) throw std::invalid_argument("lambda needs N entries");
    if (!w.empty() && static_cast<int>(w.size()) != n) throw std::invalid_argument("w needs n entries");
    for (double x : w)
        if (!(x > 0.0)) throw std::invalid_argument("w entries must be positive");
    if (level < 0 || level > 6) throw std::invalid_argument("l must lie in [0, 6]");
    for (const auto& s : suites)
        if (s != "all" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw std::invalid_argument("unknown suite: " + s);
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

double default_tolerance() {
    if (const char* env = std::getenv("EQG_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
    }
    return 1e-9;
}

namespace {

constexpr double band = 1e-3;
// Pi* and q^{+-2} Pi* enter one denominator per site, so their distance to the
// zero set is raised to the n-th power in the word sums; keep them well clear.
constexpr double near_band = 0.15;

bool near_lattice(double logratio, double lq, double lp, int kmax, int mmax, double half_width = band) {
    for (int k = -kmax; k <= kmax; ++k)
        for (int m = -mmax; m <= mmax; ++m)
            if (std::abs(logratio - 2.0 * k * lq - m * lp) < half_width) return true;
    return false;
}

}  // namespace

std::vector<cplx> sample_points(int n, std::mt19937_64& rng, const EllipticParams& params,
                                const std::vector<cplx>& avoid) {
    std::uniform_real_distribution<double> U(0.2, 3.0);
    const double lq = std::log(std::abs(params.q)), lp = std::log(std::abs(params.p));
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<double> w(n);
        for (double& x : w) x = U(rng);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            for (int j = i + 1; j < n && ok; ++j) ok = !near_lattice(std::log(w[i] / w[j]), lq, lp, 4, 2);
            for (std::size_t j = 0; j < avoid.size() && ok; ++j)
                ok = !near_lattice(std::log(w[i] / std::abs(avoid[j])), lq, lp, 4, 2);
        }
        if (ok) return {w.begin(), w.end()};
    }
    throw DegenerateError("could not sample generic evaluation points");
}

DynExponents sample_dynamics(int N, int max_shift, std::mt19937_64& rng, const EllipticParams& params) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const double lq = std::log(std::abs(params.q)), lp = std::log(std::abs(params.p));
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<double> lam(N, 0.0);
        for (int a = 0; a + 1 < N; ++a) lam[a] = U(rng);
        bool ok = true;
        for (int j = 0; j < N && ok; ++j)
            for (int k = j + 1; k < N && ok; ++k)
                for (int s = -max_shift; s <= max_shift && ok; ++s) {
                    // theta(q^{2x}) vanishes when 2x log q lies in log p Z
                    const double x = lam[j] - lam[k] + s;
                    for (int e = -1; e <= 1 && ok; ++e)
                        ok = !near_lattice(2.0 * (x + e) * lq, 0.0, lp, 0, 3, std::abs(s + e) <= 1 ? near_band : band);
                }
        if (ok) return DynExponents(std::vector<cplx>(lam.begin(), lam.end()));
    }
    throw DegenerateError("could not sample generic dynamical exponents");
}

namespace {

using Clock = std::chrono::steady_clock;

struct Draw {
    DynExponents dyn;
    std::vector<cplx> w;
    std::vector<cplx> spectral;  // extra test points, reported for reproduction
};

class Collector {
public:
    explicit Collector(double tol) : tol_(tol) {}

    void run(const std::string& name, const std::function<double()>& f) { run(name, tol_, f); }
    void run(const std::string& name, double threshold, const std::function<double()>& f) {
        const auto t0 = Clock::now();
        const double r = f();
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        checks_.push_back({name, r, threshold, std::isfinite(r) && r < threshold, secs});
    }
    std::vector<Check> take() { return std::move(checks_); }

private:
    double tol_;
    std::vector<Check> checks_;
};

// Deterministic max of f(i) over i in [0, count), evaluated in parallel.
double parallel_max(long long count, const std::function<double(long long)>& f) {
    std::vector<double> vals(static_cast<std::size_t>(std::max(0LL, count)), 0.0);
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        try {
            vals[static_cast<std::size_t>(i)] = f(i);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    double m = 0.0;
    for (double v : vals) m = std::isnan(v) ? v : std::max(m, v);
    return m;
}

TensorVector random_vector(int N, int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    TensorVector v(N, n);
    for (cplx& c : v.coeffs) c = U(rng);
    return v;
}

std::vector<std::vector<int>> subsets(int N, int k) {
    std::vector<std::vector<int>> out;
    std::vector<bool> pick(N, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::vector<int> s;
        for (int i = 0; i < N; ++i)
            if (pick[i]) s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

Operator lop(int row, int col, cplx z) { return single(LWord{{{row, col, z}}, {}}); }

Operator with_scalar(Operator op, int position, DynScalarFn fn) {
    for (LWord& w : op) w.scalars.push_back({position, fn, "coefficient"});
    return op;
}

Operator sum(Operator a, const Operator& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

double commutator(const Operator& X, const Operator& Y, const TensorVector& v, const DynExponents& dyn,
                  const std::vector<cplx>& w, const EllipticParams& P) {
    return rel_residual(apply_operator(compose(X, Y), v, dyn, w, P), apply_operator(compose(Y, X), v, dyn, w, P));
}

// ---------------------------------------------------------------- special

std::vector<Check> suite_special(const RunConfig& cfg, const EllipticParams& P, std::mt19937_64& rng) {
    Collector c(cfg.tol);
    const cplx p = P.p, q = P.q;
    const int ord = P.order();
    std::uniform_real_distribution<double> Z(0.1, 10.0), G(0.1, 0.95);
    std::vector<double> zs(100), gs(50);
    for (double& z : zs) z = Z(rng);
    for (double& z : gs) z = G(rng);

    c.run("special.theta_quasi_periodicity", [&] {
        double m = 0.0;
        for (double z : zs) {
            const cplx t = theta_big(z, p, ord);
            m = std::max(m, std::abs(theta_big(p * z, p, ord) + t / z) / std::abs(t));
        }
        return m;
    });
    c.run("special.theta_zero_set", [&] {
        double m = 0.0;
        for (int k = -2; k <= 2; ++k) m = std::max(m, std::abs(theta_big(std::pow(p, k), p, ord)));
        return m;
    });
    c.run("special.theta_odd", [&] {
        const Theta th(P);
        double m = 0.0;
        for (double z : zs) m = std::max(m, std::abs(th(1.0 / z) + th(z)) / std::abs(th(z)));
        return m;
    });
    c.run("special.gamma_shift_p", [&] {
        const cplx qq = q_pochhammer(q, {q}, ord);
        double m = 0.0;
        for (double z : gs)
            m = std::max(m, rel_residual(elliptic_gamma(p * z, p, q, ord),
                                         theta_big(z, q, ord) / qq * elliptic_gamma(z, p, q, ord)));
        return m;
    });
    c.run("special.gamma_shift_q", [&] {
        const cplx pp = q_pochhammer(p, {p}, ord);
        double m = 0.0;
        for (double z : gs)
            m = std::max(m, rel_residual(elliptic_gamma(q * z, p, q, ord),
                                         theta_big(z, p, ord) / pp * elliptic_gamma(z, p, q, ord)));
        return m;
    });
    c.run("special.truncation_stability", [&] {
        double m = 0.0;
        for (double z : gs) {
            m = std::max(m, rel_residual(theta_big(z, p, ord), theta_big(z, p, 2 * ord)));
            m = std::max(m, rel_residual(elliptic_gamma(z, p, q, ord), elliptic_gamma(z, p, q, 2 * ord)));
        }
        return m;
    });
    return c.take();
}

// ---------------------------------------------------------------- rmatrix

std::vector<Check> suite_rmatrix(const RunConfig& cfg, const EllipticParams& P, const Draw& d, std::mt19937_64& rng) {
    Collector c(cfg.tol);
    const int N = cfg.N;
    struct Sample {
        std::vector<cplx> z;
        DynExponents dyn;
    };
    std::vector<Sample> draws;
    for (int k = 0; k < 20; ++k) draws.push_back({sample_points(3, rng, P), sample_dynamics(N, 3, rng, P)});
    draws[0].dyn = d.dyn;

    c.run("rmatrix.dybe", [&] {
        return parallel_max(static_cast<long long>(draws.size()), [&](long long k) {
            const auto& s = draws[static_cast<std::size_t>(k)];
            return check_dybe(s.z[0], s.z[1], s.z[2], s.dyn, P, N);
        });
    });
    c.run("rmatrix.dybe_equal_points", [&] { return check_dybe(1.3, 1.3, 0.7, d.dyn, P, N); });
    c.run("rmatrix.unitarity", [&] {
        double m = 0.0;
        for (const auto& s : draws) m = std::max(m, check_unitarity(s.z[0] / s.z[1], s.dyn, P, N));
        return m;
    });
    c.run("rmatrix.ice_rule", [&] {
        for (const auto& s : draws)
            if (!check_ice_rule(rbar_matrix(s.z[0] / s.z[1], s.dyn, P, N)) ||
                !check_ice_rule(rtilde_matrix(s.z[0] / s.z[1], s.dyn, P, N)))
                return 1.0;
        return 0.0;
    });
    c.run("rmatrix.rbar_at_one_is_permutation", [&] {
        const RMatrix R = rbar_matrix(1.0, d.dyn, P, N);
        double m = 0.0;
        for (int i1 = 0; i1 < N; ++i1)
            for (int i2 = 0; i2 < N; ++i2)
                for (int j1 = 0; j1 < N; ++j1)
                    for (int j2 = 0; j2 < N; ++j2)
                        m = std::max(m, std::abs(R.at(i1, i2, j1, j2) - ((i1 == j2 && i2 == j1) ? 1.0 : 0.0)));
        return m;
    });
    c.run("rmatrix.rtilde_normalization", [&] {
        const Theta th(P);
        double m = 0.0;
        for (const auto& s : draws) {
            const cplx z = s.z[0] / s.z[1];
            const RMatrix A = rtilde_matrix(z, s.dyn, P, N), B = rbar_matrix(z, s.dyn, P, N);
            for (std::size_t i = 0; i < A.entries.size(); ++i)
                m = std::max(m, rel_residual(A.entries[i], th(th.q2() * z) * B.entries[i]));
        }
        return m;
    });
    const int n = 3;
    const auto zs = sample_points(n, rng, P);
    const TensorVector v = random_vector(N, n, rng);
    c.run("rmatrix.stilde_involution", [&] {
        double m = 0.0;
        for (int i = 0; i + 1 < n; ++i) {
            const auto [a, za] = stilde_apply(i, v, d.dyn, zs, P);
            const auto [b, zb] = stilde_apply(i, a, d.dyn, za, P);
            m = std::max(m, rel_residual(b, v));
        }
        return m;
    });
    c.run("rmatrix.stilde_braid", [&] {
        auto chain = [&](std::initializer_list<int> order) {
            TensorVector x = v;
            std::vector<cplx> z = zs;
            for (int i : order) std::tie(x, z) = stilde_apply(i, x, d.dyn, z, P);
            return x;
        };
        return rel_residual(chain({0, 1, 0}), chain({1, 0, 1}));
    });
    return c.take();
}

// ---------------------------------------------------------------- minors

std::vector<Check> suite_minors(const RunConfig& cfg, const EllipticParams& P, Draw& d, std::mt19937_64& rng) {
    Collector c(cfg.tol);
    const int N = cfg.N;
    const int n = std::min(cfg.n, 3);
    const std::vector<cplx> w(d.w.begin(), d.w.begin() + n);
    const TensorVector v = random_vector(N, n, rng);
    const auto zz = sample_points(2, rng, P, w);
    const cplx z = zz[0], u = zz[1];
    d.spectral = zz;
    const Theta th(P);

    c.run("minors.exchange", [&] {
        std::vector<int> J(N), tau(N);
        std::iota(J.begin(), J.end(), 0);
        std::iota(tau.begin(), tau.end(), 0);
        const TensorVector ref = apply_minor({J, J, z}, v, d.dyn, w, P);
        double m = 0.0;
        do {
            std::vector<int> K(N);
            for (int a = 0; a < N; ++a) K[a] = J[tau[a]];
            const Operator op = with_scalar(minor_operator({J, K, z}, P), 0,
                                            [J, tau, P](const DynExponents& dd, const std::vector<int>&) {
                                                return sgn_star(J, tau, dd, P);
                                            });
            m = std::max(m, rel_residual(apply_operator(op, v, d.dyn, w, P), ref));
        } while (std::next_permutation(tau.begin(), tau.end()));
        return m;
    });

    std::vector<MinorSpec> specs;
    for (int k = 2; k <= N; ++k)
        for (const auto& rows : subsets(N, k))
            for (const auto& cols : subsets(N, k)) specs.push_back({rows, cols, z});
    c.run("minors.column_expansion", [&] {
        return parallel_max(static_cast<long long>(specs.size()), [&](long long i) {
            const MinorSpec& s = specs[static_cast<std::size_t>(i)];
            return rel_residual(apply_operator(minor_operator_column(s, P), v, d.dyn, w, P), apply_minor(s, v, d.dyn, w, P));
        });
    });
    c.run("minors.row_sum_expansion", [&] {
        return parallel_max(static_cast<long long>(specs.size()), [&](long long i) {
            const MinorSpec& s = specs[static_cast<std::size_t>(i)];
            return rel_residual(apply_operator(minor_operator_rowsum(s, P), v, d.dyn, w, P), apply_minor(s, v, d.dyn, w, P));
        });
    });
    c.run("minors.qdet_central", [&] {
        const cplx e = eigenvalue_a(1, z, Index(n, 0), N, w, P);
        const auto basis = all_indices(N, n);
        return parallel_max(static_cast<long long>(basis.size()), [&](long long i) {
            const TensorVector b = TensorVector::basis(N, basis[static_cast<std::size_t>(i)]);
            return rel_residual(apply_A(1, z, b, d.dyn, w, P), e * b);
        });
    });

    struct Pair {
        Operator X, Y;
    };
    auto run_pairs = [&](const std::string& name, const std::vector<Pair>& pairs) {
        c.run(name, [&] {
            return parallel_max(static_cast<long long>(pairs.size()), [&](long long i) {
                const Pair& pr = pairs[static_cast<std::size_t>(i)];
                return commutator(pr.X, pr.Y, v, d.dyn, w, P);
            });
        });
    };
    std::vector<Pair> aa, ab, ac, bc, bb, cc;
    for (int a = 1; a <= N; ++a)
        for (int b = a; b <= N; ++b) aa.push_back({A_operator(a, N, z, P), A_operator(b, N, u, P)});
    for (int a = 1; a <= N; ++a)
        for (int b = 2; b <= N; ++b)
            if (a != b) {
                ab.push_back({A_operator(a, N, z, P), B_operator(b, N, u, P)});
                ac.push_back({A_operator(a, N, z, P), C_operator(b, N, u, P)});
            }
    for (int a = 2; a <= N; ++a)
        for (int b = 2; b <= N; ++b) {
            if (a != b) bc.push_back({B_operator(a, N, z, P), C_operator(b, N, u, P)});
            if (std::abs(a - b) != 1 && a <= b) {
                bb.push_back({B_operator(a, N, z, P), B_operator(b, N, u, P)});
                cc.push_back({C_operator(a, N, z, P), C_operator(b, N, u, P)});
            }
        }
    run_pairs("minors.commute_A_A", aa);
    run_pairs("minors.commute_A_B", ab);
    run_pairs("minors.commute_A_C", ac);
    if (!bc.empty()) run_pairs("minors.commute_B_C", bc);
    run_pairs("minors.commute_B_B", bb);
    run_pairs("minors.commute_C_C", cc);

    // gl_2 exchange relations on the 2-dimensional module
    const DynExponents d2(std::vector<cplx>{d.dyn.lambda[0], d.dyn.lambda[1]});
    const TensorVector v2 = random_vector(2, n, rng);
    c.run("minors.AB_exchange_N2", [&] {
        const cplx q2 = th.q2();
        const Operator lhs = compose(lop(1, 1, z), lop(0, 1, u));
        const Operator r1 = with_scalar(compose(lop(0, 1, u), lop(1, 1, z)), 0,
                                        [&](const DynExponents&, const std::vector<int>&) {
                                            return th(q2 * z / u) / th.denom(z / u, "AB");
                                        });
        const Operator r2 = with_scalar(compose(lop(0, 1, z), lop(1, 1, u)), 0,
                                        [&](const DynExponents& dd, const std::vector<int>& ct) {
                                            const cplx Pinv = 1.0 / DynWeight{dd, ct}.pi(0, 1, P.q);
                                            return -th(Pinv * z / u) * th.theta_q2() /
                                                   (th.denom(Pinv, "AB") * th.denom(z / u, "AB"));
                                        });
        return rel_residual(apply_operator(lhs, v2, d2, w, P), apply_operator(sum(r1, r2), v2, d2, w, P));
    });
    c.run("minors.CA_exchange_N2", [&] {
        const cplx q2 = th.q2();
        const Operator lhs = compose(lop(1, 0, u), lop(1, 1, z));
        const Operator r1 = with_scalar(compose(lop(1, 1, z), lop(1, 0, u)), 0,
                                        [&](const DynExponents&, const std::vector<int>&) {
                                            return th(q2 * z / u) / th.denom(z / u, "CA");
                                        });
        const Operator r2 = with_scalar(compose(lop(1, 1, u), lop(1, 0, z)), 2,
                                        [&](const DynExponents& dd, const std::vector<int>&) {
                                            const cplx Ps = dd.pi_star(0, 1, P.q);
                                            return -th(Ps * z / u) * th.theta_q2() /
                                                   (th.denom(Ps, "CA") * th.denom(z / u, "CA"));
                                        });
        return rel_residual(apply_operator(lhs, v2, d2, w, P), apply_operator(sum(r1, r2), v2, d2, w, P));
    });
    return c.take();
}

// ---------------------------------------------------------------- gtbasis

std::vector<Check> suite_gtbasis(const RunConfig& cfg, const EllipticParams& P, Draw& d, std::mt19937_64& rng) {
    Collector c(cfg.tol);
    const int N = cfg.N, n = cfg.n;
    const auto& w = d.w;
    const auto labels = all_indices(N, n);
    const auto count = static_cast<long long>(labels.size());
    const auto zs = sample_points(3, rng, P, w);
    d.spectral = zs;
    const cplx q2 = P.q * P.q;
    auto lab = [&](long long i) -> const Index& { return labels[static_cast<std::size_t>(i)]; };

    c.run("gtbasis.xi_tilde_eigenvectors", [&] {
        return parallel_max(count, [&](long long i) {
            const Index& mu = lab(i);
            const DynVector xv = [&](const DynExponents& dd) { return build_xi_tilde(mu, N, dd, w, P); };
            const TensorVector x = xv(d.dyn);
            double m = 0.0;
            for (int l = 1; l <= N; ++l)
                for (cplx z : zs)
                    m = std::max(m, rel_residual(apply_operator(A_operator(l, N, z, P), xv, d.dyn, w, P),
                                                 eigenvalue_a(l, z, mu, N, w, P) * x));
            return m;
        });
    });
    c.run("gtbasis.distinct_spectra", 1.0, [&] {
        double min_sep = INFINITY;
        for (long long i = 0; i < count; ++i)
            for (long long j = i + 1; j < count; ++j) {
                double sep = 0.0;
                for (int l = 1; l <= N; ++l)
                    for (cplx z : zs)
                        sep = std::max(sep, std::abs(eigenvalue_a(l, z, lab(i), N, w, P) - eigenvalue_a(l, z, lab(j), N, w, P)));
                min_sep = std::min(min_sep, sep);
            }
        return count < 2 ? 0.0 : 1e3 * cfg.tol / min_sep;
    });
    c.run("gtbasis.xi_minor_relation", [&] {
        return parallel_max(count, [&](long long i) {
            const Index& mu = lab(i);
            return rel_residual(build_xi_minor(mu, N, d.dyn, w, P),
                                relation_factor(mu, N, w, P) * build_xi_tilde(mu, N, d.dyn, w, P));
        });
    });
    c.run("gtbasis.xi_minor_eigenvectors", [&] {
        const cplx z = zs[0];
        return parallel_max(count, [&](long long i) {
            const Index& mu = lab(i);
            const DynVector xv = [&](const DynExponents& dd) { return build_xi_minor(mu, N, dd, w, P); };
            const TensorVector x = xv(d.dyn);
            double m = 0.0;
            for (int l = 1; l <= N; ++l)
                m = std::max(m, rel_residual(apply_operator(A_operator(l, N, z, P), xv, d.dyn, w, P),
                                             eigenvalue_a(l, z, mu, N, w, P) * x));
            return m;
        });
    });
    c.run("gtbasis.xi_tilde_normalization", [&] {
        return parallel_max(count, [&](long long i) {
            const Index& mu = lab(i);
            return rel_residual(build_xi_tilde(mu, N, d.dyn, w, P),
                                normalization_n(mu, N, w, P) * build_xi_prime(mu, N, d.dyn, w, P));
        });
    });
    c.run("gtbasis.xi_prime_path_independence", [&] {
        return parallel_max(count, [&](long long i) {
            const Index& mu = lab(i);
            return rel_residual(build_xi_prime(mu, N, d.dyn, w, P, Ascent::First),
                                build_xi_prime(mu, N, d.dyn, w, P, Ascent::Last));
        });
    });
    c.run("gtbasis.k_action", [&] {
        const cplx z = zs[1];
        return parallel_max(count, [&](long long i) {
            const Index& mu = lab(i);
            const DynVector xv = xi_prime_vector(mu, N, w, P);
            double m = 0.0;
            for (int j = 1; j <= N; ++j) {
                const TensorVector lhs = apply_operator(A_operator(j, N, z, P), xv, d.dyn, w, P);
                const TensorVector inner =
                    j == N ? xv(d.dyn) : apply_operator(A_operator(j + 1, N, z / q2, P), xv, d.dyn, w, P);
                m = std::max(m, rel_residual(lhs, k_eigenvalue(j, z, mu, N, w, P) * inner));
            }
            return m;
        });
    });
    c.run("gtbasis.xtilde_diagonal", [&] {
        return parallel_max(count, [&](long long i) {
            const Index& mu = lab(i);
            return rel_residual(zk_partition(mu, 0, N, d.dyn, w, P), xtilde_diagonal(mu, N, w, P));
        });
    });
    c.run("gtbasis.column_recursion", [&] {
        return parallel_max(count, [&](long long i) {
            const Index& mu = lab(i);
            double m = 0.0;
            for (int k = 0; k < n; ++k)
                m = std::max(m, rel_residual(zk_partition(mu, k, N, d.dyn, w, P),
                                             wk_factor(mu, k, N, w, P) * zk_partition(mu, k + 1, N, d.dyn, w, P)));
            return m;
        });
    });
    if (n <= 4) {
        // per weight block: the matrix of basis vectors restricted to the block
        auto rank_check = [&](const std::function<TensorVector(const Index&)>& build) {
            std::vector<std::vector<int>> contents;
            for (const Index& mu : labels) {
                auto ct = content_of(mu, N);
                if (std::find(contents.begin(), contents.end(), ct) == contents.end()) contents.push_back(ct);
            }
            double worst = 0.0;
            for (const auto& ct : contents) {
                const auto block = indices_with_content(ct);
                const std::size_t m = block.size();
                std::vector<cplx> A(m * m);
                for (std::size_t a = 0; a < m; ++a) {
                    const TensorVector x = build(block[a]);
                    for (std::size_t b = 0; b < m; ++b) A[b * m + a] = x[block[b]];
                }
                const Determinant det = determinant(A, m);
                worst = std::max(worst, det.pivot_ratio > 0 ? 1.0 / det.pivot_ratio : INFINITY);
            }
            return worst;
        };
        c.run("gtbasis.independence_xi_tilde", 1e12,
              [&] { return rank_check([&](const Index& mu) { return build_xi_tilde(mu, N, d.dyn, w, P); }); });
        c.run("gtbasis.independence_xi_prime", 1e12,
              [&] { return rank_check([&](const Index& mu) { return build_xi_prime(mu, N, d.dyn, w, P); }); });
        c.run("gtbasis.independence_xi_minor", 1e12,
              [&] { return rank_check([&](const Index& mu) { return build_xi_minor(mu, N, d.dyn, w, P); }); });
    }
    return c.take();
}

// ---------------------------------------------------------------- weightfn

std::vector<Check> suite_weightfn(const RunConfig& cfg, const EllipticParams& P, const Draw& d, std::mt19937_64& rng) {
    Collector c(cfg.tol);
    const int N = cfg.N, n = cfg.n;
    const auto& w = d.w;
    const auto labels = all_indices(N, n);
    const auto count = static_cast<long long>(labels.size());
    auto lab = [&](long long i) -> const Index& { return labels[static_cast<std::size_t>(i)]; };

    c.run("weightfn.expansion", [&] {
        return parallel_max(count, [&](long long i) {
            const Index& mu = lab(i);
            return rel_residual(build_xi_prime(mu, N, d.dyn, w, P), weight_function_expansion(mu, N, d.dyn, w, P));
        });
    });
    c.run("weightfn.diagonal", [&] {
        return parallel_max(count, [&](long long i) {
            const Index& mu = lab(i);
            return rel_residual(w_tilde_at(mu, mu, N, w, d.dyn, P).value, w_tilde_diagonal(mu, w, P));
        });
    });
    std::vector<std::vector<int>> contents;
    for (const Index& mu : labels) {
        auto ct = content_of(mu, N);
        if (std::find(contents.begin(), contents.end(), ct) == contents.end()) contents.push_back(ct);
    }
    c.run("weightfn.triangularity", [&] {
        double m = 0.0;
        for (const auto& ct : contents) {
            const ChangeOfBasis X = change_of_basis(ct, d.dyn, w, P, Exec::Parallel);
            double scale = 0.0;
            for (const cplx& x : X.matrix) scale = std::max(scale, std::abs(x));
            for (std::size_t i = 0; i < X.size(); ++i)
                for (std::size_t j = 0; j < X.size(); ++j)
                    if (!partial_order_leq(X.labels[i], X.labels[j], N)) m = std::max(m, std::abs(X.at(i, j)) / scale);
        }
        return m;
    });
    c.run("weightfn.serial_parallel_agreement", [&] {
        double m = 0.0;
        for (const auto& ct : contents) {
            const ChangeOfBasis A = change_of_basis(ct, d.dyn, w, P, Exec::Serial);
            const ChangeOfBasis B = change_of_basis(ct, d.dyn, w, P, Exec::Parallel);
            for (std::size_t i = 0; i < A.matrix.size(); ++i) m = std::max(m, rel_residual(A.matrix[i], B.matrix[i]));
        }
        const Index& mid = labels[labels.size() / 2];
        const TriangularVars tv = specialize(mid, N, w);
        for (const Index& J : indices_with_content(content_of(mid, N)))
            m = std::max(m, rel_residual(w_tilde(J, N, tv, d.dyn, P, Exec::Serial), w_tilde(J, N, tv, d.dyn, P, Exec::Parallel)));
        return m;
    });
    // all weight-compatible (I, mu) pairs, capped by a seeded subsample
    std::vector<std::pair<Index, Index>> pairs;
    for (const Index& I : labels)
        for (const Index& mu : indices_with_content(content_of(I, N))) pairs.emplace_back(I, mu);
    if (pairs.size() > 200) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(200);
    }
    c.run("weightfn.partition_identity", [&] {
        return parallel_max(static_cast<long long>(pairs.size()), [&](long long i) {
            const auto& pr = pairs[static_cast<std::size_t>(i)];
            return verify_partition_identity(pr.first, pr.second, N, d.dyn, w, P);
        });
    });
    c.run("weightfn.partition_dual_mode", [&] {
        const int Ns = std::min(N, 3), ns = std::min(n, 3);
        const DynExponents ds = Ns == N ? d.dyn : DynExponents(std::vector<cplx>(d.dyn.lambda.begin(), d.dyn.lambda.begin() + Ns));
        const std::vector<cplx> ws(w.begin(), w.begin() + ns);
        std::uniform_int_distribution<int> lab_dist(0, Ns - 1);
        std::uniform_int_distribution<int> len_dist(1, 3);
        double m = 0.0;
        for (int trial = 0; trial < 8; ++trial) {
            const int len = len_dist(rng);
            std::vector<int> K(len), L(len);
            for (int r = 0; r < len; ++r) {
                K[r] = lab_dist(rng);
                L[r] = lab_dist(rng);
            }
            const auto zs = sample_points(len, rng, P, ws);
            Index alpha(ns);
            for (int& a : alpha) a = lab_dist(rng);
            // target: the largest coefficient of the sequential image
            LWord word;
            for (int r = len - 1; r >= 0; --r) word.factors.push_back({K[r], L[r], zs[r]});
            const TensorVector img = apply_lword(word, TensorVector::basis(Ns, alpha), ds, ws, P);
            std::size_t best = 0;
            for (std::size_t i = 1; i < img.coeffs.size(); ++i)
                if (std::abs(img.coeffs[i]) > std::abs(img.coeffs[best])) best = i;
            const Index beta = decode(best, Ns, ns);
            const cplx seq = partition_z(K, L, zs, alpha, beta, ds, ws, P);
            const cplx en_s = partition_z(K, L, zs, alpha, beta, ds, ws, P, PartitionMode::Enumerate, Exec::Serial);
            const cplx en_p = partition_z(K, L, zs, alpha, beta, ds, ws, P, PartitionMode::Enumerate, Exec::Parallel);
            m = std::max({m, rel_residual(seq, en_s), rel_residual(seq, en_p)});
        }
        return m;
    });

    if (N == 2 && n == 3) {
        // worked example: I = ({1,2},{3})
        const Theta th(P);
        const cplx q2 = th.q2();
        const cplx Ps = d.dyn.pi_star(0, 1, P.q);
        const Index I{0, 0, 1};
        const cplx r31 = w[2] / w[0], r32 = w[2] / w[1];
        c.run("example.w_tilde_values", [&] {
            const cplx e211 = th(Ps * r31 / q2) * th.theta_q2() / (th(q2 * r31) * th(Ps / q2));
            const cplx e121 = th(r31) * th(Ps * r32) * th.theta_q2() / (th(q2 * r31) * th(q2 * r32) * th(Ps));
            const cplx e112 = th(r31) * th(r32) / (th(q2 * r31) * th(q2 * r32));
            return std::max({rel_residual(w_tilde_at({1, 0, 0}, I, 2, w, d.dyn, P).value, e211),
                             rel_residual(w_tilde_at({0, 1, 0}, I, 2, w, d.dyn, P).value, e121),
                             rel_residual(w_tilde_at({0, 0, 1}, I, 2, w, d.dyn, P).value, e112)});
        });
        c.run("example.xi_prime_112", [&] {
            TensorVector e(2, 3);
            e[{1, 0, 0}] = th(Ps * r31) * th.theta_q2() / (th(q2 * r31) * th(Ps));
            e[{0, 1, 0}] = th(r31) * th(q2 * Ps * r32) * th.theta_q2() / (th(q2 * r31) * th(q2 * r32) * th(q2 * Ps));
            e[{0, 0, 1}] = th(r31) * th(r32) / (th(q2 * r31) * th(q2 * r32));
            return rel_residual(build_xi_prime(I, 2, d.dyn, w, P), e);
        });
        c.run("example.xi_tilde_112", [&] {
            const cplx t2 = th.theta_q2();
            TensorVector e(2, 3);
            e[{1, 0, 0}] = th(Ps * r31) * t2 * t2 * th(q2 * r32) / th(Ps);
            e[{0, 1, 0}] = th(r31) * th(q2 * Ps * r32) * t2 * t2 / th(q2 * Ps);
            e[{0, 0, 1}] = th(r31) * th(r32) * t2;
            return rel_residual(build_xi_tilde(I, 2, d.dyn, w, P), e);
        });
        c.run("example.xi_tilde_over_xi_prime", [&] {
            const cplx f = th.theta_q2() * th(q2 * r32) * th(q2 * r31);
            return std::max(rel_residual(build_xi_tilde(I, 2, d.dyn, w, P), f * build_xi_prime(I, 2, d.dyn, w, P)),
                            rel_residual(normalization_n(I, 2, w, P), f));
        });
    }
    return c.take();
}

// ---------------------------------------------------------------- gl2

std::vector<Check> suite_gl2(const RunConfig& cfg, const EllipticParams& P, Draw& d, std::mt19937_64& rng) {
    Collector c(cfg.tol);
    const int n = cfg.n;
    const DynExponents d2(std::vector<cplx>{d.dyn.lambda[0], d.dyn.lambda[cfg.N - 1]});
    const auto zs = sample_points(3, rng, P, d.w);
    d.spectral = zs;
    const Gl2Result g = gl2_suite(n, d2, d.w, zs, P);
    for (const NamedResidual& r : g.residuals) c.run(r.name, [&] { return r.residual; });
    std::vector<int> levels;
    if (cfg.level > 0) levels.push_back(cfg.level);
    else levels = {1, 2, 3};
    const auto az = sample_points(2, rng, P);
    for (int l : levels) {
        c.run("gl2.drinfeld_ratio_l" + std::to_string(l), std::min(cfg.tol, 1e-10),
              [&] { return drinfeld_ratio_residual(l, az[0], az[1], P); });
        c.run("gl2.highest_weight_ratio_l" + std::to_string(l), std::min(cfg.tol, 1e-10),
              [&] { return highest_weight_ratio_residual(l, az[0], az[1], P); });
    }
    return c.take();
}

}  // namespace

Report run_suite(const RunConfig& config) {
    config.validate();
    Report rep;
    rep.config = config;
    const EllipticParams P = config.params();
    P.validate();

    std::vector<std::string> todo;
    const bool all = std::find(config.suites.begin(), config.suites.end(), "all") != config.suites.end();
    for (const auto& s : suite_names())
        if (all || std::find(config.suites.begin(), config.suites.end(), s) != config.suites.end()) todo.push_back(s);

    std::mt19937_64 rng(config.seed);
    const bool fixed = !config.lambda.empty() && !config.w.empty();
    for (const auto& name : todo) {
        for (int attempt = 0;; ++attempt) {
            Draw d;
            d.dyn = config.lambda.empty()
                        ? sample_dynamics(config.N, config.n + 3, rng, P)
                        : DynExponents(std::vector<cplx>(config.lambda.begin(), config.lambda.end()));
            d.w = config.w.empty() ? sample_points(config.n, rng, P) : std::vector<cplx>(config.w.begin(), config.w.end());
            try {
                std::vector<Check> got;
                if (name == "special") got = suite_special(config, P, rng);
                else if (name == "rmatrix") got = suite_rmatrix(config, P, d, rng);
                else if (name == "minors") got = suite_minors(config, P, d, rng);
                else if (name == "gtbasis") got = suite_gtbasis(config, P, d, rng);
                else if (name == "weightfn") got = suite_weightfn(config, P, d, rng);
                else if (name == "gl2") got = suite_gl2(config, P, d, rng);
                rep.checks.insert(rep.checks.end(), got.begin(), got.end());
                json lam = json::array(), ws = json::array(), zs = json::array();
                for (cplx x : d.dyn.lambda) lam.push_back(x.real());
                for (cplx x : d.w) ws.push_back(x.real());
                for (cplx x : d.spectral) zs.push_back(x.real());
                rep.draws[name] = {{"lambda", lam}, {"w", ws}, {"spectral", zs}, {"resamples", attempt}};
                break;
            } catch (const DegenerateError&) {
                if (fixed || attempt + 1 >= 10) throw;
            }
        }
    }
    return rep;
}

json config_to_json(const RunConfig& c) {
    json j;
    j["N"] = c.N;
    j["n"] = c.n;
    j["q"] = c.q;
    j["p"] = c.p;
    j["lambda"] = c.lambda.empty() ? json("random") : json(c.lambda);
    j["w"] = c.w.empty() ? json("random") : json(c.w);
    j["seed"] = c.seed;
    j["tol"] = c.tol;
    j["truncation"] = c.truncation == 0 ? json("auto") : json(c.truncation);
    j["suites"] = c.suites;
    j["l"] = c.level;
    return j;
}

RunConfig config_from_json(const json& j) {
    RunConfig c;
    c.N = j.at("N").get<int>();
    c.n = j.at("n").get<int>();
    c.q = j.at("q").get<double>();
    c.p = j.at("p").get<double>();
    if (j.at("lambda").is_array()) c.lambda = j.at("lambda").get<std::vector<double>>();
    if (j.at("w").is_array()) c.w = j.at("w").get<std::vector<double>>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.tol = j.at("tol").get<double>();
    c.truncation = j.at("truncation").is_number() ? j.at("truncation").get<int>() : 0;
    c.suites = j.at("suites").get<std::vector<std::string>>();
    c.level = j.at("l").get<int>();
    return c;
}

json report_to_json(const Report& r) {
    json j;
    j["config"] = config_to_json(r.config);
    json checks = json::array();
    std::size_t passed = 0;
    for (const Check& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"residual", c.residual},
                          {"threshold", c.threshold},
                          {"pass", c.pass},
                          {"seconds", c.seconds}});
        passed += c.pass;
    }
    j["checks"] = checks;
    j["draws"] = r.draws;
    j["summary"] = {{"total", r.checks.size()},
                    {"passed", passed},
                    {"failed", r.checks.size() - passed},
                    {"all_pass", passed == r.checks.size()}};
    return j;
}

}  // namespace eqg
