// eqg: construction, evaluation and verification front end. All output is JSON.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <random>

#include "eqg/gt_bases.hpp"
#include "eqg/minors.hpp"
#include "eqg/rmatrix.hpp"
#include "eqg/verify.hpp"
#include "eqg/weight_functions.hpp"

using json = nlohmann::json;
using namespace eqg;

namespace {

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

json vector_json(const TensorVector& v) {
    json out = json::object();
    const auto basis = all_indices(v.N, v.n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v.coeffs[i] != cplx(0.0)) out[index_word(basis[i])] = cjson(v.coeffs[i]);
    return out;
}

struct Common {
    int N = 2;
    int n = 3;
    double q = 0.3;
    double p = 0.1;
    std::vector<double> lambda;
    std::vector<double> w;
    std::uint64_t seed = 1;
    double tol = default_tolerance();

    void add(CLI::App* app, bool with_n = true) {
        app->add_option("--N", N, "rank (2..4)");
        if (with_n) app->add_option("--n", n, "number of tensor factors (1..6)");
        app->add_option("--q", q, "q in (0,1)");
        app->add_option("--p", p, "elliptic nome in (0,1)");
        app->add_option("--lambda", lambda, "dynamical exponents, N values")->delimiter(',');
        app->add_option("--w", w, "evaluation points, n values")->delimiter(',');
        app->add_option("--seed", seed, "sampling seed");
        app->add_option("--tol", tol, "check threshold");
    }
    RunConfig config() const {
        RunConfig c;
        c.N = N;
        c.n = n;
        c.q = q;
        c.p = p;
        c.lambda = lambda;
        c.w = w;
        c.seed = seed;
        c.tol = tol;
        c.validate();
        return c;
    }
    // explicit values, else a seeded generic draw
    std::pair<DynExponents, std::vector<cplx>> draw(const EllipticParams& P) const {
        std::mt19937_64 rng(seed);
        DynExponents dyn = lambda.empty() ? sample_dynamics(N, n + 3, rng, P)
                                          : DynExponents(std::vector<cplx>(lambda.begin(), lambda.end()));
        std::vector<cplx> ws = w.empty() ? sample_points(n, rng, P) : std::vector<cplx>(w.begin(), w.end());
        return {dyn, ws};
    }
};

json draw_json(const DynExponents& dyn, const std::vector<cplx>& w) {
    json l = json::array(), ww = json::array();
    for (cplx x : dyn.lambda) l.push_back(x.real());
    for (cplx x : w) ww.push_back(x.real());
    return {{"lambda", l}, {"w", ww}};
}

int emit(json out, const std::vector<Check>& checks) {
    json arr = json::array();
    std::size_t passed = 0;
    for (const Check& c : checks) {
        arr.push_back({{"name", c.name}, {"residual", c.residual}, {"threshold", c.threshold}, {"pass", c.pass}, {"seconds", c.seconds}});
        passed += c.pass;
    }
    out["checks"] = arr;
    out["summary"] = {{"total", checks.size()}, {"passed", passed}, {"failed", checks.size() - passed},
                      {"all_pass", passed == checks.size()}};
    std::cout << out.dump(2) << '\n';
    return passed == checks.size() ? 0 : 1;
}

Check check(const std::string& name, double r, double tol) { return {name, r, tol, std::isfinite(r) && r < tol, 0.0}; }

std::vector<int> to_zero_based(const std::vector<int>& v, int N) {
    std::vector<int> out;
    for (int x : v) {
        if (x < 1 || x > N) throw std::invalid_argument("label out of range");
        out.push_back(x - 1);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic quantum group numerics"};
    app.require_subcommand(1);

    // verify
    Common vc;
    std::vector<std::string> suites{"all"};
    int level = 0, truncation = 0;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    vc.add(verify);
    verify->add_option("--suite", suites, "special|rmatrix|minors|gtbasis|weightfn|gl2|all")->delimiter(',');
    verify->add_option("--l", level, "gl2 evaluation level (0: 1..3)");
    verify->add_option("--truncation", truncation, "product truncation order (0: auto)");

    // rmatrix
    Common rc;
    double rz = 0.7;
    auto* rmat = app.add_subcommand("rmatrix", "R-bar and R-tilde entries with checks");
    rc.add(rmat, false);
    rmat->add_option("--z", rz, "spectral point");

    // partition
    Common pc;
    std::vector<int> pk, pl;
    std::vector<double> pz;
    std::string alpha, beta;
    auto* part = app.add_subcommand("partition", "lattice partition function, both evaluation modes");
    pc.add(part);
    part->add_option("--K", pk, "row output labels (1-based)")->delimiter(',')->required();
    part->add_option("--L", pl, "row input labels (1-based)")->delimiter(',')->required();
    part->add_option("--z", pz, "row spectral points")->delimiter(',')->required();
    part->add_option("--alpha", alpha, "input index word")->required();
    part->add_option("--beta", beta, "output index word")->required();

    // minor
    Common mc;
    std::vector<int> mrows, mcols;
    double mz = 0.9;
    std::string mI;
    auto* minor = app.add_subcommand("minor", "quantum minor acting on a basis vector");
    mc.add(minor);
    minor->add_option("--rows", mrows, "row labels (1-based)")->delimiter(',')->required();
    minor->add_option("--cols", mcols, "column labels (1-based)")->delimiter(',')->required();
    minor->add_option("--z", mz, "spectral point");
    minor->add_option("--I", mI, "basis index word")->required();

    // gtbasis
    Common gc;
    std::string gI, variant = "tilde";
    auto* gt = app.add_subcommand("gtbasis", "GT basis vector with eigenvalue and factor checks");
    gc.add(gt, false);
    gt->add_option("--I", gI, "index word, e.g. 231213")->required();
    gt->add_option("--variant", variant, "tilde|minor|prime")->check(CLI::IsMember({"tilde", "minor", "prime"}));

    // weightfn
    Common wc;
    std::string wI;
    auto* wf = app.add_subcommand("weightfn", "change-of-basis matrix on the weight block of I");
    wc.add(wf, false);
    wf->add_option("--I", wI, "index word fixing the weight block")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (verify->parsed()) {
            RunConfig c = vc.config();
            c.suites = suites;
            c.level = level;
            c.truncation = truncation;
            c.validate();
            const Report rep = run_suite(c);
            std::cout << report_to_json(rep).dump(2) << '\n';
            for (const Check& ch : rep.checks)
                if (!ch.pass) std::cerr << "FAIL " << ch.name << " residual " << ch.residual << '\n';
            return rep.all_pass() ? 0 : 1;
        }
        if (rmat->parsed()) {
            rc.n = 2;
            const RunConfig c = rc.config();
            const EllipticParams P = c.params();
            const auto [dyn, w] = rc.draw(P);
            const RMatrix Rb = rbar_matrix(rz, dyn, P, c.N), Rt = rtilde_matrix(rz, dyn, P, c.N);
            json eb = json::array(), et = json::array();
            for (cplx x : Rb.entries) eb.push_back(cjson(x));
            for (cplx x : Rt.entries) et.push_back(cjson(x));
            json out{{"config", config_to_json(c)}, {"draw", draw_json(dyn, w)}, {"z", rz},
                     {"rbar", eb}, {"rtilde", et}};
            std::vector<Check> checks;
            checks.push_back(check("rmatrix.dybe", check_dybe(rz, w[0], w[1], dyn, P, c.N), c.tol));
            checks.push_back(check("rmatrix.unitarity", check_unitarity(rz, dyn, P, c.N), c.tol));
            checks.push_back(check("rmatrix.ice_rule", check_ice_rule(Rb) && check_ice_rule(Rt) ? 0.0 : 1.0, c.tol));
            return emit(out, checks);
        }
        if (part->parsed()) {
            const RunConfig c = pc.config();
            const EllipticParams P = c.params();
            const auto [dyn, w] = pc.draw(P);
            if (pk.size() != pl.size() || pk.size() != pz.size())
                throw std::invalid_argument("K, L and z need equal lengths");
            const Index a = parse_index_word(alpha, c.N), b = parse_index_word(beta, c.N);
            if (static_cast<int>(a.size()) != c.n || static_cast<int>(b.size()) != c.n)
                throw std::invalid_argument("alpha and beta need n entries");
            const auto K = to_zero_based(pk, c.N), L = to_zero_based(pl, c.N);
            const std::vector<cplx> zs(pz.begin(), pz.end());
            const cplx seq = partition_z(K, L, zs, a, b, dyn, w, P);
            json out{{"config", config_to_json(c)}, {"draw", draw_json(dyn, w)}, {"sequential", cjson(seq)}};
            std::vector<Check> checks;
            try {
                const cplx en = partition_z(K, L, zs, a, b, dyn, w, P, PartitionMode::Enumerate, Exec::Parallel);
                out["enumerated"] = cjson(en);
                checks.push_back(check("partition.modes_agree", rel_residual(seq, en), c.tol));
            } catch (const std::domain_error& e) {
                out["enumerated"] = e.what();
            }
            return emit(out, checks);
        }
        if (minor->parsed()) {
            const RunConfig c = mc.config();
            const EllipticParams P = c.params();
            const auto [dyn, w] = mc.draw(P);
            const Index I = parse_index_word(mI, c.N);
            if (static_cast<int>(I.size()) != c.n) throw std::invalid_argument("I needs n entries");
            if (mrows.size() != mcols.size() || mrows.empty()) throw std::invalid_argument("rows and cols need equal nonzero lengths");
            const MinorSpec spec{to_zero_based(mrows, c.N), to_zero_based(mcols, c.N), mz};
            const TensorVector img = apply_minor(spec, TensorVector::basis(c.N, I), dyn, w, P);
            json out{{"config", config_to_json(c)}, {"draw", draw_json(dyn, w)}, {"image", vector_json(img)}};
            return emit(out, {});
        }
        if (gt->parsed()) {
            gc.n = static_cast<int>(gI.size());
            const RunConfig c = gc.config();
            const EllipticParams P = c.params();
            const auto [dyn, w] = gc.draw(P);
            const Index I = parse_index_word(gI, c.N);
            TensorVector x;
            if (variant == "tilde") x = build_xi_tilde(I, c.N, dyn, w, P);
            else if (variant == "minor") x = build_xi_minor(I, c.N, dyn, w, P);
            else x = build_xi_prime(I, c.N, dyn, w, P);
            json eig = json::object();
            std::vector<Check> checks;
            const cplx z = 0.83;
            const DynVector xv = variant == "prime" ? xi_prime_vector(I, c.N, w, P)
                                                    : DynVector([&](const DynExponents& d) {
                                                          return variant == "tilde" ? build_xi_tilde(I, c.N, d, w, P)
                                                                                    : build_xi_minor(I, c.N, d, w, P);
                                                      });
            for (int l = 1; l <= c.N; ++l) {
                const cplx e = eigenvalue_a(l, z, I, c.N, w, P);
                eig["A" + std::to_string(l)] = cjson(e);
                checks.push_back(check("gtbasis.eigen_A" + std::to_string(l),
                                       rel_residual(apply_operator(A_operator(l, c.N, z, P), xv, dyn, w, P), e * x), c.tol));
            }
            const TensorVector tl = build_xi_tilde(I, c.N, dyn, w, P);
            checks.push_back(check("gtbasis.minor_vs_tilde",
                                   rel_residual(build_xi_minor(I, c.N, dyn, w, P), relation_factor(I, c.N, w, P) * tl), c.tol));
            checks.push_back(check("gtbasis.tilde_vs_prime",
                                   rel_residual(tl, normalization_n(I, c.N, w, P) * build_xi_prime(I, c.N, dyn, w, P)), c.tol));
            json out{{"config", config_to_json(c)}, {"draw", draw_json(dyn, w)}, {"variant", variant},
                     {"eigenvalue_point", cjson(z)}, {"eigenvalues", eig}, {"vector", vector_json(x)},
                     {"factors", {{"relation", cjson(relation_factor(I, c.N, w, P))},
                                  {"normalization", cjson(normalization_n(I, c.N, w, P))}}}};
            return emit(out, checks);
        }
        if (wf->parsed()) {
            wc.n = static_cast<int>(wI.size());
            const RunConfig c = wc.config();
            const EllipticParams P = c.params();
            const auto [dyn, w] = wc.draw(P);
            const Index I = parse_index_word(wI, c.N);
            const ChangeOfBasis X = change_of_basis(content_of(I, c.N), dyn, w, P, Exec::Parallel);
            json labels = json::array(), rows = json::array();
            for (const Index& l : X.labels) labels.push_back(index_word(l));
            for (std::size_t i = 0; i < X.size(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < X.size(); ++j) row.push_back(cjson(X.at(i, j)));
                rows.push_back(row);
            }
            json out{{"config", config_to_json(c)}, {"draw", draw_json(dyn, w)}, {"labels", labels}, {"matrix", rows}};
            return emit(out, {});
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
