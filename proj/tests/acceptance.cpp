// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eqg/verify.hpp"
#include "eqg/weight_functions.hpp"

using namespace eqg;

namespace {

constexpr std::uint64_t seed = 1;

struct Outcome {
    double residual = 0.0;
    std::string worst;
};

struct Part {
    std::vector<std::string> names;  // prefixes of check names
    double tol;
};

// Max residual over the selected checks, each measured against its own tolerance.
void absorb(const Report& r, const Part& part, Outcome& out, bool& ok, int& matched) {
    for (const Check& c : r.checks)
        for (const auto& prefix : part.names)
            if (c.name.rfind(prefix, 0) == 0) {
                ++matched;
                if (!(c.residual < part.tol)) ok = false;
                if (c.residual / part.tol > out.residual) {
                    out.residual = c.residual / part.tol;
                    out.worst = c.name;
                }
            }
}

RunConfig config(int N, int n, std::vector<std::string> suites) {
    RunConfig c;
    c.N = N;
    c.n = n;
    c.seed = seed;
    c.suites = std::move(suites);
    return c;
}

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<bool(Outcome&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    bool ok = false;
    try {
        ok = body(out);
    } catch (const std::exception& e) {
        out.worst = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = ok && secs < limit_s;
    failures += !pass;
    std::printf("%s %2d %-34s worst %.2e of tol (%s), %.2f s (limit %.0f s)\n", pass ? "PASS" : "FAIL", id, title,
                out.residual, out.worst.c_str(), secs, limit_s);
    std::fflush(stdout);
}

// Runs the suites and checks the named parts; also requires every part to match at least one check.
bool run_parts(const RunConfig& c, const std::vector<Part>& parts, Outcome& out) {
    const Report r = run_suite(c);
    bool ok = true;
    for (const Part& p : parts) {
        int matched = 0;
        absorb(r, p, out, ok, matched);
        if (matched == 0) {
            out.worst = "no check matched " + p.names.front();
            return false;
        }
    }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "special functions", 1.0, [](Outcome& o) {
        return run_parts(config(2, 3, {"special"}),
                         {{{"special.theta_quasi_periodicity", "special.gamma_shift_p", "special.gamma_shift_q"}, 1e-11}}, o);
    });

    criterion(2, "R-matrix DYBE, unitarity, ice, R(1)", 5.0, [](Outcome& o) {
        bool ok = true;
        for (int N : {2, 3})
            ok = run_parts(config(N, 3, {"rmatrix"}),
                           {{{"rmatrix.dybe", "rmatrix.unitarity"}, 1e-10},
                            {{"rmatrix.ice_rule"}, 1e-300},
                            {{"rmatrix.rbar_at_one_is_permutation"}, 1e-12}},
                           o) && ok;
        return ok;
    });

    criterion(3, "S-tilde involution and braid", 5.0, [](Outcome& o) {
        bool ok = true;
        for (int N : {2, 3})
            ok = run_parts(config(N, 3, {"rmatrix"}), {{{"rmatrix.stilde_involution", "rmatrix.stilde_braid"}, 1e-10}}, o) && ok;
        return ok;
    });

    criterion(4, "quantum minors, N=3 n=2", 30.0, [](Outcome& o) {
        return run_parts(config(3, 2, {"minors"}),
                         {{{"minors.exchange", "minors.column_expansion", "minors.qdet_central", "minors.commute_A_A",
                            "minors.commute_A_B", "minors.commute_A_C"},
                           1e-9}},
                         o);
    });

    criterion(5, "GT spectra, N=3 n=4, all 81 I", 300.0, [](Outcome& o) {
        return run_parts(config(3, 4, {"gtbasis"}),
                         {{{"gtbasis.xi_tilde_eigenvectors"}, 1e-9}, {{"gtbasis.distinct_spectra"}, 1.0}}, o);
    });

    criterion(6, "worked example N=2 n=3", 1.0, [](Outcome& o) {
        return run_parts(config(2, 3, {"weightfn"}), {{{"example."}, 1e-10}}, o);
    });

    criterion(7, "factor theorems, N=3 n<=4", 120.0, [](Outcome& o) {
        bool ok = true;
        for (int n = 1; n <= 4; ++n)
            ok = run_parts(config(3, n, {"gtbasis", "weightfn"}),
                           {{{"gtbasis.xi_minor_relation", "gtbasis.xtilde_diagonal", "gtbasis.column_recursion",
                              "gtbasis.xi_tilde_normalization", "weightfn.diagonal"},
                             1e-9}},
                           o) && ok;
        return ok;
    });

    criterion(8, "partition identity", 120.0, [](Outcome& o) {
        // all weight-compatible pairs at N=2, n=3
        bool ok = run_parts(config(2, 3, {"weightfn"}), {{{"weightfn.partition_identity"}, 1e-9}}, o);
        // 20 random pairs at N=3, n=3
        std::mt19937_64 rng(seed);
        const EllipticParams P;
        const DynExponents dyn = sample_dynamics(3, 6, rng, P);
        const std::vector<cplx> w = sample_points(3, rng, P);
        const auto labels = all_indices(3, 3);
        std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
        for (int t = 0; t < 20; ++t) {
            const Index I = labels[pick(rng)];
            const auto block = indices_with_content(content_of(I, 3));
            const Index mu = block[std::uniform_int_distribution<std::size_t>(0, block.size() - 1)(rng)];
            const double r = verify_partition_identity(I, mu, 3, dyn, w, P);
            if (!(r < 1e-9)) ok = false;
            if (r / 1e-9 > o.residual) {
                o.residual = r / 1e-9;
                o.worst = "N=3 pair " + index_word(I) + "/" + index_word(mu);
            }
        }
        return ok;
    });

    criterion(9, "weight-function expansion, n=3", 60.0, [](Outcome& o) {
        bool ok = true;
        for (int N : {2, 3}) ok = run_parts(config(N, 3, {"weightfn"}), {{{"weightfn.expansion"}, 1e-9}}, o) && ok;
        return ok;
    });

    criterion(10, "gl2 suite and Drinfeld ratio", 60.0, [](Outcome& o) {
        bool ok = true;
        for (int n = 1; n <= 3; ++n) {
            RunConfig c = config(2, n, {"gl2"});
            ok = run_parts(c, {{{"gl2.A1", "gl2.A2", "gl2.B2", "gl2.C2"}, 1e-9}, {{"gl2.drinfeld_ratio_l"}, 1e-10}}, o) && ok;
        }
        return ok;
    });

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
