// Verification suites, parameter sampling and the JSON report.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqg/dynamics.hpp"

namespace eqg {

struct RunConfig {
    int N = 2;
    int n = 3;
    double q = 0.3;
    double p = 0.1;
    std::vector<double> lambda;  // empty: sampled
    std::vector<double> w;       // empty: sampled
    std::uint64_t seed = 1;
    double tol = 1e-9;
    int truncation = 0;  // 0: automatic
    std::vector<std::string> suites{"all"};
    int level = 0;  // gl2 evaluation level; 0 runs l = 1, 2, 3

    EllipticParams params() const;
    void validate() const;
};

struct Check {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

struct Report {
    RunConfig config;
    std::vector<Check> checks;
    nlohmann::json draws = nlohmann::json::object();  // per suite: the lambda and w actually used
    bool all_pass() const;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"special", "rmatrix", "minors", "gtbasis", "weightfn", "gl2"};
    return names;
}

// Tolerance default: EQG_TOL when set, else 1e-9.
double default_tolerance();

// Evaluation points uniform in [0.2, 3], rejected near the q^2-p lattice (log half-width 1e-3).
// Points listed in avoid are treated as already drawn: new points also keep off their lattice.
std::vector<cplx> sample_points(int n, std::mt19937_64& rng, const EllipticParams& params,
                                const std::vector<cplx>& avoid = {});
// Dynamical exponents uniform in [0, 1] (last one 0), rejected when a shifted Pi* nears p^Z:
// half-width 0.15 in log space for shifts |s| <= 1, 1e-3 for the rest up to max_shift.
DynExponents sample_dynamics(int N, int max_shift, std::mt19937_64& rng, const EllipticParams& params);

Report run_suite(const RunConfig& config);

nlohmann::json config_to_json(const RunConfig& c);
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const Report& r);

}  // namespace eqg
