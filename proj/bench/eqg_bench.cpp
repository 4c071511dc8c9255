// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "eqg/gt_bases.hpp"
#include "eqg/minors.hpp"
#include "eqg/weight_functions.hpp"

using namespace eqg;

namespace {

const EllipticParams P;
const DynExponents lam3{0.37, 0.11, 0.0};
const std::vector<cplx> w5{1.1, 0.7, 0.45, 1.9, 2.6};

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_partition_enumeration(benchmark::State& state) {
    const std::vector<cplx> w{1.1, 0.7, 0.45};
    const std::vector<int> K{0, 1, 2}, L{2, 1, 0};
    const std::vector<cplx> zs{0.9, 1.6, 0.35};
    for (auto _ : state)
        benchmark::DoNotOptimize(partition_z(K, L, zs, {0, 1, 2}, {2, 1, 0}, lam3, w, P, PartitionMode::Enumerate, mode(state)));
}

void BM_w_tilde(benchmark::State& state) {
    const TriangularVars tv = specialize({0, 1, 0, 2, 1}, 3, w5);
    for (auto _ : state) benchmark::DoNotOptimize(w_tilde({1, 0, 2, 1, 0}, 3, tv, lam3, P, mode(state)));
}

void BM_change_of_basis(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(change_of_basis({2, 2, 1}, lam3, w5, P, mode(state)));
}

void BM_eigen_loop(benchmark::State& state) {
    const std::vector<cplx> w(w5.begin(), w5.begin() + 4);
    const auto labels = all_indices(3, 4);
    const auto count = static_cast<long long>(labels.size());
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        std::vector<double> r(labels.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long long i = 0; i < count; ++i) {
            const Index& mu = labels[static_cast<std::size_t>(i)];
            const DynVector xv = [&](const DynExponents& d) { return build_xi_tilde(mu, 3, d, w, P); };
            r[static_cast<std::size_t>(i)] =
                rel_residual(apply_operator(A_operator(2, 3, 0.8, P), xv, lam3, w, P), eigenvalue_a(2, 0.8, mu, 3, w, P) * xv(lam3));
        }
        benchmark::DoNotOptimize(r.data());
    }
}

}  // namespace

BENCHMARK(BM_partition_enumeration)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_w_tilde)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_change_of_basis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eigen_loop)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
