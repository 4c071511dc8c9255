#include "eqg/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace eqg {

Determinant determinant(std::vector<cplx> A, std::size_t n) {
    if (A.size() != n * n) throw std::domain_error("determinant: matrix is not n x n");
    cplx det = 1.0;
    double pmin = INFINITY, pmax = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(A[r * n + c]) > std::abs(A[piv * n + c])) piv = r;
        const cplx pv = A[piv * n + c];
        pmin = std::min(pmin, std::abs(pv));
        pmax = std::max(pmax, std::abs(pv));
        if (pv == 0.0) return {0.0, 0.0};
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(A[c * n + k], A[piv * n + k]);
            det = -det;
        }
        det *= pv;
        for (std::size_t r = c + 1; r < n; ++r) {
            const cplx f = A[r * n + c] / pv;
            if (f == 0.0) continue;
            for (std::size_t k = c; k < n; ++k) A[r * n + k] -= f * A[c * n + k];
        }
    }
    return {det, n == 0 ? 1.0 : pmin / pmax};
}

}  // namespace eqg
