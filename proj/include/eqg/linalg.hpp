#pragma once

#include <vector>

#include "eqg/special.hpp"

namespace eqg {

struct Determinant {
    cplx value;
    double pivot_ratio;  // min |pivot| / max |pivot| under partial pivoting
};

// A is row-major n x n.
Determinant determinant(std::vector<cplx> A, std::size_t n);

}  // namespace eqg
