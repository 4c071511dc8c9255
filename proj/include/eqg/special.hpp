// Elliptic special functions: infinite q-products, Jacobi odd theta functions
// and the elliptic Gamma function.
//
// Conventions:
//   (x; q1,...,qk)_inf = prod_{n_i >= 0} (1 - x q1^n1 ... qk^nk)
//   Theta_p(z) = (z;p)_inf (p/z;p)_inf (p;p)_inf
//   theta(z)   = -z^{-1/2} Theta_p(z)          (principal square root)
//   Gamma(z;p,q) = (pq/z; p,q)_inf / (z; p,q)_inf
#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqg {

using cplx = std::complex<double>;

// Raised when a theta value in a denominator vanishes (|.| < degenerate_cutoff).
struct DegenerateError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

inline constexpr double degenerate_cutoff = 1e-14;

struct EllipticParams {
    cplx q{0.3, 0.0};
    cplx p{0.1, 0.0};
    int truncation_order = 0;  // 0 selects ceil(log(tol)/log|p|) + 8
    double tol = 1e-11;

    int order() const;
    void validate() const;
};

// Divides, throwing DegenerateError when |den| is below the cutoff.
cplx guarded_div(cplx num, cplx den, const char* what);

cplx q_pochhammer(cplx x, std::span<const cplx> bases, int min_terms = 0);
inline cplx q_pochhammer(cplx x, std::initializer_list<cplx> bases, int min_terms = 0) {
    return q_pochhammer(x, std::span<const cplx>(bases.begin(), bases.size()), min_terms);
}

cplx theta_big(cplx z, cplx p, int min_terms = 0);
cplx theta_small(cplx z, cplx p, int min_terms = 0);
cplx elliptic_gamma(cplx z, cplx p, cplx q, int min_terms = 0);
cplx rho_plus(cplx z, int N, const EllipticParams& params);

// q^{2x} for complex exponent x; the branch is fixed by the principal log of q.
cplx q_power(cplx q, cplx x);

// Bound theta evaluator; caches (p;p)_inf for the repeated calls made by
// the R-matrix and weight-function code.
class Theta {
public:
    explicit Theta(const EllipticParams& params);
    cplx big(cplx z) const;
    cplx operator()(cplx z) const;  // theta(z)
    // theta(den) checked against the degeneracy cutoff.
    cplx denom(cplx z, const char* what) const;
    // theta(e^s) from the logarithm; each factor 1 - e^t goes through expm1, so
    // arguments near a zero keep full relative accuracy.
    cplx at_log(cplx s) const;
    // theta(q^{2x})
    cplx power(cplx x) const { return at_log(2.0 * x * logq_); }
    cplx denom_power(cplx x, const char* what) const;
    const EllipticParams& params() const { return params_; }
    cplx q() const { return params_.q; }
    cplx q2() const { return q2_; }
    cplx theta_q2() const { return th_q2_; }

private:
    EllipticParams params_;
    cplx pp_;
    cplx q2_;
    cplx th_q2_;
    cplx logq_;
    cplx logp_;
    int order_;
};

}  // namespace eqg
