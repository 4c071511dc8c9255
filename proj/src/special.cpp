#include "eqg/special.hpp"

#include <cmath>

namespace eqg {

namespace {

// Factors with |x b^n| below this are indistinguishable from 1 in double precision.
constexpr double tail_cutoff = 1e-18;
constexpr int hard_cap = 100000;

cplx poch_level(cplx x, std::span<const cplx> bases, std::size_t level, int min_terms) {
    if (level == bases.size()) return 1.0 - x;
    const cplx b = bases[level];
    const double cut = tail_cutoff * (1.0 - std::abs(b));
    cplx prod = 1.0;
    cplx xn = x;
    for (int n = 0;; ++n) {
        if (n >= min_terms && std::abs(xn) < cut) break;
        if (n > hard_cap) throw std::domain_error("q_pochhammer: product does not converge");
        prod *= poch_level(xn, bases, level + 1, min_terms);
        xn *= b;
    }
    return prod;
}

// 1 - e^t
cplx one_minus_exp(cplx t) {
    const double a = t.real(), b = t.imag();
    const double s = std::sin(0.5 * b);
    return -cplx(std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b));
}

}  // namespace

int EllipticParams::order() const {
    if (truncation_order > 0) return truncation_order;
    const double ap = std::abs(p);
    if (ap == 0.0) return 8;
    return static_cast<int>(std::ceil(std::log(tol) / std::log(ap))) + 8;
}

void EllipticParams::validate() const {
    if (!(std::abs(p) < 1.0)) throw std::domain_error("EllipticParams: |p| must be < 1");
    if (std::abs(q) == 0.0) throw std::domain_error("EllipticParams: q must be nonzero");
    if (!(tol > 0.0)) throw std::domain_error("EllipticParams: tol must be positive");
    if (truncation_order < 0) throw std::domain_error("EllipticParams: negative truncation order");
}

cplx guarded_div(cplx num, cplx den, const char* what) {
    if (std::abs(den) < degenerate_cutoff)
        throw DegenerateError(std::string("degenerate parameters: ") + what);
    return num / den;
}

cplx q_power(cplx q, cplx x) { return std::exp(2.0 * x * std::log(q)); }

cplx q_pochhammer(cplx x, std::span<const cplx> bases, int min_terms) {
    for (const cplx& b : bases)
        if (!(std::abs(b) < 1.0)) throw std::domain_error("q_pochhammer: base modulus must be < 1");
    if (x == 0.0) return 1.0;
    return poch_level(x, bases, 0, min_terms);
}

cplx theta_big(cplx z, cplx p, int min_terms) {
    if (z == 0.0) throw std::domain_error("theta_big: z = 0");
    return q_pochhammer(z, {p}, min_terms) * q_pochhammer(p / z, {p}, min_terms) *
           q_pochhammer(p, {p}, min_terms);
}

cplx theta_small(cplx z, cplx p, int min_terms) {
    if (z == 0.0) throw std::domain_error("theta_small: z = 0");
    return -theta_big(z, p, min_terms) / std::sqrt(z);
}

cplx elliptic_gamma(cplx z, cplx p, cplx q, int min_terms) {
    if (z == 0.0) throw PoleError("elliptic_gamma: z = 0");
    const cplx den = q_pochhammer(z, {p, q}, min_terms);
    if (std::abs(den) < degenerate_cutoff) throw PoleError("elliptic_gamma: z at a pole");
    return q_pochhammer(p * q / z, {p, q}, min_terms) / den;
}

cplx rho_plus(cplx z, int N, const EllipticParams& params) {
    const cplx q = params.q, p = params.p;
    const cplx b = std::pow(q, 2 * N);
    const int m = params.order();
    const cplx pre = std::pow(q, -static_cast<double>(N - 1) / N);
    const cplx num = elliptic_gamma(z, b, p, m) * elliptic_gamma(b * z, b, p, m);
    const cplx den = elliptic_gamma(q * q * z, b, p, m) * elliptic_gamma(b / (q * q) * z, b, p, m);
    return pre * guarded_div(num, den, "rho_plus");
}

Theta::Theta(const EllipticParams& params)
    : params_(params), q2_(params.q * params.q), order_(params.order()) {
    params_.validate();
    pp_ = q_pochhammer(params_.p, {params_.p}, order_);
    logq_ = std::log(params_.q);
    logp_ = std::log(params_.p);
    th_q2_ = (*this)(q2_);
}

cplx Theta::big(cplx z) const {
    if (z == 0.0) throw std::domain_error("theta: z = 0");
    const cplx p = params_.p;
    const double cut = tail_cutoff * (1.0 - std::abs(p));
    cplx prod = 1.0;
    cplx a = z, b = p / z;
    for (int n = 0;; ++n) {
        if (n >= order_ && std::abs(a) < cut && std::abs(b) < cut) break;
        if (n > hard_cap) throw std::domain_error("theta: product does not converge");
        prod *= (1.0 - a) * (1.0 - b);
        a *= p;
        b *= p;
    }
    return prod * pp_;
}

cplx Theta::operator()(cplx z) const { return -big(z) / std::sqrt(z); }

cplx Theta::denom(cplx z, const char* what) const {
    const cplx v = (*this)(z);
    if (std::abs(v) < degenerate_cutoff)
        throw DegenerateError(std::string("degenerate parameters: theta zero in ") + what);
    return v;
}

cplx Theta::at_log(cplx s) const {
    const double cut = tail_cutoff * (1.0 - std::abs(params_.p));
    cplx prod = 1.0;
    cplx a = s, b = logp_ - s;
    for (int n = 0;; ++n) {
        if (n >= order_ && std::exp(a.real()) < cut && std::exp(b.real()) < cut) break;
        if (n > hard_cap) throw std::domain_error("theta: product does not converge");
        prod *= one_minus_exp(a) * one_minus_exp(b);
        a += logp_;
        b += logp_;
    }
    return -prod * pp_ * std::exp(-0.5 * s);
}

cplx Theta::denom_power(cplx x, const char* what) const {
    const cplx v = power(x);
    if (std::abs(v) < degenerate_cutoff)
        throw DegenerateError(std::string("degenerate parameters: theta zero in ") + what);
    return v;
}

}  // namespace eqg
