#include "qb/numeric/mp.hpp"

#include <cstdlib>

namespace qb {

unsigned default_digits() {
    if (const char* env = std::getenv("QB_DIGITS")) {
        int d = std::atoi(env);
        if (d >= 10) return static_cast<unsigned>(d);
    }
    return 50;
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real to_real(const mpq_class& q) {
    Real num(q.get_num_mpz_t()), den(q.get_den_mpz_t());
    return num / den;
}

Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Complex Complex::operator/(const Complex& o) const {
    // scaled division to avoid overflow in |o|^2
    using boost::multiprecision::abs;
    if (abs(o.re) >= abs(o.im)) {
        Real r = o.im / o.re, d = o.re + o.im * r;
        return {(re + im * r) / d, (im - re * r) / d};
    }
    Real r = o.re / o.im, d = o.re * r + o.im;
    return {(re * r + im) / d, (im * r - re) / d};
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im, z.re); }
Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex exp(const Complex& z) {
    Real m = boost::multiprecision::exp(z.re);
    return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Complex log(const Complex& z) { return {boost::multiprecision::log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
    if (z.re == 0 && z.im == 0) return {};
    Real r = abs(z);
    Real a = boost::multiprecision::sqrt((r + boost::multiprecision::abs(z.re)) / 2);
    if (z.re >= 0) return {a, z.im / (2 * a)};
    return {boost::multiprecision::abs(z.im) / (2 * a), z.im >= 0 ? a : Real(-a)};
}

Complex pow(const Complex& z, int k) {
    if (k < 0) return Complex(1) / pow(z, -k);
    Complex r(1), b = z;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

Complex polar(const Real& r, const Real& theta) {
    return {r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta)};
}

std::string to_string(const Real& x, int digits) {
    int d = digits > 0 ? digits : static_cast<int>(Real::default_precision());
    return x.str(d, std::ios_base::scientific);
}

std::string to_string(const Complex& z, int digits) {
    std::string im = to_string(z.im, digits);
    return to_string(z.re, digits) + (im.front() == '-' ? "" : "+") + im + "i";
}

}  // namespace qb
