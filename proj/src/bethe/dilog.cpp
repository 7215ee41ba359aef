#include "qb/bethe/dilog.hpp"

#include <gmpxx.h>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace qb {

namespace {

// Bernoulli numbers B_0 .. B_n (B_1 = -1/2), exact
const std::vector<mpq_class>& bernoulli(std::size_t n) {
    static std::vector<mpq_class> b{mpq_class(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (b.size() <= n) {
        std::size_t m = b.size();
        mpq_class s = 0;
        mpz_class binom = 1;  // C(m+1, k)
        for (std::size_t k = 0; k < m; ++k) {
            s += binom * b[k];
            binom = binom * static_cast<unsigned long>(m + 1 - k) / static_cast<unsigned long>(k + 1);
        }
        b.push_back(-s / mpq_class(static_cast<unsigned long>(m + 1)));
    }
    return b;
}

// |z| <= 1, Re z <= 1/2: sum_n B_n w^{n+1} / (n+1)! with w = -ln(1 - z)
Complex dilog_core(const Complex& z) {
    Complex w = -log(Complex(1) - z);
    Real eps = boost::multiprecision::pow(Real(2), -static_cast<int>(Real::default_precision() * 3.33 + 8));
    Complex sum = w - w * w / Complex(4);
    Complex wp = w * w / Complex(2);  // w^{n+1} / (n+1)! for the current n
    for (long n = 2;; n += 2) {
        wp = wp * w / Complex(Real(n + 1));
        Complex term = wp * Complex(bernoulli(static_cast<std::size_t>(n))[n]);
        sum += term;
        if (abs(term) <= eps * (abs(sum) + 1) && n > 4) break;
        if (n > 4000) throw std::runtime_error("dilog: series did not converge");
        wp = wp * w / Complex(Real(n + 2));  // odd Bernoulli numbers vanish
    }
    return sum;
}

}  // namespace

Complex dilog(const Complex& z) {
    const Real pi2_6 = pi() * pi() / 6;
    if (z.im == 0 && z.re > 1) throw std::domain_error("dilog: argument on the branch cut (1, inf)");
    if (z.re == 0 && z.im == 0) return Complex();
    if (z.im == 0 && z.re == 1) return Complex(pi2_6);
    if (abs(z) > 1) {
        Complex l = log(-z);
        return -dilog(Complex(1) / z) - Complex(pi2_6) - l * l / Complex(2);
    }
    if (z.re > Real(1) / 2) {
        Complex one_minus = Complex(1) - z;
        return -dilog_core(one_minus) + Complex(pi2_6) - log(z) * log(one_minus);
    }
    return dilog_core(z);
}

}  // namespace qb
