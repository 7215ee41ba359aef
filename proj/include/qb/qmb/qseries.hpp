#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qb/bethe/system.hpp"
#include "qb/envelope/weight_function.hpp"

namespace qb {

struct QSeriesContext {
    Complex q;
    int order = 0;        // truncation N; 0 picks N so the tail bound is below 10^-(digits-5)
    unsigned digits = 30;

    explicit QSeriesContext(const Complex& q_, unsigned digits_ = 30, int order_ = 0);
};

struct QValue {
    Complex value;
    Real log_tail = 0;   // bound on |ln phi - ln phi_N|
    Real abs_error = 0;  // |phi_N| (exp(log_tail) - 1)
    int terms = 0;
    Real min_factor = 0; // min_n |1 - q^n y| over the kept factors
};

/// phi(y) = prod_{n >= 0} (1 - q^n y), truncated at n = N.
QValue phi(const Complex& y, const QSeriesContext& ctx);

/// exp(sum_{i,k} ln x_{i,k} ln z_i / ln q), principal logs; x grouped by vertex.
/// Rejects x or z on the closed negative real axis.
Complex e_kernel(const std::vector<std::vector<Complex>>& x, const std::vector<Complex>& z, const QSeriesContext& ctx);

/// Same in log coordinates: exp(sum u_{i,k} lz_i / ln q).
Complex e_kernel_log(const std::vector<Complex>& u, const std::vector<int>& vertex_of, const std::vector<Complex>& lz,
                     const QSeriesContext& ctx);

class PoleCollision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// prod over weights chi of T^{1/2} (with multiplicity) of phi(q chi) / phi(hbar chi), at roots x = exp(u).
Complex big_phi(const BetheSystem& sys, const NumericParams& p, const std::vector<Complex>& u, const QSeriesContext& ctx);

struct IntegrandValue {
    Complex value;
    Complex f, e, big_phi, g = Complex(1);
};

struct IntegrandOptions {
    bool delta_with_diagonal = true;  // Delta_hbar over all (k, l) including k = l
    // g_beta at (x, z); empty means g = 1
    std::function<Complex(const std::vector<Complex>&, const std::vector<Complex>&)> g;
};

/// g(x, z) f(x) e(x, z_#) Phi(x). f = s / Delta_hbar where s = symmetrize(Delta_hbar kernel);
/// dropping the diagonal of Delta_hbar multiplies f by prod_i (1 - hbar)^{v_i}.
IntegrandValue integrand(const WeightFunction& wf, const BetheSystem& sys, const NumericParams& p,
                         const std::vector<Complex>& u, const std::vector<Complex>& z, const QSeriesContext& ctx,
                         const IntegrandOptions& opt = {});

}  // namespace qb
