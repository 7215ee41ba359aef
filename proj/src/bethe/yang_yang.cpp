#include "qb/bethe/yang_yang.hpp"

#include "qb/bethe/dilog.hpp"

namespace qb {

Complex log_z_sharp(const Complex& z, int d, const NumericParams& p, const QuiverModel& q) {
    Complex sh = -p.sqrt_value.at(Variables::parameter(q.hbar));
    return log(z) - Complex(Real(d)) * log(sh);
}

Complex yang_yang(const BetheSystem& sys, const NumericParams& p, const std::vector<Complex>& u,
                  const std::vector<Complex>& z) {
    Complex hbar = p.value(Variables::parameter(sys.quiver.hbar));
    Complex w;
    for (const auto& [chi, m] : sys.half.terms()) {
        bool has_root = false;
        for (VarId r : sys.roots) has_root = has_root || chi.twice(r) != 0;
        if (!has_root) continue;
        Complex c = evaluate_weight_numeric(chi, p, sys.roots, u);
        w += Complex(Real(m)) * (dilog(hbar * c) - dilog(c));
    }
    for (std::size_t k = 0; k < sys.size(); ++k) {
        int i = sys.vertex_of[k];
        w -= u[k] * log_z_sharp(z.at(i), sys.shift[i], p, sys.quiver);
    }
    return w;
}

std::vector<Complex> yang_yang_gradient(const BetheSystem& sys, const NumericParams& p,
                                        const std::vector<Complex>& u, const std::vector<Complex>& z,
                                        const Real& h) {
    std::vector<Complex> g(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        auto up = u, dn = u;
        up[j] += Complex(h);
        dn[j] -= Complex(h);
        g[j] = (yang_yang(sys, p, up, z) - yang_yang(sys, p, dn, z)) / Complex(2 * h);
    }
    return g;
}

Real distance_to_periods(const Complex& c) {
    Real two_pi = 2 * pi();
    Real k = boost::multiprecision::round(c.im / two_pi);
    return abs(Complex(c.re, c.im - k * two_pi));
}

CriticalityReport criticality_check(const BetheSystem& sys, const NumericParams& p,
                                    const std::vector<std::vector<Complex>>& roots, const std::vector<Complex>& z,
                                    unsigned digits, const Real& h) {
    PrecisionScope scope(digits);
    CriticalityReport r;
    r.max_gradient = 0;
    for (const auto& u : roots) {
        Real worst = 0;
        for (const auto& g : yang_yang_gradient(sys, p, u, z, h)) worst = std::max(worst, distance_to_periods(g));
        r.per_root.push_back(worst);
        r.max_gradient = std::max(r.max_gradient, worst);
    }
    return r;
}

Real gradient_mismatch(const BetheSystem& sys, const NumericParams& p, const std::vector<Complex>& u,
                       const std::vector<Complex>& z, const Real& h) {
    auto g = yang_yang_gradient(sys, p, u, z, h);
    Real worst = 0;
    for (std::size_t k = 0; k < sys.size(); ++k) {
        CompiledEquation eq(sys.lhs[k], sys.roots, p);
        Complex lb = log(eq.ratio(u)) - log(z.at(sys.vertex_of[k]));
        worst = std::max(worst, distance_to_periods(lb - g[k]));
    }
    return worst;
}

}  // namespace qb
