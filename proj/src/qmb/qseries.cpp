#include "qb/qmb/qseries.hpp"

#include <stdexcept>

#include "qb/bethe/yang_yang.hpp"

namespace qb {

QSeriesContext::QSeriesContext(const Complex& q_, unsigned digits_, int order_) : q(q_), order(order_), digits(digits_) {
    if (!(abs(q) < 1)) throw std::invalid_argument("q-series need |q| < 1");
}

namespace {

Real tail_bound(const Real& y_qn1, const Real& aq) {
    // sum_{n > N} |ln(1 - q^n y)| <= |y| |q|^{N+1} / ((1 - |q|) (1 - |y| |q|^{N+1}))
    if (y_qn1 >= 1) return Real(-1);
    return y_qn1 / ((1 - aq) * (1 - y_qn1));
}

bool on_negative_axis(const Complex& c) { return c.im == 0 && c.re <= 0; }

}  // namespace

QValue phi(const Complex& y, const QSeriesContext& ctx) {
    const Real aq = abs(ctx.q), ay = abs(y);
    const Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(ctx.digits) + 5);
    QValue r;
    r.value = Complex(1);
    Complex qn(1);
    Real aqn = 1;
    for (int n = 0;; ++n) {
        Complex f = Complex(1) - qn * y;
        Real af = abs(f);
        if (n == 0 || af < r.min_factor) r.min_factor = af;
        r.value *= f;
        qn *= ctx.q;
        aqn *= aq;
        r.terms = n + 1;
        Real t = tail_bound(ay * aqn, aq);
        if (ctx.order > 0) {
            if (n + 1 >= ctx.order) {
                r.log_tail = t < 0 ? Real(std::numeric_limits<double>::infinity()) : t;
                break;
            }
        } else if (t >= 0 && t < eps) {
            r.log_tail = t;
            break;
        }
        if (n > 50'000'000) throw std::runtime_error("phi: truncation order out of range");
    }
    r.abs_error = abs(r.value) * (exp(r.log_tail) - 1);
    return r;
}

Complex e_kernel_log(const std::vector<Complex>& u, const std::vector<int>& vertex_of, const std::vector<Complex>& lz,
                     const QSeriesContext& ctx) {
    Complex s;
    for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * lz.at(vertex_of[k]);
    return exp(s / log(ctx.q));
}

Complex e_kernel(const std::vector<std::vector<Complex>>& x, const std::vector<Complex>& z, const QSeriesContext& ctx) {
    std::vector<Complex> u, lz;
    std::vector<int> vertex_of;
    for (const auto& c : z) {
        if (on_negative_axis(c)) throw std::domain_error("e_kernel: z on the branch cut");
        lz.push_back(log(c));
    }
    for (std::size_t i = 0; i < x.size(); ++i)
        for (const auto& c : x[i]) {
            if (on_negative_axis(c)) throw std::domain_error("e_kernel: x on the branch cut");
            u.push_back(log(c));
            vertex_of.push_back(static_cast<int>(i));
        }
    return e_kernel_log(u, vertex_of, lz, ctx);
}

Complex big_phi(const BetheSystem& sys, const NumericParams& p, const std::vector<Complex>& u, const QSeriesContext& ctx) {
    Complex hbar = p.value(Variables::parameter(sys.quiver.hbar));
    const Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(ctx.digits) + 5);
    Complex total(1);
    for (const auto& [chi, m] : sys.half.terms()) {
        Complex c = evaluate_weight_numeric(chi, p, sys.roots, u);
        QValue num = phi(ctx.q * c, ctx), den = phi(hbar * c, ctx);
        if (den.min_factor <= eps)
            throw PoleCollision("big_phi: phi(hbar chi) vanishes at chi = " + chi.to_string());
        Complex ratio = num.value / den.value;
        total *= m > 0 ? pow(ratio, m) : Complex(1) / pow(ratio, -m);
    }
    return total;
}

IntegrandValue integrand(const WeightFunction& wf, const BetheSystem& sys, const NumericParams& p,
                         const std::vector<Complex>& u, const std::vector<Complex>& z, const QSeriesContext& ctx,
                         const IntegrandOptions& opt) {
    IntegrandValue r;
    std::map<VarId, Complex> half;
    for (std::size_t k = 0; k < sys.size(); ++k) half[sys.roots[k]] = exp(u[k] / Complex(2));
    Complex sum = evaluate_weight_function(wf, [&](VarId v) {
        auto it = half.find(v);
        return it != half.end() ? it->second : p.sqrt_value.at(v);
    });
    // s = Delta_hbar (full) * sum, then divided by the chosen Delta_hbar
    Complex hbar = p.value(Variables::parameter(sys.quiver.hbar));
    Complex full(1), chosen(1);
    for (std::size_t k = 0; k < sys.size(); ++k)
        for (std::size_t l = 0; l < sys.size(); ++l) {
            if (sys.vertex_of[k] != sys.vertex_of[l]) continue;
            Complex d = Complex(1) - hbar * exp(u[k] - u[l]);
            full *= d;
            if (k != l || opt.delta_with_diagonal) chosen *= d;
        }
    r.f = full * sum / chosen;

    std::vector<Complex> lz;
    for (int i = 0; i < sys.quiver.vertices; ++i) lz.push_back(log_z_sharp(z.at(i), sys.shift[i], p, sys.quiver));
    r.e = e_kernel_log(u, sys.vertex_of, lz, ctx);
    r.big_phi = big_phi(sys, p, u, ctx);
    if (opt.g) {
        std::vector<Complex> x;
        for (const auto& uk : u) x.push_back(exp(uk));
        r.g = opt.g(x, z);
    }
    r.value = r.g * r.f * r.e * r.big_phi;
    return r;
}

}  // namespace qb
