#include "qb/bethe/system.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "qb/symkit/transforms.hpp"

namespace qb {

bool TangentClass::polarization_consistent() const {
    KClass h = half.character();
    TorusWeight hinv = quiver.hbar_weight().inverse();
    return h + h.dual() * hinv == tx;
}

TangentClass tangent_class(const QuiverModel& q) {
    TangentClass tc;
    tc.quiver = q;
    tc.tx = tangent_character(q);
    tc.half = polarization(q);
    return tc;
}

BetheSystem bethe_equations(const TangentClass& tc) {
    BetheSystem sys;
    sys.quiver = tc.quiver;
    sys.half = tc.half.character();
    const QuiverModel& q = tc.quiver;
    sys.shift.assign(q.vertices, 0);
    for (int i = 0; i < q.vertices; ++i)
        for (int k = 0; k < q.v[i]; ++k) {
            VarId r = Variables::chern_root(i, k);
            sys.roots.push_back(r);
            sys.vertex_of.push_back(i);
            sys.lhs.push_back(ahat(tc.tx.log_derivative(r)));
            int d = 0;
            for (const auto& [w, m] : sys.half.terms()) d += m * w.twice(r);
            if (d % 2 != 0) throw std::logic_error("det T^{1/2} has a half-integral Chern-root exponent");
            if (k == 0)
                sys.shift[i] = d / 2;
            else if (sys.shift[i] != d / 2)
                throw std::logic_error("det T^{1/2} exponent depends on the root index");
        }
    return sys;
}

NumericParams NumericParams::generic(const QuiverModel& q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> mod(50, 200), ang(1, 999);
    NumericParams p;
    auto add = [&](const TorusWeight& w) {
        for (VarId v = 0; v < kMaxVars; ++v)
            if (w.twice(v) != 0 && !is_chern_root(v) && !p.sqrt_value.count(v)) {
                Real r = to_real(mpq_class(mod(rng), 100));
                Real theta = 2 * pi() * to_real(mpq_class(ang(rng), 1000));
                p.sqrt_value[v] = polar(boost::multiprecision::sqrt(r), theta / 2);
            }
    };
    add(q.hbar_weight());
    for (std::size_t e = 0; e < q.edges.size(); ++e) add(q.edge_weight(e));
    for (int i = 0; i < q.vertices; ++i)
        for (int l = 0; l < q.w[i]; ++l) add(q.framing_weight(i, l));
    return p;
}

void NumericParams::set(const std::string& name, const Complex& value) {
    sqrt_value[Variables::parameter(name)] = sqrt(value);
}

Complex NumericParams::value(VarId v) const {
    const Complex& s = sqrt_value.at(v);
    return s * s;
}

std::string NumericParams::to_string(int digits) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, s] : sqrt_value) {
        os << (first ? "" : ", ") << Variables::info(v).name << "=" << qb::to_string(s * s, digits);
        first = false;
    }
    return os.str();
}

CompiledEquation::Mono CompiledEquation::compile(const TorusWeight& w, const std::vector<VarId>& roots,
                                                 const NumericParams& p) {
    Mono m;
    m.twice.assign(roots.size(), 0);
    TorusWeight rest = w;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        m.twice[j] = w.twice(roots[j]);
        rest.set_twice(roots[j], 0);
    }
    m.coeff = evaluate_weight<Complex>(
        rest,
        [&](VarId v) {
            auto it = p.sqrt_value.find(v);
            if (it == p.sqrt_value.end()) throw std::invalid_argument("no numeric value for " + Variables::info(v).name);
            return it->second;
        },
        Complex(1));
    return m;
}

CompiledEquation::CompiledEquation(const FactoredRational& b, const std::vector<VarId>& roots, const NumericParams& p)
    : n_(roots.size()) {
    prefactor_ = compile(b.monomial(), roots, p);
    prefactor_.coeff *= Complex(b.coefficient());
    for (const auto& [f, m] : b.factors()) {
        Factor c{compile(f.a, roots, p), compile(f.b, roots, p), m < 0 ? -m : m};
        (m > 0 ? num_ : den_).push_back(c);
    }
}

Complex CompiledEquation::eval(const Mono& m, const std::vector<Complex>& u) const {
    Complex s;
    bool any = false;
    for (std::size_t j = 0; j < n_; ++j)
        if (m.twice[j] != 0) {
            s += u[j] * Complex(Real(m.twice[j]) / 2);
            any = true;
        }
    return any ? m.coeff * exp(s) : m.coeff;
}

void CompiledEquation::product(const std::vector<Factor>& fs, const std::vector<Complex>& u, Complex& val,
                               std::vector<Complex>& grad) const {
    const std::size_t m = fs.size();
    std::vector<Complex> value(m);
    std::vector<std::vector<Complex>> g(m, std::vector<Complex>(n_));
    for (std::size_t i = 0; i < m; ++i) {
        Complex a = eval(fs[i].a, u), b = eval(fs[i].b, u);
        Complex base = a - b;
        Complex pw = pow(base, fs[i].power - 1);
        value[i] = pw * base;
        for (std::size_t j = 0; j < n_; ++j) {
            Complex db = (a * Complex(Real(fs[i].a.twice[j]) / 2)) - (b * Complex(Real(fs[i].b.twice[j]) / 2));
            g[i][j] = Complex(fs[i].power) * pw * db;
        }
    }
    // product rule with prefix / suffix products, safe at zeros
    std::vector<Complex> pre(m + 1, Complex(1)), suf(m + 1, Complex(1));
    for (std::size_t i = 0; i < m; ++i) pre[i + 1] = pre[i] * value[i];
    for (std::size_t i = m; i-- > 0;) suf[i] = suf[i + 1] * value[i];
    val = pre[m];
    grad.assign(n_, Complex());
    for (std::size_t i = 0; i < m; ++i) {
        Complex others = pre[i] * suf[i + 1];
        for (std::size_t j = 0; j < n_; ++j) grad[j] += g[i][j] * others;
    }
}

CompiledEquation::Value CompiledEquation::evaluate(const std::vector<Complex>& u) const {
    Value v;
    product(num_, u, v.n, v.grad_n);
    product(den_, u, v.d, v.grad_d);
    Complex pf = eval(prefactor_, u);
    for (std::size_t j = 0; j < n_; ++j) {
        v.grad_n[j] = pf * v.grad_n[j] + pf * Complex(Real(prefactor_.twice[j]) / 2) * v.n;
    }
    v.n = pf * v.n;
    return v;
}

Complex CompiledEquation::ratio(const std::vector<Complex>& u) const {
    Value v = evaluate(u);
    return v.n / v.d;
}

Real bethe_residual(const BetheSystem& sys, const NumericParams& p, const std::vector<Complex>& u,
                    const std::vector<Complex>& z) {
    Real worst = 0;
    for (std::size_t k = 0; k < sys.size(); ++k) {
        CompiledEquation eq(sys.lhs[k], sys.roots, p);
        Real r = abs(eq.ratio(u) / z.at(sys.vertex_of[k]) - Complex(1));
        if (r > worst) worst = r;
    }
    return worst;
}

Complex evaluate_weight_numeric(const TorusWeight& w, const NumericParams& p, const std::vector<VarId>& roots,
                                const std::vector<Complex>& u) {
    std::map<VarId, Complex> half;
    for (std::size_t j = 0; j < roots.size(); ++j) half[roots[j]] = exp(u[j] * Complex(Real(1) / 2));
    return evaluate_weight<Complex>(
        w,
        [&](VarId v) {
            auto it = half.find(v);
            if (it != half.end()) return it->second;
            auto jt = p.sqrt_value.find(v);
            if (jt == p.sqrt_value.end()) throw std::invalid_argument("no numeric value for " + Variables::info(v).name);
            return jt->second;
        },
        Complex(1));
}

std::vector<Complex> seed_logs(const BetheSystem& sys, const std::map<VarId, TorusWeight>& root_values,
                               const NumericParams& p) {
    std::vector<Complex> u;
    for (VarId r : sys.roots) {
        Complex x = evaluate_weight_numeric(root_values.at(r), p, {}, {});
        u.push_back(log(x));
    }
    return u;
}

}  // namespace qb
