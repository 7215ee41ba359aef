#include "qb/oracle/compare.hpp"

#include <random>
#include <stdexcept>

namespace qb {

ChainState chain_for(const QuiverModel& q, const NumericParams& p) {
    if (!q.is_a1()) throw std::invalid_argument("chain_for: '" + q.name + "' is not an A1 quiver");
    ChainState s;
    s.sites = q.w[0];
    s.hbar_sqrt = p.sqrt_value.at(Variables::parameter(q.hbar));
    // column w sits on site 0: the monodromy then matches the chamber sigma(a_l) = l
    for (int l = s.sites; l-- > 0;)
        s.a.push_back(evaluate_weight<Complex>(
            q.framing_weight(0, l), [&](VarId v) { return p.sqrt_value.at(v); }, Complex(1)));
    return s;
}

std::size_t chain_index(const FixedComponent& f) {
    std::size_t idx = 0;
    const int n = static_cast<int>(f.partitions.size());
    for (int c = 0; c < n; ++c)
        if (f.partitions[c].size() > 0) idx |= std::size_t(1) << (n - 1 - f.columns[c].second);
    return idx;
}

Complex evaluate_weight_function(const WeightFunction& wf, const NumericParams& p, const std::vector<Complex>& x) {
    const auto& roots = wf.quiver.root_groups();
    std::map<VarId, Complex> half;
    std::size_t k = 0;
    for (const auto& g : roots)
        for (VarId r : g) half[r] = sqrt(x.at(k++));
    auto sqrt_of = [&](VarId v) {
        auto it = half.find(v);
        return it != half.end() ? it->second : p.sqrt_value.at(v);
    };
    return qb::evaluate_weight_function(wf, sqrt_of);
}

std::vector<std::vector<Complex>> random_root_points(std::size_t v, std::size_t count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> mod(70, 140), ang(0, 999);
    std::vector<std::vector<Complex>> pts(count);
    for (auto& x : pts)
        for (std::size_t k = 0; k < v; ++k)
            x.push_back(polar(to_real(mpq_class(mod(rng), 100)), 2 * pi() * to_real(mpq_class(ang(rng), 1000))));
    return pts;
}

GaugeReport compare_weight_functions(const QuiverModel& q, const NumericParams& p,
                                     const std::vector<std::vector<Complex>>& points, const Real& tol) {
    if (points.size() < 2) throw std::invalid_argument("compare_weight_functions: need a fit point and a check point");
    GaugeReport rep;
    ChainState s = chain_for(q, p);
    auto fs = enumerate_fixed(q);
    std::vector<WeightFunction> wfs;
    std::vector<std::size_t> index;
    for (const auto& f : fs) {
        wfs.push_back(build_weight_function(q, f));
        index.push_back(chain_index(f));
        rep.labels.push_back(f.label());
    }
    // ratio psi_F / f_F, normalized by the first F
    auto ratios = [&](const std::vector<Complex>& x) {
        auto psi = off_shell_vector(s, x);
        std::vector<Complex> r;
        Real inside = 0, outside = 0;
        std::vector<bool> used(psi.size(), false);
        for (std::size_t i = 0; i < wfs.size(); ++i) {
            r.push_back(psi[index[i]] / evaluate_weight_function(wfs[i], p, x));
            used[index[i]] = true;
            inside = std::max(inside, abs(psi[index[i]]));
        }
        for (std::size_t j = 0; j < psi.size(); ++j)
            if (!used[j]) outside = std::max(outside, abs(psi[j]));
        rep.outside_sector = std::max(rep.outside_sector, outside / inside);
        for (std::size_t i = wfs.size(); i-- > 0;) r[i] /= r[0];
        return r;
    };
    rep.gauge = ratios(points[0]);
    rep.residual.assign(wfs.size(), {});
    for (std::size_t j = 1; j < points.size(); ++j) {
        auto r = ratios(points[j]);
        for (std::size_t i = 0; i < wfs.size(); ++i) {
            Real e = abs(r[i] / rep.gauge[i] - Complex(1));
            rep.residual[i].push_back(e);
            rep.max_residual = std::max(rep.max_residual, e);
        }
    }
    rep.consistent = rep.max_residual < tol && rep.outside_sector < tol;
    if (!rep.consistent) rep.note = "no x-independent diagonal gauge within tolerance";
    return rep;
}

DenseMatrix transfer_limit(const ChainState& s, const Complex& u, const TwistConvention& tw) {
    Monodromy m = monodromy(s, u);
    return tw.on_up ? m.D : m.A;
}

namespace {

Complex pi_ratio(const QuiverModel& q, const NumericParams& p, const std::vector<Complex>& u) {
    FactoredRational b = baxter_eigenvalue(q);
    std::map<VarId, Complex> half;
    for (std::size_t k = 0; k < u.size(); ++k) half[Variables::chern_root(0, static_cast<int>(k))] = sqrt(u[k]);
    return b.evaluate<Complex>(
        [&](VarId v) {
            auto it = half.find(v);
            return it != half.end() ? it->second : p.sqrt_value.at(v);
        },
        Complex(1));
}

Complex power(const Complex& c, int e) { return e >= 0 ? pow(c, e) : Complex(1) / pow(c, -e); }

}  // namespace

BaxterReport baxter_check(const QuiverModel& q, const NumericParams& p, const std::vector<std::vector<Complex>>& u,
                          const TwistConvention& tw, int exponent) {
    BaxterReport rep;
    rep.convention = tw.id();
    if (exponent == 0) {
        // calibrate at v = w = 1
        QuiverModel q11 = QuiverModel::a1(1, 1);
        NumericParams p11 = NumericParams::generic(q11, 17);
        ChainState s11 = chain_for(q11, p11);
        Complex x = polar(Real("0.9"), Real("0.4"));
        Monodromy m = monodromy(s11, x);
        Complex r = tw.on_up ? m.D(0, 0) / m.A(0, 0) : m.A(0, 0) / m.D(0, 0);
        Complex target = pi_ratio(q11, p11, {x});
        exponent = abs(r - target) <= abs(Complex(1) / r - target) ? 1 : -1;
    }
    rep.exponent = exponent;
    ChainState s = chain_for(q, p);
    std::vector<Complex> vac(s.dim());
    vac[0] = Complex(1);
    for (const auto& uk : u) {
        if (uk.size() != static_cast<std::size_t>(q.v[0])) throw std::invalid_argument("baxter_check: need v spectral parameters");
        DenseMatrix prod = DenseMatrix::identity(s.dim());
        Complex norm_factor(1);
        for (const auto& x : uk) {
            Monodromy m = monodromy(s, x);
            prod = prod * transfer_limit(s, x, tw);
            norm_factor *= tw.on_up ? m.A(0, 0) : m.D(0, 0);
        }
        auto image = prod.apply(vac);
        Complex lambda = image[0];
        image[0] -= lambda;
        rep.vac_residual = std::max(rep.vac_residual, vector_norm(image) / abs(lambda));
        Complex lhs = power(lambda / norm_factor, exponent);
        Complex rhs = pi_ratio(q, p, uk);
        rep.ratio_residual = std::max(rep.ratio_residual, abs(lhs / rhs - Complex(1)));
    }
    return rep;
}

}  // namespace qb
