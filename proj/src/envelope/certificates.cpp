#include "qb/envelope/certificates.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "qb/numeric/parallel.hpp"

namespace qb {

PolynomialCertificate check_polynomial(const WeightFunction& wf) {
    PolynomialCertificate c;
    c.component = wf.fixed.label();
    c.s = symmetrize(delta_hbar(wf.quiver) * wf.kernel, wf.cosets);
    c.passed = c.s.is_polynomial();
    if (!c.passed) {
        const auto& [b, k] = *c.s.denominator.begin();
        c.witness = "(" + b.to_string() + ")^" + std::to_string(k);
    }
    return c;
}

namespace {

std::vector<VarId> flat_roots(const QuiverModel& q) {
    std::vector<VarId> vars;
    for (const auto& g : q.root_groups()) vars.insert(vars.end(), g.begin(), g.end());
    return vars;
}

RationalVector exponents(const TorusWeight& w, const std::vector<VarId>& vars) {
    RationalVector e(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) e[i] = mpq_class(w.twice(vars[i]), 2);
    return e;
}

}  // namespace

Zonotope weight_zonotope(const QuiverModel& q, const mpq_class& epsilon) {
    auto vars = flat_roots(q);
    // T^{1/2} X + hbar^-1 End V at V' = V, projected to G-weights
    std::map<RationalVector, int> mult;
    KClass pol = polarization(q).character(), adj = adjoint_character(q);
    for (const auto& [w, m] : pol.terms()) mult[exponents(w, vars)] += m;
    for (const auto& [w, m] : adj.terms()) mult[exponents(w, vars)] += m;
    Zonotope z;
    z.center.assign(vars.size(), epsilon);
    for (const auto& [e, m] : mult) {
        bool zero = true;
        for (const auto& c : e) zero = zero && c == 0;
        if (zero || m == 0) continue;
        if (m < 0) throw std::logic_error("weight_zonotope: negative multiplicity survives at V' = V");
        for (int k = 0; k < m; ++k) z.generators.push_back(e);
    }
    return z;
}

WeightBoundCertificate check_weight_bound(const WeightFunction& wf, const LaurentPoly& s, const mpq_class& epsilon,
                                          std::optional<std::vector<int>> det_power) {
    WeightBoundCertificate c;
    c.component = wf.fixed.label();
    c.epsilon = epsilon;
    const QuiverModel& q = wf.quiver;
    auto vars = flat_roots(q);
    std::vector<int> vertex_of;
    for (int i = 0; i < q.vertices; ++i) vertex_of.insert(vertex_of.end(), q.v[i], i);
    Zonotope z = weight_zonotope(q, epsilon);
    auto pts = support(s, vars);
    auto test = [&](const std::vector<int>& k, RationalVector& bad) {
        for (auto p : pts) {
            for (std::size_t j = 0; j < p.size(); ++j) p[j] += k[vertex_of[j]];
            if (!z.contains(p)) {
                bad = p;
                return false;
            }
        }
        return true;
    };
    std::vector<std::vector<int>> tries;
    if (det_power) {
        tries.push_back(*det_power);
    } else {
        // all vectors in [-r, r]^vertices, by increasing L1 norm
        int r = 2 * q.total_v() + 2;
        std::vector<int> k(q.vertices, -r);
        for (;;) {
            tries.push_back(k);
            std::size_t i = 0;
            while (i < k.size() && k[i] == r) k[i++] = -r;
            if (i == k.size()) break;
            ++k[i];
        }
        auto l1 = [](const std::vector<int>& v) {
            int a = 0;
            for (int x : v) a += std::abs(x);
            return a;
        };
        std::stable_sort(tries.begin(), tries.end(), [&](const auto& a, const auto& b) { return l1(a) < l1(b); });
    }
    RationalVector first_bad;
    for (const auto& k : tries) {
        RationalVector bad;
        if (test(k, bad)) {
            c.passed = true;
            c.det_power = k;
            c.detail = std::to_string(pts.size()) + " exponent vectors inside";
            return c;
        }
        if (first_bad.empty()) first_bad = bad;
    }
    c.det_power = tries.front();
    c.witness = first_bad;
    std::string v;
    for (const auto& x : first_bad) v += (v.empty() ? "" : ",") + x.get_str();
    c.detail = "exponent (" + v + ") outside the zonotope";
    return c;
}

bool dominance_leq(const FixedComponent& lower, const FixedComponent& upper) {
    return upper.partitions.at(0).dominates(lower.partitions.at(0));
}

bool subset_leq(const FixedComponent& lower, const FixedComponent& upper) {
    auto occupied = [](const FixedComponent& f) {
        std::vector<int> cols;
        for (std::size_t c = 0; c < f.partitions.size(); ++c)
            if (f.partitions[c].size() > 0) cols.push_back(static_cast<int>(c));
        return cols;
    };
    auto a = occupied(lower), b = occupied(upper);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

namespace {

// rank via exact Gaussian elimination
bool full_rank(std::vector<std::vector<mpq_class>> m) {
    const std::size_t n = m.size();
    for (std::size_t col = 0, row = 0; col < n; ++col, ++row) {
        std::size_t piv = row;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return false;
        std::swap(m[piv], m[row]);
        for (std::size_t r = row + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[row][col];
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[row][k];
        }
    }
    return true;
}

}  // namespace

RestrictionMatrix restriction_matrix(const std::vector<WeightFunction>& wfs, const std::vector<RationalFunction>& s,
                                     const FixedOrder& order, const ParameterPoint& p) {
    if (wfs.size() != s.size()) throw std::invalid_argument("restriction_matrix: size mismatch");
    const std::size_t n = wfs.size();
    RestrictionMatrix m;
    m.entries.assign(n, std::vector<RestrictedValue>(n));
    for (const auto& wf : wfs) m.labels.push_back(wf.fixed.label());
    parallel_for(n * n, [&](std::size_t idx) {
        std::size_t row = idx / n, col = idx % n;
        const auto& wf = wfs[col];
        FactoredRational den = delta_hbar(wf.quiver) * s[col].denominator_product();
        m.entries[row][col] = restrict_value(s[col].numerator, den, wfs[row].fixed, p);
    });
    std::vector<std::vector<mpq_class>> values(n, std::vector<mpq_class>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const auto& e = m.entries[r][c];
            std::string where = "[" + m.labels[r] + "][" + m.labels[c] + "]";
            if (e.status == RestrictStatus::pole) {
                m.triangular = m.invertible = false;
                if (m.witness.empty()) m.witness = "pole at " + where + ": " + e.note;
                continue;
            }
            values[r][c] = e.value;
            if (r == c && e.value == 0) {
                m.nonzero_diagonal = false;
                if (m.witness.empty()) m.witness = "zero diagonal at " + where;
            }
            if (r != c && e.value != 0 && !order(wfs[r].fixed, wfs[c].fixed)) {
                m.triangular = false;
                if (m.witness.empty()) m.witness = "nonzero entry " + where + " outside the order";
            }
        }
    if (m.invertible) m.invertible = full_rank(values);
    return m;
}

std::optional<FactoredRational> monomial_ratio(const RationalFunction& a, const RationalFunction& b) {
    LaurentPoly pa = a.numerator * b.denominator_product().numerator();
    LaurentPoly pb = b.numerator * a.denominator_product().numerator();
    if (pa.is_zero() || pb.is_zero()) return std::nullopt;
    const auto& [ma, ca] = pa.terms().front();
    const auto& [mb, cb] = pb.terms().front();
    TorusWeight m = ma / mb;
    mpq_class c = ca / cb;
    if (!(pb.shifted(m).scaled(c) == pa)) return std::nullopt;
    return FactoredRational(c) * FactoredRational(m);
}

std::optional<mpq_class> diagonal_ratio(const WeightFunction& wf, const RationalFunction& s,
                                        const ParameterPoint& p) {
    FactoredRational den = delta_hbar(wf.quiver) * s.denominator_product();
    auto v = restrict_value(s.numerator, den, wf.fixed, p);
    if (v.status != RestrictStatus::value) return std::nullopt;
    FactoredRational k = restrict(wf.kernel, wf.fixed);
    mpq_class kv = k.evaluate<mpq_class>([&](VarId id) { return p.root.at(id); }, mpq_class(1));
    if (kv == 0) return std::nullopt;
    return mpq_class(v.value / kv);
}

}  // namespace qb
