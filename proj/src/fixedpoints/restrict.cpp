#include "qb/fixedpoints/restrict.hpp"

#include <algorithm>
#include <climits>
#include <random>
#include <stdexcept>

namespace qb {

ParameterPoint ParameterPoint::random(const QuiverModel& q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(2, 60), den(2, 60);
    ParameterPoint p;
    auto add = [&](const TorusWeight& w) {
        for (VarId v = 0; v < kMaxVars; ++v)
            if (w.twice(v) != 0 && !is_chern_root(v) && !p.root.count(v)) {
                mpq_class r(num(rng), den(rng));
                r.canonicalize();
                if (r == 1) r = mpq_class(61, 59);
                p.root[v] = r;
            }
    };
    add(q.hbar_weight());
    for (std::size_t e = 0; e < q.edges.size(); ++e) add(q.edge_weight(e));
    for (int i = 0; i < q.vertices; ++i)
        for (int l = 0; l < q.w[i]; ++l) add(q.framing_weight(i, l));
    return p;
}

mpq_class ParameterPoint::monomial(const TorusWeight& w) const {
    mpq_class acc = 1;
    for (VarId v = 0; v < kMaxVars; ++v) {
        int e = w.twice(v);
        if (e == 0) continue;
        auto it = root.find(v);
        if (it == root.end()) throw std::invalid_argument("no value for variable " + Variables::info(v).name);
        mpz_class num, den;
        unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
        mpz_pow_ui(num.get_mpz_t(), it->second.get_num_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), it->second.get_den_mpz_t(), k);
        mpq_class f(num, den);
        f.canonicalize();
        acc = e < 0 ? mpq_class(acc / f) : mpq_class(acc * f);
    }
    return acc;
}

std::string ParameterPoint::to_string() const {
    std::string s;
    for (const auto& [v, r] : root) {
        if (!s.empty()) s += ", ";
        mpq_class val = r * r;
        s += Variables::info(v).name + "=" + val.get_str();
    }
    return s;
}

KClass restrict(const KClass& c, const FixedComponent& f) {
    auto t = f.root_values();
    return c.substitute(substitution(t));
}

FactoredRational restrict(const FactoredRational& r, const FixedComponent& f) {
    auto t = f.root_values();
    return r.substitute(substitution(t));
}

LaurentPoly restrict(const LaurentPoly& p, const FixedComponent& f) {
    auto t = f.root_values();
    return p.substitute(substitution(t));
}

namespace {

struct Leading {
    int order = INT_MAX;  // INT_MAX: identically zero
    mpq_class coeff;
};

struct Curve {
    std::map<VarId, TorusWeight> values;
    std::map<VarId, int> dir;
    const ParameterPoint* point;

    // value at F and u-order of a monomial
    std::pair<mpq_class, int> eval(const TorusWeight& m) const {
        int ord = 0;
        for (const auto& [v, d] : dir) ord += d * m.twice(v);
        TorusWeight sub = m.substitute(substitution(values));
        return {point->monomial(sub), ord};
    }

    // vanishing order at u = 1 and the leading Taylor coefficient
    Leading poly(const LaurentPoly& p) const {
        std::map<int, mpq_class> acc;
        for (const auto& [m, c] : p.terms()) {
            auto [val, ord] = eval(m);
            acc[ord] += c * val;
        }
        std::vector<mpq_class> coef;  // ascending powers after shifting to a polynomial
        int lo = INT_MAX, hi = INT_MIN;
        for (const auto& [ord, c] : acc)
            if (c != 0) {
                lo = std::min(lo, ord);
                hi = std::max(hi, ord);
            }
        if (lo == INT_MAX) return {};
        coef.assign(hi - lo + 1, 0);
        for (const auto& [ord, c] : acc) coef[ord - lo] += c;
        // synthetic division by (u - 1) until the remainder is nonzero
        for (int k = 0;; ++k) {
            mpq_class at_one = 0;
            for (const auto& c : coef) at_one += c;
            if (at_one != 0) return {k, at_one};
            std::vector<mpq_class> q(coef.size() - 1);
            mpq_class carry = 0;
            for (std::size_t i = coef.size() - 1; i >= 1; --i) {
                carry += coef[i];
                q[i - 1] = carry;
            }
            coef = std::move(q);
        }
    }

    // returns false if some factor vanishes identically along the curve
    bool factored(const FactoredRational& f, Leading& out) const {
        auto [v0, o0] = eval(f.monomial());
        out = {0, f.coefficient() * v0};
        for (const auto& [b, k] : f.factors()) {
            auto [va, oa] = eval(b.a);
            auto [vb, ob] = eval(b.b);
            Leading l;
            if (va != vb)
                l = {0, va - vb};
            else if (oa != ob)
                l = {1, va * (oa - ob)};
            else
                return false;
            int n = k < 0 ? -k : k;
            for (int i = 0; i < n; ++i) {
                if (k > 0) {
                    out.order += l.order;
                    out.coeff *= l.coeff;
                } else {
                    out.order -= l.order;
                    out.coeff /= l.coeff;
                }
            }
        }
        return true;
    }
};

}  // namespace

RestrictedValue restrict_value(const LaurentPoly& numerator, const FactoredRational& denominator,
                               const FixedComponent& f, const ParameterPoint& p) {
    // three candidate curve families; two that are non-degenerate are used
    auto direction = [&](int family) {
        std::map<VarId, int> d;
        int idx = 0;
        for (std::size_t i = 0; i < f.slots.size(); ++i)
            for (std::size_t k = 0; k < f.slots[i].size(); ++k, ++idx) {
                VarId v = Variables::chern_root(static_cast<int>(i), static_cast<int>(k));
                switch (family) {
                    case 0: d[v] = 1 + idx * idx + 3 * idx; break;
                    case 1: d[v] = 7 * idx + 2; break;
                    case 2: d[v] = 1 << idx; break;
                    default: d[v] = 11 * idx * idx + 5; break;
                }
            }
        return d;
    };
    std::vector<RestrictedValue> results;
    for (int family = 0; family < 4 && results.size() < 2; ++family) {
        Curve c{f.root_values(), direction(family), &p};
        Leading den;
        if (!c.factored(denominator, den)) continue;
        if (den.coeff == 0) throw PoleError("zero denominator coefficient");
        Leading num = c.poly(numerator);
        RestrictedValue r;
        if (num.order == INT_MAX) {
            r.value = 0;
            r.order = INT_MAX;
        } else {
            r.order = num.order - den.order;
            if (r.order > 0)
                r.value = 0;
            else if (r.order == 0)
                r.value = num.coeff / den.coeff;
            else
                r.status = RestrictStatus::pole;
        }
        results.push_back(r);
    }
    if (results.empty()) {
        RestrictedValue r;
        r.status = RestrictStatus::pole;
        r.note = "every approach curve is degenerate";
        return r;
    }
    RestrictedValue r = results[0];
    for (const auto& other : results)
        if (other.status != r.status || (r.status == RestrictStatus::value && other.value != r.value)) {
            r.status = RestrictStatus::pole;
            r.note = "limit depends on the direction of approach";
        }
    if (r.status == RestrictStatus::pole && r.note.empty()) r.note = "pole on locus";
    return r;
}

}  // namespace qb
