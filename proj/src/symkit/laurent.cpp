#include "qb/symkit/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qb {

LaurentPoly::LaurentPoly(const mpq_class& c) {
    if (c != 0) terms_.emplace_back(TorusWeight{}, c);
}

LaurentPoly::LaurentPoly(const TorusWeight& m, const mpq_class& c) {
    if (c != 0) terms_.emplace_back(m, c);
}

LaurentPoly LaurentPoly::binomial(const TorusWeight& a, const TorusWeight& b) {
    LaurentPoly p;
    if (a == b) return p;
    if (a < b) {
        p.terms_.emplace_back(a, 1);
        p.terms_.emplace_back(b, -1);
    } else {
        p.terms_.emplace_back(b, -1);
        p.terms_.emplace_back(a, 1);
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (out.back().second == 0) out.pop_back();
    }
    // a cancelled pair can expose equal neighbours only if input was unsorted; sorted input is safe
    terms_ = std::move(out);
}

mpq_class LaurentPoly::coefficient(const TorusWeight& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const TorusWeight& w) { return t.first < w; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_identity());
}

namespace {

template <class Combine>
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, Combine combine) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, combine(mpq_class(0), b[j].second));
            ++j;
        } else {
            mpq_class c = combine(a[i].second, b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r;
    r.terms_ = merge(terms_, o.terms_, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x + y); });
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r;
    r.terms_ = merge(terms_, o.terms_, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x - y); });
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = *this + o; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = *this - o; }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (terms_.empty() || o.terms_.empty()) return {};
    if (o.terms_.size() == 1) return scaled(o.terms_[0].second).shifted(o.terms_[0].first);
    if (terms_.size() == 1) return o.scaled(terms_[0].second).shifted(terms_[0].first);
    if (o.terms_.size() == 2) {
        const auto& [m0, c0] = o.terms_[0];
        const auto& [m1, c1] = o.terms_[1];
        return scaled(c0).shifted(m0) + scaled(c1).shifted(m1);
    }
    std::map<TorusWeight, mpq_class> acc;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
    LaurentPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, std::move(c));
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const TorusWeight& m) const {
    // multiplication by a monomial preserves the (lexicographic, translation invariant) order
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first *= m;
    return r;
}

LaurentPoly LaurentPoly::times_binomial(const TorusWeight& a, const TorusWeight& b) const {
    if (a == b) return {};
    LaurentPoly pa = shifted(a);
    LaurentPoly pb = shifted(b);
    return pa - pb;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result(mpq_class(1));
    LaurentPoly base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

bool LaurentPoly::divide_binomial(const TorusWeight& a, const TorusWeight& b, LaurentPoly& quotient) const {
    if (a == b) throw std::domain_error("division by zero binomial");
    quotient = LaurentPoly{};
    if (terms_.empty()) return true;
    // Reduce to coprime polynomial monomials: a - b = g * (a' - b').
    TorusWeight g = TorusWeight::gcd(a, b);
    TorusWeight a1 = a / g, b1 = b / g;
    // leading monomial in the term order
    TorusWeight lead = std::max(a1, b1), tail = std::min(a1, b1);
    mpq_class lead_sign = (lead == a1) ? 1 : -1;
    // Shift the dividend into the polynomial ring.
    TorusWeight lo = min_exponents();
    std::map<TorusWeight, mpq_class> rem;
    for (const auto& [m, c] : terms_) rem.emplace(m / lo, c);
    std::vector<Term> q;
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        TorusWeight ratio = it->first / lead;
        if (!ratio.is_nonnegative()) return false;
        mpq_class c = it->second * lead_sign;
        rem.erase(it);
        // subtract c * ratio * (lead - tail) * lead_sign ... i.e. c*ratio*(lead*s - tail*s)
        auto& slot = rem[ratio * tail];
        slot += c * lead_sign;  // -(c * ratio * (-tail * lead_sign)) with lead_sign^2 = 1
        if (slot == 0) rem.erase(ratio * tail);
        q.emplace_back(ratio, c);
    }
    for (auto& [m, c] : q) m = m * lo / g;
    quotient = from_terms(std::move(q));
    return true;
}

TorusWeight LaurentPoly::min_exponents() const {
    if (terms_.empty()) return {};
    TorusWeight r = terms_[0].first;
    for (const auto& t : terms_) r = TorusWeight::gcd(r, t.first);
    return r;
}

TorusWeight LaurentPoly::max_exponents() const {
    if (terms_.empty()) return {};
    TorusWeight r = terms_[0].first;
    for (const auto& t : terms_) r = TorusWeight::lcm(r, t.first);
    return r;
}

LaurentPoly LaurentPoly::substitute(const std::function<const TorusWeight*(VarId)>& image) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m.substitute(image), c);
    return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::permute(const std::vector<std::pair<VarId, VarId>>& swaps) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        TorusWeight n = m;
        for (auto [from, to] : swaps) n.set_twice(to, 0);
        for (auto [from, to] : swaps) n.set_twice(to, m.twice(from));
        out.emplace_back(n, c);
    }
    return from_terms(std::move(out));
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        mpq_class mag = abs(c);
        if (out.empty())
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        bool unit = m.is_identity();
        if (mag != 1 || unit) {
            out += mag.get_str();
            if (!unit) out += '*';
        }
        if (!unit) out += m.to_string();
    }
    return out;
}

}  // namespace qb
