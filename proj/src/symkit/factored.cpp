#include "qb/symkit/factored.hpp"

#include <stdexcept>

namespace qb {

std::string Binomial::to_string() const { return "(" + a.to_string() + " - " + b.to_string() + ")"; }

std::optional<CanonicalBinomial> canonicalize(const TorusWeight& a, const TorusWeight& b) {
    if (a == b) return std::nullopt;
    // a - b = b * (a/b - 1) = b * (P/N - 1) = (b/N) * (P - N)
    TorusWeight r = a / b;
    TorusWeight p = r.positive_part(), n = r.negative_part();
    CanonicalBinomial out{1, b / n, {p, n}};
    if (out.factor.a < out.factor.b) {
        std::swap(out.factor.a, out.factor.b);
        out.sign = -1;
    }
    return out;
}

FactoredRational FactoredRational::binomial(const TorusWeight& a, const TorusWeight& b, int power) {
    auto c = canonicalize(a, b);
    if (!c) {
        if (power > 0) return FactoredRational(mpq_class(0));
        if (power < 0) throw PoleError("zero binomial " + a.to_string() + " - " + b.to_string() + " in a denominator");
        return FactoredRational(mpq_class(1));
    }
    FactoredRational r;
    r.coeff_ = (c->sign < 0 && (power % 2 != 0)) ? -1 : 1;
    r.mono_ = c->monomial.pow(power);
    if (power != 0) r.factors_[c->factor] = power;
    return r;
}

int FactoredRational::numerator_degree() const {
    int d = 0;
    for (const auto& [f, m] : factors_)
        if (m > 0) d += m;
    return d;
}

int FactoredRational::denominator_degree() const {
    int d = 0;
    for (const auto& [f, m] : factors_)
        if (m < 0) d -= m;
    return d;
}

void FactoredRational::multiply_factor(const Binomial& f, int power) {
    if (power == 0 || coeff_ == 0) return;
    int& slot = factors_[f];
    slot += power;
    if (slot == 0) factors_.erase(f);
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
    if (o.coeff_ == 0 || coeff_ == 0) {
        *this = FactoredRational(mpq_class(0));
        return *this;
    }
    coeff_ *= o.coeff_;
    mono_ *= o.mono_;
    for (const auto& [f, m] : o.factors_) multiply_factor(f, m);
    return *this;
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
    FactoredRational r = *this;
    r *= o;
    return r;
}

FactoredRational FactoredRational::inverse() const {
    if (coeff_ == 0) throw PoleError("inverse of zero");
    FactoredRational r;
    r.coeff_ = 1 / coeff_;
    r.mono_ = mono_.inverse();
    for (const auto& [f, m] : factors_) r.factors_[f] = -m;
    return r;
}

FactoredRational& FactoredRational::operator/=(const FactoredRational& o) { return *this *= o.inverse(); }

FactoredRational FactoredRational::operator/(const FactoredRational& o) const { return *this * o.inverse(); }

FactoredRational FactoredRational::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    FactoredRational r;
    if (coeff_ == 0) return k == 0 ? r : *this;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), coeff_.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(den.get_mpz_t(), coeff_.get_den_mpz_t(), static_cast<unsigned long>(k));
    r.coeff_ = mpq_class(num, den);
    r.coeff_.canonicalize();
    r.mono_ = mono_.pow(k);
    if (k != 0)
        for (const auto& [f, m] : factors_) r.factors_[f] = m * k;
    return r;
}

LaurentPoly FactoredRational::numerator() const {
    LaurentPoly p(mono_, coeff_);
    for (const auto& [f, m] : factors_)
        for (int i = 0; i < m; ++i) p = p.times_binomial(f.a, f.b);
    return p;
}

LaurentPoly FactoredRational::denominator() const {
    LaurentPoly p(mpq_class(1));
    for (const auto& [f, m] : factors_)
        for (int i = 0; i < -m; ++i) p = p.times_binomial(f.a, f.b);
    return p;
}

FactoredRational FactoredRational::substitute(const std::function<const TorusWeight*(VarId)>& image) const {
    if (coeff_ == 0) return *this;
    FactoredRational r(mono_.substitute(image), coeff_);
    for (const auto& [f, m] : factors_) {
        TorusWeight a = f.a.substitute(image), b = f.b.substitute(image);
        if (a == b) {
            if (m < 0) throw PoleError("denominator factor " + f.to_string() + " vanishes under substitution");
            return FactoredRational(mpq_class(0));
        }
        r *= binomial(a, b, m);
    }
    return r;
}

FactoredRational FactoredRational::permute(const std::vector<std::pair<VarId, VarId>>& swaps) const {
    auto apply = [&](const TorusWeight& w) {
        TorusWeight n = w;
        for (auto [from, to] : swaps) n.set_twice(to, 0);
        for (auto [from, to] : swaps) n.set_twice(to, w.twice(from));
        return n;
    };
    if (coeff_ == 0) return *this;
    FactoredRational r(apply(mono_), coeff_);
    for (const auto& [f, m] : factors_) r *= binomial(apply(f.a), apply(f.b), m);
    return r;
}

bool FactoredRational::equals(const FactoredRational& o) const {
    if (coeff_ == 0 || o.coeff_ == 0) return coeff_ == 0 && o.coeff_ == 0;
    // cancel common factors before expanding
    FactoredRational q = *this / o;
    if (q.factors_.empty()) return q.coeff_ == 1 && q.mono_.is_identity();
    return q.numerator() == q.denominator();
}

std::optional<FactoredRational> FactoredRational::monomial_ratio(const FactoredRational& o) const {
    if (coeff_ == 0 || o.coeff_ == 0) return std::nullopt;
    FactoredRational q = *this / o;
    if (q.factors_.empty()) return q;
    LaurentPoly num = q.numerator(), den = q.denominator();
    if (den.size() != num.size()) return std::nullopt;
    // num = c * m * den for a single monomial m: compare leading terms, then verify
    const auto& [mn, cn] = num.terms().back();
    const auto& [md, cd] = den.terms().back();
    mpq_class c = cn / cd;
    TorusWeight m = mn / md;
    if (!(den.scaled(c).shifted(m) == num)) return std::nullopt;
    return FactoredRational(m, c);
}

std::string FactoredRational::to_string() const {
    if (coeff_ == 0) return "0";
    std::string num, den;
    for (const auto& [f, m] : factors_) {
        std::string s = f.to_string();
        int k = m < 0 ? -m : m;
        if (k > 1) s += "^" + std::to_string(k);
        std::string& tgt = m > 0 ? num : den;
        if (!tgt.empty()) tgt += "*";
        tgt += s;
    }
    std::string out = coeff_.get_str();
    if (!mono_.is_identity()) out += "*" + mono_.to_string();
    if (!num.empty()) out += "*" + num;
    if (!den.empty()) out += " / (" + den + ")";
    return out;
}

}  // namespace qb
