#include "qb/symkit/kclass.hpp"

#include <stdexcept>

namespace qb {

void KClass::add(const TorusWeight& w, int mult) {
    if (mult == 0) return;
    int& slot = terms_[w];
    slot += mult;
    if (slot == 0) terms_.erase(w);
}

int KClass::multiplicity(const TorusWeight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

int KClass::rank() const {
    int r = 0;
    for (const auto& [w, m] : terms_) r += m;
    return r;
}

bool KClass::is_honest() const {
    for (const auto& [w, m] : terms_)
        if (m < 0) return false;
    return true;
}

KClass& KClass::operator+=(const KClass& o) {
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
}

KClass& KClass::operator-=(const KClass& o) {
    for (const auto& [w, m] : o.terms_) add(w, -m);
    return *this;
}

KClass KClass::operator+(const KClass& o) const {
    KClass r = *this;
    return r += o;
}

KClass KClass::operator-(const KClass& o) const {
    KClass r = *this;
    return r -= o;
}

KClass KClass::operator-() const { return KClass{} - *this; }

KClass KClass::operator*(const TorusWeight& w) const {
    KClass r;
    for (const auto& [u, m] : terms_) r.add(u * w, m);
    return r;
}

KClass KClass::operator*(const KClass& o) const {
    KClass r;
    for (const auto& [u, m] : terms_)
        for (const auto& [v, n] : o.terms_) r.add(u * v, m * n);
    return r;
}

KClass KClass::dual() const {
    KClass r;
    for (const auto& [u, m] : terms_) r.add(u.inverse(), m);
    return r;
}

KClass KClass::log_derivative(VarId var) const {
    KClass r;
    for (const auto& [u, m] : terms_) {
        int e2 = u.twice(var);
        if (e2 % 2 != 0) throw std::domain_error("half-integral exponent in log derivative");
        r.add(u, m * (e2 / 2));
    }
    return r;
}

KClass KClass::substitute(const std::function<const TorusWeight*(VarId)>& image) const {
    KClass r;
    for (const auto& [u, m] : terms_) r.add(u.substitute(image), m);
    return r;
}

std::string KClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [u, m] : terms_) {
        if (!out.empty()) out += m < 0 ? " - " : " + ";
        else if (m < 0) out += "-";
        int k = m < 0 ? -m : m;
        if (k != 1) out += std::to_string(k) + "*";
        out += u.to_string();
    }
    return out;
}

OrientedWeight OrientedWeight::canonical() const {
    TorusWeight g = TorusWeight::gcd(source, target);
    TorusWeight s = source / g, t = target / g;
    // clear negative exponents so both are genuine monomials
    TorusWeight lift = TorusWeight::gcd(s, t).negative_part();
    return {s * lift, t * lift};
}

void OrientedClass::add(const OrientedWeight& w, int mult) {
    if (mult != 0) terms_.emplace_back(w, mult);
}

KClass OrientedClass::character() const {
    KClass k;
    for (const auto& [w, m] : terms_) k.add(w.weight(), m);
    return k;
}

OrientedClass OrientedClass::operator+(const OrientedClass& o) const {
    OrientedClass r = *this;
    for (const auto& t : o.terms_) r.terms_.push_back(t);
    return r;
}

OrientedClass OrientedClass::twisted(const TorusWeight& w) const {
    OrientedClass r;
    for (const auto& [ow, m] : terms_) r.add({ow.source, ow.target * w}, m);
    return r;
}

}  // namespace qb
