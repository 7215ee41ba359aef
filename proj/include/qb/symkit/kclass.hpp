#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qb/symkit/weight.hpp"

namespace qb {

/// Virtual character: weight -> integer multiplicity.
class KClass {
public:
    KClass() = default;
    explicit KClass(const TorusWeight& w, int mult = 1) { add(w, mult); }

    void add(const TorusWeight& w, int mult = 1);
    const std::map<TorusWeight, int>& terms() const { return terms_; }
    int multiplicity(const TorusWeight& w) const;
    int rank() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_honest() const;

    KClass operator+(const KClass& o) const;
    KClass operator-(const KClass& o) const;
    KClass operator-() const;
    KClass& operator+=(const KClass& o);
    KClass& operator-=(const KClass& o);
    /// Tensor with a single weight.
    KClass operator*(const TorusWeight& w) const;
    /// Tensor product of characters.
    KClass operator*(const KClass& o) const;
    KClass dual() const;

    /// x d/dx along one variable: multiplicity scaled by the (doubled) exponent / 2.
    /// Only integral exponents of `var` are accepted.
    KClass log_derivative(VarId var) const;
    KClass substitute(const std::function<const TorusWeight*(VarId)>& image) const;

    std::string to_string() const;
    friend bool operator==(const KClass&, const KClass&) = default;

private:
    std::map<TorusWeight, int> terms_;
};

/// A weight presented as target / source.
struct OrientedWeight {
    TorusWeight source, target;
    TorusWeight weight() const { return target / source; }
    /// Cancel the common monomial factor.
    OrientedWeight canonical() const;
    friend bool operator==(const OrientedWeight&, const OrientedWeight&) = default;
    friend auto operator<=>(const OrientedWeight&, const OrientedWeight&) = default;
};

/// Multiset of oriented weights with signed multiplicities.
class OrientedClass {
public:
    void add(const OrientedWeight& w, int mult = 1);
    const std::vector<std::pair<OrientedWeight, int>>& terms() const { return terms_; }
    KClass character() const;
    OrientedClass operator+(const OrientedClass& o) const;
    /// Multiply every target by w (e.g. hbar * class).
    OrientedClass twisted(const TorusWeight& w) const;

private:
    std::vector<std::pair<OrientedWeight, int>> terms_;
};

}  // namespace qb
