#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qb/symkit/laurent.hpp"
#include "qb/symkit/weight.hpp"

namespace qb {

/// A binomial factor (a - b) in canonical form: a and b are polynomial
/// monomials with disjoint support and a > b.
struct Binomial {
    TorusWeight a, b;

    LaurentPoly expand() const { return LaurentPoly::binomial(a, b); }
    bool is_g_trivial() const { return a.is_g_trivial() && b.is_g_trivial(); }
    std::string to_string() const;

    friend bool operator==(const Binomial&, const Binomial&) = default;
    friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

/// Rewrite (a - b) as sign * monomial * canonical binomial. Returns nullopt
/// when a == b.
struct CanonicalBinomial {
    int sign;
    TorusWeight monomial;
    Binomial factor;
};
std::optional<CanonicalBinomial> canonicalize(const TorusWeight& a, const TorusWeight& b);

class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// coefficient * monomial * prod factor^multiplicity. Positive multiplicities
/// sit in the numerator. A zero coefficient represents the zero function.
class FactoredRational {
public:
    FactoredRational() = default;
    explicit FactoredRational(const mpq_class& c) : coeff_(c) {}
    explicit FactoredRational(const TorusWeight& m, const mpq_class& c = 1) : coeff_(c), mono_(c == 0 ? TorusWeight{} : m) {}
    /// (a - b)^power; a zero binomial with power > 0 gives zero, with power < 0 throws PoleError.
    static FactoredRational binomial(const TorusWeight& a, const TorusWeight& b, int power = 1);

    const mpq_class& coefficient() const { return coeff_; }
    const TorusWeight& monomial() const { return mono_; }
    const std::map<Binomial, int>& factors() const { return factors_; }
    bool is_zero() const { return coeff_ == 0; }
    /// Number of binomial factors counted with multiplicity in the numerator/denominator.
    int numerator_degree() const;
    int denominator_degree() const;

    FactoredRational operator*(const FactoredRational& o) const;
    FactoredRational operator/(const FactoredRational& o) const;
    FactoredRational& operator*=(const FactoredRational& o);
    FactoredRational& operator/=(const FactoredRational& o);
    FactoredRational inverse() const;
    FactoredRational pow(int k) const;

    void multiply_factor(const Binomial& f, int power);

    LaurentPoly numerator() const;    // coefficient * monomial * positive factors
    LaurentPoly denominator() const;  // negative factors
    /// Numerator and denominator split with the monomial kept in the numerator.

    /// Substitute monomials for variables and recanonicalize. Throws
    /// PoleError if a denominator factor vanishes identically.
    FactoredRational substitute(const std::function<const TorusWeight*(VarId)>& image) const;
    FactoredRational permute(const std::vector<std::pair<VarId, VarId>>& swaps) const;

    /// Exact equality of the represented rational functions (cross-multiplied).
    bool equals(const FactoredRational& o) const;
    /// If this / o is (+-) a monomial, return it.
    std::optional<FactoredRational> monomial_ratio(const FactoredRational& o) const;

    template <class T, class SqrtOf>
    T evaluate(SqrtOf&& sqrt_of, const T& one) const {
        T val = T(coeff_) * evaluate_weight<T>(mono_, sqrt_of, one);
        for (const auto& [f, m] : factors_) {
            T x = evaluate_weight<T>(f.a, sqrt_of, one) - evaluate_weight<T>(f.b, sqrt_of, one);
            int k = m < 0 ? -m : m;
            T p = one;
            for (int i = 0; i < k; ++i) p = p * x;
            val = m < 0 ? T(val / p) : T(val * p);
        }
        return val;
    }

    std::string to_string() const;

private:
    mpq_class coeff_ = 1;
    TorusWeight mono_;
    std::map<Binomial, int> factors_;
};

}  // namespace qb
