#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qb/symkit/weight.hpp"

namespace qb {

/// Sparse Laurent polynomial with rational coefficients over the doubled
/// exponent lattice. Terms are kept sorted by monomial (ascending) with no
/// zero coefficients.
class LaurentPoly {
public:
    using Term = std::pair<TorusWeight, mpq_class>;

    LaurentPoly() = default;
    explicit LaurentPoly(const mpq_class& c);
    explicit LaurentPoly(const TorusWeight& m, const mpq_class& c = 1);
    /// a - b
    static LaurentPoly binomial(const TorusWeight& a, const TorusWeight& b);
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    /// Coefficient of m (zero if absent).
    mpq_class coefficient(const TorusWeight& m) const;
    /// True iff the polynomial is c * monomial.
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly scaled(const mpq_class& c) const;
    LaurentPoly shifted(const TorusWeight& m) const;
    /// this * (a - b), linear merge.
    LaurentPoly times_binomial(const TorusWeight& a, const TorusWeight& b) const;
    LaurentPoly pow(unsigned k) const;

    /// Exact division by (a - b). Returns false (and leaves quotient
    /// unspecified) when (a - b) does not divide this polynomial.
    bool divide_binomial(const TorusWeight& a, const TorusWeight& b, LaurentPoly& quotient) const;

    /// Componentwise minimum of all exponents (the monomial gcd).
    TorusWeight min_exponents() const;
    TorusWeight max_exponents() const;

    LaurentPoly substitute(const std::function<const TorusWeight*(VarId)>& image) const;

    /// Apply a permutation of variables given as an image table.
    LaurentPoly permute(const std::vector<std::pair<VarId, VarId>>& swaps) const;

    template <class T, class SqrtOf>
    T evaluate(SqrtOf&& sqrt_of, const T& one) const {
        T acc = one - one;
        for (const auto& [m, c] : terms_) acc = acc + T(c) * evaluate_weight<T>(m, sqrt_of, one);
        return acc;
    }

    std::string to_string() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

private:
    void normalize();
    std::vector<Term> terms_;
};

}  // namespace qb
