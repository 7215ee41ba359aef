#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

#include "qb/fixedpoints/fixed.hpp"
#include "qb/symkit/factored.hpp"
#include "qb/symkit/laurent.hpp"

namespace qb {

/// Exact rational values for the torus parameters. Each parameter p is
/// stored through its square root r_p (value r_p^2) so half powers stay rational.
struct ParameterPoint {
    std::map<VarId, mpq_class> root;

    /// Random rationals for every parameter of `q` (Chern roots excluded).
    static ParameterPoint random(const QuiverModel& q, std::uint64_t seed);
    mpq_class monomial(const TorusWeight& w) const;  // throws on Chern roots
    std::string to_string() const;
};

KClass restrict(const KClass& c, const FixedComponent& f);
/// Symbolic restriction; throws PoleError when a denominator factor vanishes.
FactoredRational restrict(const FactoredRational& r, const FixedComponent& f);
LaurentPoly restrict(const LaurentPoly& p, const FixedComponent& f);

enum class RestrictStatus { value, pole };

struct RestrictedValue {
    RestrictStatus status = RestrictStatus::value;
    mpq_class value;
    /// vanishing order of numerator minus denominator along the approach curves
    int order = 0;
    std::string note;
};

/// Restriction of numerator / denominator to F at exact rational parameters.
/// If factors vanish identically on F the value is taken as the limit along
/// two curves x_{i,k} = x|_F * u^{d_{i,k}}; disagreement or a negative order
/// is reported as a pole on the locus.
RestrictedValue restrict_value(const LaurentPoly& numerator, const FactoredRational& denominator,
                               const FixedComponent& f, const ParameterPoint& p);

}  // namespace qb
