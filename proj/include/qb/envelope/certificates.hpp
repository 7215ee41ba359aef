#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qb/envelope/weight_function.hpp"
#include "qb/fixedpoints/restrict.hpp"
#include "qb/symkit/polytope.hpp"

namespace qb {

struct PolynomialCertificate {
    std::string component;
    bool passed = false;
    RationalFunction s;   // Delta_hbar * f_F
    std::string witness;  // surviving denominator factor on failure
};

/// Symmetrizes Delta_hbar * kernel and checks that every denominator cancels.
PolynomialCertificate check_polynomial(const WeightFunction& wf);

struct WeightBoundCertificate {
    std::string component;
    bool passed = false;
    mpq_class epsilon;
    std::vector<int> det_power;  // s_F is tested after multiplication by prod_i det(V_i)^k_i
    RationalVector witness;
    std::string detail;
};

/// The zonotope of (T^{1/2} of M(v, w+v))^vee at the point V' = V, in the
/// coordinates of the Chern roots, translated by epsilon * (1, ..., 1).
Zonotope weight_zonotope(const QuiverModel& q, const mpq_class& epsilon);

/// Checks supp(s * prod_i det(V_i)^k_i) inside the zonotope. With `det_power`
/// unset the k of smallest L1 norm with |k_i| <= 2|v|+2 that works is reported.
WeightBoundCertificate check_weight_bound(const WeightFunction& wf, const LaurentPoly& s, const mpq_class& epsilon,
                                          std::optional<std::vector<int>> det_power = std::nullopt);

/// F' <= F in the declared partial order.
using FixedOrder = std::function<bool(const FixedComponent& lower, const FixedComponent& upper)>;
/// Dominance of the (single) partition; for Hilb.
bool dominance_leq(const FixedComponent& lower, const FixedComponent& upper);
/// Componentwise order on the sorted occupied-column sets; for A_1.
bool subset_leq(const FixedComponent& lower, const FixedComponent& upper);

struct RestrictionMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<RestrictedValue>> entries;  // entries[row F'][col F]
    bool triangular = true;
    bool nonzero_diagonal = true;
    bool invertible = true;
    std::string witness;
};

/// entries[F'][F] = (s_F / Delta_hbar)|_{F'} at the point p.
RestrictionMatrix restriction_matrix(const std::vector<WeightFunction>& wfs, const std::vector<RationalFunction>& s,
                                     const FixedOrder& order, const ParameterPoint& p);

/// Ratio of two rational functions as c * monomial, if it is one.
std::optional<FactoredRational> monomial_ratio(const RationalFunction& a, const RationalFunction& b);

/// restrict(f_F, F) against lambda_hat(repelling + hbar * attracting)|_F; both
/// sides are values at p, the second computed directly from the pieces.
std::optional<mpq_class> diagonal_ratio(const WeightFunction& wf, const RationalFunction& s,
                                        const ParameterPoint& p);

}  // namespace qb
