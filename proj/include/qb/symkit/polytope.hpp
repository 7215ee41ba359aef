#pragma once

#include <gmpxx.h>

#include <optional>
#include <set>
#include <vector>

#include "qb/symkit/laurent.hpp"

namespace qb {

using RationalVector = std::vector<mpq_class>;

/// Exponent vectors of p restricted to `vars` (other variables projected away).
std::set<RationalVector> support(const LaurentPoly& p, const std::vector<VarId>& vars);

/// center + sum_j [0, 1] * generators[j]
struct Zonotope {
    RationalVector center;
    std::vector<RationalVector> generators;

    std::size_t dimension() const { return center.size(); }
    /// Exact feasibility of sum_j lambda_j g_j = p - center with 0 <= lambda <= 1.
    /// Returns the witness lambda when feasible.
    std::optional<RationalVector> contains(const RationalVector& p) const;
    /// Strict containment: p is feasible with every nonzero-constraint slack
    /// positive, decided by checking p in the interior of the relevant face
    /// structure (relative interior test by scaling about the centroid).
    bool contains_strictly(const RationalVector& p) const;
};

/// Exact two-phase simplex feasibility for { x >= 0 : A x = b }. Returns a
/// feasible point or nullopt.
std::optional<RationalVector> feasible_point(const std::vector<RationalVector>& A, const RationalVector& b);

}  // namespace qb
