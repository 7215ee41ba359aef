#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qb/symkit/factored.hpp"
#include "qb/symkit/laurent.hpp"

namespace qb {

/// Groups of variables permuted by the Weyl group, each split into blocks
/// permuted trivially (the Weyl group of the centralizer).
struct CosetFamily {
    std::vector<std::vector<VarId>> groups;
    std::vector<std::vector<int>> block_sizes;  // per group, sums to group size

    /// One block per variable in every group (the full symmetric group).
    static CosetFamily full(std::vector<std::vector<VarId>> groups);

    std::uint64_t count() const;
    /// Variable substitutions (from, to), one list per coset; the first is the identity.
    std::vector<std::vector<std::pair<VarId, VarId>>> enumerate() const;
    bool contains(VarId v) const;
};

/// numerator / prod(denominator factors ^ multiplicity)
struct RationalFunction {
    LaurentPoly numerator;
    std::map<Binomial, int> denominator;

    bool is_polynomial() const { return denominator.empty(); }
    FactoredRational denominator_product() const;
    RationalFunction permute(const std::vector<std::pair<VarId, VarId>>& swaps) const;
    bool equals(const RationalFunction& o) const;
};

/// Sum of w.f over coset representatives, brought to a common denominator and
/// reduced by exact division. Factors whose binomial involves no variable of
/// the family are kept as given.
RationalFunction symmetrize(const FactoredRational& f, const CosetFamily& cosets);

/// Sum of FactoredRationals over a common denominator with cancellation.
RationalFunction sum_over_common_denominator(const std::vector<FactoredRational>& terms);

/// Invariance under every transposition inside each group.
bool is_symmetric(const RationalFunction& r, const CosetFamily& cosets);

}  // namespace qb
