#pragma once

#include "qb/numeric/mp.hpp"

namespace qb {

/// Principal-branch dilogarithm Li_2(z) = -int_0^z ln(1-t) dt/t at the current
/// Real precision. Throws std::domain_error for real z > 1 (on the cut).
Complex dilog(const Complex& z);

}  // namespace qb
