#pragma once

#include "qb/symkit/factored.hpp"
#include "qb/symkit/kclass.hpp"

namespace qb {

/// prod over weights of (1 - w)^mult; the class must be honest.
FactoredRational lambda_minus(const KClass& c);

/// prod over oriented weights of (source - target)^mult.
FactoredRational lambda_hat(const OrientedClass& c);

/// prod over weights of (w^{1/2} - w^{-1/2})^mult.
FactoredRational ahat(const KClass& c);

}  // namespace qb
