#include "qb/symkit/transforms.hpp"

#include <stdexcept>

namespace qb {

FactoredRational lambda_minus(const KClass& c) {
    if (!c.is_honest()) throw std::invalid_argument("lambda_minus of a class with negative multiplicity: " + c.to_string());
    FactoredRational r;
    for (const auto& [w, m] : c.terms()) r *= FactoredRational::binomial(TorusWeight{}, w, m);
    return r;
}

FactoredRational lambda_hat(const OrientedClass& c) {
    FactoredRational r;
    for (const auto& [ow, m] : c.terms()) r *= FactoredRational::binomial(ow.source, ow.target, m);
    return r;
}

FactoredRational ahat(const KClass& c) {
    FactoredRational r;
    for (const auto& [w, m] : c.terms()) {
        TorusWeight half = w.sqrt();
        r *= FactoredRational::binomial(half, half.inverse(), m);
    }
    return r;
}

}  // namespace qb
