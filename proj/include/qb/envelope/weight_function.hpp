#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qb/fixedpoints/fixed.hpp"
#include "qb/numeric/mp.hpp"
#include "qb/quiver/quiver.hpp"
#include "qb/symkit/symmetrize.hpp"
#include "qb/symkit/transforms.hpp"

namespace qb {

/// Integer pairing of a generic 1-parameter subgroup with the parameter
/// characters; hbar pairs to zero.
struct SigmaChoice {
    std::map<VarId, int> pairing;

    /// From the quiver's sigma table (names -> integers).
    static SigmaChoice from_quiver(const QuiverModel& q);
    /// Pairing with a G-trivial weight; the hbar exponent is ignored.
    long pair(const TorusWeight& w) const;
};

class NonGenericSigma : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Drop the hbar exponent: the A-character of a parameter monomial.
TorusWeight a_character(const TorusWeight& w, const QuiverModel& q);

struct WeightFunction {
    QuiverModel quiver;
    FixedComponent fixed;
    FactoredRational kernel;  // unsymmetrized
    CosetFamily cosets;
    OrientedClass repelling, attracting;  // the pieces of T^{1/2} at F
    KClass a_fixed;
    std::string origin;  // "generic" or "closed-form"
};

/// f_F = sum over W_G / W_{G^A} of w . lambda_hat(repelling + hbar * attracting).
WeightFunction build_weight_function(const QuiverModel& q, const FixedComponent& f, const SigmaChoice& sigma,
                                     const OrientedClass& pol);
WeightFunction build_weight_function(const QuiverModel& q, const FixedComponent& f);

/// The closed-form Hilbert-scheme kernel Pi_1 Pi_2 / Pi_3.
WeightFunction hilbert_weight_function(const QuiverModel& q, const FixedComponent& f);

/// f_F at a numeric point: the kernel summed over coset representatives.
/// sqrt_of returns the square root of each variable's value.
Complex evaluate_weight_function(const WeightFunction& wf, const std::function<Complex(VarId)>& sqrt_of);

/// Blocks of equal A-character per vertex, in slot order.
CosetFamily coset_family(const QuiverModel& q, const FixedComponent& f);

}  // namespace qb
