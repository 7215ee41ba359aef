#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qb/numeric/mp.hpp"
#include "qb/quiver/quiver.hpp"
#include "qb/symkit/factored.hpp"
#include "qb/symkit/kclass.hpp"

namespace qb {

struct TangentClass {
    QuiverModel quiver;
    KClass tx;
    OrientedClass half;  // polarization T^{1/2}
    /// T^{1/2} + hbar^-1 (T^{1/2})^vee == TX
    bool polarization_consistent() const;
};

TangentClass tangent_class(const QuiverModel& q);

struct BetheSystem {
    QuiverModel quiver;
    KClass half;                  // character of T^{1/2}
    std::vector<VarId> roots;     // flattened x_{i,k}
    std::vector<int> vertex_of;   // vertex of each root
    std::vector<FactoredRational> lhs;  // ahat(x_{i,k} d/dx_{i,k} TX)
    std::vector<int> shift;       // per vertex: exponent of x_{i,k} in det T^{1/2}

    std::size_t size() const { return roots.size(); }
};

BetheSystem bethe_equations(const TangentClass& tc);

/// Numeric torus parameters, stored through square roots so half powers are
/// unambiguous.
struct NumericParams {
    std::map<VarId, Complex> sqrt_value;

    /// Random generic complex values (|value| in [1/2, 2], random phase).
    static NumericParams generic(const QuiverModel& q, std::uint64_t seed);
    void set(const std::string& name, const Complex& value);  // principal square root
    Complex value(VarId v) const;
    std::string to_string(int digits = 12) const;
};

/// Compiled numeric form of one equation B(x) = N(x) / D(x) in log coordinates u = ln x.
class CompiledEquation {
public:
    CompiledEquation(const FactoredRational& b, const std::vector<VarId>& roots, const NumericParams& p);

    struct Value {
        Complex n, d;
        std::vector<Complex> grad_n, grad_d;  // d/du_j
    };
    Value evaluate(const std::vector<Complex>& u) const;
    Complex ratio(const std::vector<Complex>& u) const;  // N / D

private:
    struct Mono {
        Complex coeff;
        std::vector<int> twice;  // doubled exponents over roots
    };
    struct Factor {
        Mono a, b;
        int power;
    };
    Mono prefactor_;
    std::vector<Factor> num_, den_;
    std::size_t n_;

    static Mono compile(const TorusWeight& w, const std::vector<VarId>& roots, const NumericParams& p);
    Complex eval(const Mono& m, const std::vector<Complex>& u) const;
    void product(const std::vector<Factor>& fs, const std::vector<Complex>& u, Complex& val,
                 std::vector<Complex>& grad) const;
};

/// max_k |B_k(x) / z_{vertex(k)} - 1| with x = exp(u).
Real bethe_residual(const BetheSystem& sys, const NumericParams& p, const std::vector<Complex>& u,
                    const std::vector<Complex>& z);

/// Initial roots at a fixed component: the Chern-root characters evaluated at p, in log coordinates.
std::vector<Complex> seed_logs(const BetheSystem& sys, const std::map<VarId, TorusWeight>& root_values,
                               const NumericParams& p);

Complex evaluate_weight_numeric(const TorusWeight& w, const NumericParams& p, const std::vector<VarId>& roots,
                                const std::vector<Complex>& u);

}  // namespace qb
