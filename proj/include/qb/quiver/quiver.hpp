#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qb/symkit/factored.hpp"
#include "qb/symkit/kclass.hpp"

namespace qb {

struct QuiverEdge {
    int src = 0, dst = 0;
    std::string param;  // multiplicity parameter m_e; empty means 1
    friend bool operator==(const QuiverEdge&, const QuiverEdge&) = default;
};

class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Framed quiver with dimension vectors and torus parameters. Framing
/// edges are oriented as Hom(W_i, V_i); stability is the positive chamber.
struct QuiverModel {
    std::string name;
    int vertices = 0;
    std::vector<QuiverEdge> edges;
    std::vector<int> v, w;
    std::string hbar = "h";
    /// framing[i][l]: the equivariant weight a_{i,l} as a monomial string
    std::vector<std::vector<std::string>> framing;
    /// optional 1-parameter subgroup pairing on parameters (see envelope)
    std::map<std::string, int> sigma;

    /// Throws SpecError naming the offending field.
    void validate() const;

    TorusWeight hbar_weight() const;
    TorusWeight edge_weight(std::size_t e) const;
    TorusWeight framing_weight(int i, int l) const;
    static TorusWeight root(int i, int k) { return TorusWeight::chern_root(i, k); }
    /// Chern-root ids grouped by vertex.
    std::vector<std::vector<VarId>> root_groups() const;

    int total_v() const;
    bool is_cyclic() const;  // vertices 0..l-1 with edges exactly i -> i+1 mod l
    bool is_a1() const;      // one vertex, no edges

    friend bool operator==(const QuiverModel&, const QuiverModel&) = default;

    // stock models
    static QuiverModel hilbert(int n);
    static QuiverModel a1(int v, int w);
    static QuiverModel cyclic(int l, std::vector<int> v, std::vector<int> w);
};

int cartan_form(const QuiverModel& q, const std::vector<int>& u, const std::vector<int>& u2);
int half_dim(const QuiverModel& q, const std::vector<int>& v, const std::vector<int>& w);

/// Weights of T^*Rep(v, w) with their oriented presentation.
OrientedClass rep_weights(const QuiverModel& q);
/// The polarization sum_edges Hom(V_i, V_j) (x) m_e + sum_i Hom(W_i, V_i) - sum_i End(V_i).
OrientedClass polarization(const QuiverModel& q);
/// TX = T^*Rep - (1 + hbar^-1) sum_i End(V_i).
KClass tangent_character(const QuiverModel& q);
/// End(V_i) characters summed over vertices.
KClass adjoint_character(const QuiverModel& q);

FactoredRational delta_hbar(const QuiverModel& q);
FactoredRational pi_factor(const QuiverModel& q);
FactoredRational pi_prime(const QuiverModel& q);
/// Pi' / Pi.
FactoredRational baxter_eigenvalue(const QuiverModel& q);

}  // namespace qb
