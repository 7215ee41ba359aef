#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "qb/symkit/variables.hpp"

namespace qb {

/// A Laurent monomial in torus parameters and Chern roots.
///
/// Exponents live on the doubled lattice: every variable carries a formal
/// square root, so `twice(v)` is the exponent of v multiplied by two. The
/// identity weight has all exponents zero.
class TorusWeight {
public:
    TorusWeight() = default;

    static TorusWeight var(VarId id, int exponent = 1);
    static TorusWeight half_var(VarId id, int half_exponent = 1);
    static TorusWeight parameter(std::string_view name, int exponent = 1);
    static TorusWeight chern_root(int vertex, int slot, int exponent = 1);

    int twice(VarId id) const { return e2_[id]; }
    void set_twice(VarId id, int value);

    bool is_identity() const;
    /// True iff no Chern-root variable appears.
    bool is_g_trivial() const;
    /// True iff every exponent is an integer (no half powers).
    bool is_integral() const;
    bool is_nonnegative() const;

    TorusWeight operator*(const TorusWeight& o) const;
    TorusWeight operator/(const TorusWeight& o) const;
    TorusWeight& operator*=(const TorusWeight& o);
    TorusWeight& operator/=(const TorusWeight& o);
    TorusWeight inverse() const;
    TorusWeight pow(int k) const;
    /// Formal square root; requires every doubled exponent to be even.
    TorusWeight sqrt() const;

    /// Restriction to Chern-root (resp. parameter) variables.
    TorusWeight chern_part() const;
    TorusWeight parameter_part() const;
    TorusWeight positive_part() const;
    /// Inverse of the negative part, so that w = positive_part() / negative_part().
    TorusWeight negative_part() const;

    static TorusWeight gcd(const TorusWeight& a, const TorusWeight& b);  // componentwise min
    static TorusWeight lcm(const TorusWeight& a, const TorusWeight& b);  // componentwise max

    /// Apply a substitution v -> image(v) to every variable; variables not
    /// mapped stay as they are. Images of half-exponent variables must admit
    /// square roots on the doubled lattice.
    TorusWeight substitute(const std::function<const TorusWeight*(VarId)>& image) const;

    std::string to_string() const;
    static TorusWeight parse(std::string_view text);

    friend bool operator==(const TorusWeight&, const TorusWeight&) = default;
    /// Lexicographic order on (variable id, exponent); larger exponent on the
    /// first differing variable compares greater.
    friend std::strong_ordering operator<=>(const TorusWeight& a, const TorusWeight& b) {
        return a.e2_ <=> b.e2_;
    }

    std::size_t hash() const;
    const std::array<std::int16_t, kMaxVars>& raw() const { return e2_; }

private:
    std::array<std::int16_t, kMaxVars> e2_{};
};

struct TorusWeightHash {
    std::size_t operator()(const TorusWeight& w) const { return w.hash(); }
};

/// Evaluate a weight numerically given, for each variable, a chosen square
/// root of its value.
template <class T, class SqrtOf>
T evaluate_weight(const TorusWeight& w, SqrtOf&& sqrt_of, const T& one) {
    T result = one;
    const auto& raw = w.raw();
    for (std::size_t i = 0; i < raw.size(); ++i) {
        int e = raw[i];
        if (e == 0) continue;
        T base = sqrt_of(static_cast<VarId>(i));
        if (e < 0) {
            base = one / base;
            e = -e;
        }
        T acc = one;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        result = result * acc;
    }
    return result;
}

}  // namespace qb

template <>
struct std::hash<qb::TorusWeight> {
    std::size_t operator()(const qb::TorusWeight& w) const { return w.hash(); }
};
