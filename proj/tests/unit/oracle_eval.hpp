#pragma once
// Test-side evaluators. They deliberately avoid the library's evaluate()
// helpers: every variable gets a random rational square root r and value r^2,
// and monomials are evaluated by a plain loop over exponents.

#include <gmpxx.h>

#include <map>
#include <random>

#include "qb/symkit/factored.hpp"
#include "qb/symkit/laurent.hpp"

namespace qbtest {

struct Point {
    std::map<qb::VarId, mpq_class> root;  // square root of each variable's value

    static Point random(std::mt19937_64& rng) {
        Point p;
        std::uniform_int_distribution<int> num(1, 97), den(1, 89), sgn(0, 1);
        for (qb::VarId v = 0; v < qb::Variables::count(); ++v) {
            mpq_class r(num(rng), den(rng));
            r.canonicalize();
            if (r == 1) r = mpq_class(101, 7);
            p.root[v] = r;
        }
        return p;
    }

    mpq_class monomial(const qb::TorusWeight& w) const {
        mpq_class acc = 1;
        for (qb::VarId v = 0; v < qb::kMaxVars; ++v) {
            int e = w.twice(v);
            if (e == 0) continue;
            mpq_class base = root.at(v);
            if (e < 0) {
                base = 1 / base;
                e = -e;
            }
            for (int i = 0; i < e; ++i) acc *= base;
        }
        return acc;
    }

    mpq_class poly(const qb::LaurentPoly& p) const {
        mpq_class acc = 0;
        for (const auto& [m, c] : p.terms()) acc += c * monomial(m);
        return acc;
    }

    // returns false on a zero denominator
    bool factored(const qb::FactoredRational& f, mpq_class& out) const {
        out = f.coefficient() * monomial(f.monomial());
        for (const auto& [b, m] : f.factors()) {
            mpq_class x = monomial(b.a) - monomial(b.b);
            if (x == 0) {
                if (m < 0) return false;
                out = 0;
                return true;
            }
            for (int i = 0; i < (m < 0 ? -m : m); ++i) out = m < 0 ? mpq_class(out / x) : mpq_class(out * x);
        }
        return true;
    }
};

}  // namespace qbtest
