#include <random>

#include "doctest.h"
#include "oracle_eval.hpp"
#include "qb/symkit/polytope.hpp"
#include "qb/symkit/symmetrize.hpp"
#include "qb/symkit/transforms.hpp"

using namespace qb;
using qbtest::Point;

namespace {

TorusWeight W(const char* s) { return TorusWeight::parse(s); }

FactoredRational B(const char* a, const char* b, int k = 1) { return FactoredRational::binomial(W(a), W(b), k); }

// f == g as functions, decided at random rational points
bool numerically_equal(const FactoredRational& f, const FactoredRational& g, std::mt19937_64& rng) {
    for (int trial = 0; trial < 3; ++trial) {
        Point p = Point::random(rng);
        mpq_class x, y;
        if (!p.factored(f, x) || !p.factored(g, y)) continue;
        if (x != y) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("torus weights: parse, print, half powers") {
    TorusWeight w = W("h^(1/2)*x0_1*a0_2^-1");
    CHECK(w.to_string() == "a0_2^-1*h^(1/2)*x0_1");
    CHECK(TorusWeight::parse(w.to_string()) == w);
    CHECK(W("1").is_identity());
    CHECK(W("x0_1").chern_part() == W("x0_1"));
    CHECK(W("x0_1*t1").is_g_trivial() == false);
    CHECK(W("t1^2*h").is_g_trivial());
    CHECK(W("t1^2*h^2").sqrt() == W("t1*h"));
    CHECK(W("h").sqrt() == W("h^(1/2)"));
    CHECK_THROWS(W("h^(1/2)").sqrt());
    CHECK(W("x0_1^3*t1^-2").positive_part() / W("x0_1^3*t1^-2").negative_part() == W("x0_1^3*t1^-2"));
    TorusWeight img = W("t1^-1");
    TorusWeight sub = W("x0_1^2*h").substitute([&](VarId v) -> const TorusWeight* {
        return v == *Variables::find("x0_1") ? &img : nullptr;
    });
    CHECK(sub == W("t1^-2*h"));
}

TEST_CASE("laurent polynomials: products and exact binomial division") {
    std::mt19937_64 rng(7);
    LaurentPoly p = LaurentPoly(W("x0_1^2"), 3) + LaurentPoly(W("x0_2*t1^-1"), mpq_class(-1, 2)) + LaurentPoly(mpq_class(5));
    LaurentPoly q = p.times_binomial(W("h*x0_1"), W("x0_2"));
    LaurentPoly back;
    REQUIRE(q.divide_binomial(W("h*x0_1"), W("x0_2"), back));
    CHECK(back == p);
    LaurentPoly r;
    CHECK_FALSE((q + LaurentPoly(mpq_class(1))).divide_binomial(W("h*x0_1"), W("x0_2"), r));
    // x^2 - 1 = (x - 1)(x + 1), through the doubled lattice: x - x^-1 = x^-1 (x - 1)(x + 1)
    LaurentPoly d = LaurentPoly::binomial(W("x0_1"), W("x0_1^-1"));
    REQUIRE(d.divide_binomial(W("x0_1^(1/2)"), W("x0_1^(-1/2)"), r));
    Point pt = Point::random(rng);
    mpq_class lhs = pt.poly(d), rhs = pt.poly(r) * (pt.monomial(W("x0_1^(1/2)")) - pt.monomial(W("x0_1^(-1/2)")));
    CHECK(lhs == rhs);
    CHECK((p * p) == p.pow(2));
}

TEST_CASE("lambda_minus") {
    CHECK(lambda_minus(KClass(W("x0_1*x0_2^-1"))).equals(B("1", "x0_1*x0_2^-1")));
    CHECK(lambda_minus(KClass{}).equals(FactoredRational(mpq_class(1))));
    CHECK(lambda_minus(KClass(W("h*x0_1*a0_1^-1"), 2)).equals(B("1", "h*x0_1*a0_1^-1", 2)));
    CHECK_THROWS(lambda_minus(KClass(W("x0_1"), -1)));
}

TEST_CASE("lambda_hat and its relation to lambda_minus") {
    OrientedClass c;
    c.add({W("x0_2"), W("t1*x0_1")});
    CHECK(lambda_hat(c).equals(B("x0_2", "t1*x0_1")));
    CHECK(lambda_hat(OrientedClass{}).equals(FactoredRational(mpq_class(1))));
    OrientedClass e;
    e.add({W("x0_1"), W("m0*x1_1")});
    CHECK(lambda_hat(e).equals(B("x0_1", "m0*x1_1")));

    // lambda_hat(c) = +-monomial * lambda_minus of the dual character
    std::mt19937_64 rng(11);
    const char* pool[] = {"x0_1", "x0_2", "h*x0_1", "t1*x0_2", "a0_1", "m0*x0_2", "1"};
    std::uniform_int_distribution<int> pick(0, 6);
    for (int trial = 0; trial < 20; ++trial) {
        OrientedClass oc;
        for (int k = 0; k < 4; ++k) {
            TorusWeight s = W(pool[pick(rng)]), t = W(pool[pick(rng)]);
            if (s == t) continue;
            oc.add({s, t});
        }
        auto ratio = lambda_hat(oc).monomial_ratio(lambda_minus(oc.character().dual()));
        CHECK(ratio.has_value());
    }
}

TEST_CASE("ahat") {
    TorusWeight x = W("x0_1");
    CHECK(ahat(KClass(x)).equals(B("x0_1^(1/2)", "x0_1^(-1/2)")));
    CHECK(ahat(KClass(x) - KClass(x)).equals(FactoredRational(mpq_class(1))));
    KClass c = KClass(x) - KClass(W("h^-1*x0_1^-1"));
    FactoredRational expected = FactoredRational(W("h^(1/2)")) * B("x0_1", "1") / B("1", "h*x0_1");
    CHECK(ahat(c).equals(expected));

    std::mt19937_64 rng(3);
    const char* pool[] = {"x0_1", "x0_2^-1", "h*x0_1", "t1", "h^-1*x0_2", "x0_1*x0_2^-1"};
    std::uniform_int_distribution<int> pick(0, 5), mult(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        KClass c1, c2;
        for (int k = 0; k < 3; ++k) {
            c1.add(W(pool[pick(rng)]), mult(rng));
            c2.add(W(pool[pick(rng)]), mult(rng));
        }
        CHECK(ahat(c1 + c2).equals(ahat(c1) * ahat(c2)));
        CHECK(ahat(-c1).equals(ahat(c1).inverse()));
    }
}

TEST_CASE("factored equality agrees with expansion on random instances") {
    std::mt19937_64 rng(2024);
    const char* pool[] = {"x0_1", "x0_2", "x0_3", "h", "t1", "a0_1", "x0_1*h", "x0_2*t1^-1", "1", "x0_3^2"};
    std::uniform_int_distribution<int> pick(0, 9), mult(-2, 2), coin(0, 1);
    int agree = 0;
    for (int trial = 0; trial < 100; ++trial) {
        FactoredRational f;
        std::vector<std::tuple<TorusWeight, TorusWeight, int>> raw;
        for (int k = 0; k < 4; ++k) {
            TorusWeight a = W(pool[pick(rng)]), b = W(pool[pick(rng)]);
            int m = mult(rng);
            if (a == b || m == 0) continue;
            raw.emplace_back(a, b, m);
            f *= FactoredRational::binomial(a, b, m);
        }
        // g: same function rebuilt with flipped binomials, or a perturbed one
        FactoredRational g;
        bool same = coin(rng);
        for (auto& [a, b, m] : raw) {
            g *= FactoredRational::binomial(b, a, m);
            if (m % 2 != 0) g *= FactoredRational(mpq_class(-1));
        }
        if (!same) g *= B("x0_1", "h");
        bool exact = f.equals(g);
        bool numeric = numerically_equal(f, g, rng);
        agree += (exact == numeric);
        CHECK(exact == same);
    }
    CHECK(agree == 100);
}

TEST_CASE("coset families and symmetrization") {
    VarId x1 = Variables::chern_root(0, 0), x2 = Variables::chern_root(0, 1), x3 = Variables::chern_root(0, 2);
    CosetFamily fam = CosetFamily::full({{x1, x2}});
    RationalFunction s = symmetrize(FactoredRational(W("x0_1")), fam);
    CHECK(s.is_polynomial());
    CHECK(s.numerator == LaurentPoly(W("x0_1")) + LaurentPoly(W("x0_2")));

    CosetFamily three{{{x1, x2, x3}}, {{2, 1}}};
    CHECK(three.count() == 3);
    CHECK(three.enumerate().size() == 3);
    RationalFunction k = symmetrize(FactoredRational(mpq_class(1)), three);
    CHECK(k.numerator == LaurentPoly(mpq_class(3)));

    CosetFamily six = CosetFamily::full({{x1, x2, x3}});
    CHECK(six.count() == 6);

    // Pi_2-type kernel for lambda = (2): x1 content 0, x2 content 1
    FactoredRational kern = B("t1*h^-1*t1^-1", "x0_2") * B("x0_1", "t1*x0_1") * B("x0_2", "t1*x0_1") *
                            B("x0_2", "t1*x0_2") / (B("x0_2", "x0_1") * B("t1*h^-1*t1^-1*x0_1", "x0_2"));
    RationalFunction sym = symmetrize(kern, fam);
    CHECK(is_symmetric(sym, fam));
    CHECK_THROWS(symmetrize(FactoredRational(W("x1_1")), fam));
}

TEST_CASE("newton polytope support and zonotope membership") {
    LaurentPoly p = LaurentPoly(mpq_class(1)) - LaurentPoly(W("h*x0_1*a0_1^-1"));
    VarId x1 = Variables::chern_root(0, 0), x2 = Variables::chern_root(0, 1);
    auto supp = support(p, {x1});
    CHECK(supp == std::set<RationalVector>{{mpq_class(0)}, {mpq_class(1)}});
    CHECK(support(LaurentPoly{}, {x1}).empty());

    LaurentPoly sq = LaurentPoly::binomial(W("x0_1"), W("x0_2")) * LaurentPoly::binomial(W("x0_2"), W("x0_1"));
    auto s2 = support(sq, {x1, x2});
    for (const auto& v : s2) CHECK(s2.count({v[1], v[0]}) == 1);

    Zonotope z{{0, 0}, {{1, 0}, {0, 1}, {1, 1}}};
    CHECK(z.contains({mpq_class(2), mpq_class(1)}).has_value());
    CHECK(z.contains({mpq_class(1, 2), mpq_class(3, 2)}).has_value());
    CHECK_FALSE(z.contains({mpq_class(2), mpq_class(0)}).has_value());
    CHECK_FALSE(z.contains({mpq_class(-1, 10), mpq_class(0)}).has_value());
    CHECK(z.contains_strictly({mpq_class(1), mpq_class(1)}));
    CHECK_FALSE(z.contains_strictly({mpq_class(0), mpq_class(0)}));
}
