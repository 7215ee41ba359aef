#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle_eval.hpp"
#include "qb/envelope/certificates.hpp"

using namespace qb;

namespace {

TorusWeight W(const char* s) { return TorusWeight::parse(s); }
FactoredRational B(const TorusWeight& a, const TorusWeight& b) { return FactoredRational::binomial(a, b); }

const FixedComponent& find(const std::vector<FixedComponent>& fs, const std::string& label) {
    for (const auto& f : fs)
        if (f.label() == label) return f;
    throw std::runtime_error("missing component " + label);
}

// Full W_G sum of the kernel over all permutations of one vertex's roots,
// divided by the order of the block stabilizer. Single-vertex quivers only.
mpq_class brute_force_f(const WeightFunction& wf, const qbtest::Point& pt) {
    const auto vars = wf.quiver.root_groups().at(0);
    std::vector<int> perm(vars.size());
    std::iota(perm.begin(), perm.end(), 0);
    mpq_class sum = 0;
    do {
        qbtest::Point moved = pt;
        for (std::size_t k = 0; k < vars.size(); ++k) moved.root[vars[k]] = pt.root.at(vars[perm[k]]);
        mpq_class v;
        REQUIRE(moved.factored(wf.kernel, v));
        sum += v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    long stab = 1;
    for (int b : wf.cosets.block_sizes.at(0))
        for (int i = 2; i <= b; ++i) stab *= i;
    return sum / stab;
}

}  // namespace

TEST_CASE("kernel decomposition examples") {
    // A1, v=1, w=2 at x -> a1 with a1/a2 attracting: one factor from x/a2
    QuiverModel q = QuiverModel::a1(1, 2);
    auto fs = enumerate_fixed(q);
    const auto& f1 = find(fs, "(1)|()");
    SigmaChoice sigma = SigmaChoice::from_quiver(q);
    sigma.pairing[Variables::parameter("a0_1")] = 2;
    sigma.pairing[Variables::parameter("a0_2")] = 1;
    auto wf = build_weight_function(q, f1, sigma, polarization(q));
    CHECK(wf.kernel.numerator_degree() + wf.kernel.denominator_degree() == 1);
    CHECK(wf.attracting.terms().size() == 1);
    CHECK(wf.repelling.terms().empty());
    CHECK(wf.attracting.terms()[0].first.weight() == W("x0_1*a0_2^-1"));
    // Lambda-hat(source - hbar * target) for x/a2 oriented as (a2, x)
    CHECK(wf.kernel.equals(B(W("a0_2"), W("h*x0_1"))));

    // sigma pairing to zero on an A-weight is rejected
    sigma.pairing[Variables::parameter("a0_2")] = 2;
    CHECK_THROWS_AS(build_weight_function(q, f1, sigma, polarization(q)), NonGenericSigma);

    // v = 0: kernel 1, s_F = 1
    QuiverModel empty = QuiverModel::a1(0, 2);
    auto fe = enumerate_fixed(empty);
    REQUIRE(fe.size() == 1);
    auto we = build_weight_function(empty, fe[0]);
    CHECK(we.kernel.equals(FactoredRational(mpq_class(1))));
    auto pe = check_polynomial(we);
    CHECK(pe.passed);
    CHECK(pe.s.numerator == LaurentPoly(mpq_class(1)));
}

TEST_CASE("closed-form Hilbert kernels") {
    // lambda = (2): x1 content 0, x2 content 1
    QuiverModel q2 = QuiverModel::hilbert(2);
    auto f2 = find(enumerate_fixed(q2), "(2)");
    REQUIRE(f2.slots[0][0].box.content() == 0);
    REQUIRE(f2.slots[0][1].box.content() == 1);
    TorusWeight x1 = W("x0_1"), x2 = W("x0_2"), t1 = W("t1"), t1t2 = W("h^-1");
    FactoredRational expect = B(t1t2, x2) * B(x1, t1 * x1) * B(x2, t1 * x1) * B(x2, t1 * x2) / B(x2, x1) /
                              B(t1t2 * x1, x2);
    CHECK(hilbert_weight_function(q2, f2).kernel.equals(expect));

    // lambda = (1,1): Pi_1 is (1 - x) for the content -1 slot only
    auto f11 = find(enumerate_fixed(q2), "(1,1)");
    int neg = -1;
    for (int k = 0; k < 2; ++k)
        if (f11.slots[0][k].box.content() == -1) neg = k;
    REQUIRE(neg >= 0);
    TorusWeight xn = QuiverModel::root(0, neg), x0 = QuiverModel::root(0, 1 - neg);
    // Pi_2: (x0 - t1 x0)(xn - t1 xn)(x0 - t1 xn); Pi_3: (x0 - xn)(t1t2 xn - x0)
    FactoredRational e11 = B(TorusWeight{}, xn) * B(x0, t1 * x0) * B(xn, t1 * xn) * B(x0, t1 * xn) / B(x0, xn) /
                           B(t1t2 * xn, x0);
    CHECK(hilbert_weight_function(q2, f11).kernel.equals(e11));

    // lambda = (1): only the diagonal Pi_2 factor survives
    QuiverModel q1 = QuiverModel::hilbert(1);
    auto f1 = enumerate_fixed(q1)[0];
    CHECK(hilbert_weight_function(q1, f1).kernel.equals(B(W("x0_1"), W("t1*x0_1"))));
    CHECK_THROWS(hilbert_weight_function(QuiverModel::a1(1, 2), enumerate_fixed(QuiverModel::a1(1, 2))[0]));
}

TEST_CASE("generic engine against the closed form") {
    for (int n = 1; n <= 3; ++n) {
        QuiverModel q = QuiverModel::hilbert(n);
        for (const auto& f : enumerate_fixed(q)) {
            auto g = check_polynomial(build_weight_function(q, f));
            auto h = check_polynomial(hilbert_weight_function(q, f));
            REQUIRE(g.passed);
            REQUIRE(h.passed);
            auto r = monomial_ratio(g.s, h.s);
            CHECK_MESSAGE(r.has_value(), f.label());
            if (r) CHECK(r->factors().empty());
        }
    }
    RationalFunction a{LaurentPoly(W("x0_1")) + LaurentPoly(mpq_class(1)), {}};
    RationalFunction b{LaurentPoly(W("x0_1")) + LaurentPoly(mpq_class(2)), {}};
    CHECK_FALSE(monomial_ratio(a, b).has_value());
}

TEST_CASE("polynomiality against a brute-force Weyl sum") {
    std::mt19937_64 rng(17);
    std::vector<QuiverModel> models = {QuiverModel::hilbert(2), QuiverModel::hilbert(3), QuiverModel::a1(1, 3),
                                       QuiverModel::a1(2, 3), QuiverModel::a1(2, 4)};
    for (const auto& q : models)
        for (const auto& f : enumerate_fixed(q)) {
            auto wf = build_weight_function(q, f);
            auto pc = check_polynomial(wf);
            REQUIRE_MESSAGE(pc.passed, q.name << " " << f.label() << " " << pc.witness);
            CHECK(is_symmetric(pc.s, CosetFamily::full(q.root_groups())));
            for (int trial = 0; trial < 2; ++trial) {
                auto pt = qbtest::Point::random(rng);
                mpq_class delta;
                REQUIRE(pt.factored(delta_hbar(q), delta));
                if (delta == 0) continue;
                CHECK(pt.poly(pc.s.numerator) / delta == brute_force_f(wf, pt));
            }
        }
}

TEST_CASE("cyclic quivers are polynomial") {
    for (auto v : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2}})
        for (auto w : std::vector<std::vector<int>>{{1, 0}, {1, 1}}) {
            QuiverModel q = QuiverModel::cyclic(2, v, w);
            for (const auto& f : enumerate_fixed(q)) {
                auto pc = check_polynomial(build_weight_function(q, f));
                CHECK_MESSAGE(pc.passed, q.name << " " << f.label() << " " << pc.witness);
            }
        }
}

TEST_CASE("weight bound") {
    QuiverModel q = QuiverModel::hilbert(2);
    auto f = find(enumerate_fixed(q), "(2)");
    auto wf = build_weight_function(q, f);
    auto pc = check_polynomial(wf);
    auto ok = check_weight_bound(wf, pc.s.numerator, mpq_class(1, 10));
    CHECK(ok.passed);
    CHECK(ok.det_power == std::vector<int>{0});
    CHECK(check_weight_bound(wf, pc.s.numerator, mpq_class(1, 100)).passed);
    // corrupted: multiply by x1^(2n)
    LaurentPoly bad = pc.s.numerator.shifted(W("x0_1^4"));
    auto ko = check_weight_bound(wf, bad, mpq_class(1, 10));
    CHECK_FALSE(ko.passed);
    CHECK_FALSE(ko.witness.empty());

    // kernel 1: the origin, after the det V normalization
    QuiverModel a = QuiverModel::a1(1, 1);
    auto wa = build_weight_function(a, enumerate_fixed(a)[0]);
    CHECK(wa.kernel.equals(FactoredRational(mpq_class(1))));
    CHECK(check_weight_bound(wa, check_polynomial(wa).s.numerator, mpq_class(1, 10)).passed);

    // the zonotope for Hilb 2: two framing directions and the two loop differences
    Zonotope z = weight_zonotope(q, mpq_class(1, 10));
    CHECK(z.generators.size() == 4);
    CHECK(z.center == RationalVector{mpq_class(1, 10), mpq_class(1, 10)});
}

TEST_CASE("restriction matrices") {
    for (int n = 1; n <= 3; ++n) {
        QuiverModel q = QuiverModel::hilbert(n);
        std::vector<WeightFunction> wfs;
        std::vector<RationalFunction> s;
        for (const auto& f : enumerate_fixed(q)) {
            wfs.push_back(build_weight_function(q, f));
            s.push_back(check_polynomial(wfs.back()).s);
        }
        for (std::uint64_t seed : {1, 2, 3}) {
            auto m = restriction_matrix(wfs, s, dominance_leq, ParameterPoint::random(q, seed));
            CHECK_MESSAGE(m.triangular, m.witness);
            CHECK(m.nonzero_diagonal);
            CHECK(m.invertible);
        }
        // the reversed order is violated as soon as there are two components
        auto rev = [](const FixedComponent& a, const FixedComponent& b) { return dominance_leq(b, a); };
        auto m = restriction_matrix(wfs, s, rev, ParameterPoint::random(q, 9));
        CHECK(m.triangular == (n == 1));
        // diagonal: the identity coset alone
        for (std::size_t i = 0; i < wfs.size(); ++i) {
            auto r = diagonal_ratio(wfs[i], s[i], ParameterPoint::random(q, 4));
            REQUIRE(r.has_value());
            CHECK(*r == 1);
        }
    }
    QuiverModel a = QuiverModel::a1(2, 4);
    std::vector<WeightFunction> wfs;
    std::vector<RationalFunction> s;
    for (const auto& f : enumerate_fixed(a)) {
        wfs.push_back(build_weight_function(a, f));
        s.push_back(check_polynomial(wfs.back()).s);
    }
    auto m = restriction_matrix(wfs, s, subset_leq, ParameterPoint::random(a, 1));
    CHECK_MESSAGE(m.triangular, m.witness);
    CHECK(m.nonzero_diagonal);
}

TEST_CASE("orders") {
    auto fs = enumerate_fixed(QuiverModel::hilbert(3));
    CHECK(dominance_leq(find(fs, "(1,1,1)"), find(fs, "(3)")));
    CHECK_FALSE(dominance_leq(find(fs, "(3)"), find(fs, "(2,1)")));
    auto as = enumerate_fixed(QuiverModel::a1(2, 4));
    CHECK(subset_leq(find(as, "(1)|(1)|()|()"), find(as, "()|()|(1)|(1)")));
    CHECK_FALSE(subset_leq(find(as, "()|(1)|(1)|()"), find(as, "(1)|()|()|(1)")));
    CHECK_FALSE(subset_leq(find(as, "(1)|()|()|(1)"), find(as, "()|(1)|(1)|()")));
}
