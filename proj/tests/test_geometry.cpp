#include <doctest.h>

#include "conifold/geometry.hpp"
#include "conifold/reduction.hpp"
#include "conifold/weights.hpp"

#include <vector>

using namespace conifold;

TEST_CASE("fixed configurations enumerate in lexicographically decreasing order") {
    const LocalP1Config c1(1, 0);
    const auto k0 = enumerate_fixed_points(c1, 0);
    REQUIRE(k0.size() == 1);
    CHECK(k0[0].total_length() == 0);

    const auto k1 = enumerate_fixed_points(c1, 1);
    REQUIRE(k1.size() == 2);
    CHECK(k1[0].d_alpha == std::vector<int>{1});
    CHECK(k1[0].d_beta == std::vector<int>{0});
    CHECK(k1[1].d_alpha == std::vector<int>{0});
    CHECK(k1[1].d_beta == std::vector<int>{1});
    CHECK(k1[0].str() == "(1 | 0)");

    const LocalP1Config c2(2, 0);
    const auto r2k2 = enumerate_fixed_points(c2, 2);
    REQUIRE(r2k2.size() == 10);
    CHECK(r2k2.front().d_alpha == std::vector<int>{2, 0});
    CHECK(r2k2.front().d_beta == std::vector<int>{0, 0});
    CHECK(r2k2.back().d_alpha == std::vector<int>{0, 0});
    CHECK(r2k2.back().d_beta == std::vector<int>{0, 2});

    // the count is the number of weak compositions of k into 2r parts
    for (int r = 1; r <= 3; ++r) {
        const LocalP1Config config(r, 0);
        for (int k = 0; k <= 6; ++k) {
            const BigInt expected = binomial(BigInt(k + 2 * r - 1), 2 * r - 1);
            CHECK(BigInt(enumerate_fixed_points(config, k).size()) == expected);
        }
    }

    // lengths split by component and by patch
    const FixedPoint fp(c2, {2, 0}, {1, 3});
    CHECK(fp.total_length() == 6);
    CHECK(fp.lengths(PatchId::alpha) == std::vector<int>{2, 0});
    CHECK(fp.lengths(PatchId::beta) == std::vector<int>{1, 3});
    CHECK(fp.component_lengths() == std::vector<int>{3, 3});

    CHECK_THROWS_AS(FixedPoint(c2, {1}, {0, 0}), InvalidArgument);
    CHECK_THROWS_AS(FixedPoint(c2, {1, -1}, {0, 0}), InvalidArgument);
    CHECK_THROWS_AS(LocalP1Config(0, 0), InvalidArgument);
    CHECK_THROWS_AS(LocalP1Config(1, -1), InvalidArgument);
}

TEST_CASE("patch transition is an involutive ring map") {
    const VariableContext ctx(2);
    const Monomial t1 = Monomial::t1(ctx);
    const Monomial t2 = Monomial::t2(ctx);
    const Monomial t3 = Monomial::t3(ctx);
    const Monomial w1 = Monomial::w(ctx, 1);

    CHECK(patch_transition(t1) == t1.inverse());
    CHECK(patch_transition(t2) == t1.times(t2));
    CHECK(patch_transition(t3) == t1.times(t3));
    CHECK(patch_transition(w1) == w1);

    const Monomial a = t1.pow(-2).times(t2).times(w1.pow(3));
    const Monomial b = t3.pow(2).times(t2.pow(-1));
    CHECK(patch_transition(patch_transition(a)) == a);
    CHECK(patch_transition(a.times(b)) ==
          patch_transition(a).times(patch_transition(b)));

    CharPoly p(ctx);
    p.accumulate(a, 2);
    p.accumulate(b, -5);
    CHECK(patch_transition(patch_transition(p)) == p);

    // tau(1/(1-t1)) = 1/(1-t1^-1) = -t1/(1-t1)
    const CharRational geo(CharPoly::constant(ctx, 1), {t1});
    const CharRational moved = patch_transition(geo);
    CHECK(moved.equals(CharRational(CharPoly(t1, -1), {t1})));
    CHECK(patch_transition(moved).equals(geo));
}

TEST_CASE("patch sheaf characters collapse onto the overlap") {
    const LocalP1Config config(2, 1);
    const VariableContext ctx = config.context();
    const Monomial t1 = Monomial::t1(ctx);

    for (const FixedPoint& fp : enumerate_fixed_points(config, 2)) {
        for (const PatchId patch : {PatchId::alpha, PatchId::beta}) {
            const CharRational sheaf = sheaf_character(fp, patch);
            // multiplying by (1 - t1) leaves the finite section character
            const CharPoly sections = reduce_to_polynomial(sheaf.mul(one_minus(t1)));
            CHECK(static_cast<int>(sections.term_count()) == config.rank);
            // forgetting the torus directions recovers the overlap character
            const CharPoly collapsed = sections.map_monomials([](const Monomial& m) {
                std::vector<std::int64_t> e = m.exponents();
                e[0] = e[1] = e[2] = 0;
                return Monomial(std::move(e));
            });
            CHECK(collapsed == overlap_character(fp));
        }
    }

    // the alpha sections carry t1^{-d_i}
    const FixedPoint fp(config, {1, 0}, {0, 2});
    const CharPoly sections =
        reduce_to_polynomial(sheaf_character(fp, PatchId::alpha).mul(one_minus(t1)));
    CharPoly expected(ctx);
    expected.accumulate(Monomial::w(ctx, 1).times(t1.pow(-1)), 1);
    expected.accumulate(Monomial::w(ctx, 2), 1);
    CHECK(sections == expected);
}
