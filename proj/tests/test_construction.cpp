#include <doctest.h>

#include <set>

#include "pxp/construction.hpp"

using namespace pxp;

namespace {

RotationData rot(const FieldContext& ctx, std::uint32_t n,
                 std::initializer_list<std::int64_t> r,
                 std::initializer_list<std::int64_t> q) {
    std::vector<FieldElement> rv, qv;
    for (auto v : r) rv.push_back(ctx.element(v));
    for (auto v : q) qv.push_back(ctx.element(v));
    return RotationData(ctx, n, std::move(rv), std::move(qv));
}

} // namespace

TEST_CASE("rotation data validation") {
    FieldContext f5(5);
    CHECK_NOTHROW(rot(f5, 2, {1, 1, 2, 0}, {1, 1, 0, 1}));
    // dependent generator vectors are rejected
    CHECK_THROWS_AS(rot(f5, 2, {1, 2, 3, 4}, {2, 4, 6, 8}), InvalidParameter);
    CHECK_THROWS_AS(rot(f5, 2, {0, 0, 0, 0}, {1, 1, 0, 1}), InvalidParameter);
    CHECK_THROWS_AS(rot(f5, 2, {1, 1, 2}, {1, 1, 0, 1}), InvalidParameter);
}

TEST_CASE("k-invariant of the standard example") {
    FieldContext f5(5);
    RotationData std1 = standard_example(f5, f5.one());
    FormPair pair = k_invariant(std1);
    CHECK(pair.q1() == BinaryForm::from_values(f5, {1, 2, 1}));  // (a+b)(a+b)
    CHECK(pair.q2() == BinaryForm::from_values(f5, {0, 2, 0}));  // 2ab
    CHECK(is_free(std1));

    RotationData std0 = standard_example(f5, f5.zero());
    CHECK_FALSE(is_free(std0));
    auto witness = fixed_point_witness(std0);
    REQUIRE(witness.has_value());

    FieldContext f7(7);
    FieldElement w = f7.element(3);
    FormPair pw = k_invariant(standard_example(f7, w));
    CHECK(pw.q1() == BinaryForm(f7, {f7.one(), f7.one() + w, w}));
}

TEST_CASE("k-invariant hypothesis p > n") {
    FieldContext f5(5);
    // n = 5 needs p > 5
    CHECK_THROWS_AS(
        k_invariant(rot(f5, 5, {1, 1, 1, 1, 1, 2, 0, 0, 0, 0},
                        {1, 2, 3, 4, 0, 0, 1, 0, 0, 0})),
        HypothesisViolation);
}

TEST_CASE("all-ones rotation data gives identical components") {
    FieldContext f7(7);
    RotationData r = rot(f7, 2, {1, 1, 1, 1}, {1, 1, 2, 2});
    FormPair pair = k_invariant(r);
    CHECK(pair.q1() == BinaryForm::from_values(f7, {1, 2, 1}));    // (a+b)^2
    CHECK(pair.q2() == BinaryForm::from_values(f7, {1, 4, 4}));    // (a+2b)^2

    // identical rotation factors give binomial powers of a + b
    std::vector<std::pair<FieldElement, FieldElement>> ones(4, {f7.one(), f7.one()});
    CHECK(product_of_linear_forms(f7, ones) ==
          BinaryForm::from_values(f7, {1, 4, 6, 4, 1}));
}

TEST_CASE("standard example lands in the class of (a^2 + w b^2, 2ab)") {
    for (std::uint32_t p : {5u, 7u, 13u}) {
        FieldContext ctx(p);
        for (std::uint32_t wv = 1; wv < p; ++wv) {
            FieldElement w = ctx.element(wv);
            FormPair standard(BinaryForm(ctx, {ctx.one(), ctx.zero(), w}),
                              BinaryForm::from_values(ctx, {0, 2, 0}));
            CHECK(fourth_power_invariant(k_invariant(standard_example(ctx, w))) ==
                  fourth_power_invariant(standard));
        }
    }
}

TEST_CASE("lens products") {
    FieldContext f5(5);
    FormPair p11 = k_invariant(lens_product(f5.one(), f5.one()));
    CHECK(p11 == FormPair(BinaryForm::from_values(f5, {1, 0, 0}),
                          BinaryForm::from_values(f5, {0, 0, 1})));

    FieldContext f7(7);
    FormPair pxy = k_invariant(lens_product(f7.element(3), f7.element(5)));
    CHECK(pxy == FormPair(BinaryForm::from_values(f7, {3, 0, 0}),
                          BinaryForm::from_values(f7, {0, 0, 5})));
    CHECK(is_free(lens_product(f7.element(3), f7.element(5))));

    CHECK_THROWS_AS(lens_product(f5.zero(), f5.one()), NotFree);
    CHECK_THROWS_AS(lens_product(f5.one(), f5.zero()), NotFree);
}

TEST_CASE("k-invariant of lens products is (x a^2, y b^2) for p <= 13") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        FieldContext ctx(p);
        for (std::uint32_t x = 1; x < p; ++x)
            for (std::uint32_t y = 1; y < p; ++y) {
                FormPair pair =
                    k_invariant(lens_product(ctx.element(x), ctx.element(y)));
                CHECK(pair.q1() ==
                      BinaryForm(ctx, {ctx.element(x), ctx.zero(), ctx.zero()}));
                CHECK(pair.q2() ==
                      BinaryForm(ctx, {ctx.zero(), ctx.zero(), ctx.element(y)}));
            }
    }
}

TEST_CASE("lens classification: one class for p = 3 mod 4") {
    for (std::uint32_t p : {7u, 11u}) {
        FieldContext ctx(p);
        std::set<std::size_t> classes;
        for (std::uint32_t x = 1; x < p; ++x)
            for (std::uint32_t y = 1; y < p; ++y)
                classes.insert(lens_product_class(ctx.element(x), ctx.element(y)));
        CHECK(classes.size() == 1);
    }
}

TEST_CASE("lens classification keyed by legendre(2y/x) for p = 1 mod 4") {
    for (std::uint32_t p : {5u, 13u}) {
        FieldContext ctx(p);
        for (std::uint32_t x = 1; x < p; ++x)
            for (std::uint32_t y = 1; y < p; ++y)
                for (std::uint32_t x2 = 1; x2 < p; ++x2)
                    for (std::uint32_t y2 = 1; y2 < p; ++y2) {
                        FieldElement q1 =
                            ctx.element(2) * ctx.element(y) * ctx.element(x).inv();
                        FieldElement q2 =
                            ctx.element(2) * ctx.element(y2) * ctx.element(x2).inv();
                        bool same = lens_product_class(ctx.element(x), ctx.element(y)) ==
                                    lens_product_class(ctx.element(x2), ctx.element(y2));
                        CHECK(same == (legendre(q1) == legendre(q2)));
                    }
    }

    // p = 5 fixture: (1,1) and (1,2) classes differ because legendre(2) = -1
    // while legendre(4) = +1
    FieldContext f5(5);
    CHECK(lens_product_class(f5.one(), f5.one()) !=
          lens_product_class(f5.one(), f5.element(2)));
}

TEST_CASE("lens class is scale-invariant and constant on squares") {
    for (std::uint32_t p : {5u, 7u, 13u}) {
        FieldContext ctx(p);
        std::set<std::size_t> diag;
        for (std::uint32_t r = 1; r < p; ++r)
            diag.insert(lens_product_class(ctx.element(r), ctx.element(r)));
        CHECK(diag.size() == 1);  // squares of lens spaces all agree

        for (std::uint32_t x = 1; x < p; ++x)
            for (std::uint32_t y = 1; y < p; ++y)
                for (std::uint32_t lam = 1; lam < p; ++lam)
                    CHECK(lens_product_class(ctx.element(x), ctx.element(y)) ==
                          lens_product_class(ctx.element(lam) * ctx.element(x),
                                             ctx.element(lam) * ctx.element(y)));
    }
}

TEST_CASE("freeness equals the realizability of the k-invariant") {
    // exhaustive over the n = 2 grid at p = 5, valid rotation data only
    FieldContext f5(5);
    std::uint64_t checked = 0;
    for (std::uint32_t mask = 0; mask < 390625; ++mask) {  // 5^8
        std::uint32_t rest = mask;
        std::vector<FieldElement> rv, qv;
        for (int i = 0; i < 4; ++i) {
            rv.push_back(f5.element(rest % 5));
            rest /= 5;
        }
        for (int i = 0; i < 4; ++i) {
            qv.push_back(f5.element(rest % 5));
            rest /= 5;
        }
        std::optional<RotationData> rd;
        try {
            rd.emplace(f5, 2, rv, qv);
        } catch (const InvalidParameter&) {
            continue;  // generators do not span (Z/p)^2
        }
        ++checked;
        FormPair pair = k_invariant(*rd);
        bool nonzero = !pair.q1().is_zero() && !pair.q2().is_zero();
        bool no_common =
            nonzero && !common_rational_root(pair.q1(), pair.q2()).has_value();
        CHECK(is_free(*rd) == (nonzero && no_common));
        // cross-module: for nonzero components this matches is_realizable
        if (nonzero) CHECK(is_free(*rd) == is_realizable(pair));
    }
    CHECK(checked > 10000);
}
