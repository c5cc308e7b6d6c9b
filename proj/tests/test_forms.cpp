#include <doctest.h>

#include "pxp/forms.hpp"

using namespace pxp;

namespace {

std::uint64_t next_rng(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

BinaryForm random_form(const FieldContext& ctx, std::uint32_t degree,
                       std::uint64_t& rng) {
    std::vector<FieldElement> cs;
    for (std::uint32_t i = 0; i <= degree; ++i)
        cs.push_back(ctx.element(static_cast<std::int64_t>(next_rng(rng) % ctx.prime())));
    return BinaryForm(ctx, std::move(cs));
}

Matrix2 random_invertible(const FieldContext& ctx, std::uint64_t& rng) {
    for (;;) {
        Matrix2 m(ctx.element(static_cast<std::int64_t>(next_rng(rng) % ctx.prime())),
                  ctx.element(static_cast<std::int64_t>(next_rng(rng) % ctx.prime())),
                  ctx.element(static_cast<std::int64_t>(next_rng(rng) % ctx.prime())),
                  ctx.element(static_cast<std::int64_t>(next_rng(rng) % ctx.prime())));
        if (m.is_invertible()) return m;
    }
}

} // namespace

TEST_CASE("evaluation") {
    FieldContext f5(5);
    BinaryForm asq = BinaryForm::from_values(f5, {1, 0, 0});
    CHECK(evaluate(asq, f5.zero(), f5.one()).is_zero());

    BinaryForm f = BinaryForm::from_values(f5, {1, 0, 4});  // a^2 + 4 b^2
    CHECK(evaluate(f, f5.one(), f5.one()).is_zero());

    BinaryForm z = BinaryForm::zero(f5, 2);
    for (const auto& pt : all_projective_points(f5)) CHECK(evaluate(z, pt).is_zero());
}

TEST_CASE("substitution expands correctly") {
    FieldContext f7(7);
    BinaryForm asq = BinaryForm::from_values(f7, {1, 0, 0});
    Matrix2 shear = Matrix2::from_values(f7, 1, 1, 0, 1);  // a -> a + b
    CHECK(substitute(asq, shear) == BinaryForm::from_values(f7, {1, 2, 1}));

    std::uint64_t rng = 5;
    BinaryForm f = random_form(f7, 3, rng);
    CHECK(substitute(f, Matrix2::identity(f7)) == f);

    Matrix2 singular = Matrix2::from_values(f7, 1, 2, 2, 4);
    CHECK_THROWS_AS(substitute(f, singular), SingularMatrix);
}

TEST_CASE("substitution reproduces the explicit diagonal-to-standard step") {
    // (a^2, w b^2) under a -> a/(2w) - b, b -> a + 2wb: the first component
    // becomes a^2/(4w^2) - ab/w + b^2
    for (std::uint32_t p : {5u, 7u, 13u}) {
        FieldContext ctx(p);
        for (std::uint32_t wv = 1; wv < p; ++wv) {
            FieldElement w = ctx.element(wv);
            FieldElement w2 = ctx.element(2) * w;
            Matrix2 m(w2.inv(), -ctx.one(), ctx.one(), w2);
            BinaryForm asq = BinaryForm::from_values(ctx, {1, 0, 0});
            BinaryForm expect(ctx, {(w2 * w2).inv(), -(w.inv()), ctx.one()});
            CHECK(substitute(asq, m) == expect);
            // and the second component w b^2 -> w a^2 + 4w^2 ab + 4w^3 b^2
            BinaryForm wbsq(ctx, {ctx.zero(), ctx.zero(), w});
            BinaryForm expect2(ctx, {w, ctx.element(4) * w * w,
                                     ctx.element(4) * w * w * w});
            CHECK(substitute(wbsq, m) == expect2);
        }
    }
}

TEST_CASE("right-action axiom") {
    std::uint64_t rng = 99;
    for (std::uint32_t p : {5u, 7u, 11u}) {
        FieldContext ctx(p);
        for (int i = 0; i < 50; ++i) {
            BinaryForm f = random_form(ctx, 2 + i % 3, rng);
            Matrix2 m = random_invertible(ctx, rng);
            Matrix2 n = random_invertible(ctx, rng);
            CHECK(substitute(substitute(f, m), n) == substitute(f, m * n));
            CHECK(substitute(f, m).degree() == f.degree());
        }
    }
}

TEST_CASE("evaluation is compatible with substitution") {
    std::uint64_t rng = 123;
    FieldContext ctx(7);
    for (int i = 0; i < 100; ++i) {
        BinaryForm f = random_form(ctx, 2, rng);
        Matrix2 m = random_invertible(ctx, rng);
        FieldElement s = ctx.element(static_cast<std::int64_t>(next_rng(rng) % 7));
        FieldElement t = ctx.element(static_cast<std::int64_t>(next_rng(rng) % 7));
        auto [ms, mt] = m.apply(s, t);
        CHECK(evaluate(substitute(f, m), s, t) == evaluate(f, ms, mt));
    }
}

TEST_CASE("products of linear forms") {
    FieldContext f7(7);
    FieldElement w = f7.element(3);
    BinaryForm f = product_of_linear_forms(
        f7, {{f7.one(), f7.one()}, {f7.one(), w}});
    CHECK(f == BinaryForm(f7, {f7.one(), f7.one() + w, w}));

    BinaryForm g = product_of_linear_forms(
        f7, {{f7.element(2), f7.zero()}, {f7.zero(), f7.one()}});
    CHECK(g == BinaryForm::from_values(f7, {0, 2, 0}));

    BinaryForm h = product_of_linear_forms(f7, {{f7.one(), f7.zero()}});
    CHECK(h == BinaryForm::from_values(f7, {1, 0}));

    CHECK_THROWS_AS(product_of_linear_forms(f7, {}), InvalidParameter);
}

TEST_CASE("product of linear forms evaluates as the product of factors") {
    std::uint64_t rng = 4;
    for (std::uint32_t p : {5u, 7u}) {
        FieldContext ctx(p);
        for (int i = 0; i < 40; ++i) {
            std::vector<std::pair<FieldElement, FieldElement>> factors;
            std::uint32_t n = 1 + next_rng(rng) % 4;
            for (std::uint32_t k = 0; k < n; ++k)
                factors.emplace_back(
                    ctx.element(static_cast<std::int64_t>(next_rng(rng) % p)),
                    ctx.element(static_cast<std::int64_t>(next_rng(rng) % p)));
            BinaryForm f = product_of_linear_forms(ctx, factors);
            for (const auto& pt : all_projective_points(ctx)) {
                FieldElement expect = ctx.one();
                for (const auto& [r, q] : factors)
                    expect = expect * (r * pt.s() + q * pt.t());
                CHECK(evaluate(f, pt) == expect);
            }
        }
    }
}

TEST_CASE("projective points") {
    FieldContext f5(5);
    auto pts = all_projective_points(f5);
    CHECK(pts.size() == 6);
    CHECK(pts[0] == ProjectivePoint(f5.zero(), f5.element(3)));  // normalizes to (0,1)
    CHECK(pts[1] == ProjectivePoint(f5.element(2), f5.zero())); // normalizes to (1,0)
    CHECK_THROWS_AS(ProjectivePoint(f5.zero(), f5.zero()), InvalidParameter);
}

TEST_CASE("rational roots") {
    FieldContext f5(5);
    BinaryForm ab = BinaryForm::from_values(f5, {0, 1, 0});
    auto roots = rational_roots(ab);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == ProjectivePoint(f5.zero(), f5.one()));
    CHECK(roots[1] == ProjectivePoint(f5.one(), f5.zero()));

    // z = 2 is a nonresidue mod 5 and -2 = 3 is one as well: no roots
    BinaryForm anis = BinaryForm::from_values(f5, {1, 0, 2});
    CHECK(rational_roots(anis).empty());

    CHECK(rational_roots(BinaryForm::zero(f5, 2)).size() == 6);
}

TEST_CASE("common rational roots") {
    FieldContext f5(5);
    BinaryForm asq = BinaryForm::from_values(f5, {1, 0, 0});
    BinaryForm ab = BinaryForm::from_values(f5, {0, 1, 0});
    BinaryForm bsq = BinaryForm::from_values(f5, {0, 0, 1});

    auto r = common_rational_root(asq, ab);
    REQUIRE(r.has_value());
    CHECK(*r == ProjectivePoint(f5.zero(), f5.one()));

    CHECK_FALSE(common_rational_root(asq, bsq).has_value());

    auto rz = common_rational_root(BinaryForm::zero(f5, 2), asq);
    REQUIRE(rz.has_value());
    CHECK(*rz == ProjectivePoint(f5.zero(), f5.one()));
}

TEST_CASE("linear dependence") {
    FieldContext f5(5);
    BinaryForm f = BinaryForm::from_values(f5, {1, 2, 0});
    CHECK(linearly_dependent(f, f.scaled(f5.element(3))));
    CHECK(linearly_dependent(f, BinaryForm::zero(f5, 2)));
    CHECK_FALSE(linearly_dependent(f, BinaryForm::from_values(f5, {1, 2, 1})));
    CHECK_FALSE(linearly_dependent(BinaryForm::from_values(f5, {0, 1, 0}),
                                   BinaryForm::from_values(f5, {1, 0, 0})));
}

TEST_CASE("matrix inverse and determinant") {
    FieldContext f7(7);
    std::uint64_t rng = 77;
    for (int i = 0; i < 50; ++i) {
        Matrix2 m = random_invertible(f7, rng);
        CHECK(m * m.inverse() == Matrix2::identity(f7));
        CHECK(m.inverse() * m == Matrix2::identity(f7));
    }
    Matrix2 singular = Matrix2::from_values(f7, 2, 4, 1, 2);
    CHECK(singular.det().is_zero());
    CHECK_THROWS_AS(singular.inverse(), SingularMatrix);
}

TEST_CASE("form pretty-printing") {
    FieldContext f5(5);
    CHECK(BinaryForm::from_values(f5, {1, 0, 4}).to_string() == "a^2 + 4 b^2");
    CHECK(BinaryForm::from_values(f5, {0, 2, 0}).to_string() == "2 a b");
    CHECK(BinaryForm::zero(f5, 2).to_string() == "0");
}
