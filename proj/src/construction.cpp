#include "pxp/construction.hpp"

namespace pxp {

namespace {

bool vectors_independent(const std::vector<FieldElement>& a,
                         const std::vector<FieldElement>& b) {
    // rank of the 2 x 2n matrix over F_p
    std::size_t pivot = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() || !b[i].is_zero()) { pivot = i; break; }
    }
    if (pivot == a.size()) return false;  // both zero vectors
    for (std::size_t j = 0; j < a.size(); ++j) {
        FieldElement minor = a[pivot] * b[j] - a[j] * b[pivot];
        if (!minor.is_zero()) return true;
    }
    return false;
}

} // namespace

RotationData::RotationData(const FieldContext& ctx, std::uint32_t n,
                           std::vector<FieldElement> first,
                           std::vector<FieldElement> second)
    : ctx_(ctx), n_(n), first_(std::move(first)), second_(std::move(second)) {
    if (n_ == 0) throw InvalidParameter("rotation data needs n >= 1");
    if (first_.size() != 2 * n_ || second_.size() != 2 * n_)
        throw InvalidParameter("rotation data needs 2n entries per generator");
    for (const auto& e : first_)
        if (e.prime() != ctx_.prime()) throw ContextMismatch();
    for (const auto& e : second_)
        if (e.prime() != ctx_.prime()) throw ContextMismatch();
    if (!vectors_independent(first_, second_))
        throw InvalidParameter(
            "rotation vectors must generate (Z/p)^2: they are linearly dependent");
}

FormPair k_invariant(const RotationData& rot) {
    FieldContext ctx = rot.context();
    const std::uint32_t n = rot.n();
    if (ctx.prime() <= n)
        throw HypothesisViolation("k_invariant requires p > n");
    std::vector<std::pair<FieldElement, FieldElement>> fac1, fac2;
    fac1.reserve(n);
    fac2.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        fac1.emplace_back(rot.first()[i], rot.second()[i]);
        fac2.emplace_back(rot.first()[n + i], rot.second()[n + i]);
    }
    return FormPair(product_of_linear_forms(ctx, fac1),
                    product_of_linear_forms(ctx, fac2));
}

std::optional<std::pair<FieldElement, FieldElement>> fixed_point_witness(
    const RotationData& rot) {
    FieldContext ctx = rot.context();
    const std::uint32_t n = rot.n();
    for (std::uint32_t sv = 0; sv < ctx.prime(); ++sv) {
        for (std::uint32_t tv = 0; tv < ctx.prime(); ++tv) {
            if (sv == 0 && tv == 0) continue;
            FieldElement s = ctx.element(sv), t = ctx.element(tv);
            bool zero_in_first = false, zero_in_second = false;
            for (std::uint32_t i = 0; i < n && !zero_in_first; ++i)
                zero_in_first = (s * rot.first()[i] + t * rot.second()[i]).is_zero();
            for (std::uint32_t i = 0; i < n && !zero_in_second; ++i)
                zero_in_second =
                    (s * rot.first()[n + i] + t * rot.second()[n + i]).is_zero();
            if (zero_in_first && zero_in_second) return std::make_pair(s, t);
        }
    }
    return std::nullopt;
}

bool is_free(const RotationData& rot) { return !fixed_point_witness(rot).has_value(); }

RotationData standard_example(const FieldContext& ctx, const FieldElement& w) {
    if (w.prime() != ctx.prime()) throw ContextMismatch();
    std::vector<FieldElement> first{ctx.one(), ctx.one(), ctx.element(2), ctx.zero()};
    std::vector<FieldElement> second{ctx.one(), w, ctx.zero(), ctx.one()};
    return RotationData(ctx, 2, std::move(first), std::move(second));
}

RotationData lens_product(const FieldElement& x, const FieldElement& y) {
    if (x.prime() != y.prime()) throw ContextMismatch();
    if (x.is_zero() || y.is_zero())
        throw NotFree("lens rotation numbers must be nonzero");
    FieldContext ctx = x.context();
    std::vector<FieldElement> first{ctx.one(), x, ctx.zero(), ctx.zero()};
    std::vector<FieldElement> second{ctx.zero(), ctx.zero(), ctx.one(), y};
    return RotationData(ctx, 2, std::move(first), std::move(second));
}

std::size_t lens_product_class(const FieldElement& x, const FieldElement& y) {
    FieldContext ctx = x.context();
    if (ctx.prime() <= 3) throw UnsupportedPrime("lens classification requires p > 3");
    return fourth_power_invariant(k_invariant(lens_product(x, y)));
}

} // namespace pxp
