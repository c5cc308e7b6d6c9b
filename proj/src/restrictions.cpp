#include "pxp/restrictions.hpp"

namespace pxp {

TransgressionPair::TransgressionPair(std::uint32_t n, FormPair pair)
    : n_(n), pair_(std::move(pair)) {
    if (n < 3 || n % 2 == 0)
        throw InvalidParameter("transgression data requires odd n >= 3");
    if (2 * pair_.degree() != n + 1)
        throw InvalidParameter("transgression forms must have degree (n+1)/2");
}

bool satisfies_top_bottom(const TransgressionPair& tp) {
    const BinaryForm& f = tp.pair().q1();
    const BinaryForm& g = tp.pair().q2();
    const std::uint32_t d = f.degree();
    bool top = !f.coefficient(0).is_zero() || !g.coefficient(0).is_zero();
    bool bottom = !f.coefficient(d).is_zero() || !g.coefficient(d).is_zero();
    return top && bottom;
}

bool satisfies_all_twists(const TransgressionPair& tp) {
    return is_realizable(tp.pair());
}

bool satisfies_literal_quotient_condition(const TransgressionPair& tp) {
    const BinaryForm& f = tp.pair().q1();
    const BinaryForm& g = tp.pair().q2();
    FieldContext ctx = f.context();
    const std::uint32_t d = f.degree();
    // both forms inside F_p * ell^d for ell = s a + t b fails the condition
    for (const auto& pt : all_projective_points(ctx)) {
        std::vector<std::pair<FieldElement, FieldElement>> factors(
            d, {pt.s(), pt.t()});
        BinaryForm power = product_of_linear_forms(ctx, factors);
        if (linearly_dependent(f, power) && linearly_dependent(g, power)) return false;
    }
    return true;
}

ZetaForm::ZetaForm(const FieldContext& ctx, std::uint32_t k, Bivariate poly)
    : k_(k), poly_(std::move(poly)) {
    if (poly_.prime() != ctx.prime()) throw ContextMismatch();
}

ZetaForm zeta_power(const FieldContext& ctx, std::uint32_t k,
                    std::uint32_t max_degree) {
    if (k == 0) throw InvalidParameter("zeta_power requires k >= 1");
    const std::uint32_t p = ctx.prime();
    if (static_cast<std::uint64_t>(k) * (p + 1) > max_degree)
        throw ResourceLimit("zeta^k has degree k(p+1) beyond the configured bound");
    // zeta^k = sum_j (-1)^(k-j) C(k,j) x^(j + p(k-j)) y^(pj + (k-j))
    Bivariate acc(ctx);
    std::uint64_t binom = 1;  // C(k, 0), updated incrementally
    for (std::uint32_t j = 0; j <= k; ++j) {
        FieldElement coeff = ctx.element(static_cast<std::int64_t>(binom % p));
        if ((k - j) % 2 == 1) coeff = -coeff;
        acc = acc + Bivariate::monomial(ctx, coeff, j + p * (k - j), p * j + (k - j));
        if (j < k) binom = binom * (k - j) / (j + 1);
    }
    return ZetaForm(ctx, k, acc);
}

QdVerdict qd_obstruction(const FieldContext& ctx, std::uint32_t n,
                         std::uint32_t max_degree) {
    if (n < 3 || n % 2 == 0)
        throw InvalidParameter("qd_obstruction requires odd n >= 3");
    const std::uint32_t p = ctx.prime();
    QdVerdict verdict{};
    verdict.n = n;
    verdict.half_degree = (n + 1) / 2;
    if ((n + 1) % (2 * (p + 1)) != 0) {
        verdict.status = QdVerdict::Status::NotApplicable;
        verdict.power_k = 0;
        verdict.pure_x_coeff = 0;
        verdict.pure_y_coeff = 0;
        return verdict;
    }
    const std::uint32_t k = (n + 1) / (2 * (p + 1));
    ZetaForm zk = zeta_power(ctx, k, max_degree);
    verdict.status = QdVerdict::Status::Obstructed;
    verdict.power_k = k;
    verdict.pure_x_coeff = zk.poly().coefficient(verdict.half_degree, 0).value();
    verdict.pure_y_coeff = zk.poly().coefficient(0, verdict.half_degree).value();
    return verdict;
}

} // namespace pxp
