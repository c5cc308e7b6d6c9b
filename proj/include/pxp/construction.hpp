#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pxp/equivalence.hpp"
#include "pxp/forms.hpp"

namespace pxp {

/// Rotation numbers of a linear (Z/p)^2 action on S^(2n-1) x S^(2n-1): the
/// first generator rotates coordinate i of the first sphere by r_i and of the
/// second sphere by r'_i; the second generator uses q_i, q'_i. The two
/// 2n-vectors must be linearly independent so they generate (Z/p)^2.
class RotationData {
public:
    RotationData(const FieldContext& ctx, std::uint32_t n,
                 std::vector<FieldElement> first, std::vector<FieldElement> second);

    FieldContext context() const { return ctx_; }
    std::uint32_t n() const { return n_; }
    const std::vector<FieldElement>& first() const { return first_; }
    const std::vector<FieldElement>& second() const { return second_; }

private:
    FieldContext ctx_;
    std::uint32_t n_;
    std::vector<FieldElement> first_, second_;
};

/// The k-invariant of L(p,p;R,Q): the pair of degree-n products of the
/// rotation classes (prod(r_i a + q_i b), prod(r'_i a + q'_i b)).
/// Requires p > n.
FormPair k_invariant(const RotationData& rot);

/// Whether the action is free: no nonzero group element (s,t) has a zero
/// rotation multiplier in both sphere factors. Decided by scanning all
/// p^2 - 1 elements, independently of the k-invariant pipeline.
bool is_free(const RotationData& rot);

/// The smallest nonzero group element with a fixed point, if any.
std::optional<std::pair<FieldElement, FieldElement>> fixed_point_witness(
    const RotationData& rot);

/// The n = 2 example R = (1,1,2,0), Q = (1,w,0,1), with k-invariant
/// ((a+b)(a+wb), 2ab). Free exactly when w != 0.
RotationData standard_example(const FieldContext& ctx, const FieldElement& w);

/// Product of two lens-space actions with rotation numbers (1,x) and (1,y):
/// first generator turns only the first sphere, second only the second.
/// k-invariant (x a^2, y b^2). Throws NotFree for zero x or y.
RotationData lens_product(const FieldElement& x, const FieldElement& y);

/// Complete invariant class of the lens product: for p = 3 mod 4 every choice
/// lands in one class, for p = 1 mod 4 the class is keyed by legendre(2y/x).
std::size_t lens_product_class(const FieldElement& x, const FieldElement& y);

} // namespace pxp
