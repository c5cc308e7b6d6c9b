#pragma once

#include <cstdint>

#include "pxp/bivariate.hpp"
#include "pxp/equivalence.hpp"

namespace pxp {

/// Transgression data in ambient dimension n (odd, >= 3): a pair of binary
/// forms of degree (n+1)/2 recording the images of the two sphere classes.
class TransgressionPair {
public:
    TransgressionPair(std::uint32_t n, FormPair pair);

    std::uint32_t n() const { return n_; }
    const FormPair& pair() const { return pair_; }

private:
    std::uint32_t n_;
    FormPair pair_;
};

/// The extreme-coefficient restriction: the two a^((n+1)/2) coefficients are
/// not both zero, and neither are the two b^((n+1)/2) ones.
bool satisfies_top_bottom(const TransgressionPair& tp);

/// The restriction closed under automorphism twists: the extreme-coefficient
/// condition holds in every twisted coordinate system. Equivalently, neither
/// form is zero, they are linearly independent, and they share no rational
/// projective root. Agrees with is_realizable.
bool satisfies_all_twists(const TransgressionPair& tp);

/// Weaker literal reading kept for comparison: no nonzero degree-2 class
/// lambda has both forms inside the line spanned by lambda^((n+1)/2).
bool satisfies_literal_quotient_condition(const TransgressionPair& tp);

/// The power zeta^k of zeta = x y^p - y x^p, expanded over F_p; homogeneous
/// of degree k(p+1).
class ZetaForm {
public:
    ZetaForm(const FieldContext& ctx, std::uint32_t k, Bivariate poly);

    FieldContext context() const { return poly_.context(); }
    std::uint32_t k() const { return k_; }
    const Bivariate& poly() const { return poly_; }

private:
    std::uint32_t k_;
    Bivariate poly_;
};

/// Expanded zeta^k; throws ResourceLimit when k(p+1) exceeds max_degree.
ZetaForm zeta_power(const FieldContext& ctx, std::uint32_t k,
                    std::uint32_t max_degree = 60);

/// Outcome of the transgression-coefficient obstruction for a group whose
/// restricted transgression ideal is generated by a power of zeta.
struct QdVerdict {
    enum class Status { Obstructed, NotApplicable };

    Status status;
    std::uint32_t n;
    std::uint32_t power_k;       // exponent (n+1)/(2(p+1)); 0 when not applicable
    std::uint32_t half_degree;   // (n+1)/2
    std::uint32_t pure_x_coeff;  // coefficient of x^((n+1)/2) in zeta^k
    std::uint32_t pure_y_coeff;  // coefficient of y^((n+1)/2) in zeta^k

    bool obstructed() const { return status == Status::Obstructed; }
};

/// If 2(p+1) divides n+1, the generator zeta^((n+1)/(2(p+1))) has zero
/// coefficients on both pure powers, so every pair in its span violates the
/// extreme-coefficient restriction: Obstructed. Otherwise NotApplicable.
/// Requires n odd, n >= 3.
QdVerdict qd_obstruction(const FieldContext& ctx, std::uint32_t n,
                         std::uint32_t max_degree = 60);

} // namespace pxp
