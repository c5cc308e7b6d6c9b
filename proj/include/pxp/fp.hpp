#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pxp/errors.hpp"

namespace pxp {

class FieldElement;

/// The prime field Z/p for an odd prime p < 2^31. Primality is checked at
/// construction; everything downstream assumes a field.
class FieldContext {
public:
    explicit FieldContext(std::uint32_t p);

    std::uint32_t prime() const { return p_; }

    /// Canonical residue of an arbitrary integer.
    FieldElement element(std::int64_t value) const;
    FieldElement zero() const;
    FieldElement one() const;

    friend bool operator==(const FieldContext& a, const FieldContext& b) = default;

private:
    std::uint32_t p_;
};

/// A canonical residue in [0, p-1]. Immutable; all operations are pure and
/// return canonical residues. Binary operations require matching fields.
class FieldElement {
public:
    FieldElement(const FieldContext& ctx, std::int64_t value);

    std::uint32_t value() const { return value_; }
    std::uint32_t prime() const { return p_; }
    FieldContext context() const { return FieldContext(p_); }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t exponent) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b) = default;

private:
    friend class FieldContext;
    FieldElement(std::uint32_t value, std::uint32_t p) : value_(value), p_(p) {}

    std::uint32_t value_;
    std::uint32_t p_;
};

/// Legendre symbol by Euler's criterion: 0 for 0, +1 for nonzero squares,
/// -1 for nonresidues.
int legendre(const FieldElement& x);

/// Smallest positive quadratic nonresidue mod p.
FieldElement find_nonresidue(const FieldContext& ctx);

/// Square root via Tonelli-Shanks; picks the root r with r <= p - r.
/// Empty result means nonresidue.
std::optional<FieldElement> sqrt(const FieldElement& x);

/// Index of the coset of x in the group of units modulo fourth powers.
/// Indices refer to positions in class_representatives(). Throws NotAUnit on 0.
std::size_t fourth_power_class(const FieldElement& x);

/// Smallest positive element of each fourth-power coset, in increasing order.
/// There are 4 classes when p = 1 mod 4, otherwise 2.
std::vector<FieldElement> class_representatives(const FieldContext& ctx);

/// Lexicographically smallest (r1, r2) with delta*r1^2 - r2^2 = w^-3.
/// Requires delta, w nonzero.
std::pair<FieldElement, FieldElement> solve_conic(const FieldElement& delta,
                                                  const FieldElement& w);

/// Number of solutions (r1, r2) of delta*r1^2 - r2^2 = c for any nonzero c:
/// p - legendre(delta).
std::uint32_t count_conic_solutions(const FieldElement& delta);

} // namespace pxp
