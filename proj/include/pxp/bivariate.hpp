#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "pxp/fp.hpp"

namespace pxp {

/// Sparse bivariate polynomial over F_p. Exponent pairs map to nonzero
/// canonical residues; zero coefficients are never stored.
class Bivariate {
public:
    using Exponents = std::pair<std::uint32_t, std::uint32_t>;

    explicit Bivariate(const FieldContext& ctx) : p_(ctx.prime()) {}

    static Bivariate monomial(const FieldContext& ctx, const FieldElement& coeff,
                              std::uint32_t dx, std::uint32_t dy);
    static Bivariate constant(const FieldContext& ctx, const FieldElement& coeff);

    FieldContext context() const { return FieldContext(p_); }
    std::uint32_t prime() const { return p_; }

    bool is_zero() const { return terms_.empty(); }
    FieldElement coefficient(std::uint32_t dx, std::uint32_t dy) const;
    const std::map<Exponents, std::uint32_t>& terms() const { return terms_; }

    /// Total degree of the highest term; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;

    /// True when every term is divisible by x*y.
    bool divisible_by_xy() const;

    Bivariate scaled(const FieldElement& c) const;

    friend Bivariate operator+(const Bivariate& a, const Bivariate& b);
    friend Bivariate operator-(const Bivariate& a, const Bivariate& b);
    friend Bivariate operator*(const Bivariate& a, const Bivariate& b);
    friend bool operator==(const Bivariate& a, const Bivariate& b) = default;

    /// Rendering with the given variable names, terms ordered by total degree
    /// then descending power of the first variable. "0" for the zero polynomial.
    std::string to_string(const std::string& x, const std::string& y) const;

private:
    void add_term(std::uint32_t dx, std::uint32_t dy, std::uint64_t value);

    std::uint32_t p_;
    std::map<Exponents, std::uint32_t> terms_;
};

} // namespace pxp
