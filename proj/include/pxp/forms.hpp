#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pxp/fp.hpp"

namespace pxp {

/// Homogeneous binary form of degree m in a, b over F_p. coeffs[i] multiplies
/// a^(m-i) b^i (descending powers of a). The zero form keeps its degree.
class BinaryForm {
public:
    BinaryForm(const FieldContext& ctx, std::vector<FieldElement> coeffs);
    static BinaryForm zero(const FieldContext& ctx, std::uint32_t degree);
    static BinaryForm from_values(const FieldContext& ctx,
                                  std::initializer_list<std::int64_t> coeffs);

    FieldContext context() const { return FieldContext(p_); }
    std::uint32_t prime() const { return p_; }
    std::uint32_t degree() const { return static_cast<std::uint32_t>(coeffs_.size()) - 1; }
    const std::vector<FieldElement>& coefficients() const { return coeffs_; }
    const FieldElement& coefficient(std::size_t i) const { return coeffs_.at(i); }
    bool is_zero() const;

    BinaryForm scaled(const FieldElement& c) const;
    friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
    friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

    std::string to_string(const std::string& a = "a", const std::string& b = "b") const;

private:
    std::uint32_t p_;
    std::vector<FieldElement> coeffs_;
};

/// Point of P^1(F_p), normalized so the first nonzero coordinate is 1.
/// Exactly p + 1 points exist; ordered (0,1) < (1,0) < (1,1) < ... < (1,p-1).
class ProjectivePoint {
public:
    ProjectivePoint(const FieldElement& s, const FieldElement& t);

    const FieldElement& s() const { return s_; }
    const FieldElement& t() const { return t_; }

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);

    std::string to_string() const;

private:
    FieldElement s_, t_;
};

/// All p + 1 points of P^1(F_p) in normalized order.
std::vector<ProjectivePoint> all_projective_points(const FieldContext& ctx);

/// 2x2 matrix over F_p, row-major.
class Matrix2 {
public:
    Matrix2(const FieldElement& m11, const FieldElement& m12,
            const FieldElement& m21, const FieldElement& m22);
    static Matrix2 identity(const FieldContext& ctx);
    static Matrix2 from_values(const FieldContext& ctx, std::int64_t m11,
                               std::int64_t m12, std::int64_t m21, std::int64_t m22);

    FieldContext context() const { return e_[0].context(); }
    const FieldElement& m11() const { return e_[0]; }
    const FieldElement& m12() const { return e_[1]; }
    const FieldElement& m21() const { return e_[2]; }
    const FieldElement& m22() const { return e_[3]; }

    FieldElement det() const;
    bool is_invertible() const { return !det().is_zero(); }
    Matrix2 inverse() const;

    /// Column action M * (s, t)^T.
    std::pair<FieldElement, FieldElement> apply(const FieldElement& s,
                                                const FieldElement& t) const;

    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
    friend bool operator==(const Matrix2&, const Matrix2&) = default;

    std::string to_string() const;

private:
    std::vector<FieldElement> e_;
};

/// f(s, t) = sum coeffs[i] s^(m-i) t^i.
FieldElement evaluate(const BinaryForm& f, const FieldElement& s, const FieldElement& t);
FieldElement evaluate(const BinaryForm& f, const ProjectivePoint& pt);

/// Substitution f(m11 a + m12 b, m21 a + m22 b): the matrix acts on the
/// variable column, so substitute(substitute(f, M), N) = substitute(f, M*N).
BinaryForm substitute(const BinaryForm& f, const Matrix2& m);

/// Expanded product of the linear forms r_i a + q_i b.
BinaryForm product_of_linear_forms(
    const FieldContext& ctx,
    const std::vector<std::pair<FieldElement, FieldElement>>& factors);

/// All projective points where f vanishes; all p + 1 of them for the zero form.
std::vector<ProjectivePoint> rational_roots(const BinaryForm& f);

/// First common projective zero of f and g in normalized order.
std::optional<ProjectivePoint> common_rational_root(const BinaryForm& f,
                                                    const BinaryForm& g);

/// True when g is a scalar multiple of f or vice versa (zero forms included).
bool linearly_dependent(const BinaryForm& f, const BinaryForm& g);

} // namespace pxp
