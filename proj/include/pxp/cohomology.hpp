#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pxp/bivariate.hpp"
#include "pxp/fp.hpp"

namespace pxp {

/// Rank data of a (co)homology group: a free summand Z^free_rank plus
/// (Z/p)^p_rank.
struct GradedRank {
    std::uint64_t free_rank;
    std::uint64_t p_rank;
    friend bool operator==(const GradedRank&, const GradedRank&) = default;
};

/// Integral cohomology of K((Z/p)^2, 1) in degree k.
GradedRank dim_cohomology(std::uint64_t k);

/// Integral homology of (Z/p)^2 in degree k.
GradedRank dim_homology(std::uint64_t k);

/// Element of the integral cohomology ring F_p[a,b] (x) Lambda(c) with
/// |a| = |b| = 2, |c| = 3 and c^2 = 0. Degree zero carries the free part, an
/// honest integer; everything in positive degree is p-torsion.
class IntegralClass {
public:
    explicit IntegralClass(const FieldContext& ctx);

    static IntegralClass unit(const FieldContext& ctx, std::int64_t m);
    static IntegralClass gen_a(const FieldContext& ctx);
    static IntegralClass gen_b(const FieldContext& ctx);
    static IntegralClass gen_c(const FieldContext& ctx);
    /// coeff * a^i b^j, times c when with_c is set.
    static IntegralClass monomial(const FieldContext& ctx, const FieldElement& coeff,
                                  std::uint32_t i, std::uint32_t j, bool with_c);

    FieldContext context() const { return poly_.context(); }
    std::int64_t free_part() const { return free_; }
    const Bivariate& poly() const { return poly_; }
    const Bivariate& cpart() const { return cpart_; }
    bool is_zero() const;

    /// Total degree when homogeneous: 2(i+j) on the polynomial part,
    /// 3 + 2(i+j) on the c part. -1 for zero, throws for mixed degrees.
    int degree() const;
    bool is_homogeneous() const;

    friend IntegralClass operator+(const IntegralClass& s, const IntegralClass& t);
    friend IntegralClass operator-(const IntegralClass& s, const IntegralClass& t);
    friend IntegralClass multiply(const IntegralClass& s, const IntegralClass& t);
    friend bool operator==(const IntegralClass&, const IntegralClass&) = default;

    std::string to_string() const;

private:
    std::int64_t free_ = 0;
    Bivariate poly_;   // positive-degree part in a, b (no constant term)
    Bivariate cpart_;  // multiplies c
};

/// Ring product; c^2 = 0.
IntegralClass multiply(const IntegralClass& s, const IntegralClass& t);

/// Element of H*((Z/p)^2; Z/p) = F_p[x,y] (x) Lambda(u,v) with |x| = |y| = 2,
/// |u| = |v| = 1, stored on the exterior basis {1, u, v, uv}.
class ModPClass {
public:
    explicit ModPClass(const FieldContext& ctx);
    ModPClass(Bivariate one, Bivariate u, Bivariate v, Bivariate uv);

    static ModPClass gen_x(const FieldContext& ctx);
    static ModPClass gen_y(const FieldContext& ctx);
    static ModPClass gen_u(const FieldContext& ctx);
    static ModPClass gen_v(const FieldContext& ctx);

    FieldContext context() const { return one_.context(); }
    const Bivariate& one_part() const { return one_; }
    const Bivariate& u_part() const { return u_; }
    const Bivariate& v_part() const { return v_; }
    const Bivariate& uv_part() const { return uv_; }
    bool is_zero() const;

    int degree() const;
    bool is_homogeneous() const;

    friend ModPClass operator+(const ModPClass& s, const ModPClass& t);
    friend ModPClass operator-(const ModPClass& s, const ModPClass& t);
    /// Graded product; u^2 = v^2 = 0, uv = -vu.
    friend ModPClass operator*(const ModPClass& s, const ModPClass& t);
    friend bool operator==(const ModPClass&, const ModPClass&) = default;

    std::string to_string() const;

private:
    Bivariate one_, u_, v_, uv_;
};

/// Bockstein of Z/p -> Z/p^2 -> Z/p: the derivation with beta(u) = x,
/// beta(v) = y, beta(x) = beta(y) = 0, and beta(uv) = xv - yu.
ModPClass bockstein_modp(const ModPClass& s);

/// Integral Bockstein of Z -> Z -> Z/p: linear over F_p[x,y] -> F_p[a,b] with
/// btilde(u) = a, btilde(v) = b, btilde(uv) = c, btilde(1) = 0.
IntegralClass bockstein_integral(const ModPClass& s);

/// Coefficient reduction Z -> Z/p: ring map with rho(a) = x, rho(b) = y,
/// rho(c) = xv - yu. Completes the triangle rho(btilde(s)) = beta(s).
ModPClass reduce_mod_p(const IntegralClass& t);

/// All monomials a^i b^j c^eps of total degree k (eps in {0,1}), in descending
/// powers of a. For k = 0 the single unit class. Matches dim_cohomology(k)
/// in length for k > 0.
std::vector<IntegralClass> basis_of_degree(const FieldContext& ctx, std::uint32_t k);

/// Monomials x^i y^j eps for eps in {1, u, v, uv} of total degree k; the
/// mod-p analogue of basis_of_degree, used to sweep Bockstein identities.
std::vector<ModPClass> modp_basis_of_degree(const FieldContext& ctx, std::uint32_t k);

} // namespace pxp
