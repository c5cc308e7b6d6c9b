#include "pxp/cohomology.hpp"

namespace pxp {

GradedRank dim_cohomology(std::uint64_t k) {
    if (k == 0) return {1, 0};
    if (k == 1) return {0, 0};
    if (k % 2 == 1) return {0, (k - 1) / 2};
    return {0, (k + 2) / 2};
}

GradedRank dim_homology(std::uint64_t k) {
    if (k == 0) return {1, 0};
    if (k % 2 == 1) return {0, (k + 3) / 2};
    return {0, k / 2};
}

IntegralClass::IntegralClass(const FieldContext& ctx)
    : poly_(ctx), cpart_(ctx) {}

IntegralClass IntegralClass::unit(const FieldContext& ctx, std::int64_t m) {
    IntegralClass r(ctx);
    r.free_ = m;
    return r;
}

IntegralClass IntegralClass::gen_a(const FieldContext& ctx) {
    return monomial(ctx, ctx.one(), 1, 0, false);
}

IntegralClass IntegralClass::gen_b(const FieldContext& ctx) {
    return monomial(ctx, ctx.one(), 0, 1, false);
}

IntegralClass IntegralClass::gen_c(const FieldContext& ctx) {
    return monomial(ctx, ctx.one(), 0, 0, true);
}

IntegralClass IntegralClass::monomial(const FieldContext& ctx, const FieldElement& coeff,
                                      std::uint32_t i, std::uint32_t j, bool with_c) {
    IntegralClass r(ctx);
    if (!with_c && i == 0 && j == 0) {
        r.free_ = coeff.value();
        return r;
    }
    Bivariate m = Bivariate::monomial(ctx, coeff, i, j);
    if (with_c) r.cpart_ = m;
    else r.poly_ = m;
    return r;
}

bool IntegralClass::is_zero() const {
    return free_ == 0 && poly_.is_zero() && cpart_.is_zero();
}

bool IntegralClass::is_homogeneous() const {
    int deg = -1;
    if (free_ != 0) deg = 0;
    for (const auto& [e, c] : poly_.terms()) {
        int d = 2 * static_cast<int>(e.first + e.second);
        if (deg == -1) deg = d;
        else if (deg != d) return false;
    }
    for (const auto& [e, c] : cpart_.terms()) {
        int d = 3 + 2 * static_cast<int>(e.first + e.second);
        if (deg == -1) deg = d;
        else if (deg != d) return false;
    }
    return true;
}

int IntegralClass::degree() const {
    if (is_zero()) return -1;
    if (!is_homogeneous())
        throw InvalidParameter("degree of a non-homogeneous class");
    if (free_ != 0) return 0;
    if (!poly_.is_zero())
        return 2 * (poly_.terms().begin()->first.first +
                    poly_.terms().begin()->first.second);
    return 3 + 2 * (cpart_.terms().begin()->first.first +
                    cpart_.terms().begin()->first.second);
}

IntegralClass operator+(const IntegralClass& s, const IntegralClass& t) {
    IntegralClass r(s.context());
    r.free_ = s.free_ + t.free_;
    r.poly_ = s.poly_ + t.poly_;
    r.cpart_ = s.cpart_ + t.cpart_;
    return r;
}

IntegralClass operator-(const IntegralClass& s, const IntegralClass& t) {
    IntegralClass r(s.context());
    r.free_ = s.free_ - t.free_;
    r.poly_ = s.poly_ - t.poly_;
    r.cpart_ = s.cpart_ - t.cpart_;
    return r;
}

IntegralClass multiply(const IntegralClass& s, const IntegralClass& t) {
    FieldContext ctx = s.context();
    if (!(ctx == t.context())) throw ContextMismatch();
    IntegralClass r(ctx);
    r.free_ = s.free_ * t.free_;
    // the unit acts on torsion through its residue
    FieldElement sm = ctx.element(s.free_);
    FieldElement tm = ctx.element(t.free_);
    r.poly_ = s.poly_ * t.poly_ + s.poly_.scaled(tm) + t.poly_.scaled(sm);
    // c^2 = 0, and c commutes with the even part
    r.cpart_ = s.cpart_.scaled(tm) + t.cpart_.scaled(sm) +
               s.poly_ * t.cpart_ + t.poly_ * s.cpart_;
    return r;
}

std::string IntegralClass::to_string() const {
    std::string out;
    if (free_ != 0) out += std::to_string(free_);
    if (!poly_.is_zero()) {
        if (!out.empty()) out += " + ";
        out += poly_.to_string("a", "b");
    }
    if (!cpart_.is_zero()) {
        if (!out.empty()) out += " + ";
        std::string cp = cpart_.to_string("a", "b");
        if (cp == "1") out += "c";
        else if (cpart_.terms().size() == 1) out += cp + " c";
        else out += "(" + cp + ") c";
    }
    return out.empty() ? "0" : out;
}

ModPClass::ModPClass(const FieldContext& ctx)
    : one_(ctx), u_(ctx), v_(ctx), uv_(ctx) {}

ModPClass::ModPClass(Bivariate one, Bivariate u, Bivariate v, Bivariate uv)
    : one_(std::move(one)), u_(std::move(u)), v_(std::move(v)), uv_(std::move(uv)) {
    if (one_.prime() != u_.prime() || one_.prime() != v_.prime() ||
        one_.prime() != uv_.prime())
        throw ContextMismatch();
}

ModPClass ModPClass::gen_x(const FieldContext& ctx) {
    return {Bivariate::monomial(ctx, ctx.one(), 1, 0), Bivariate(ctx), Bivariate(ctx),
            Bivariate(ctx)};
}

ModPClass ModPClass::gen_y(const FieldContext& ctx) {
    return {Bivariate::monomial(ctx, ctx.one(), 0, 1), Bivariate(ctx), Bivariate(ctx),
            Bivariate(ctx)};
}

ModPClass ModPClass::gen_u(const FieldContext& ctx) {
    return {Bivariate(ctx), Bivariate::constant(ctx, ctx.one()), Bivariate(ctx),
            Bivariate(ctx)};
}

ModPClass ModPClass::gen_v(const FieldContext& ctx) {
    return {Bivariate(ctx), Bivariate(ctx), Bivariate::constant(ctx, ctx.one()),
            Bivariate(ctx)};
}

bool ModPClass::is_zero() const {
    return one_.is_zero() && u_.is_zero() && v_.is_zero() && uv_.is_zero();
}

bool ModPClass::is_homogeneous() const {
    int deg = -1;
    auto visit = [&deg](const Bivariate& part, int shift) {
        for (const auto& [e, c] : part.terms()) {
            int d = 2 * static_cast<int>(e.first + e.second) + shift;
            if (deg == -1) deg = d;
            else if (deg != d) return false;
        }
        return true;
    };
    return visit(one_, 0) && visit(u_, 1) && visit(v_, 1) && visit(uv_, 2);
}

int ModPClass::degree() const {
    if (is_zero()) return -1;
    if (!is_homogeneous())
        throw InvalidParameter("degree of a non-homogeneous class");
    auto first_degree = [](const Bivariate& part, int shift) {
        const auto& e = part.terms().begin()->first;
        return 2 * static_cast<int>(e.first + e.second) + shift;
    };
    if (!one_.is_zero()) return first_degree(one_, 0);
    if (!u_.is_zero()) return first_degree(u_, 1);
    if (!v_.is_zero()) return first_degree(v_, 1);
    return first_degree(uv_, 2);
}

ModPClass operator+(const ModPClass& s, const ModPClass& t) {
    return {s.one_ + t.one_, s.u_ + t.u_, s.v_ + t.v_, s.uv_ + t.uv_};
}

ModPClass operator-(const ModPClass& s, const ModPClass& t) {
    return {s.one_ - t.one_, s.u_ - t.u_, s.v_ - t.v_, s.uv_ - t.uv_};
}

ModPClass operator*(const ModPClass& s, const ModPClass& t) {
    // (P + uA + vB + uvC)(P' + uA' + vB' + uvC') with u^2 = v^2 = 0, vu = -uv
    Bivariate one = s.one_ * t.one_;
    Bivariate u = s.one_ * t.u_ + s.u_ * t.one_;
    Bivariate v = s.one_ * t.v_ + s.v_ * t.one_;
    Bivariate uv = s.one_ * t.uv_ + s.uv_ * t.one_ + s.u_ * t.v_ - s.v_ * t.u_;
    return {std::move(one), std::move(u), std::move(v), std::move(uv)};
}

std::string ModPClass::to_string() const {
    std::string out;
    auto append = [&out](const Bivariate& part, const char* ext) {
        if (part.is_zero()) return;
        if (!out.empty()) out += " + ";
        std::string s = part.to_string("x", "y");
        if (*ext == '\0') { out += s; return; }
        if (s == "1") out += ext;
        else if (part.terms().size() == 1) out += s + " " + ext;
        else out += "(" + s + ") " + ext;
    };
    append(one_, "");
    append(u_, "u");
    append(v_, "v");
    append(uv_, "uv");
    return out.empty() ? "0" : out;
}

ModPClass bockstein_modp(const ModPClass& s) {
    FieldContext ctx = s.context();
    Bivariate x = Bivariate::monomial(ctx, ctx.one(), 1, 0);
    Bivariate y = Bivariate::monomial(ctx, ctx.one(), 0, 1);
    // beta(P) = 0, beta(Pu) = Px, beta(Pv) = Py, beta(P uv) = P(xv - yu)
    Bivariate one = s.u_part() * x + s.v_part() * y;
    Bivariate u = Bivariate(ctx) - s.uv_part() * y;
    Bivariate v = s.uv_part() * x;
    return {std::move(one), std::move(u), std::move(v), Bivariate(ctx)};
}

IntegralClass bockstein_integral(const ModPClass& s) {
    FieldContext ctx = s.context();
    Bivariate a = Bivariate::monomial(ctx, ctx.one(), 1, 0);
    Bivariate b = Bivariate::monomial(ctx, ctx.one(), 0, 1);
    // btilde(Pu) = P(a,b) a, btilde(Pv) = P(a,b) b, btilde(P uv) = P(a,b) c
    Bivariate poly = s.u_part() * a + s.v_part() * b;
    Bivariate cpart = s.uv_part();
    IntegralClass result(ctx);
    for (const auto& [e, cval] : poly.terms())
        result = result + IntegralClass::monomial(ctx, ctx.element(cval), e.first,
                                                  e.second, false);
    for (const auto& [e, cval] : cpart.terms())
        result = result + IntegralClass::monomial(ctx, ctx.element(cval), e.first,
                                                  e.second, true);
    return result;
}

ModPClass reduce_mod_p(const IntegralClass& t) {
    FieldContext ctx = t.context();
    Bivariate x = Bivariate::monomial(ctx, ctx.one(), 1, 0);
    Bivariate y = Bivariate::monomial(ctx, ctx.one(), 0, 1);
    // rho(m + P + cC) = m + P(x,y) + (xv - yu) C(x,y)
    Bivariate one = Bivariate::constant(ctx, ctx.element(t.free_part())) + t.poly();
    Bivariate u = Bivariate(ctx) - y * t.cpart();
    Bivariate v = x * t.cpart();
    return {std::move(one), std::move(u), std::move(v), Bivariate(ctx)};
}

std::vector<IntegralClass> basis_of_degree(const FieldContext& ctx, std::uint32_t k) {
    std::vector<IntegralClass> basis;
    if (k == 0) {
        basis.push_back(IntegralClass::unit(ctx, 1));
        return basis;
    }
    // 2i + 2j + 3eps = k forces eps = k mod 2; degree 1 is empty (c sits in 3)
    std::uint32_t eps = k % 2;
    if (k < 3 * eps) return basis;
    std::uint32_t d = (k - 3 * eps) / 2;
    for (std::uint32_t j = 0; j <= d; ++j) {
        std::uint32_t i = d - j;  // descending powers of a
        basis.push_back(IntegralClass::monomial(ctx, ctx.one(), i, j, eps == 1));
    }
    return basis;
}

std::vector<ModPClass> modp_basis_of_degree(const FieldContext& ctx, std::uint32_t k) {
    std::vector<ModPClass> basis;
    auto mono = [&ctx](std::uint32_t i, std::uint32_t j) {
        return Bivariate::monomial(ctx, ctx.one(), i, j);
    };
    // exterior parts of degree 0, 1, 1, 2
    for (std::uint32_t ext = 0; ext < 4; ++ext) {
        std::uint32_t shift = ext == 0 ? 0 : (ext == 3 ? 2 : 1);
        if (k < shift || (k - shift) % 2 != 0) continue;
        std::uint32_t d = (k - shift) / 2;
        for (std::uint32_t j = 0; j <= d; ++j) {
            std::uint32_t i = d - j;
            Bivariate zero(ctx);
            switch (ext) {
                case 0: basis.emplace_back(mono(i, j), zero, zero, zero); break;
                case 1: basis.emplace_back(zero, mono(i, j), zero, zero); break;
                case 2: basis.emplace_back(zero, zero, mono(i, j), zero); break;
                case 3: basis.emplace_back(zero, zero, zero, mono(i, j)); break;
            }
        }
    }
    return basis;
}

} // namespace pxp
