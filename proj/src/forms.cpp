#include "pxp/forms.hpp"

#include <algorithm>

namespace pxp {

BinaryForm::BinaryForm(const FieldContext& ctx, std::vector<FieldElement> coeffs)
    : p_(ctx.prime()), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw InvalidParameter("a binary form needs at least one coefficient");
    for (const auto& c : coeffs_)
        if (c.prime() != p_) throw ContextMismatch();
}

BinaryForm BinaryForm::zero(const FieldContext& ctx, std::uint32_t degree) {
    return BinaryForm(ctx, std::vector<FieldElement>(degree + 1, ctx.zero()));
}

BinaryForm BinaryForm::from_values(const FieldContext& ctx,
                                   std::initializer_list<std::int64_t> coeffs) {
    std::vector<FieldElement> cs;
    cs.reserve(coeffs.size());
    for (std::int64_t v : coeffs) cs.push_back(ctx.element(v));
    return BinaryForm(ctx, std::move(cs));
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const FieldElement& c) { return c.is_zero(); });
}

BinaryForm BinaryForm::scaled(const FieldElement& c) const {
    std::vector<FieldElement> cs;
    cs.reserve(coeffs_.size());
    for (const auto& q : coeffs_) cs.push_back(q * c);
    return BinaryForm(context(), std::move(cs));
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree())
        throw InvalidParameter("cannot add forms of different degrees");
    std::vector<FieldElement> cs;
    cs.reserve(f.coeffs_.size());
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        cs.push_back(f.coeffs_[i] + g.coeffs_[i]);
    return BinaryForm(f.context(), std::move(cs));
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree())
        throw InvalidParameter("cannot subtract forms of different degrees");
    std::vector<FieldElement> cs;
    cs.reserve(f.coeffs_.size());
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        cs.push_back(f.coeffs_[i] - g.coeffs_[i]);
    return BinaryForm(f.context(), std::move(cs));
}

std::string BinaryForm::to_string(const std::string& a, const std::string& b) const {
    const std::uint32_t m = degree();
    std::string out;
    for (std::uint32_t i = 0; i <= m; ++i) {
        const FieldElement& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        auto var = [](const std::string& name, std::uint32_t d) -> std::string {
            if (d == 0) return "";
            if (d == 1) return name;
            return name + "^" + std::to_string(d);
        };
        std::string mono = var(a, m - i);
        std::string mb = var(b, i);
        if (!mono.empty() && !mb.empty()) mono += " ";
        mono += mb;
        if (mono.empty()) out += std::to_string(c.value());
        else if (c.value() == 1) out += mono;
        else out += std::to_string(c.value()) + " " + mono;
    }
    return out.empty() ? "0" : out;
}

ProjectivePoint::ProjectivePoint(const FieldElement& s, const FieldElement& t)
    : s_(s), t_(t) {
    if (s.prime() != t.prime()) throw ContextMismatch();
    if (s.is_zero() && t.is_zero())
        throw InvalidParameter("(0, 0) is not a projective point");
    if (!s_.is_zero()) {
        FieldElement d = s_.inv();
        s_ = s_ * d;
        t_ = t_ * d;
    } else {
        t_ = t_ * t_.inv();  // (0, 1)
    }
}

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.s_.value() != b.s_.value()) return a.s_.value() < b.s_.value();
    return a.t_.value() < b.t_.value();
}

std::string ProjectivePoint::to_string() const {
    return "(" + std::to_string(s_.value()) + " : " + std::to_string(t_.value()) + ")";
}

std::vector<ProjectivePoint> all_projective_points(const FieldContext& ctx) {
    std::vector<ProjectivePoint> pts;
    pts.reserve(ctx.prime() + 1);
    pts.emplace_back(ctx.zero(), ctx.one());
    for (std::uint32_t t = 0; t < ctx.prime(); ++t)
        pts.emplace_back(ctx.one(), ctx.element(t));
    return pts;
}

Matrix2::Matrix2(const FieldElement& m11, const FieldElement& m12,
                 const FieldElement& m21, const FieldElement& m22)
    : e_{m11, m12, m21, m22} {
    for (const auto& e : e_)
        if (e.prime() != e_[0].prime()) throw ContextMismatch();
}

Matrix2 Matrix2::identity(const FieldContext& ctx) {
    return Matrix2(ctx.one(), ctx.zero(), ctx.zero(), ctx.one());
}

Matrix2 Matrix2::from_values(const FieldContext& ctx, std::int64_t m11, std::int64_t m12,
                             std::int64_t m21, std::int64_t m22) {
    return Matrix2(ctx.element(m11), ctx.element(m12), ctx.element(m21),
                   ctx.element(m22));
}

FieldElement Matrix2::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

Matrix2 Matrix2::inverse() const {
    FieldElement d = det();
    if (d.is_zero()) throw SingularMatrix();
    FieldElement di = d.inv();
    return Matrix2(e_[3] * di, -e_[1] * di, -e_[2] * di, e_[0] * di);
}

std::pair<FieldElement, FieldElement> Matrix2::apply(const FieldElement& s,
                                                     const FieldElement& t) const {
    return {e_[0] * s + e_[1] * t, e_[2] * s + e_[3] * t};
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return Matrix2(a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2],
                   a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
                   a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2],
                   a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]);
}

std::string Matrix2::to_string() const {
    return "[[" + std::to_string(e_[0].value()) + ", " + std::to_string(e_[1].value()) +
           "], [" + std::to_string(e_[2].value()) + ", " + std::to_string(e_[3].value()) +
           "]]";
}

FieldElement evaluate(const BinaryForm& f, const FieldElement& s, const FieldElement& t) {
    if (s.prime() != f.prime() || t.prime() != f.prime()) throw ContextMismatch();
    FieldContext ctx = f.context();
    const std::uint32_t m = f.degree();
    // Horner in t/s would divide; just build the power tables.
    std::vector<FieldElement> spow{ctx.one()}, tpow{ctx.one()};
    for (std::uint32_t i = 0; i < m; ++i) {
        spow.push_back(spow.back() * s);
        tpow.push_back(tpow.back() * t);
    }
    FieldElement acc = ctx.zero();
    for (std::uint32_t i = 0; i <= m; ++i)
        acc = acc + f.coefficient(i) * spow[m - i] * tpow[i];
    return acc;
}

FieldElement evaluate(const BinaryForm& f, const ProjectivePoint& pt) {
    return evaluate(f, pt.s(), pt.t());
}

BinaryForm substitute(const BinaryForm& f, const Matrix2& m) {
    if (m.context().prime() != f.prime()) throw ContextMismatch();
    if (!m.is_invertible()) throw SingularMatrix();
    FieldContext ctx = f.context();
    const std::uint32_t deg = f.degree();

    // Powers of (m11 a + m12 b) and (m21 a + m22 b) as coefficient vectors.
    auto powers = [&ctx, deg](const FieldElement& c0, const FieldElement& c1) {
        std::vector<std::vector<FieldElement>> pw;
        pw.push_back({ctx.one()});
        for (std::uint32_t k = 1; k <= deg; ++k) {
            const auto& prev = pw.back();
            std::vector<FieldElement> next(k + 1, ctx.zero());
            for (std::uint32_t i = 0; i < prev.size(); ++i) {
                next[i] = next[i] + prev[i] * c0;
                next[i + 1] = next[i + 1] + prev[i] * c1;
            }
            pw.push_back(std::move(next));
        }
        return pw;
    };
    auto apow = powers(m.m11(), m.m12());
    auto bpow = powers(m.m21(), m.m22());

    std::vector<FieldElement> out(deg + 1, ctx.zero());
    for (std::uint32_t i = 0; i <= deg; ++i) {
        const FieldElement& c = f.coefficient(i);
        if (c.is_zero()) continue;
        const auto& pa = apow[deg - i];
        const auto& pb = bpow[i];
        for (std::uint32_t u = 0; u < pa.size(); ++u)
            for (std::uint32_t v = 0; v < pb.size(); ++v)
                out[u + v] = out[u + v] + c * pa[u] * pb[v];
    }
    return BinaryForm(ctx, std::move(out));
}

BinaryForm product_of_linear_forms(
    const FieldContext& ctx,
    const std::vector<std::pair<FieldElement, FieldElement>>& factors) {
    if (factors.empty())
        throw InvalidParameter("product of an empty set of linear forms");
    std::vector<FieldElement> acc{ctx.one()};
    for (const auto& [r, q] : factors) {
        if (r.prime() != ctx.prime() || q.prime() != ctx.prime())
            throw ContextMismatch();
        std::vector<FieldElement> next(acc.size() + 1, ctx.zero());
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] = next[i] + acc[i] * r;
            next[i + 1] = next[i + 1] + acc[i] * q;
        }
        acc = std::move(next);
    }
    return BinaryForm(ctx, std::move(acc));
}

std::vector<ProjectivePoint> rational_roots(const BinaryForm& f) {
    std::vector<ProjectivePoint> roots;
    for (const auto& pt : all_projective_points(f.context()))
        if (evaluate(f, pt).is_zero()) roots.push_back(pt);
    return roots;
}

std::optional<ProjectivePoint> common_rational_root(const BinaryForm& f,
                                                    const BinaryForm& g) {
    if (f.degree() != g.degree())
        throw InvalidParameter("common root of forms of different degrees");
    for (const auto& pt : all_projective_points(f.context()))
        if (evaluate(f, pt).is_zero() && evaluate(g, pt).is_zero()) return pt;
    return std::nullopt;
}

bool linearly_dependent(const BinaryForm& f, const BinaryForm& g) {
    if (f.prime() != g.prime()) throw ContextMismatch();
    if (f.degree() != g.degree())
        throw InvalidParameter("dependence of forms of different degrees");
    if (f.is_zero() || g.is_zero()) return true;
    std::size_t pivot = 0;
    while (f.coefficient(pivot).is_zero() && g.coefficient(pivot).is_zero()) ++pivot;
    // scale so the pivot coefficients match, then compare
    if (f.coefficient(pivot).is_zero() || g.coefficient(pivot).is_zero()) return false;
    FieldElement lambda = g.coefficient(pivot) * f.coefficient(pivot).inv();
    return g == f.scaled(lambda);
}

} // namespace pxp
