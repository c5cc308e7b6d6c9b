#include "pxp/bivariate.hpp"

#include <algorithm>
#include <vector>

namespace pxp {

Bivariate Bivariate::monomial(const FieldContext& ctx, const FieldElement& coeff,
                              std::uint32_t dx, std::uint32_t dy) {
    if (coeff.prime() != ctx.prime()) throw ContextMismatch();
    Bivariate r(ctx);
    r.add_term(dx, dy, coeff.value());
    return r;
}

Bivariate Bivariate::constant(const FieldContext& ctx, const FieldElement& coeff) {
    return monomial(ctx, coeff, 0, 0);
}

FieldElement Bivariate::coefficient(std::uint32_t dx, std::uint32_t dy) const {
    auto it = terms_.find({dx, dy});
    FieldContext ctx(p_);
    return it == terms_.end() ? ctx.zero() : ctx.element(it->second);
}

int Bivariate::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, static_cast<int>(e.first + e.second));
    return deg;
}

bool Bivariate::is_homogeneous() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = static_cast<int>(e.first + e.second);
        if (deg == -1) deg = d;
        else if (d != deg) return false;
    }
    return true;
}

bool Bivariate::divisible_by_xy() const {
    for (const auto& [e, c] : terms_)
        if (e.first == 0 || e.second == 0) return false;
    return true;
}

Bivariate Bivariate::scaled(const FieldElement& c) const {
    if (c.prime() != p_) throw ContextMismatch();
    Bivariate r{FieldContext(p_)};
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_)
        r.add_term(e.first, e.second, static_cast<std::uint64_t>(v) * c.value());
    return r;
}

void Bivariate::add_term(std::uint32_t dx, std::uint32_t dy, std::uint64_t value) {
    std::uint32_t v = static_cast<std::uint32_t>(value % p_);
    if (v == 0) return;
    auto [it, fresh] = terms_.try_emplace({dx, dy}, v);
    if (!fresh) {
        std::uint32_t s = it->second + v;
        if (s >= p_) s -= p_;
        if (s == 0) terms_.erase(it);
        else it->second = s;
    }
}

Bivariate operator+(const Bivariate& a, const Bivariate& b) {
    if (a.p_ != b.p_) throw ContextMismatch();
    Bivariate r = a;
    for (const auto& [e, v] : b.terms_) r.add_term(e.first, e.second, v);
    return r;
}

Bivariate operator-(const Bivariate& a, const Bivariate& b) {
    if (a.p_ != b.p_) throw ContextMismatch();
    Bivariate r = a;
    for (const auto& [e, v] : b.terms_) r.add_term(e.first, e.second, a.p_ - v);
    return r;
}

Bivariate operator*(const Bivariate& a, const Bivariate& b) {
    if (a.p_ != b.p_) throw ContextMismatch();
    Bivariate r{FieldContext(a.p_)};
    for (const auto& [ea, va] : a.terms_)
        for (const auto& [eb, vb] : b.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second,
                       static_cast<std::uint64_t>(va) * vb);
    return r;
}

std::string Bivariate::to_string(const std::string& x, const std::string& y) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, std::uint32_t>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& l, const auto& r) {
        std::uint32_t dl = l.first.first + l.first.second;
        std::uint32_t dr = r.first.first + r.first.second;
        if (dl != dr) return dl < dr;
        return l.first.first > r.first.first;
    });
    std::string out;
    for (const auto& [e, v] : ts) {
        if (!out.empty()) out += " + ";
        std::string mono;
        auto var = [](const std::string& name, std::uint32_t d) -> std::string {
            if (d == 0) return "";
            if (d == 1) return name;
            return name + "^" + std::to_string(d);
        };
        mono = var(x, e.first);
        std::string my = var(y, e.second);
        if (!mono.empty() && !my.empty()) mono += " ";
        mono += my;
        if (mono.empty()) out += std::to_string(v);
        else if (v == 1) out += mono;
        else out += std::to_string(v) + " " + mono;
    }
    return out;
}

} // namespace pxp
