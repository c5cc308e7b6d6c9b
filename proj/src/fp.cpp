#include "pxp/fp.hpp"

#include <algorithm>

namespace pxp {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t powmod(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
    std::uint64_t acc = 1 % p, b = base % p;
    while (e > 0) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

} // namespace

FieldContext::FieldContext(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31))
        throw InvalidParameter("prime must fit below 2^31");
    if (!is_prime_u32(p))
        throw InvalidParameter("modulus " + std::to_string(p) + " is not prime");
    if (p == 2)
        throw InvalidParameter("prime must be odd");
}

FieldElement FieldContext::element(std::int64_t value) const {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return FieldElement(static_cast<std::uint32_t>(r), p_);
}

FieldElement FieldContext::zero() const { return FieldElement(0u, p_); }
FieldElement FieldContext::one() const { return FieldElement(1u, p_); }

FieldElement::FieldElement(const FieldContext& ctx, std::int64_t value)
    : FieldElement(ctx.element(value)) {}

FieldElement FieldElement::operator-() const {
    return FieldElement(value_ == 0 ? 0 : p_ - value_, p_);
}

FieldElement FieldElement::inv() const {
    if (value_ == 0) throw DivisionByZero();
    return FieldElement(powmod(value_, p_ - 2, p_), p_);
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    return FieldElement(powmod(value_, exponent, p_), p_);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    if (a.p_ != b.p_) throw ContextMismatch();
    std::uint32_t s = a.value_ + b.value_;
    if (s >= a.p_) s -= a.p_;
    return FieldElement(s, a.p_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    if (a.p_ != b.p_) throw ContextMismatch();
    std::uint32_t s = a.value_ + (a.p_ - b.value_);
    if (s >= a.p_) s -= a.p_;
    return FieldElement(s, a.p_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    if (a.p_ != b.p_) throw ContextMismatch();
    return FieldElement(mulmod(a.value_, b.value_, a.p_), a.p_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inv();
}

int legendre(const FieldElement& x) {
    if (x.is_zero()) return 0;
    std::uint32_t e = powmod(x.value(), (x.prime() - 1) / 2, x.prime());
    return e == 1 ? 1 : -1;
}

FieldElement find_nonresidue(const FieldContext& ctx) {
    for (std::uint32_t z = 2; z < ctx.prime(); ++z) {
        FieldElement cand = ctx.element(z);
        if (legendre(cand) == -1) return cand;
    }
    throw InvalidParameter("no quadratic nonresidue found (p too small)");
}

std::optional<FieldElement> sqrt(const FieldElement& x) {
    const std::uint32_t p = x.prime();
    FieldContext ctx(p);
    if (x.is_zero()) return ctx.zero();
    if (legendre(x) != 1) return std::nullopt;

    std::uint32_t root;
    if (p % 4 == 3) {
        root = powmod(x.value(), (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        std::uint32_t q = p - 1;
        std::uint32_t s = 0;
        while (q % 2 == 0) { q /= 2; ++s; }
        std::uint32_t z = find_nonresidue(ctx).value();
        std::uint32_t m = s;
        std::uint32_t c = powmod(z, q, p);
        std::uint32_t t = powmod(x.value(), q, p);
        std::uint32_t r = powmod(x.value(), (q + 1) / 2, p);
        while (t != 1) {
            std::uint32_t i = 0;
            std::uint32_t tt = t;
            while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
            std::uint32_t b = c;
            for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
        root = r;
    }
    if (root > p - root) root = p - root;
    return ctx.element(root);
}

namespace {

// Fourth-power residue symbol: x^((p-1)/g) with g = gcd(4, p-1). Units share a
// coset modulo fourth powers exactly when their symbols agree.
std::uint32_t fourth_symbol(std::uint32_t v, std::uint32_t p) {
    std::uint32_t g = (p % 4 == 1) ? 4 : 2;
    return powmod(v, (p - 1) / g, p);
}

} // namespace

std::vector<FieldElement> class_representatives(const FieldContext& ctx) {
    const std::uint32_t p = ctx.prime();
    const std::size_t n_classes = (p % 4 == 1) ? 4 : 2;
    std::vector<FieldElement> reps;
    std::vector<std::uint32_t> symbols;
    for (std::uint32_t v = 1; v < p && reps.size() < n_classes; ++v) {
        std::uint32_t s = fourth_symbol(v, p);
        if (std::find(symbols.begin(), symbols.end(), s) == symbols.end()) {
            symbols.push_back(s);
            reps.push_back(ctx.element(v));
        }
    }
    return reps;
}

std::size_t fourth_power_class(const FieldElement& x) {
    if (x.is_zero()) throw NotAUnit();
    const std::uint32_t p = x.prime();
    std::uint32_t s = fourth_symbol(x.value(), p);
    auto reps = class_representatives(x.context());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (fourth_symbol(reps[i].value(), p) == s) return i;
    }
    throw InvalidParameter("fourth-power class not found");
}

std::pair<FieldElement, FieldElement> solve_conic(const FieldElement& delta,
                                                  const FieldElement& w) {
    if (delta.prime() != w.prime()) throw ContextMismatch();
    if (delta.is_zero() || w.is_zero())
        throw InvalidParameter("solve_conic requires nonzero delta and w");
    FieldContext ctx = delta.context();
    FieldElement target = w.pow(3).inv();
    for (std::uint32_t r1 = 0; r1 < ctx.prime(); ++r1) {
        FieldElement e1 = ctx.element(r1);
        FieldElement rhs = delta * e1 * e1 - target;
        if (auto r2 = sqrt(rhs)) return {e1, *r2};
    }
    throw InvalidParameter("conic has no solution (unreachable for prime p)");
}

std::uint32_t count_conic_solutions(const FieldElement& delta) {
    if (delta.is_zero())
        throw InvalidParameter("count_conic_solutions requires nonzero delta");
    return static_cast<std::uint32_t>(static_cast<std::int64_t>(delta.prime()) -
                                      legendre(delta));
}

} // namespace pxp
