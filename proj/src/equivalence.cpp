#include "pxp/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace pxp {

FormPair::FormPair(BinaryForm q1, BinaryForm q2)
    : q1_(std::move(q1)), q2_(std::move(q2)) {
    if (q1_.prime() != q2_.prime()) throw ContextMismatch();
    if (q1_.degree() != q2_.degree())
        throw InvalidParameter("form pair components must have equal degrees");
}

std::string FormPair::to_string() const {
    return "(" + q1_.to_string() + ", " + q2_.to_string() + ")";
}

EquivalenceMode EquivalenceMode::parse(const std::string& name) {
    if (name == "full") return full();
    if (name == "fixed-pi1") return fixed_pi1();
    if (name == "oriented") return oriented();
    throw InvalidParameter("unknown mode '" + name +
                           "' (expected full, fixed-pi1 or oriented)");
}

std::string EquivalenceMode::name() const {
    if (*this == full()) return "full";
    if (*this == fixed_pi1()) return "fixed-pi1";
    if (*this == oriented()) return "oriented";
    return "custom";
}

FormPair left_act(const Matrix2& m, const FormPair& pair) {
    FieldContext ctx = pair.context();
    FieldElement d = m.det();
    if (!(d == ctx.one()) && !(d == -ctx.one())) throw InvalidLeftMatrix();
    BinaryForm a = pair.q1().scaled(m.m11()) + pair.q2().scaled(m.m12());
    BinaryForm b = pair.q1().scaled(m.m21()) + pair.q2().scaled(m.m22());
    return FormPair(std::move(a), std::move(b));
}

FormPair right_act(const FormPair& pair, const Matrix2& n) {
    return FormPair(substitute(pair.q1(), n), substitute(pair.q2(), n));
}

FormPair apply_witness(const TransformWitness& w, const FormPair& pair) {
    return left_act(w.S, right_act(pair, w.R));
}

bool is_realizable(const FormPair& pair) {
    if (pair.q1().is_zero() || pair.q2().is_zero()) return false;
    if (linearly_dependent(pair.q1(), pair.q2())) return false;
    return !common_rational_root(pair.q1(), pair.q2()).has_value();
}

FormPair NormalForm::representative(const FieldContext& ctx) const {
    if (kind != Kind::StandardClass || !w)
        throw NonRealizable("no representative for a non-realizable class");
    BinaryForm q1(ctx, {ctx.one(), ctx.zero(), *w});
    BinaryForm q2(ctx, {ctx.zero(), ctx.element(2), ctx.zero()});
    return FormPair(std::move(q1), std::move(q2));
}

// ---------------------------------------------------------------------------
// canonical reduction
// ---------------------------------------------------------------------------

namespace {

// Smallest ww with ww^4 = x; x must be a fourth power. The four roots are
// +-r for r over the square roots of the two square roots of x.
FieldElement smallest_fourth_root(const FieldElement& x) {
    std::optional<FieldElement> best;
    auto consider = [&best](const FieldElement& cand) {
        if (!best || cand.value() < best->value()) best = cand;
    };
    auto s = sqrt(x);
    if (s) {
        for (const FieldElement& half : {*s, -*s}) {
            if (auto r = sqrt(half)) {
                consider(*r);
                consider(-*r);
            }
        }
    }
    if (!best)
        throw InvalidParameter("smallest_fourth_root of a non-fourth-power");
    return *best;
}

} // namespace

CanonicalForm canonical_form(const FormPair& pair) {
    FieldContext ctx = pair.context();
    if (pair.degree() != 2)
        throw UnsupportedDegree("canonical_form handles degree-2 pairs only");
    if (ctx.prime() <= 3)
        throw UnsupportedPrime("canonical_form requires p > 3");

    TransformWitness identity{Matrix2::identity(ctx), Matrix2::identity(ctx)};
    if (!is_realizable(pair))
        return {NormalForm{NormalForm::Kind::NonRealizable, std::nullopt}, identity};

    FormPair cur = pair;
    Matrix2 S_acc = Matrix2::identity(ctx);
    Matrix2 R_acc = Matrix2::identity(ctx);
    auto lstep = [&](const Matrix2& s) {
        S_acc = s * S_acc;
        cur = left_act(s, cur);
    };
    auto rstep = [&](const Matrix2& r) {
        R_acc = R_acc * r;
        cur = right_act(cur, r);
    };
    auto mat = [&ctx](const FieldElement& a, const FieldElement& b,
                      const FieldElement& c, const FieldElement& d) {
        return Matrix2(a, b, c, d);
    };
    const FieldElement one = ctx.one();
    const FieldElement zero = ctx.zero();
    const FieldElement two = ctx.element(2);

    // 1. bring Q1 to diagonal shape alpha a^2 + beta b^2, alpha != 0
    {
        FieldElement q0 = cur.q1().coefficient(0);
        FieldElement q2 = cur.q1().coefficient(2);
        if (q0.is_zero() && !q2.is_zero()) {
            rstep(mat(zero, one, one, zero));
        } else if (q0.is_zero() && q2.is_zero()) {
            rstep(mat(one, zero, one, one));  // q1*ab -> q1*a^2 + q1*ab
        }
    }
    {
        FieldElement q0 = cur.q1().coefficient(0);
        FieldElement q1 = cur.q1().coefficient(1);
        if (!q1.is_zero())
            rstep(mat(one, -(q1 * (two * q0).inv()), zero, one));
    }
    const FieldElement alpha = cur.q1().coefficient(0);
    const FieldElement beta = cur.q1().coefficient(2);

    // 2. clear the a^2 coefficient of Q2 (left action, det 1)
    {
        FieldElement x0 = cur.q2().coefficient(0);
        if (!x0.is_zero()) lstep(mat(one, zero, -(x0 * alpha.inv()), one));
    }
    const FieldElement x = cur.q2().coefficient(1);
    const FieldElement y = cur.q2().coefficient(2);

    bool diagonal_shape = false;
    if (beta.is_zero()) {
        // Q1 = alpha a^2; a common root at (0,1) is excluded, so y != 0.
        // The shear b -> b - x/(2y) a fixes Q1 and diagonalizes Q2.
        if (!x.is_zero()) rstep(mat(one, zero, -(x * (two * y).inv()), one));
        FieldElement a2 = cur.q2().coefficient(0);
        if (!a2.is_zero()) lstep(mat(one, zero, -(a2 * alpha.inv()), one));
        diagonal_shape = true;
    } else if (y.is_zero()) {
        // Q2 = x ab with x != 0: rescale b to reach 2ab
        rstep(mat(one, zero, zero, two * x.inv()));
    } else if (x.is_zero()) {
        // Q2 = y b^2: clear Q1's b^2 coefficient with it
        lstep(mat(one, -(beta * y.inv()), zero, one));
        diagonal_shape = true;
    } else {
        // Q2 = b(x a + y b), two distinct rational zeros: move them to ab
        rstep(mat(x.inv(), -(y * x.inv()), zero, one));
        lstep(mat(two.inv(), zero, zero, two));
        FieldElement c = cur.q1().coefficient(1);
        if (!c.is_zero()) lstep(mat(one, -(c * two.inv()), zero, one));
    }

    if (diagonal_shape) {
        // cur = (u a^2, yy b^2); pass through (a^2, w b^2) ~ (a^2 + 4w^2 b^2, 2ab)
        FieldElement u = cur.q1().coefficient(0);
        lstep(mat(u.inv(), zero, zero, u));
        FieldElement w = cur.q2().coefficient(2);
        FieldElement w2 = two * w;
        Matrix2 rw = mat(w2.inv(), -one, one, w2);
        Matrix2 sp = mat((w2 * w2).inv(), -(w2.inv()), w, two * w * w);
        rstep(rw);
        lstep(sp.inverse());
    }

    // cur = (u a^2 + v b^2, 2ab) with u, v != 0
    {
        FieldElement u = cur.q1().coefficient(0);
        if (!(u == one)) {
            lstep(mat(u.inv(), zero, zero, u));
            rstep(mat(one, zero, zero, u.inv()));
        }
    }
    FieldElement delta = cur.q1().coefficient(2);

    // 3. normalize within the fourth-power coset
    std::size_t cls = fourth_power_class(delta);
    FieldElement w0 = class_representatives(ctx)[cls];
    if (!(w0 == delta)) {
        FieldElement ww = smallest_fourth_root(w0 * delta.inv());
        auto [r1, r2] = solve_conic(delta, ww);
        FieldElement ww2 = ww * ww;
        FieldElement ww4 = ww2 * ww2;
        Matrix2 r = mat(ww2 * r2, delta * ww2 * r1, r1, r2);
        Matrix2 s = mat(delta * ww4 * r1 * r1 + ww4 * r2 * r2,
                        two * delta * ww4 * r1 * r2, two * ww2 * r1 * r2,
                        delta * ww2 * r1 * r1 + ww2 * r2 * r2);
        rstep(r.inverse());
        lstep(s);
    }

    NormalForm nf{NormalForm::Kind::StandardClass, w0};
    if (!(cur == nf.representative(ctx)))
        throw Error("canonical reduction failed to reach the standard pair");
    return {nf, TransformWitness{S_acc, R_acc}};
}

std::size_t fourth_power_invariant(const FormPair& pair) {
    CanonicalForm cf = canonical_form(pair);
    if (!cf.normal.realizable())
        throw NonRealizable("fourth_power_invariant of a non-realizable pair");
    return fourth_power_class(*cf.normal.w);
}

// ---------------------------------------------------------------------------
// packed pair space for enumeration, orbit search and the brute-force oracle
// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kHardNodeCap = 250'000'000;

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint32_t primitive_root(std::uint32_t p) {
    std::uint32_t phi = p - 1;
    std::vector<std::uint32_t> prime_factors;
    std::uint32_t m = phi;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= m; ++d) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    FieldContext ctx(p);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint32_t q : prime_factors) {
            if (ctx.element(g).pow(phi / q) == ctx.one()) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw InvalidParameter("no primitive root found");
}

std::vector<Matrix2> left_generators(const FieldContext& ctx, LeftGroup group) {
    std::vector<Matrix2> gens;
    gens.push_back(Matrix2::from_values(ctx, 1, 1, 0, 1));
    gens.push_back(Matrix2::from_values(ctx, 1, 0, 1, 1));
    if (group == LeftGroup::SLpm2)
        gens.push_back(Matrix2::from_values(ctx, 0, 1, 1, 0));
    return gens;
}

std::vector<Matrix2> right_generators(const FieldContext& ctx, RightGroup group) {
    std::vector<Matrix2> gens;
    if (group == RightGroup::GL2) {
        gens.push_back(Matrix2::from_values(ctx, 1, 1, 0, 1));
        gens.push_back(Matrix2::from_values(ctx, 1, 0, 1, 1));
        gens.push_back(Matrix2::from_values(ctx, primitive_root(ctx.prime()), 0, 0, 1));
    }
    return gens;
}

// Packed coefficient space of one binary form: index digits are the
// coefficients in descending powers of a, most significant first.
struct PairSpace {
    FieldContext ctx;
    std::uint32_t p = 0;
    std::uint32_t degree = 0;
    std::uint32_t ncoeff = 0;   // degree + 1
    std::uint32_t nforms = 0;   // p^ncoeff
    std::uint64_t nodes = 0;    // nforms^2
    std::vector<std::uint8_t> digits;       // nforms * ncoeff
    std::vector<std::uint64_t> zero_mask;   // zeros over the p+1 points
    std::vector<std::uint8_t> first_nonzero;
    std::vector<std::uint32_t> inv_tab;
    std::vector<std::uint32_t> powp;
    std::vector<Matrix2> left_mats;
    std::vector<Matrix2> right_mats;
    std::vector<std::vector<std::uint32_t>> right_tab;  // per right generator

    explicit PairSpace(const FieldContext& c) : ctx(c) {}
};

BinaryForm unpack_form(const PairSpace& sp, std::uint32_t f) {
    std::vector<FieldElement> cs;
    cs.reserve(sp.ncoeff);
    for (std::uint32_t i = 0; i < sp.ncoeff; ++i)
        cs.push_back(sp.ctx.element(sp.digits[static_cast<std::size_t>(f) * sp.ncoeff + i]));
    return BinaryForm(sp.ctx, std::move(cs));
}

std::uint32_t pack_form(const PairSpace& sp, const BinaryForm& form) {
    std::uint32_t id = 0;
    for (std::uint32_t i = 0; i < sp.ncoeff; ++i)
        id = id * sp.p + form.coefficient(i).value();
    return id;
}

FormPair unpack_pair(const PairSpace& sp, std::uint64_t node) {
    std::uint32_t f1 = static_cast<std::uint32_t>(node / sp.nforms);
    std::uint32_t f2 = static_cast<std::uint32_t>(node % sp.nforms);
    return FormPair(unpack_form(sp, f1), unpack_form(sp, f2));
}

std::uint64_t pack_pair(const PairSpace& sp, const FormPair& pair) {
    return static_cast<std::uint64_t>(pack_form(sp, pair.q1())) * sp.nforms +
           pack_form(sp, pair.q2());
}

PairSpace build_space(const FieldContext& ctx, std::uint32_t degree,
                      EquivalenceMode mode, bool with_right_tables,
                      const SearchLimits& limits) {
    const std::uint32_t p = ctx.prime();
    if (p + 1 > 64)
        throw ResourceLimit("pair enumeration supports p <= 61");
    std::uint64_t budget = checked_pow(limits.max_prime_enumeration, 6, kHardNodeCap);
    std::uint64_t nodes = checked_pow(p, 2 * (degree + 1), kHardNodeCap);
    if (nodes > budget || nodes > kHardNodeCap)
        throw ResourceLimit("pair space p^" + std::to_string(2 * (degree + 1)) +
                            " exceeds the enumeration budget");

    PairSpace sp(ctx);
    sp.p = p;
    sp.degree = degree;
    sp.ncoeff = degree + 1;
    sp.nforms = static_cast<std::uint32_t>(checked_pow(p, sp.ncoeff, kHardNodeCap));
    sp.nodes = nodes;

    sp.powp.assign(sp.ncoeff, 1);
    for (std::uint32_t i = 1; i < sp.ncoeff; ++i) sp.powp[i] = sp.powp[i - 1] * p;

    sp.inv_tab.assign(p, 0);
    for (std::uint32_t v = 1; v < p; ++v) sp.inv_tab[v] = ctx.element(v).inv().value();

    sp.digits.assign(static_cast<std::size_t>(sp.nforms) * sp.ncoeff, 0);
    sp.first_nonzero.assign(sp.nforms, 0);
    for (std::uint32_t f = 0; f < sp.nforms; ++f) {
        std::uint32_t rest = f;
        std::uint8_t fnz = static_cast<std::uint8_t>(sp.ncoeff);
        for (std::uint32_t i = 0; i < sp.ncoeff; ++i) {
            std::uint8_t d = static_cast<std::uint8_t>(
                (rest / sp.powp[sp.ncoeff - 1 - i]) % p);
            sp.digits[static_cast<std::size_t>(f) * sp.ncoeff + i] = d;
            if (d != 0 && fnz == sp.ncoeff) fnz = static_cast<std::uint8_t>(i);
            rest %= sp.powp[sp.ncoeff - 1 - i];
        }
        sp.first_nonzero[f] = fnz;
    }

    // zeros of each form over the p + 1 projective points
    const auto points = all_projective_points(ctx);
    sp.zero_mask.assign(sp.nforms, 0);
    {
        // evaluate every monomial on every point once
        std::vector<std::vector<std::uint32_t>> mono(points.size());
        for (std::size_t k = 0; k < points.size(); ++k) {
            mono[k].resize(sp.ncoeff);
            for (std::uint32_t i = 0; i < sp.ncoeff; ++i) {
                FieldElement val = points[k].s().pow(sp.degree - i) * points[k].t().pow(i);
                mono[k][i] = val.value();
            }
        }
        for (std::uint32_t f = 0; f < sp.nforms; ++f) {
            std::uint64_t mask = 0;
            const std::uint8_t* d = &sp.digits[static_cast<std::size_t>(f) * sp.ncoeff];
            for (std::size_t k = 0; k < points.size(); ++k) {
                std::uint64_t acc = 0;
                for (std::uint32_t i = 0; i < sp.ncoeff; ++i)
                    acc += static_cast<std::uint64_t>(d[i]) * mono[k][i];
                if (acc % p == 0) mask |= (1ull << k);
            }
            sp.zero_mask[f] = mask;
        }
    }

    sp.left_mats = left_generators(ctx, mode.left);
    sp.right_mats = right_generators(ctx, mode.right);
    if (with_right_tables) {
        for (const Matrix2& r : sp.right_mats) {
            std::vector<std::uint32_t> tab(sp.nforms);
            for (std::uint32_t f = 0; f < sp.nforms; ++f)
                tab[f] = pack_form(sp, substitute(unpack_form(sp, f), r));
            sp.right_tab.push_back(std::move(tab));
        }
    }
    return sp;
}

// coefficientwise sum of two packed forms
std::uint32_t form_add(const PairSpace& sp, std::uint32_t f, std::uint32_t g) {
    const std::uint8_t* df = &sp.digits[static_cast<std::size_t>(f) * sp.ncoeff];
    const std::uint8_t* dg = &sp.digits[static_cast<std::size_t>(g) * sp.ncoeff];
    std::uint32_t id = 0;
    for (std::uint32_t i = 0; i < sp.ncoeff; ++i) {
        std::uint32_t s = static_cast<std::uint32_t>(df[i]) + dg[i];
        if (s >= sp.p) s -= sp.p;
        id = id * sp.p + s;
    }
    return id;
}

bool packed_dependent(const PairSpace& sp, std::uint32_t f1, std::uint32_t f2) {
    // callers ensure f1, f2 != 0
    std::uint8_t i0 = sp.first_nonzero[f1];
    if (sp.first_nonzero[f2] != i0) return false;
    const std::uint8_t* d1 = &sp.digits[static_cast<std::size_t>(f1) * sp.ncoeff];
    const std::uint8_t* d2 = &sp.digits[static_cast<std::size_t>(f2) * sp.ncoeff];
    std::uint64_t lambda =
        static_cast<std::uint64_t>(d2[i0]) * sp.inv_tab[d1[i0]] % sp.p;
    for (std::uint32_t i = i0; i < sp.ncoeff; ++i)
        if (lambda * d1[i] % sp.p != d2[i]) return false;
    return true;
}

bool packed_realizable(const PairSpace& sp, std::uint64_t node) {
    std::uint32_t f1 = static_cast<std::uint32_t>(node / sp.nforms);
    std::uint32_t f2 = static_cast<std::uint32_t>(node % sp.nforms);
    if (f1 == 0 || f2 == 0) return false;
    if (sp.zero_mask[f1] & sp.zero_mask[f2]) return false;
    return !packed_dependent(sp, f1, f2);
}

// All generator images of a node, in a fixed order. The left branch decodes
// exactly the matrices produced by left_generators: the two elementary shears
// and the swap.
template <typename Fn>
void for_each_move(const PairSpace& sp, std::uint64_t node, Fn&& fn) {
    std::uint32_t f1 = static_cast<std::uint32_t>(node / sp.nforms);
    std::uint32_t f2 = static_cast<std::uint32_t>(node % sp.nforms);
    std::size_t gen = 0;
    for (const Matrix2& l : sp.left_mats) {
        std::uint64_t nxt;
        if (l.m12().value() == 1 && l.m21().value() == 0) {           // (Q1+Q2, Q2)
            nxt = static_cast<std::uint64_t>(form_add(sp, f1, f2)) * sp.nforms + f2;
        } else if (l.m21().value() == 1 && l.m12().value() == 0) {    // (Q1, Q1+Q2)
            nxt = static_cast<std::uint64_t>(f1) * sp.nforms + form_add(sp, f1, f2);
        } else {                                                      // swap
            nxt = static_cast<std::uint64_t>(f2) * sp.nforms + f1;
        }
        fn(gen++, nxt);
    }
    for (std::size_t t = 0; t < sp.right_tab.size(); ++t) {
        std::uint64_t nxt = static_cast<std::uint64_t>(sp.right_tab[t][f1]) * sp.nforms +
                            sp.right_tab[t][f2];
        fn(gen++, nxt);
    }
}

} // namespace

void for_each_realizable_pair(const FieldContext& ctx, std::uint32_t degree,
                              const std::function<void(const FormPair&)>& fn,
                              SearchLimits limits) {
    PairSpace sp = build_space(ctx, degree, EquivalenceMode::full(), false, limits);
    for (std::uint64_t node = 0; node < sp.nodes; ++node)
        if (packed_realizable(sp, node)) fn(unpack_pair(sp, node));
}

std::uint64_t count_realizable_pairs(const FieldContext& ctx, std::uint32_t degree,
                                     SearchLimits limits) {
    PairSpace sp = build_space(ctx, degree, EquivalenceMode::full(), false, limits);
    std::uint64_t count = 0;
    for (std::uint64_t node = 0; node < sp.nodes; ++node)
        if (packed_realizable(sp, node)) ++count;
    return count;
}

OrbitSummary orbit_enumeration(const FieldContext& ctx, EquivalenceMode mode,
                               std::uint32_t degree, SearchLimits limits) {
    PairSpace sp = build_space(ctx, degree, mode, true, limits);
    std::vector<bool> realizable(sp.nodes);
    std::uint64_t total = 0;
    for (std::uint64_t node = 0; node < sp.nodes; ++node) {
        bool r = packed_realizable(sp, node);
        realizable[node] = r;
        total += r;
    }

    OrbitSummary summary;
    summary.realizable_count = total;
    std::vector<bool> visited(sp.nodes, false);
    std::vector<std::uint64_t> stack;
    for (std::uint64_t start = 0; start < sp.nodes; ++start) {
        if (!realizable[start] || visited[start]) continue;
        std::uint64_t size = 0;
        visited[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            std::uint64_t cur = stack.back();
            stack.pop_back();
            ++size;
            for_each_move(sp, cur, [&](std::size_t, std::uint64_t nxt) {
                if (!visited[nxt]) {
                    // action moves preserve realizability
                    visited[nxt] = true;
                    stack.push_back(nxt);
                }
            });
        }
        summary.representatives.push_back(unpack_pair(sp, start));
        summary.sizes.push_back(size);
    }
    return summary;
}

std::uint64_t orbit_count(const FieldContext& ctx, EquivalenceMode mode,
                          std::uint32_t degree, SearchLimits limits) {
    return orbit_enumeration(ctx, mode, degree, limits).orbit_count();
}

std::vector<FormPair> orbit_representatives(const FieldContext& ctx, EquivalenceMode mode,
                                            std::uint32_t degree, SearchLimits limits) {
    return orbit_enumeration(ctx, mode, degree, limits).representatives;
}

// ---------------------------------------------------------------------------
// brute-force oracle and the witness-tracking orbit search
// ---------------------------------------------------------------------------

namespace {

std::vector<Matrix2> enumerate_left_group(const FieldContext& ctx, LeftGroup group) {
    const std::uint32_t p = ctx.prime();
    std::vector<Matrix2> mats;
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c)
                for (std::uint32_t d = 0; d < p; ++d) {
                    std::int64_t det =
                        (static_cast<std::int64_t>(a) * d - static_cast<std::int64_t>(b) * c) %
                        p;
                    if (det < 0) det += p;
                    bool ok = (det == 1) ||
                              (group == LeftGroup::SLpm2 &&
                               det == static_cast<std::int64_t>(p) - 1);
                    if (ok) mats.push_back(Matrix2::from_values(ctx, a, b, c, d));
                }
    return mats;
}

std::vector<Matrix2> enumerate_right_group(const FieldContext& ctx, RightGroup group) {
    std::vector<Matrix2> mats;
    if (group == RightGroup::Trivial) {
        mats.push_back(Matrix2::identity(ctx));
        return mats;
    }
    const std::uint32_t p = ctx.prime();
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c)
                for (std::uint32_t d = 0; d < p; ++d) {
                    if ((static_cast<std::uint64_t>(a) * d) % p ==
                        (static_cast<std::uint64_t>(b) * c) % p)
                        continue;
                    mats.push_back(Matrix2::from_values(ctx, a, b, c, d));
                }
    return mats;
}

} // namespace

bool brute_force_equivalent(const FormPair& a, const FormPair& b, EquivalenceMode mode,
                            SearchLimits limits) {
    FieldContext ctx = a.context();
    if (!(ctx == b.context())) throw ContextMismatch();
    if (a.degree() != b.degree())
        throw InvalidParameter("brute-force comparison of different degrees");
    if (ctx.prime() > limits.max_prime_brute_force)
        throw ResourceLimit("brute-force oracle limited to p <= " +
                            std::to_string(limits.max_prime_brute_force));

    const std::uint32_t p = ctx.prime();
    const std::uint32_t nc = a.degree() + 1;
    std::vector<std::uint32_t> t1(nc), t2(nc);
    for (std::uint32_t i = 0; i < nc; ++i) {
        t1[i] = b.q1().coefficient(i).value();
        t2[i] = b.q2().coefficient(i).value();
    }
    // mod table for sums of two products of residues
    std::vector<std::uint16_t> modtab(2 * p * p, 0);
    for (std::uint32_t v = 0; v < 2 * p * p; ++v)
        modtab[v] = static_cast<std::uint16_t>(v % p);

    const auto lefts = enumerate_left_group(ctx, mode.left);
    const auto rights = enumerate_right_group(ctx, mode.right);
    std::vector<std::uint32_t> q1(nc), q2(nc);
    for (const Matrix2& r : rights) {
        FormPair ar = right_act(a, r);
        for (std::uint32_t i = 0; i < nc; ++i) {
            q1[i] = ar.q1().coefficient(i).value();
            q2[i] = ar.q2().coefficient(i).value();
        }
        for (const Matrix2& s : lefts) {
            const std::uint32_t s11 = s.m11().value(), s12 = s.m12().value();
            const std::uint32_t s21 = s.m21().value(), s22 = s.m22().value();
            bool match = true;
            for (std::uint32_t i = 0; i < nc && match; ++i) {
                if (modtab[s11 * q1[i] + s12 * q2[i]] != t1[i] ||
                    modtab[s21 * q1[i] + s22 * q2[i]] != t2[i])
                    match = false;
            }
            if (match) return true;
        }
    }
    return false;
}

namespace {

std::optional<TransformWitness> orbit_search_witness(const FormPair& a, const FormPair& b,
                                                     EquivalenceMode mode,
                                                     const SearchLimits& limits) {
    FieldContext ctx = a.context();
    PairSpace sp = build_space(ctx, a.degree(), mode, true, limits);
    const std::uint64_t start = pack_pair(sp, a);
    const std::uint64_t goal = pack_pair(sp, b);

    struct Step {
        std::uint64_t parent;
        std::uint8_t gen;
    };
    std::unordered_map<std::uint64_t, Step> parent;
    parent.reserve(1 << 16);
    parent.emplace(start, Step{start, 0xff});
    std::deque<std::uint64_t> queue{start};
    bool found = (start == goal);
    while (!queue.empty() && !found) {
        std::uint64_t cur = queue.front();
        queue.pop_front();
        for_each_move(sp, cur, [&](std::size_t gen, std::uint64_t nxt) {
            if (found) return;
            if (parent.emplace(nxt, Step{cur, static_cast<std::uint8_t>(gen)}).second) {
                if (nxt == goal) { found = true; return; }
                queue.push_back(nxt);
            }
        });
    }
    if (!found) return std::nullopt;

    // replay the generator chain from start to goal
    std::vector<std::uint8_t> chain;
    for (std::uint64_t cur = goal; cur != start; cur = parent.at(cur).parent)
        chain.push_back(parent.at(cur).gen);
    std::reverse(chain.begin(), chain.end());

    Matrix2 s = Matrix2::identity(ctx);
    Matrix2 r = Matrix2::identity(ctx);
    const std::size_t n_left = sp.left_mats.size();
    for (std::uint8_t g : chain) {
        if (g < n_left) s = sp.left_mats[g] * s;
        else r = r * sp.right_mats[g - n_left];
    }
    TransformWitness w{s, r};
    if (!(apply_witness(w, a) == b))
        throw Error("orbit search produced an unsound witness");
    return w;
}

} // namespace

std::optional<TransformWitness> decide_equivalent(const FormPair& a, const FormPair& b,
                                                  EquivalenceMode mode,
                                                  SearchLimits limits) {
    FieldContext ctx = a.context();
    if (!(ctx == b.context())) throw ContextMismatch();
    if (a.degree() != b.degree())
        throw InvalidParameter("cannot compare pairs of different degrees");

    if (mode == EquivalenceMode::full() && a.degree() == 2 && ctx.prime() > 3) {
        CanonicalForm ca = canonical_form(a);
        CanonicalForm cb = canonical_form(b);
        if (ca.normal.realizable() != cb.normal.realizable()) return std::nullopt;
        if (ca.normal.realizable()) {
            if (!(*ca.normal.w == *cb.normal.w)) return std::nullopt;
            // a -> rep and b -> rep; compose a -> b
            Matrix2 s = cb.witness.S.inverse() * ca.witness.S;
            Matrix2 r = ca.witness.R * cb.witness.R.inverse();
            TransformWitness w{s, r};
            if (!(apply_witness(w, a) == b))
                throw Error("composed witness failed verification");
            return w;
        }
        // both non-realizable: fall through to the orbit search
    }
    return orbit_search_witness(a, b, mode, limits);
}

OracleReport run_oracle_sweep(const FieldContext& ctx, std::uint64_t seed,
                              std::uint64_t duo_count, SearchLimits limits) {
    if (ctx.prime() <= 3)
        throw UnsupportedPrime("oracle sweep requires p > 3");
    const EquivalenceMode mode = EquivalenceMode::full();
    PairSpace sp = build_space(ctx, 2, mode, true, limits);

    OracleReport report;

    // ground truth: orbit ids by generator moves
    constexpr std::uint32_t kUnlabeled = 0xffffffffu;
    std::vector<std::uint32_t> orbit_id(sp.nodes, kUnlabeled);
    std::vector<std::uint64_t> stack;
    std::uint32_t next_orbit = 0;
    for (std::uint64_t start = 0; start < sp.nodes; ++start) {
        if (!packed_realizable(sp, start) || orbit_id[start] != kUnlabeled) continue;
        orbit_id[start] = next_orbit;
        stack.push_back(start);
        while (!stack.empty()) {
            std::uint64_t cur = stack.back();
            stack.pop_back();
            for_each_move(sp, cur, [&](std::size_t, std::uint64_t nxt) {
                if (orbit_id[nxt] == kUnlabeled) {
                    orbit_id[nxt] = next_orbit;
                    stack.push_back(nxt);
                }
            });
        }
        ++next_orbit;
    }
    report.orbit_count = next_orbit;

    // canonical labels must be constant per orbit and distinct across orbits
    std::vector<std::uint32_t> orbit_label(next_orbit, kUnlabeled);
    std::vector<bool> label_seen;
    for (std::uint64_t node = 0; node < sp.nodes; ++node) {
        if (orbit_id[node] == kUnlabeled) continue;
        ++report.realizable_count;
        CanonicalForm cf = canonical_form(unpack_pair(sp, node));
        std::uint32_t w = cf.normal.w->value();
        std::uint32_t orb = orbit_id[node];
        if (orbit_label[orb] == kUnlabeled) orbit_label[orb] = w;
        else if (orbit_label[orb] != w) ++report.within_orbit_mismatches;
    }
    std::vector<std::uint32_t> distinct = orbit_label;
    std::sort(distinct.begin(), distinct.end());
    report.canonical_class_count =
        std::unique(distinct.begin(), distinct.end()) - distinct.begin();
    if (report.canonical_class_count < report.orbit_count)
        report.cross_orbit_collisions = report.orbit_count - report.canonical_class_count;

    // seeded duos: decision procedure against the exhaustive oracle
    if (ctx.prime() <= limits.max_prime_brute_force) {
        std::uint64_t state = seed;
        for (std::uint64_t i = 0; i < duo_count; ++i) {
            FormPair a = random_realizable_pair(ctx, 2, state);
            FormPair b = random_realizable_pair(ctx, 2, state);
            bool decided = decide_equivalent(a, b, mode, limits).has_value();
            bool ground = brute_force_equivalent(a, b, mode, limits);
            ++report.duos_checked;
            if (decided != ground) ++report.duo_disagreements;
        }
    }
    return report;
}

FormPair random_realizable_pair(const FieldContext& ctx, std::uint32_t degree,
                                std::uint64_t& rng_state) {
    const std::uint32_t nc = degree + 1;
    for (;;) {
        std::vector<FieldElement> c1, c2;
        c1.reserve(nc);
        c2.reserve(nc);
        for (std::uint32_t i = 0; i < nc; ++i)
            c1.push_back(ctx.element(static_cast<std::int64_t>(splitmix64(rng_state) %
                                                               ctx.prime())));
        for (std::uint32_t i = 0; i < nc; ++i)
            c2.push_back(ctx.element(static_cast<std::int64_t>(splitmix64(rng_state) %
                                                               ctx.prime())));
        FormPair pair(BinaryForm(ctx, std::move(c1)), BinaryForm(ctx, std::move(c2)));
        if (is_realizable(pair)) return pair;
    }
}

} // namespace pxp
