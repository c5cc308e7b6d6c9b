#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pxp/forms.hpp"

namespace pxp {

/// Ordered pair of equal-degree binary forms over the same field; the
/// k-invariant datum of a sphere-product quotient in degree (n+1)/2.
class FormPair {
public:
    FormPair(BinaryForm q1, BinaryForm q2);

    const BinaryForm& q1() const { return q1_; }
    const BinaryForm& q2() const { return q2_; }
    FieldContext context() const { return q1_.context(); }
    std::uint32_t degree() const { return q1_.degree(); }

    friend bool operator==(const FormPair&, const FormPair&) = default;

    std::string to_string() const;

private:
    BinaryForm q1_, q2_;
};

enum class LeftGroup { SL2, SLpm2 };
enum class RightGroup { Trivial, GL2 };

/// Which identifications may vary: the left factor recombines the two forms
/// (identifications of pi_n with Z^2, determinant +-1), the right factor is a
/// common change of coordinates (automorphisms of pi_1, GL_2).
struct EquivalenceMode {
    LeftGroup left;
    RightGroup right;

    static EquivalenceMode full() { return {LeftGroup::SLpm2, RightGroup::GL2}; }
    static EquivalenceMode fixed_pi1() { return {LeftGroup::SLpm2, RightGroup::Trivial}; }
    static EquivalenceMode oriented() { return {LeftGroup::SL2, RightGroup::GL2}; }
    static EquivalenceMode parse(const std::string& name);

    std::string name() const;
    friend bool operator==(const EquivalenceMode&, const EquivalenceMode&) = default;
};

/// Exact witness: applying left matrix S and right substitution R to the
/// source pair yields the target pair.
struct TransformWitness {
    Matrix2 S;
    Matrix2 R;
};

/// left_act(S, right_act(pair, R)).
FormPair apply_witness(const TransformWitness& w, const FormPair& pair);

/// (m11 Q1 + m12 Q2, m21 Q1 + m22 Q2); requires det = +-1.
FormPair left_act(const Matrix2& m, const FormPair& pair);

/// Both components substituted with the same invertible matrix.
FormPair right_act(const FormPair& pair, const Matrix2& n);

/// Realizability of a pair as the k-invariant of a free action: both forms
/// nonzero, linearly independent, and without a common rational projective
/// root. Invariant under both actions.
bool is_realizable(const FormPair& pair);

/// Canonical class datum: NonRealizable, or the standard pair
/// (a^2 + w b^2, 2ab) with w the smallest member of its fourth-power coset.
struct NormalForm {
    enum class Kind { NonRealizable, StandardClass };
    Kind kind;
    std::optional<FieldElement> w;

    bool realizable() const { return kind == Kind::StandardClass; }
    /// The representative pair (a^2 + w b^2, 2ab); throws unless StandardClass.
    FormPair representative(const FieldContext& ctx) const;
};

struct CanonicalForm {
    NormalForm normal;
    TransformWitness witness;  // transforms the input pair into the representative
};

/// Full reduction for degree-2 pairs, p > 3: diagonalize, clear, shear, and
/// normalize within the fourth-power coset, composing an exact witness.
CanonicalForm canonical_form(const FormPair& pair);

/// Index of the complete invariant in class_representatives(); requires a
/// realizable pair.
std::size_t fourth_power_invariant(const FormPair& pair);

/// Enumeration and search budgets, expressed as the largest prime allowed at
/// degree 2 (the pair space has p^(2 deg + 2) elements; other degrees are
/// admitted while that count stays within limit^6).
struct SearchLimits {
    std::uint32_t max_prime_enumeration = 13;
    std::uint32_t max_prime_brute_force = 7;
};

/// Witness for equivalence in the given mode, or empty. The full mode on
/// realizable degree-2 pairs is decided through the complete invariant; other
/// cases fall back to a witness-tracking orbit search within the limits.
std::optional<TransformWitness> decide_equivalent(const FormPair& a, const FormPair& b,
                                                  EquivalenceMode mode,
                                                  SearchLimits limits = {});

/// Streams all realizable pairs of the given degree in ascending order of the
/// packed coefficient index (q1 digits before q2 digits, base p).
void for_each_realizable_pair(const FieldContext& ctx, std::uint32_t degree,
                              const std::function<void(const FormPair&)>& fn,
                              SearchLimits limits = {});

std::uint64_t count_realizable_pairs(const FieldContext& ctx, std::uint32_t degree = 2,
                                     SearchLimits limits = {});

struct OrbitSummary {
    std::uint64_t realizable_count = 0;
    std::vector<FormPair> representatives;  // smallest packed member per orbit
    std::vector<std::uint64_t> sizes;       // aligned with representatives

    std::uint64_t orbit_count() const { return representatives.size(); }
};

/// BFS over the realizable pairs with the generator moves of the mode's
/// groups (left: both elementary shears and the swap; right: both shears and
/// the scaling by a primitive root).
OrbitSummary orbit_enumeration(const FieldContext& ctx, EquivalenceMode mode,
                               std::uint32_t degree = 2, SearchLimits limits = {});

std::uint64_t orbit_count(const FieldContext& ctx, EquivalenceMode mode,
                          std::uint32_t degree = 2, SearchLimits limits = {});

std::vector<FormPair> orbit_representatives(const FieldContext& ctx, EquivalenceMode mode,
                                            std::uint32_t degree = 2,
                                            SearchLimits limits = {});

/// Ground-truth oracle: exhaustive scan over every (S, R) in the mode's
/// groups. Quadratic in the group orders; gated by limits.max_prime_brute_force.
bool brute_force_equivalent(const FormPair& a, const FormPair& b, EquivalenceMode mode,
                            SearchLimits limits = {});

/// Deterministic uniform sample of a realizable pair (rejection sampling over
/// the packed index space with the given RNG state).
FormPair random_realizable_pair(const FieldContext& ctx, std::uint32_t degree,
                                std::uint64_t& rng_state);

struct OracleReport {
    std::uint64_t realizable_count = 0;
    std::uint64_t orbit_count = 0;
    std::uint64_t canonical_class_count = 0;
    std::uint64_t within_orbit_mismatches = 0;
    std::uint64_t cross_orbit_collisions = 0;
    std::uint64_t duos_checked = 0;
    std::uint64_t duo_disagreements = 0;

    bool clean() const {
        return within_orbit_mismatches == 0 && cross_orbit_collisions == 0 &&
               duo_disagreements == 0 && orbit_count == canonical_class_count;
    }
};

/// Agreement sweep between the generator-move orbit partition (ground truth)
/// and the canonical-form labels, over every realizable degree-2 pair, plus
/// seeded random duos cross-checking decide_equivalent against the exhaustive
/// oracle (skipped when p exceeds the brute-force budget). Full mode only.
OracleReport run_oracle_sweep(const FieldContext& ctx, std::uint64_t seed,
                              std::uint64_t duo_count, SearchLimits limits = {});

} // namespace pxp
