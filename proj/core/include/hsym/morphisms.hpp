#pragma once

#include "hsym/compositions.hpp"
#include "hsym/hopf.hpp"
#include "hsym/lincomb.hpp"
#include "hsym/report.hpp"
#include "hsym/signed_word.hpp"

namespace hsym {

/// D₁: π ↦ F_{comp(π)} for an unsigned permutation π.
/// Throws std::invalid_argument if π has a negative entry.
RQSymElement d1(const SignedPermutation& pi);

/// D₂: π ↦ F_{wcomp(π)}.
RQSymElement d2(const SignedPermutation& pi);

/// φ₁ on M_α; the result is an ε-free M-basis combination.
LinComb<RegularizedComposition> phi1_M(const RegularizedComposition& alpha);

/// φ₁ on F_α; the result is an ε-free F-basis combination.
LinComb<RegularizedComposition> phi1_F(const RegularizedComposition& alpha);

/// φ₁ applied to an element in either basis; the result keeps the input's basis.
RQSymElement phi1(const RQSymElement& x);

/// φ₂: (−1)^j st(π̄) when π = (⌣^i, π̄, ⌣^j) with π̄ a nonempty run of positive
/// entries and j ≤ 1; ι ↦ ι; 0 otherwise.
LinComb<SignedPermutation> phi2(const SignedPermutation& pi);

/// Linear extensions to combinations.
LinComb<RegularizedComposition> d1(const LinComb<SignedPermutation>& a);
LinComb<RegularizedComposition> d2(const LinComb<SignedPermutation>& a);
LinComb<SignedPermutation> phi2(const LinComb<SignedPermutation>& a);

/// A signed permutation π with wcomp(π) = α.
SignedPermutation d2_preimage(const RegularizedComposition& alpha);

/// Length of the maximal trailing run of negative entries.
std::size_t trailing_negative_run(const SignedPermutation& pi);
/// True when some positive entry precedes a negative one which precedes a positive one.
bool has_plus_minus_plus(const SignedPermutation& pi);

/// Budgets for the morphism sweeps: single inputs, pairs by combined size, and
/// each input of the annihilation lemmas.
struct MorphismBudget {
    long single_max = 4;
    long pair_max = 5;
    long lemma_max = 4;

    static MorphismBudget from_max_degree(long d) { return MorphismBudget{d, d + 1, d}; }
};

/// D₁φ₂(π) = φ₁D₂(π) for every signed permutation with ℓ(π) ≤ max_len,
/// compared in the M basis.
Report verify_square(long max_len, unsigned jobs = 1);

/// Homomorphism laws of φ₂, D₂, D₁ and φ₁ plus the annihilation lemmas and
/// surjectivity of φ₂ and D₂, all at λ = −1.
Report verify_morphism_laws(const MorphismBudget& budget, unsigned jobs = 1);

/// Σ_{n ≤ max_len} 2ⁿ·n!.
std::size_t signed_permutation_count(long max_len);

} // namespace hsym
