#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <functional>
#include <vector>

#include "hsym/lincomb.hpp"
#include "hsym/rational.hpp"
#include "hsym/signed_word.hpp"

namespace hsym {

/// Element of the monoid ℕ ∪ {ε}, ordered 0 < ε < 1 < 2 < ⋯.
class NTilde {
public:
    enum class Kind { zero, epsilon, positive };

    constexpr NTilde() = default;

    static constexpr NTilde zero() { return NTilde(); }
    static constexpr NTilde eps() { return NTilde(Kind::epsilon, 0); }
    /// n ≥ 0; 0 maps to zero(). Throws std::invalid_argument on negative n.
    static NTilde of(long n);

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::zero; }
    bool is_epsilon() const { return kind_ == Kind::epsilon; }
    bool is_positive() const { return kind_ == Kind::positive; }
    /// Integer value, with ε counted as 0.
    long value() const { return value_; }
    /// Number of slots the part occupies in total weight: ε → 1, n → n.
    long slots() const { return kind_ == Kind::epsilon ? 1 : value_; }

    /// "0", "e" or the decimal value.
    std::string to_string() const;

    friend NTilde operator+(NTilde a, NTilde b);
    NTilde& operator+=(NTilde o) { return *this = *this + o; }

    friend bool operator==(const NTilde&, const NTilde&) = default;
    friend std::strong_ordering operator<=>(const NTilde& a, const NTilde& b);

private:
    constexpr NTilde(Kind kind, long value) : kind_(kind), value_(value) {}

    Kind kind_ = Kind::zero;
    long value_ = 0;
};

NTilde ntilde_add(NTilde a, NTilde b);

/// Sequence of nonnegative integers.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<long> parts);
    WeakComposition(std::initializer_list<long> parts) : WeakComposition(std::vector<long>(parts)) {}

    const std::vector<long>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
    friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

private:
    std::vector<long> parts_;
};

class RegularizedComposition;

/// Sequence of positive integers.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<long> parts);
    Composition(std::initializer_list<long> parts) : Composition(std::vector<long>(parts)) {}

    const std::vector<long>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    long weight() const;
    /// Partial sums; the last one equals the weight.
    std::vector<int> descent_set() const;

    RegularizedComposition regularized() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

private:
    std::vector<long> parts_;
};

/// Sequence of parts each positive or ε. Keys of the M and F bases.
class RegularizedComposition {
public:
    using Part = NTilde;

    RegularizedComposition() = default;
    /// Throws std::invalid_argument on a zero part.
    explicit RegularizedComposition(std::vector<NTilde> parts);
    RegularizedComposition(std::initializer_list<NTilde> parts)
        : RegularizedComposition(std::vector<NTilde>(parts)) {}

    const std::vector<NTilde>& parts() const { return parts_; }
    const std::vector<NTilde>& letters() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    const NTilde& operator[](std::size_t i) const { return parts_[i]; }

    /// True when no part is ε.
    bool is_composition() const;
    /// ᾱ: the parts with every ε removed.
    RegularizedComposition without_eps() const;

    friend bool operator==(const RegularizedComposition&, const RegularizedComposition&) = default;
    friend std::strong_ordering operator<=>(const RegularizedComposition& a, const RegularizedComposition& b);

private:
    std::vector<NTilde> parts_;
};

/// Shorthand: a positive part.
inline NTilde P(long n) { return NTilde::of(n); }
/// Shorthand: the part ε.
inline constexpr NTilde E = NTilde::eps();

// -- statistics ----------------------------------------------------------------

struct CompositionStats {
    NTilde weight;          ///< |α| in Ñ
    long total_weight = 0;  ///< ‖α‖
    long eps_length = 0;    ///< ℓ_ε(α)
    std::vector<int> descent_set;
};

CompositionStats stats(const RegularizedComposition& alpha);
NTilde weight(const RegularizedComposition& alpha);
long total_weight(const RegularizedComposition& alpha);
long eps_length(const RegularizedComposition& alpha);
/// End positions, in the slot expansion, of the positive parts.
std::vector<int> descent_set(const RegularizedComposition& alpha);

/// α = (ε^{i₁}, s₁, ε^{i₂}, …, s_k, ε^{i_{k+1}}) with single positive parts s_q.
struct PartBlocks {
    std::vector<long> eps_runs;  ///< i₁ … i_{k+1}
    std::vector<long> positives; ///< s₁ … s_k
};

PartBlocks part_blocks(const RegularizedComposition& alpha);
RegularizedComposition from_part_blocks(const PartBlocks& blocks);

// -- conversions -----------------------------------------------------------------

RegularizedComposition regularize(const WeakComposition& alpha);
WeakComposition deregularize(const RegularizedComposition& alpha);

/// (a₁, a₂ − a₁, …, n − a_k) for S = {a₁ < ⋯ < a_k = n}.
/// Throws std::invalid_argument unless S ⊆ [n] and n ∈ S.
Composition comp_of_descents(const std::vector<int>& S, int n);

// -- refinement --------------------------------------------------------------------

/// β ⪯ α: β refines α.
bool refines(const RegularizedComposition& beta, const RegularizedComposition& alpha);

/// Every β with β ⪯ α, in canonical order.
std::vector<RegularizedComposition> enumerate_refinements(const RegularizedComposition& alpha);

/// Calls visit(β, c_{α,β}) once for every β ⪯ α, unordered.
void for_each_refinement(const RegularizedComposition& alpha,
                         const std::function<void(const RegularizedComposition&, const BigInt&)>& visit);

/// c_{α,β}; 0 when β does not refine α.
BigInt refinement_coefficient(const RegularizedComposition& alpha, const RegularizedComposition& beta);

// -- structural operations -------------------------------------------------------------

RegularizedComposition reversal(const RegularizedComposition& alpha);
RegularizedComposition concat(const RegularizedComposition& alpha, const RegularizedComposition& beta);
/// (α₁, …, α_k + β₁, …, β_l). Throws std::domain_error unless α_k and β₁ are positive.
RegularizedComposition near_concat(const RegularizedComposition& alpha, const RegularizedComposition& beta);
/// Groups consecutive parts of α by J and sums each group in Ñ.
/// Throws std::invalid_argument unless J is a composition of ℓ(α).
RegularizedComposition j_apply(const Composition& J, const RegularizedComposition& alpha);

/// Quasi-shuffle of compositions with merged parts added in Ñ.
LinComb<RegularizedComposition> star_product(const RegularizedComposition& alpha,
                                             const RegularizedComposition& beta);

/// Negative runs become ε runs; each maximal positive block becomes the
/// composition of the descents of its standardization.
RegularizedComposition wcomp(const SignedPermutation& pi);

// -- enumeration ---------------------------------------------------------------------

/// All regularized compositions with ‖α‖ = w, in canonical order.
std::vector<RegularizedComposition> regularized_compositions(long w);
/// All regularized compositions with ‖α‖ ≤ w, in canonical order.
std::vector<RegularizedComposition> regularized_compositions_upto(long w);
/// All compositions of n.
std::vector<Composition> compositions(long n);

// -- text encoding -----------------------------------------------------------------------

/// "1,e,2" or "empty".
std::string to_string(const RegularizedComposition& alpha);
std::string to_string(const Composition& alpha);
/// Throws ParseError with the 1-based index of the bad part.
RegularizedComposition parse_regularized_composition(std::string_view text);

} // namespace hsym
