#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsym/lincomb.hpp"
#include "hsym/rational.hpp"

namespace hsym {

using Letter = int;

namespace detail {
// Canonical key order: shorter first, then lexicographic.
std::strong_ordering length_lex(const std::vector<Letter>& a, const std::vector<Letter>& b);
} // namespace detail

/// A word over the nonzero integers. Letters may repeat.
class SignedWord {
public:
    SignedWord() = default;
    /// Throws std::invalid_argument if a letter is 0.
    explicit SignedWord(std::vector<Letter> letters);
    SignedWord(std::initializer_list<Letter> letters) : SignedWord(std::vector<Letter>(letters)) {}

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    friend bool operator==(const SignedWord&, const SignedWord&) = default;
    friend std::strong_ordering operator<=>(const SignedWord& a, const SignedWord& b) {
        return detail::length_lex(a.letters_, b.letters_);
    }

private:
    std::vector<Letter> letters_;
};

/// A signed permutation π₁⋯πₙ: the absolute values of the entries are exactly
/// {1, …, n}. The empty permutation is the identity ι.
class SignedPermutation {
public:
    SignedPermutation() = default;
    /// Throws std::invalid_argument unless |entries| is a permutation of [n].
    explicit SignedPermutation(std::vector<Letter> entries);
    SignedPermutation(std::initializer_list<Letter> entries) : SignedPermutation(std::vector<Letter>(entries)) {}

    static SignedPermutation identity() { return {}; }

    const std::vector<Letter>& entries() const { return entries_; }
    const std::vector<Letter>& letters() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    Letter operator[](std::size_t i) const { return entries_[i]; }

    SignedWord word() const { return SignedWord(entries_); }
    /// True when every entry is positive, i.e. π lies in the symmetric group.
    bool is_unsigned() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend std::strong_ordering operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
        return detail::length_lex(a.entries_, b.entries_);
    }

private:
    struct Unchecked {};
    SignedPermutation(Unchecked, std::vector<Letter> entries) : entries_(std::move(entries)) {}
    friend SignedPermutation standardize(const SignedWord& w);

    std::vector<Letter> entries_;
};

/// Associative product on letters; `std::nullopt` stands for a•b = 0.
class BulletProduct {
public:
    using Rule = std::function<std::optional<Letter>(Letter, Letter)>;

    explicit BulletProduct(Rule rule) : rule_(std::move(rule)) {}

    std::optional<Letter> operator()(Letter a, Letter b) const { return rule_(a, b); }

    /// a•b = a when a and b are both negative, 0 otherwise. This is the bullet of
    /// the signed-permutation algebra.
    static BulletProduct negative_left();
    /// a•b = 0 for all letters; quasi-shuffle degenerates to shuffle.
    static BulletProduct annihilating();

private:
    Rule rule_;
};

// -- standardization and shifting -------------------------------------------

/// Unique signed permutation with the signs of `w` whose absolute values are
/// ranked by (|letter|, position).
SignedPermutation standardize(const SignedWord& w);

/// Positive letters get +m, negative letters get -m.
SignedWord shift(const SignedWord& w, unsigned m);

/// Concatenation of two words.
SignedWord concat(const SignedWord& u, const SignedWord& v);

/// Sub-word of letters [first, last).
SignedWord slice(const SignedWord& w, std::size_t first, std::size_t last);

// -- products ----------------------------------------------------------------

/// Quasi-shuffle ⋆_λ via the left recursion on leading letters.
LinComb<SignedWord> quasi_shuffle(const SignedWord& u, const SignedWord& v, const Rational& lambda,
                                  const BulletProduct& bullet);

/// One order-preserving pair (φ, ψ) with images covering [m+n-r]; entries are
/// 0-based output positions.
struct StuffleMap {
    std::vector<std::size_t> phi;
    std::vector<std::size_t> psi;
};

/// All of J_{m,n,r}, enumerated as (choose φ's image) × (choose the r collisions).
std::vector<StuffleMap> stuffle_maps(std::size_t m, std::size_t n, std::size_t r);

/// Quasi-shuffle ⋆_λ via the stuffle sum over J_{m,n,r}. Independent of the
/// recursive implementation; used to cross-check it.
LinComb<SignedWord> stuffle(const SignedWord& u, const SignedWord& v, const Rational& lambda,
                            const BulletProduct& bullet);

/// One unrolling of the right-sided recursion
/// wc ⋆ vd = (w ⋆ vd)c + (wc ⋆ v)d + λ(w ⋆ v)(c•d).
/// Throws std::invalid_argument if either word is empty.
LinComb<SignedWord> right_quasi_shuffle_step(const SignedWord& wc, const SignedWord& vd, const Rational& lambda,
                                             const BulletProduct& bullet);

/// σ ⋆̄_λ τ = st(σ ⋆_λ τ[ℓ(σ)]) with the negative-left bullet.
LinComb<SignedPermutation> shifted_quasi_shuffle(const SignedPermutation& sigma, const SignedPermutation& tau,
                                                 const Rational& lambda);

/// Same product, shifting τ by `k ≥ ℓ(σ)` instead of ℓ(σ).
LinComb<SignedPermutation> shifted_quasi_shuffle_with_shift(const SignedPermutation& sigma,
                                                            const SignedPermutation& tau, const Rational& lambda,
                                                            unsigned k);

/// Shifted shuffle of ordinary permutations (the λ = 0 product).
LinComb<SignedPermutation> shifted_shuffle(const SignedPermutation& sigma, const SignedPermutation& tau);

LinComb<SignedPermutation> standardize(const LinComb<SignedWord>& words);

// -- descents ----------------------------------------------------------------

/// {i ∈ [n-1] : π_i > max(0, π_{i+1})}, plus n unless π_n < 0. Sorted, 1-based.
std::vector<int> weak_descent_set(const SignedPermutation& pi);

/// {i ∈ [0, n-1] : π_i > π_{i+1}} with π_0 = 0. Sorted.
std::vector<int> descent_set(const SignedPermutation& pi);

/// Signed counts of the all-negative words in ⌣^m ⋆_{-1} ⌣^n[m], keyed by length.
LinComb<int> multinomial_collapse(unsigned m, unsigned n);

// -- enumeration -------------------------------------------------------------

/// All 2ⁿ·n! signed permutations of [n], in canonical order.
std::vector<SignedPermutation> signed_permutations(unsigned n);
/// All n! permutations of [n], in canonical order.
std::vector<SignedPermutation> permutations(unsigned n);

// -- text encoding -----------------------------------------------------------

/// "5,-3,2" or "id" for the empty word.
std::string to_string(const SignedWord& w);
std::string to_string(const SignedPermutation& p);
/// Throws ParseError with the 1-based entry index of the problem.
SignedWord parse_signed_word(std::string_view text);
SignedPermutation parse_signed_permutation(std::string_view text);

} // namespace hsym
