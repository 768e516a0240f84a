#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsym/compositions.hpp"
#include "hsym/io.hpp"
#include "hsym/lincomb.hpp"
#include "hsym/rational.hpp"
#include "hsym/report.hpp"
#include "hsym/signed_word.hpp"

namespace hsym {

/// Finite poset on nonzero integer labels with distinct absolute values,
/// given by its covering (or any generating) relations.
class SignedLabeledPoset {
public:
    SignedLabeledPoset() = default;
    /// Throws std::invalid_argument on a zero or repeated |label|, a relation
    /// naming an unknown label, or a cycle.
    SignedLabeledPoset(std::vector<Letter> labels, std::vector<std::pair<Letter, Letter>> covers);

    /// The chain a₁ < a₂ < ⋯ < a_n.
    static SignedLabeledPoset chain(const std::vector<Letter>& word);
    static SignedLabeledPoset chain(const SignedPermutation& pi) { return chain(pi.entries()); }

    /// Labels sorted by absolute value.
    const std::vector<Letter>& labels() const { return labels_; }
    const std::vector<std::pair<Letter, Letter>>& covers() const { return covers_; }
    std::size_t size() const { return labels_.size(); }

    /// Index of a label in labels(); throws std::out_of_range if absent.
    std::size_t index_of(Letter label) const;
    /// a <_P b (strictly), via the transitive closure.
    bool less(Letter a, Letter b) const;

    /// Relabels by standardizing the labels, so |labels| = [n].
    SignedLabeledPoset standardized() const;
    /// Label map P → st(P).
    std::map<Letter, Letter> standardization_map() const;

    /// Disjoint union; throws std::invalid_argument if |labels| overlap.
    friend SignedLabeledPoset disjoint_union(const SignedLabeledPoset& p, const SignedLabeledPoset& q);

private:
    std::vector<Letter> labels_;
    std::vector<std::pair<Letter, Letter>> covers_;
    std::vector<std::vector<bool>> below_; // below_[i][j]: labels_[i] < labels_[j]
};

SignedLabeledPoset disjoint_union(const SignedLabeledPoset& p, const SignedLabeledPoset& q);

/// One constraint f(lower) ≤ f(upper), strict when lower > max(0, upper).
struct CoverConstraint {
    Letter lower;
    Letter upper;
    bool strict;

    friend bool operator==(const CoverConstraint&, const CoverConstraint&) = default;
    friend auto operator<=>(const CoverConstraint&, const CoverConstraint&) = default;
};

std::vector<CoverConstraint> cover_constraints(const SignedLabeledPoset& P);

/// L(P): linear extensions of st(P) as signed permutations, in canonical order.
std::vector<SignedPermutation> linear_extensions(const SignedLabeledPoset& P);

/// A map from labels to values in [k]; values are listed in labels() order.
struct PPartition {
    std::vector<Letter> labels;
    std::vector<int> values;

    int at(Letter label) const;
    friend bool operator==(const PPartition&, const PPartition&) = default;
    friend auto operator<=>(const PPartition&, const PPartition&) = default;
};

/// A(P) restricted to values in [k], in lexicographic order of value vectors.
std::vector<PPartition> enumerate_ppartitions(const SignedLabeledPoset& P, int k);

/// Polynomial in x₁…x_k with exponents in Ñ and rational coefficients.
class TruncatedSeries {
public:
    using Exponents = std::vector<NTilde>;

    TruncatedSeries() = default;
    explicit TruncatedSeries(int k) : k_(k) {}

    static TruncatedSeries one(int k);
    static TruncatedSeries monomial(Exponents exps, const Rational& coeff = Rational(1));

    int k() const { return k_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    Rational coeff(const Exponents& e) const;

    /// Throws std::invalid_argument if the exponent vector does not have length k.
    void add(const Exponents& e, const Rational& c);
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& c);

    /// Exponents add in Ñ. Throws std::invalid_argument if the variable counts differ.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// Sets x_{m+1} … x_k to zero, keeping m variables.
    TruncatedSeries restrict_to(int m) const;

private:
    int k_ = 0;
    std::map<Exponents, Rational> terms_;
};

/// Γ(P) = Σ_{f ∈ A(P)} Π x_{f(i)}^{1 or ε}, truncated to k variables.
TruncatedSeries gamma(const SignedLabeledPoset& P, int k);
TruncatedSeries gamma(const SignedPermutation& pi, int k);
/// Linear extension of Γ over a combination of signed permutations.
TruncatedSeries gamma(const LinComb<SignedPermutation>& a, int k);

/// M_α in k variables: strictly increasing index tuples.
TruncatedSeries expand_M(const RegularizedComposition& alpha, int k);
/// F_α in k variables: weakly increasing index tuples of length ‖α‖, strict
/// after each position of D(α), with exponent ε on ε slots and 1 on the others.
TruncatedSeries expand_F(const RegularizedComposition& alpha, int k);
TruncatedSeries expand_M(const LinComb<RegularizedComposition>& a, int k);
TruncatedSeries expand_F(const LinComb<RegularizedComposition>& a, int k);

/// M-basis coordinates of a quasi-symmetric series: the coefficient of M_α is
/// that of x₁^α₁⋯x_ℓ^α_ℓ. Exact when k is at least the longest ℓ(α) present.
LinComb<RegularizedComposition> m_coordinates(const TruncatedSeries& s);
/// Γ(P) in the F basis, read off from a truncation in |P| variables.
LinComb<RegularizedComposition> gamma_F(const SignedLabeledPoset& P);

/// Parses lines "a < b" (a relation) or "a" (a lone element); '#' starts a comment.
/// Throws ParseError carrying the 1-based line number.
SignedLabeledPoset parse_poset(std::string_view text);

/// {"k": k, "terms": [{"coeff": "...", "exps": ["1","e","0",…]}]}.
json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);
json to_json(const std::vector<PPartition>& fs);
/// "3·x1^e x2 + …"; "0" when empty.
std::string to_text(const TruncatedSeries& s);

/// Budgets for the generating-function sweep.
struct GammaBudget {
    long single_max = 3;
    int single_k = 6;
    long pair_max = 4;
    int pair_k = 8;
    int union_pairs = 50;
    int union_size = 3;
    int union_k = 6;
    int extension_posets = 50;
    int extension_size = 4;
    int extension_k = 4;
    std::uint32_t seed = 20260101;

    static GammaBudget from_max_degree(long d);
};

/// Random poset on `n` elements whose labels are drawn from `pool` (absolute
/// values, consumed from the back) with random signs and random relations.
SignedLabeledPoset random_poset(std::mt19937& rng, int n, std::vector<Letter>& pool);

/// Γ(π) = F_{wcomp(π)}, Γ(σ)Γ(τ) = Γ(σ ⋆̄₋₁ τ), Γ(P ⊔ Q) = Γ(P)Γ(Q) and
/// A(P) = ⋃_{π ∈ L(P)} A(π).
Report verify_gamma_theorems(const GammaBudget& budget, unsigned jobs = 1);

} // namespace hsym
