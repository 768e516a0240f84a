#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hsym/compositions.hpp"
#include "hsym/lincomb.hpp"
#include "hsym/parallel.hpp"
#include "hsym/rational.hpp"
#include "hsym/report.hpp"
#include "hsym/signed_word.hpp"

namespace hsym {

/// Structure maps of a connected graded bialgebra on basis keys B.
template <class B>
struct HopfContext {
    std::string name;
    B unit_key{};
    std::function<LinComb<B>(const B&, const B&)> product;
    std::function<Tensor<B>(const B&)> coproduct;
    std::function<Rational(const B&)> counit;
    std::function<long(const B&)> degree;
    /// Closed-form antipode; when empty the graded recursion is used.
    std::function<LinComb<B>(const B&)> antipode;

    LinComb<B> unit() const { return LinComb<B>(unit_key); }

    LinComb<B> multiply(const LinComb<B>& a, const LinComb<B>& b) const { return lc_product(a, b, product); }

    Tensor<B> comultiply(const LinComb<B>& a) const {
        Tensor<B> out;
        for (const auto& [key, coeff] : a) {
            out.add_scaled(coproduct(key), coeff);
        }
        return out;
    }
};

template <class B>
using AntipodeMemo = std::map<B, LinComb<B>>;

/// S(x) from Σ S(x′)x″ = ε(x)·1, solving for the (x, 1) term of Δ(x). Every
/// other left factor must have lower degree; std::logic_error otherwise.
template <class B>
LinComb<B> antipode_graded(const HopfContext<B>& ctx, const B& x, AntipodeMemo<B>& memo) {
    if (auto it = memo.find(x); it != memo.end()) {
        return it->second;
    }
    const Tensor<B> delta = ctx.coproduct(x);
    const long dx = ctx.degree(x);
    Rational pivot(0);
    LinComb<B> rest;
    for (const auto& [ab, c] : delta) {
        if (ab.first == x && ab.second == ctx.unit_key) {
            pivot = c;
            continue;
        }
        if (ctx.degree(ab.first) >= dx) {
            throw std::logic_error("antipode recursion does not decrease degree in " + ctx.name);
        }
        rest.add_scaled(ctx.multiply(antipode_graded(ctx, ab.first, memo), LinComb<B>(ab.second)), c);
    }
    if (pivot.is_zero()) {
        throw std::logic_error("coproduct of a basis key lacks the x⊗1 term in " + ctx.name);
    }
    LinComb<B> out = ctx.unit() * ctx.counit(x);
    out -= rest;
    out *= Rational(1) / pivot;
    memo.emplace(x, out);
    return out;
}

template <class B>
LinComb<B> antipode_graded(const HopfContext<B>& ctx, const B& x) {
    AntipodeMemo<B> memo;
    return antipode_graded(ctx, x, memo);
}

/// Closed form when the context has one, otherwise the graded recursion.
template <class B>
LinComb<B> antipode_of(const HopfContext<B>& ctx, const B& x, AntipodeMemo<B>& memo) {
    return ctx.antipode ? ctx.antipode(x) : antipode_graded(ctx, x, memo);
}

template <class B>
LinComb<B> antipode_of(const HopfContext<B>& ctx, const LinComb<B>& a) {
    AntipodeMemo<B> memo;
    LinComb<B> out;
    for (const auto& [key, coeff] : a) {
        out.add_scaled(antipode_of(ctx, key, memo), coeff);
    }
    return out;
}

/// Convolution m∘(S⊗id)∘Δ (left) or m∘(id⊗S)∘Δ (right) applied to x.
template <class B>
LinComb<B> antipode_convolution(const HopfContext<B>& ctx, const B& x, bool left, AntipodeMemo<B>& memo) {
    LinComb<B> out;
    for (const auto& [ab, c] : ctx.coproduct(x)) {
        const LinComb<B> a = left ? antipode_of(ctx, ab.first, memo) : LinComb<B>(ab.first);
        const LinComb<B> b = left ? LinComb<B>(ab.second) : antipode_of(ctx, ab.second, memo);
        out.add_scaled(ctx.multiply(a, b), c);
    }
    return out;
}

// -- concrete algebras -----------------------------------------------------------

/// Δ(σ) = Σ_p st(σ₁⋯σ_p) ⊗ st(σ_{p+1}⋯σ_n).
Tensor<SignedPermutation> hsym_coproduct(const SignedPermutation& sigma);
Rational hsym_counit(const SignedPermutation& sigma);

HopfContext<SignedPermutation> hsym_context(const Rational& lambda);
/// Restriction to unsigned permutations with the shifted shuffle.
HopfContext<SignedPermutation> ssym_context();

LinComb<RegularizedComposition> rqsym_product_M(const RegularizedComposition& alpha,
                                                const RegularizedComposition& beta);
/// Deconcatenation.
Tensor<RegularizedComposition> rqsym_coproduct_M(const RegularizedComposition& alpha);
Rational rqsym_counit(const RegularizedComposition& alpha);
/// S(M_α) = (−1)^{ℓ(α)} Σ_{J ⊨ ℓ(α)} M_{J[α^r]}.
LinComb<RegularizedComposition> rqsym_antipode_M(const RegularizedComposition& alpha);

/// RQSym in the M basis, graded by total weight.
HopfContext<RegularizedComposition> rqsym_m_context();
/// ε-free restriction of the M basis.
HopfContext<RegularizedComposition> qsym_context();

// -- the F basis -------------------------------------------------------------------

/// F_α = Σ_{β⪯α} c_{α,β} M_β.
LinComb<RegularizedComposition> f_to_m(const RegularizedComposition& alpha);
/// M_α = Σ_{β⪯α} (−1)^{ℓ(β)−ℓ(α)} c_{α,β} F_β.
LinComb<RegularizedComposition> m_to_f(const RegularizedComposition& alpha);
LinComb<RegularizedComposition> f_to_m(const LinComb<RegularizedComposition>& a);
LinComb<RegularizedComposition> m_to_f(const LinComb<RegularizedComposition>& a);

/// Deconcatenation plus the splits α = β ⊙ γ.
Tensor<RegularizedComposition> rqsym_coproduct_F(const RegularizedComposition& alpha);
/// F_α F_β, computed through the M basis.
LinComb<RegularizedComposition> rqsym_product_F(const RegularizedComposition& alpha,
                                                const RegularizedComposition& beta);
LinComb<RegularizedComposition> rqsym_product_F(const LinComb<RegularizedComposition>& a,
                                                const LinComb<RegularizedComposition>& b);
LinComb<RegularizedComposition> rqsym_antipode_F(const RegularizedComposition& alpha);

/// RQSym in the F basis (structure maps conjugated through the M basis except
/// the coproduct, which uses its own formula).
HopfContext<RegularizedComposition> rqsym_f_context();

/// An RQSym element tagged with its basis.
struct RQSymElement {
    enum class Basis { M, F };
    Basis basis = Basis::M;
    LinComb<RegularizedComposition> combo;

    RQSymElement to_M() const;
    RQSymElement to_F() const;

    friend bool operator==(const RQSymElement& a, const RQSymElement& b) {
        return a.to_M().combo == b.to_M().combo;
    }
};

// -- verification ---------------------------------------------------------------------

/// Degree budgets for a sweep: single keys, pairs, triples by summed degree.
struct HopfBudget {
    long single_max = 4;
    long pair_max = 5;
    long triple_max = 5;

    static HopfBudget from_max_degree(long d) { return HopfBudget{d, d + 1, d + 1}; }
};

template <class B>
using BasisEnumerator = std::function<std::vector<B>(long)>;

namespace detail {

template <class B>
std::vector<std::vector<B>> strata(const BasisEnumerator<B>& basis, long max) {
    std::vector<std::vector<B>> out;
    for (long d = 0; d <= max; ++d) {
        out.push_back(basis(d));
    }
    return out;
}

template <class B>
std::string encode(const B& key) {
    return key_to_text(key);
}

} // namespace detail

/// Exhaustive check of the bialgebra and antipode axioms within `budget`.
template <class B>
Report verify_hopf(const HopfContext<B>& ctx, const BasisEnumerator<B>& basis, const HopfBudget& budget,
                   unsigned jobs = 1) {
    using detail::encode;
    const auto levels = detail::strata(basis, std::max({budget.single_max, budget.pair_max, budget.triple_max}));

    const std::string single = "degree <= " + std::to_string(budget.single_max);
    const std::string pair = "summed degree <= " + std::to_string(budget.pair_max);
    const std::string triple = "summed degree <= " + std::to_string(budget.triple_max);

    auto blank = [&] {
        Report r(ctx.name);
        r.law("unit", single);
        r.law("counit", single);
        r.law("coassociativity", single);
        r.law("cograded", single);
        r.law("antipode_left", single);
        r.law("antipode_right", single);
        if (ctx.antipode) {
            r.law("antipode_matches_recursion", single);
        }
        r.law("counit_multiplicative", pair);
        r.law("bialgebra", pair);
        r.law("associativity", triple);
        return r;
    };

    std::vector<B> singles;
    for (long d = 0; d <= budget.single_max; ++d) {
        singles.insert(singles.end(), levels[d].begin(), levels[d].end());
    }
    std::vector<std::pair<const B*, const B*>> pairs;
    for (long a = 0; a <= budget.pair_max; ++a) {
        for (long b = 0; a + b <= budget.pair_max; ++b) {
            for (const auto& x : levels[a]) {
                for (const auto& y : levels[b]) {
                    pairs.emplace_back(&x, &y);
                }
            }
        }
    }
    std::vector<std::tuple<const B*, const B*, const B*>> triples;
    for (long a = 0; a <= budget.triple_max; ++a) {
        for (long b = 0; a + b <= budget.triple_max; ++b) {
            for (long c = 0; a + b + c <= budget.triple_max; ++c) {
                for (const auto& x : levels[a]) {
                    for (const auto& y : levels[b]) {
                        for (const auto& z : levels[c]) {
                            triples.emplace_back(&x, &y, &z);
                        }
                    }
                }
            }
        }
    }

    const LinComb<B> one = ctx.unit();

    auto single_work = [&](std::size_t begin, std::size_t end) {
        Report r = blank();
        AntipodeMemo<B> memo;
        for (std::size_t i = begin; i < end; ++i) {
            const B& x = singles[i];
            const LinComb<B> lx(x);
            const std::vector<std::string> in{encode(x)};

            r.expect_equal(r.law("unit"), in, ctx.product(x, ctx.unit_key), lx);
            r.expect_equal(r.law("unit"), in, ctx.product(ctx.unit_key, x), lx);

            const Tensor<B> delta = ctx.coproduct(x);
            LinComb<B> left, right;
            for (const auto& [ab, c] : delta) {
                left.add(ab.second, c * ctx.counit(ab.first));
                right.add(ab.first, c * ctx.counit(ab.second));
            }
            r.expect_equal(r.law("counit"), in, left, lx);
            r.expect_equal(r.law("counit"), in, right, lx);

            Tensor3<B> lhs, rhs;
            for (const auto& [ab, c] : delta) {
                for (const auto& [uv, c2] : ctx.coproduct(ab.first)) {
                    lhs.add(std::tuple<B, B, B>(uv.first, uv.second, ab.second), c * c2);
                }
                for (const auto& [uv, c2] : ctx.coproduct(ab.second)) {
                    rhs.add(std::tuple<B, B, B>(ab.first, uv.first, uv.second), c * c2);
                }
            }
            r.expect_equal(r.law("coassociativity"), in, lhs, rhs);

            Tensor<B> off_degree;
            for (const auto& [ab, c] : delta) {
                if (ctx.degree(ab.first) + ctx.degree(ab.second) != ctx.degree(x)) {
                    off_degree.add(ab, c);
                }
            }
            r.expect_equal(r.law("cograded"), in, off_degree, Tensor<B>{});

            const LinComb<B> expected = one * ctx.counit(x);
            r.expect_equal(r.law("antipode_left"), in, antipode_convolution(ctx, x, true, memo), expected);
            r.expect_equal(r.law("antipode_right"), in, antipode_convolution(ctx, x, false, memo), expected);
            if (ctx.antipode) {
                AntipodeMemo<B> recursion_memo;
                r.expect_equal(r.law("antipode_matches_recursion"), in, ctx.antipode(x),
                               antipode_graded(ctx, x, recursion_memo));
            }
        }
        return r;
    };

    auto pair_work = [&](std::size_t begin, std::size_t end) {
        Report r = blank();
        for (std::size_t i = begin; i < end; ++i) {
            const B& x = *pairs[i].first;
            const B& y = *pairs[i].second;
            const std::vector<std::string> in{encode(x), encode(y)};
            const LinComb<B> xy = ctx.product(x, y);

            Rational eps_xy(0);
            for (const auto& [key, c] : xy) {
                eps_xy += c * ctx.counit(key);
            }
            r.expect_equal(r.law("counit_multiplicative"), in, LinComb<B>(ctx.unit_key, eps_xy),
                           LinComb<B>(ctx.unit_key, ctx.counit(x) * ctx.counit(y)));

            r.expect_equal(r.law("bialgebra"), in, ctx.comultiply(xy),
                           tensor_bilinear(ctx.coproduct(x), ctx.coproduct(y), ctx.product));
        }
        return r;
    };

    auto triple_work = [&](std::size_t begin, std::size_t end) {
        Report r = blank();
        for (std::size_t i = begin; i < end; ++i) {
            const auto& [px, py, pz] = triples[i];
            const std::vector<std::string> in{encode(*px), encode(*py), encode(*pz)};
            const LinComb<B> lhs = ctx.multiply(ctx.product(*px, *py), LinComb<B>(*pz));
            const LinComb<B> rhs = ctx.multiply(LinComb<B>(*px), ctx.product(*py, *pz));
            r.expect_equal(r.law("associativity"), in, lhs, rhs);
        }
        return r;
    };

    Report out = blank();
    for (const auto& part : parallel_chunks<Report>(singles.size(), jobs, single_work)) {
        out.merge(part);
    }
    for (const auto& part : parallel_chunks<Report>(pairs.size(), jobs, pair_work)) {
        out.merge(part);
    }
    for (const auto& part : parallel_chunks<Report>(triples.size(), jobs, triple_work)) {
        out.merge(part);
    }
    return out;
}

/// Basis enumerators matching the contexts above.
std::vector<SignedPermutation> hsym_basis(long degree);
std::vector<SignedPermutation> ssym_basis(long degree);
std::vector<RegularizedComposition> rqsym_basis(long total_weight);
std::vector<RegularizedComposition> qsym_basis(long weight);

} // namespace hsym
