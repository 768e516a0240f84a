#include "hsym/hopf.hpp"

#include <map>
#include <tuple>

namespace hsym {

Tensor<SignedPermutation> hsym_coproduct(const SignedPermutation& sigma) {
    Tensor<SignedPermutation> out;
    const SignedWord w = sigma.word();
    for (std::size_t p = 0; p <= w.size(); ++p) {
        out.add(std::pair(standardize(slice(w, 0, p)), standardize(slice(w, p, w.size()))), Rational(1));
    }
    return out;
}

Rational hsym_counit(const SignedPermutation& sigma) { return sigma.empty() ? Rational(1) : Rational(0); }

HopfContext<SignedPermutation> hsym_context(const Rational& lambda) {
    HopfContext<SignedPermutation> ctx;
    ctx.name = "hsym(lambda=" + lambda.to_string() + ")";
    ctx.product = [lambda](const SignedPermutation& a, const SignedPermutation& b) {
        return shifted_quasi_shuffle(a, b, lambda);
    };
    ctx.coproduct = hsym_coproduct;
    ctx.counit = hsym_counit;
    ctx.degree = [](const SignedPermutation& p) { return static_cast<long>(p.size()); };
    return ctx;
}

HopfContext<SignedPermutation> ssym_context() {
    HopfContext<SignedPermutation> ctx = hsym_context(Rational(0));
    ctx.name = "ssym";
    ctx.product = [](const SignedPermutation& a, const SignedPermutation& b) { return shifted_shuffle(a, b); };
    return ctx;
}

LinComb<RegularizedComposition> rqsym_product_M(const RegularizedComposition& alpha,
                                                const RegularizedComposition& beta) {
    return star_product(alpha, beta);
}

Tensor<RegularizedComposition> rqsym_coproduct_M(const RegularizedComposition& alpha) {
    Tensor<RegularizedComposition> out;
    const auto& parts = alpha.parts();
    for (std::size_t p = 0; p <= parts.size(); ++p) {
        out.add(std::pair(RegularizedComposition(std::vector<NTilde>(parts.begin(), parts.begin() + p)),
                          RegularizedComposition(std::vector<NTilde>(parts.begin() + p, parts.end()))),
                Rational(1));
    }
    return out;
}

Rational rqsym_counit(const RegularizedComposition& alpha) { return alpha.empty() ? Rational(1) : Rational(0); }

LinComb<RegularizedComposition> rqsym_antipode_M(const RegularizedComposition& alpha) {
    const RegularizedComposition rev = reversal(alpha);
    const Rational sign = alpha.size() % 2 == 0 ? Rational(1) : Rational(-1);
    LinComb<RegularizedComposition> out;
    for (const Composition& J : compositions(static_cast<long>(alpha.size()))) {
        out.add(j_apply(J, rev), sign);
    }
    return out;
}

HopfContext<RegularizedComposition> rqsym_m_context() {
    HopfContext<RegularizedComposition> ctx;
    ctx.name = "rqsym-m";
    ctx.product = rqsym_product_M;
    ctx.coproduct = rqsym_coproduct_M;
    ctx.counit = rqsym_counit;
    ctx.degree = [](const RegularizedComposition& a) { return total_weight(a); };
    ctx.antipode = rqsym_antipode_M;
    return ctx;
}

HopfContext<RegularizedComposition> qsym_context() {
    HopfContext<RegularizedComposition> ctx = rqsym_m_context();
    ctx.name = "qsym";
    return ctx;
}

LinComb<RegularizedComposition> f_to_m(const RegularizedComposition& alpha) {
    return f_to_m(LinComb<RegularizedComposition>(alpha));
}

LinComb<RegularizedComposition> m_to_f(const RegularizedComposition& alpha) {
    return m_to_f(LinComb<RegularizedComposition>(alpha));
}

namespace {

// Σ_key coeff · Σ_{β ⪯ key} c_{key,β} M_β in one accumulator.
LinComb<RegularizedComposition> expand_refinements(const LinComb<RegularizedComposition>& a) {
    LinComb<RegularizedComposition> out;
    for (const auto& [alpha, coeff] : a) {
        for_each_refinement(alpha, [&](const RegularizedComposition& beta, const BigInt& c) {
            out.add(beta, coeff * Rational(c));
        });
    }
    return out;
}

} // namespace

LinComb<RegularizedComposition> f_to_m(const LinComb<RegularizedComposition>& a) { return expand_refinements(a); }

// Triangular solve of Σ_β b_β F_β = a. A strict refinement has fewer ε's, or as
// many ε's and more positive parts, so this order meets every key before its
// refinements and each popped coefficient is final.
LinComb<RegularizedComposition> m_to_f(const LinComb<RegularizedComposition>& a) {
    using Rank = std::tuple<long, long, RegularizedComposition>;
    auto rank = [](const RegularizedComposition& k) {
        const long eps = eps_length(k);
        return Rank{-eps, static_cast<long>(k.size()) - eps, k};
    };
    std::map<Rank, Rational> work;
    for (const auto& [key, coeff] : a) {
        work.emplace(rank(key), coeff);
    }
    LinComb<RegularizedComposition> out;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const RegularizedComposition& alpha = std::get<2>(node.key());
        const Rational b = node.mapped();
        for_each_refinement(alpha, [&](const RegularizedComposition& beta, const BigInt& c) {
            if (beta == alpha) {
                return;
            }
            auto [it, inserted] = work.try_emplace(rank(beta), Rational(0));
            it->second -= b * Rational(c);
            if (it->second.is_zero()) {
                work.erase(it);
            }
        });
        out.add(alpha, b);
    }
    return out;
}

Tensor<RegularizedComposition> rqsym_coproduct_F(const RegularizedComposition& alpha) {
    Tensor<RegularizedComposition> out = rqsym_coproduct_M(alpha);
    const auto& parts = alpha.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].is_positive()) {
            continue;
        }
        for (long s = 1; s < parts[i].value(); ++s) {
            std::vector<NTilde> left(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i));
            left.push_back(NTilde::of(s));
            std::vector<NTilde> right{NTilde::of(parts[i].value() - s)};
            right.insert(right.end(), parts.begin() + static_cast<std::ptrdiff_t>(i) + 1, parts.end());
            out.add(std::pair(RegularizedComposition(std::move(left)), RegularizedComposition(std::move(right))),
                    Rational(1));
        }
    }
    return out;
}

LinComb<RegularizedComposition> rqsym_product_F(const LinComb<RegularizedComposition>& a,
                                                const LinComb<RegularizedComposition>& b) {
    return m_to_f(lc_product(f_to_m(a), f_to_m(b), rqsym_product_M));
}

LinComb<RegularizedComposition> rqsym_product_F(const RegularizedComposition& alpha,
                                                const RegularizedComposition& beta) {
    return rqsym_product_F(LinComb<RegularizedComposition>(alpha), LinComb<RegularizedComposition>(beta));
}

LinComb<RegularizedComposition> rqsym_antipode_F(const RegularizedComposition& alpha) {
    return m_to_f(lc_map(f_to_m(alpha), [](const RegularizedComposition& k) { return rqsym_antipode_M(k); }));
}

HopfContext<RegularizedComposition> rqsym_f_context() {
    HopfContext<RegularizedComposition> ctx;
    ctx.name = "rqsym-f";
    ctx.product = [](const RegularizedComposition& a, const RegularizedComposition& b) {
        return rqsym_product_F(a, b);
    };
    ctx.coproduct = rqsym_coproduct_F;
    ctx.counit = rqsym_counit;
    ctx.degree = [](const RegularizedComposition& a) { return total_weight(a); };
    ctx.antipode = rqsym_antipode_F;
    return ctx;
}

RQSymElement RQSymElement::to_M() const {
    return basis == Basis::M ? *this : RQSymElement{Basis::M, f_to_m(combo)};
}

RQSymElement RQSymElement::to_F() const {
    return basis == Basis::F ? *this : RQSymElement{Basis::F, m_to_f(combo)};
}

std::vector<SignedPermutation> hsym_basis(long degree) { return signed_permutations(static_cast<unsigned>(degree)); }

std::vector<SignedPermutation> ssym_basis(long degree) { return permutations(static_cast<unsigned>(degree)); }

std::vector<RegularizedComposition> rqsym_basis(long total) { return regularized_compositions(total); }

std::vector<RegularizedComposition> qsym_basis(long weight) {
    std::vector<RegularizedComposition> out;
    for (const auto& c : compositions(weight)) {
        out.push_back(c.regularized());
    }
    return out;
}

} // namespace hsym
