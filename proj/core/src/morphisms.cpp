#include "hsym/morphisms.hpp"

#include <algorithm>
#include <stdexcept>

#include "hsym/parallel.hpp"

namespace hsym {

namespace {

using Comp = RegularizedComposition;
using Combo = LinComb<RegularizedComposition>;

const Rational kMinusOne(-1);

std::vector<SignedPermutation> signed_upto(long n) {
    std::vector<SignedPermutation> out;
    for (long k = 0; k <= n; ++k) {
        auto level = signed_permutations(static_cast<unsigned>(k));
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<SignedPermutation> unsigned_upto(long n) {
    std::vector<SignedPermutation> out;
    for (long k = 0; k <= n; ++k) {
        auto level = permutations(static_cast<unsigned>(k));
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Combo phi1_M_lin(const Combo& a) {
    return lc_map(a, [](const Comp& k) { return phi1_M(k); });
}

Combo star(const Combo& a, const Combo& b) { return lc_product(a, b, rqsym_product_M); }

Tensor<Comp> to_m_tensor(const Tensor<Comp>& t) {
    return tensor_map(t, [](const Comp& k) { return f_to_m(k); }, [](const Comp& k) { return f_to_m(k); });
}

Tensor<Comp> deconcat(const Combo& a) {
    Tensor<Comp> out;
    for (const auto& [key, c] : a) {
        out.add_scaled(rqsym_coproduct_M(key), c);
    }
    return out;
}

template <class Work>
Report run_chunks(std::size_t n, unsigned jobs, const Report& blank, Work&& work) {
    Report out = blank;
    for (const auto& part : parallel_chunks<Report>(n, jobs, [&](std::size_t b, std::size_t e) {
             Report r = blank;
             work(r, b, e);
             return r;
         })) {
        out.merge(part);
    }
    return out;
}

} // namespace

RQSymElement d1(const SignedPermutation& pi) {
    if (!pi.is_unsigned()) {
        throw std::invalid_argument("D1 is defined on unsigned permutations, got " + to_string(pi));
    }
    const Composition c = comp_of_descents(weak_descent_set(pi), static_cast<int>(pi.size()));
    return RQSymElement{RQSymElement::Basis::F, Combo(c.regularized())};
}

RQSymElement d2(const SignedPermutation& pi) { return RQSymElement{RQSymElement::Basis::F, Combo(wcomp(pi))}; }

Combo phi1_M(const Comp& alpha) {
    if (alpha.empty()) {
        return Combo(alpha);
    }
    if (!alpha[0].is_positive()) {
        return {};
    }
    return Combo(alpha.without_eps(), eps_length(alpha) % 2 == 0 ? Rational(1) : kMinusOne);
}

Combo phi1_F(const Comp& alpha) {
    if (alpha.empty()) {
        return Combo(alpha);
    }
    const auto& p = alpha.parts();
    std::size_t first = 0;
    while (first < p.size() && p[first].is_epsilon()) {
        ++first;
    }
    std::size_t last = p.size();
    while (last > first && p[last - 1].is_epsilon()) {
        --last;
    }
    const std::size_t j = p.size() - last;
    if (first == last || j > 1) {
        return {};
    }
    for (std::size_t i = first; i < last; ++i) {
        if (p[i].is_epsilon()) {
            return {};
        }
    }
    return Combo(Comp(std::vector<NTilde>(p.begin() + static_cast<std::ptrdiff_t>(first),
                                          p.begin() + static_cast<std::ptrdiff_t>(last))),
                 j == 0 ? Rational(1) : kMinusOne);
}

RQSymElement phi1(const RQSymElement& x) {
    if (x.basis == RQSymElement::Basis::M) {
        return RQSymElement{RQSymElement::Basis::M, phi1_M_lin(x.combo)};
    }
    return RQSymElement{RQSymElement::Basis::F, lc_map(x.combo, [](const Comp& k) { return phi1_F(k); })};
}

LinComb<SignedPermutation> phi2(const SignedPermutation& pi) {
    const auto& e = pi.entries();
    if (e.empty()) {
        return LinComb<SignedPermutation>(pi);
    }
    std::size_t first = 0;
    while (first < e.size() && e[first] < 0) {
        ++first;
    }
    std::size_t last = first;
    while (last < e.size() && e[last] > 0) {
        ++last;
    }
    const std::size_t j = e.size() - last;
    if (first == last || j > 1) {
        return {};
    }
    for (std::size_t i = last; i < e.size(); ++i) {
        if (e[i] > 0) {
            return {};
        }
    }
    return LinComb<SignedPermutation>(standardize(slice(pi.word(), first, last)),
                                      j == 0 ? Rational(1) : kMinusOne);
}

Combo d1(const LinComb<SignedPermutation>& a) {
    return lc_map(a, [](const SignedPermutation& p) { return d1(p).combo; });
}

Combo d2(const LinComb<SignedPermutation>& a) {
    return lc_relabel(a, [](const SignedPermutation& p) { return wcomp(p); });
}

LinComb<SignedPermutation> phi2(const LinComb<SignedPermutation>& a) {
    return lc_map(a, [](const SignedPermutation& p) { return phi2(p); });
}

SignedPermutation d2_preimage(const Comp& alpha) {
    std::vector<Letter> word;
    Letter offset = 0;
    const auto& p = alpha.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        if (p[i].is_epsilon()) {
            word.push_back(-(++offset));
            ++i;
            continue;
        }
        std::size_t j = i;
        long n = 0;
        while (j < p.size() && p[j].is_positive()) {
            n += p[j].value();
            ++j;
        }
        // Earlier parts take larger values, each part increasing, so the
        // descents fall exactly at the part ends.
        long top = n;
        for (std::size_t q = i; q < j; ++q) {
            const long s = p[q].value();
            for (long t = top - s + 1; t <= top; ++t) {
                word.push_back(offset + static_cast<Letter>(t));
            }
            top -= s;
        }
        offset += static_cast<Letter>(n);
        i = j;
    }
    return standardize(SignedWord(std::move(word)));
}

std::size_t trailing_negative_run(const SignedPermutation& pi) {
    std::size_t j = 0;
    const auto& e = pi.entries();
    while (j < e.size() && e[e.size() - 1 - j] < 0) {
        ++j;
    }
    return j;
}

bool has_plus_minus_plus(const SignedPermutation& pi) {
    int stage = 0;
    for (Letter x : pi.entries()) {
        if (stage == 0 && x > 0) {
            stage = 1;
        } else if (stage == 1 && x < 0) {
            stage = 2;
        } else if (stage == 2 && x > 0) {
            return true;
        }
    }
    return false;
}

std::size_t signed_permutation_count(long max_len) {
    std::size_t total = 0;
    std::size_t term = 1;
    for (long n = 0; n <= max_len; ++n) {
        if (n > 0) {
            term *= 2 * static_cast<std::size_t>(n);
        }
        total += term;
    }
    return total;
}

Report verify_square(long max_len, unsigned jobs) {
    const std::vector<SignedPermutation> perms = signed_upto(max_len);
    Report blank("square");
    blank.law("D1 phi2 = phi1 D2", "length <= " + std::to_string(max_len));
    return run_chunks(perms.size(), jobs, blank, [&](Report& r, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            const SignedPermutation& pi = perms[i];
            const Combo lhs = d1(phi2(pi));
            const Combo rhs = phi1(d2(pi)).combo;
            r.expect_equal(r.law("D1 phi2 = phi1 D2"), {to_string(pi)}, f_to_m(lhs), f_to_m(rhs));
        }
    });
}

Report verify_morphism_laws(const MorphismBudget& budget, unsigned jobs) {
    const std::string single = "length <= " + std::to_string(budget.single_max);
    const std::string pair = "combined length <= " + std::to_string(budget.pair_max);
    const std::string lemma = "each input length <= " + std::to_string(budget.lemma_max);
    const std::string wsingle = "total weight <= " + std::to_string(budget.single_max);
    const std::string wpair = "combined total weight <= " + std::to_string(budget.pair_max);

    Report blank("morphisms");
    blank.law("phi2 multiplicative", pair);
    blank.law("phi2 comultiplicative", single);
    blank.law("D2 multiplicative", pair);
    blank.law("D2 comultiplicative", single);
    blank.law("D1 multiplicative", pair);
    blank.law("D1 comultiplicative", single);
    blank.law("phi1 multiplicative", wpair);
    blank.law("phi1 comultiplicative", wsingle);
    blank.law("phi1_F = phi1_M conjugated", wsingle);
    blank.law("phi2 surjective", single);
    blank.law("D2 surjective", wsingle);
    blank.law("annihilation: + - + pattern", lemma);
    blank.law("annihilation: trailing negative run >= 2", lemma);
    blank.law("annihilation: product with 1-", lemma);

    const LinComb<SignedPermutation> zero_p;

    Report out = blank;

    // Signed pairs: φ₂ and D₂ multiplicativity.
    {
        const std::vector<SignedPermutation> perms = signed_upto(budget.pair_max);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < perms.size(); ++a) {
            for (std::size_t b = 0; b < perms.size(); ++b) {
                if (static_cast<long>(perms[a].size() + perms[b].size()) <= budget.pair_max) {
                    pairs.emplace_back(a, b);
                }
            }
        }
        out.merge(run_chunks(pairs.size(), jobs, blank, [&](Report& r, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                const auto& s = perms[pairs[i].first];
                const auto& t = perms[pairs[i].second];
                const std::vector<std::string> in{to_string(s), to_string(t)};
                const auto prod = shifted_quasi_shuffle(s, t, kMinusOne);
                r.expect_equal(r.law("phi2 multiplicative"), in, phi2(prod),
                               lc_product(phi2(s), phi2(t), shifted_shuffle));
                r.expect_equal(r.law("D2 multiplicative"), in, f_to_m(d2(prod)),
                               star(f_to_m(wcomp(s)), f_to_m(wcomp(t))));
            }
        }));
    }

    // Unsigned pairs: D₁ multiplicativity.
    {
        const std::vector<SignedPermutation> perms = unsigned_upto(budget.pair_max);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < perms.size(); ++a) {
            for (std::size_t b = 0; b < perms.size(); ++b) {
                if (static_cast<long>(perms[a].size() + perms[b].size()) <= budget.pair_max) {
                    pairs.emplace_back(a, b);
                }
            }
        }
        out.merge(run_chunks(pairs.size(), jobs, blank, [&](Report& r, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                const auto& s = perms[pairs[i].first];
                const auto& t = perms[pairs[i].second];
                r.expect_equal(r.law("D1 multiplicative"), {to_string(s), to_string(t)},
                               f_to_m(d1(shifted_shuffle(s, t))), star(f_to_m(d1(s).combo), f_to_m(d1(t).combo)));
            }
        }));
    }

    // Singles: comultiplicativity and surjectivity on the permutation side.
    {
        const std::vector<SignedPermutation> perms = signed_upto(budget.single_max);
        out.merge(run_chunks(perms.size(), jobs, blank, [&](Report& r, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                const auto& s = perms[i];
                const std::vector<std::string> in{to_string(s)};
                const auto delta = hsym_coproduct(s);
                Tensor<SignedPermutation> rhs;
                for (const auto& [p, c] : phi2(s)) {
                    rhs.add_scaled(hsym_coproduct(p), c);
                }
                r.expect_equal(r.law("phi2 comultiplicative"), in,
                               tensor_map(delta, [](const SignedPermutation& p) { return phi2(p); },
                                          [](const SignedPermutation& p) { return phi2(p); }),
                               rhs);
                const auto d2d2 = tensor_map(delta, [](const SignedPermutation& p) { return d2(p).combo; },
                                             [](const SignedPermutation& p) { return d2(p).combo; });
                r.expect_equal(r.law("D2 comultiplicative"), in, to_m_tensor(d2d2),
                               to_m_tensor(rqsym_coproduct_F(wcomp(s))));
                if (s.is_unsigned()) {
                    const auto d1d1 = tensor_map(delta, [](const SignedPermutation& p) { return d1(p).combo; },
                                                 [](const SignedPermutation& p) { return d1(p).combo; });
                    r.expect_equal(r.law("D1 comultiplicative"), in, to_m_tensor(d1d1),
                                   to_m_tensor(rqsym_coproduct_F(d1(s).combo.begin()->first)));
                    r.expect_equal(r.law("phi2 surjective"), in, phi2(s), LinComb<SignedPermutation>(s));
                }
            }
        }));
    }

    // RQSym side: φ₁ laws and D₂ surjectivity.
    {
        const std::vector<Comp> comps = regularized_compositions_upto(budget.pair_max);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < comps.size(); ++a) {
            for (std::size_t b = 0; b < comps.size(); ++b) {
                if (total_weight(comps[a]) + total_weight(comps[b]) <= budget.pair_max) {
                    pairs.emplace_back(a, b);
                }
            }
        }
        out.merge(run_chunks(pairs.size(), jobs, blank, [&](Report& r, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                const auto& x = comps[pairs[i].first];
                const auto& y = comps[pairs[i].second];
                r.expect_equal(r.law("phi1 multiplicative"), {to_string(x), to_string(y)},
                               phi1_M_lin(star_product(x, y)), star(phi1_M(x), phi1_M(y)));
            }
        }));
        std::vector<Comp> singles;
        for (const auto& c : comps) {
            if (total_weight(c) <= budget.single_max) {
                singles.push_back(c);
            }
        }
        out.merge(run_chunks(singles.size(), jobs, blank, [&](Report& r, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                const auto& x = singles[i];
                const std::vector<std::string> in{to_string(x)};
                r.expect_equal(r.law("phi1 comultiplicative"), in,
                               tensor_map(rqsym_coproduct_M(x), [](const Comp& k) { return phi1_M(k); },
                                          [](const Comp& k) { return phi1_M(k); }),
                               deconcat(phi1_M(x)));
                r.expect_equal(r.law("phi1_F = phi1_M conjugated"), in, phi1_F(x),
                               m_to_f(phi1_M_lin(f_to_m(x))));
                r.expect_equal(r.law("D2 surjective"), in, d2(d2_preimage(x)).combo, Combo(x));
            }
        }));
    }

    // Annihilation lemmas at λ = −1 on every applicable ordered pair.
    {
        const std::vector<SignedPermutation> perms = signed_upto(budget.lemma_max);
        const SignedPermutation one_minus{-1};
        struct Task {
            std::size_t a, b;
            bool pmp, trailing, one;
        };
        std::vector<Task> tasks;
        for (std::size_t a = 0; a < perms.size(); ++a) {
            for (std::size_t b = 0; b < perms.size(); ++b) {
                const auto& s = perms[a];
                const auto& t = perms[b];
                Task task{a, b, has_plus_minus_plus(s) || has_plus_minus_plus(t),
                          trailing_negative_run(s) >= 2 || trailing_negative_run(t) >= 2,
                          s == one_minus || t == one_minus};
                if (task.pmp || task.trailing || task.one) {
                    tasks.push_back(task);
                }
            }
        }
        out.merge(run_chunks(tasks.size(), jobs, blank, [&](Report& r, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                const Task& task = tasks[i];
                const std::vector<std::string> in{to_string(perms[task.a]), to_string(perms[task.b])};
                const auto image = phi2(shifted_quasi_shuffle(perms[task.a], perms[task.b], kMinusOne));
                if (task.pmp) {
                    r.expect_equal(r.law("annihilation: + - + pattern"), in, image, zero_p);
                }
                if (task.trailing) {
                    r.expect_equal(r.law("annihilation: trailing negative run >= 2"), in, image, zero_p);
                }
                if (task.one) {
                    r.expect_equal(r.law("annihilation: product with 1-"), in, image, zero_p);
                }
            }
        }));
    }
    return out;
}

} // namespace hsym
