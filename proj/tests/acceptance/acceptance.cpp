// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "hsym/compositions.hpp"
#include "hsym/hopf.hpp"
#include "hsym/morphisms.hpp"
#include "hsym/ppartitions.hpp"
#include "hsym/signed_word.hpp"
#include "oracles.hpp"

using namespace hsym;
using hsym::test::comp;
using hsym::test::comps;
using hsym::test::perm;
using hsym::test::perms;
using hsym::test::word;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed sub-checks of one criterion.
struct Outcome {
    std::vector<std::string> failures;
    std::string note;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            failures.push_back(what);
        }
    }
    void expect_report(const Report& r) {
        for (const auto& law : r.laws()) {
            if (law.failed > 0) {
                failures.push_back(r.suite() + ": " + law.law + ": " + std::to_string(law.failed) + " of " +
                                   std::to_string(law.checks()) + " checks failed");
            }
        }
    }
};

bool run_criterion(int number, const std::string& title, double limit_seconds,
                   const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (limit_seconds > 0 && elapsed > limit_seconds) {
        out.failures.push_back("took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit_seconds) + " s");
    }
    const bool pass = out.failures.empty();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", elapsed);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << timing << ")";
    if (!out.note.empty()) {
        std::cout << " [" << out.note << "]";
    }
    std::cout << '\n';
    for (const auto& f : out.failures) {
        std::cout << "    " << f << '\n';
    }
    std::cout.flush();
    return pass;
}

// A golden example: compared exactly and timed against one second.
void golden(Outcome& out, const std::string& name, const std::function<bool()>& check) {
    const auto start = Clock::now();
    bool ok = false;
    try {
        ok = check();
    } catch (const std::exception& e) {
        out.failures.push_back(name + ": exception " + e.what());
        return;
    }
    const double elapsed = seconds_since(start);
    out.expect(ok, name + ": mismatch");
    out.expect(elapsed < 1.0, name + ": took " + std::to_string(elapsed) + " s");
}

template <class K>
Tensor<K> tensor_terms(std::initializer_list<std::pair<K, K>> terms) {
    Tensor<K> out;
    for (const auto& t : terms) {
        out.add(t, Rational(1));
    }
    return out;
}

void golden_examples(Outcome& out) {
    using PP = std::pair<SignedPermutation, SignedPermutation>;
    const SignedPermutation iota;

    golden(out, "st(3 2- 7 5-)", [] { return standardize(word("3,-2,7,-5")) == perm("2,-1,4,-3"); });
    golden(out, "st(2 2- 1 2- 2)", [] { return standardize(word("2,-2,1,-2,2")) == perm("2,-3,1,-4,5"); });
    golden(out, "12 shifted-shuffle 12", [] {
        return shifted_shuffle(perm("1,2"), perm("1,2")) ==
               perms({{"1,2,3,4", 1}, {"1,3,2,4", 1}, {"1,3,4,2", 1}, {"3,1,2,4", 1}, {"3,1,4,2", 1}, {"3,4,1,2", 1}});
    });
    golden(out, "coproduct of 1324", [&] {
        return hsym_coproduct(perm("1,3,2,4")) ==
               tensor_terms<SignedPermutation>({PP{iota, perm("1,3,2,4")}, PP{perm("1"), perm("2,1,3")},
                                                PP{perm("1,2"), perm("1,2")}, PP{perm("1,3,2"), perm("1")},
                                                PP{perm("1,3,2,4"), iota}});
    });
    golden(out, "coproduct of 3 2- 1 4 5-", [&] {
        return hsym_coproduct(perm("3,-2,1,4,-5")) ==
               tensor_terms<SignedPermutation>({PP{iota, perm("3,-2,1,4,-5")}, PP{perm("1"), perm("-2,1,3,-4")},
                                                PP{perm("2,-1"), perm("1,2,-3")}, PP{perm("3,-2,1"), perm("1,-2")},
                                                PP{perm("3,-2,1,4"), perm("-1")}, PP{perm("3,-2,1,4,-5"), iota}});
    });
    for (const int l : {-1, 0, 1}) {
        golden(out, "1 2- times 2 1- at lambda " + std::to_string(l), [l] {
            const Rational q(l);
            return shifted_quasi_shuffle(perm("1,-2"), perm("2,-1"), q) ==
                   perms({{"1,-2,4,-3", 1}, {"1,4,-2,-3", 1}, {"1,4,-3,-2", 1}, {"4,1,-2,-3", 1},
                          {"4,1,-3,-2", 1}, {"4,-3,1,-2", 1}, {"1,3,-2", q}, {"3,1,-2", q}});
        });
    }
    golden(out, "composition operations on (3,1,e), (2,e), J=(1,2)", [] {
        const auto a = comp("3,1,e");
        const auto b = comp("2,e");
        bool undefined = false;
        try {
            near_concat(a, b);
        } catch (const std::domain_error&) {
            undefined = true;
        }
        return reversal(a) == comp("e,1,3") && j_apply(Composition{1, 2}, a) == comp("3,1") &&
               concat(a, b) == comp("3,1,e,2,e") && near_concat(reversal(a), b) == comp("e,1,5,e") && undefined;
    });
    golden(out, "wcomp(5,-,243,--)", [] { return wcomp(perm("5,-1,2,4,3,-6,-7")) == comp("1,e,2,1,e,e"); });
    golden(out, "F(1,e) F(1,e)", [] {
        return rqsym_product_F(comp("1,e"), comp("1,e")) ==
               comps({{"1,e,1,e", 2}, {"1,1,e,e", 2}, {"2,e,e", 2}, {"1,1,e", -1}, {"2,e", -1}});
    });

    const SignedLabeledPoset fig2({-1, 2, -3, -4}, {{-4, 2}, {2, -1}, {2, -3}});
    golden(out, "linear extensions of the two-cover poset", [&] {
        return linear_extensions(fig2) == std::vector<SignedPermutation>{perm("-4,2,-3,-1"), perm("-4,2,-1,-3")};
    });
    golden(out, "overlap of A(pi) and A(sigma)", [&] {
        const int k = 5;
        const auto a = enumerate_ppartitions(SignedLabeledPoset::chain(perm("-4,2,-1,-3")), k);
        const auto b = enumerate_ppartitions(SignedLabeledPoset::chain(perm("-4,2,-3,-1")), k);
        std::vector<PPartition> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        // Every map with f(4-) <= f(2) < f(1-) = f(3-), and nothing else.
        std::vector<PPartition> described;
        for (int x = 1; x <= k; ++x) {
            for (int y = x; y <= k; ++y) {
                for (int z = y + 1; z <= k; ++z) {
                    // labels() order is 1-, 2, 3-, 4-.
                    described.push_back(PPartition{{-1, 2, -3, -4}, {z, y, z, x}});
                }
            }
        }
        std::sort(described.begin(), described.end());
        return both == described && !both.empty();
    });
    golden(out, "Gamma of the two-cover poset", [&] {
        const bool basis = gamma_F(fig2) == comps({{"e,1,e,e", 2}, {"e,1,e", -1}});
        const int k = 5;
        const bool series = gamma(fig2, k) == expand_F(comp("e,1,e,e"), k) * Rational(2) - expand_F(comp("e,1,e"), k);
        return basis && series;
    });
}

void hopf_suite(Outcome& out) {
    const HopfBudget budget = HopfBudget::from_max_degree(4);
    for (const Rational q : {Rational(-1), Rational(0), Rational(1), Rational(2, 3)}) {
        out.expect_report(verify_hopf<SignedPermutation>(hsym_context(q), hsym_basis, budget));
    }
    out.expect_report(verify_hopf<SignedPermutation>(ssym_context(), ssym_basis, budget));
    out.expect_report(verify_hopf<RegularizedComposition>(rqsym_m_context(), rqsym_basis, budget));
}

void morphism_suite(Outcome& out) {
    const Report r = verify_morphism_laws(MorphismBudget::from_max_degree(4));
    out.expect_report(r);
    for (const char* law : {"phi2 multiplicative", "phi2 comultiplicative", "D2 multiplicative",
                            "D2 comultiplicative", "D1 multiplicative", "D1 comultiplicative", "phi1 multiplicative",
                            "phi1 comultiplicative", "phi1_F = phi1_M conjugated", "phi2 surjective", "D2 surjective",
                            "annihilation: + - + pattern",
                            "annihilation: trailing negative run >= 2", "annihilation: product with 1-"}) {
        const LawResult* l = r.find(law);
        out.expect(l != nullptr && l->checks() > 0, std::string("law not exercised: ") + law);
    }
    out.note = std::to_string(r.checks()) + " checks";
}

void square_suite(Outcome& out) {
    const Report r = verify_square(4);
    out.expect_report(r);
    std::size_t expected = 0;
    std::size_t fact = 1;
    for (std::size_t n = 0; n <= 4; ++n) {
        fact *= n == 0 ? 1 : n;
        expected += (std::size_t{1} << n) * fact;
    }
    out.expect(r.checks() == expected, "expected " + std::to_string(expected) + " checks, ran " +
                                           std::to_string(r.checks()));
    // 9,984 = 384 * 26 is not this sum; the exhaustive count is asserted.
    out.note = std::to_string(r.checks()) + " checks = sum of 2^n n! for n <= 4, 9,984 is not a count of signed permutations";
}

void oracle_suite(Outcome& out) {
    const auto bullet = BulletProduct::negative_left();
    const std::vector<Letter> alphabet{-3, -2, -1, 1, 2, 3};
    std::vector<std::vector<SignedWord>> by_len{{SignedWord()}};
    for (std::size_t l = 1; l <= 6; ++l) {
        std::vector<SignedWord> next;
        for (const auto& w : by_len.back()) {
            for (Letter a : alphabet) {
                auto letters = w.letters();
                letters.push_back(a);
                next.emplace_back(letters);
            }
        }
        by_len.push_back(std::move(next));
    }
    std::size_t pairs = 0;
    std::size_t bad = 0;
    for (std::size_t a = 0; a <= 6; ++a) {
        for (std::size_t b = 0; a + b <= 6; ++b) {
            for (const auto& u : by_len[a]) {
                for (const auto& v : by_len[b]) {
                    ++pairs;
                    if (quasi_shuffle(u, v, Rational(-1), bullet) != stuffle(u, v, Rational(-1), bullet)) {
                        if (++bad <= 3) {
                            out.failures.push_back("quasi_shuffle != stuffle on " + to_string(u) + " | " + to_string(v));
                        }
                    }
                }
            }
        }
    }
    out.expect(bad == 0, std::to_string(bad) + " word pairs disagree");

    std::size_t round_trips = 0;
    for (const auto& a : regularized_compositions_upto(5)) {
        ++round_trips;
        out.expect(m_to_f(f_to_m(a)) == LinComb<RegularizedComposition>(a), "F->M->F round trip on " + to_string(a));
        out.expect(f_to_m(m_to_f(a)) == LinComb<RegularizedComposition>(a), "M->F->M round trip on " + to_string(a));
    }
    for (const auto& a : regularized_compositions_upto(4)) {
        const RQSymElement x{RQSymElement::Basis::F, LinComb<RegularizedComposition>(a)};
        const LinComb<RegularizedComposition> conjugated = m_to_f(phi1(x.to_M()).combo);
        out.expect(phi1_F(a) == conjugated, "phi1_F differs from conjugated phi1_M on " + to_string(a));
    }
    for (long m = 0; m <= 6; ++m) {
        for (long n = 0; n <= 6; ++n) {
            out.expect(oracle::alternating_multinomial_sum(m, n) == Rational(1),
                       "alternating multinomial sum at " + std::to_string(m) + "," + std::to_string(n));
            Rational total(0);
            for (const auto& [len, c] : multinomial_collapse(static_cast<unsigned>(m), static_cast<unsigned>(n))) {
                total += c;
            }
            out.expect(total == Rational(1), "collapsed negative-run product sum at " + std::to_string(m) + "," +
                                                 std::to_string(n));
        }
    }
    out.note = std::to_string(pairs) + " word pairs, " + std::to_string(round_trips) + " round trips";
}

void gamma_suite(Outcome& out) {
    const GammaBudget b = GammaBudget::from_max_degree(3);
    out.expect(b.single_max == 3 && b.single_k == 6 && b.pair_max == 4 && b.pair_k == 8 && b.union_pairs == 50 &&
                   b.union_size == 3 && b.extension_posets == 50 && b.extension_size == 4 && b.extension_k == 4,
               "gamma budget does not match the criterion");
    const Report r = verify_gamma_theorems(b);
    out.expect_report(r);
    out.note = std::to_string(r.checks()) + " checks";
}

void antipode_suite(Outcome& out) {
    std::size_t checks = 0;
    for (const Rational q : {Rational(-1), Rational(0), Rational(1), Rational(2, 3)}) {
        const auto ctx = hsym_context(q);
        AntipodeMemo<SignedPermutation> memo;
        for (unsigned n = 0; n <= 3; ++n) {
            for (const auto& x : signed_permutations(n)) {
                const auto expected = n == 0 ? LinComb<SignedPermutation>(x) : LinComb<SignedPermutation>();
                ++checks;
                out.expect(antipode_convolution(ctx, x, true, memo) == expected,
                           "HSym convolution at lambda " + q.to_string() + " on " + to_string(x));
            }
        }
    }
    // m(S (x) id) Delta with the closed-form S_R on M_alpha.
    for (const auto& a : regularized_compositions_upto(4)) {
        LinComb<RegularizedComposition> conv;
        for (const auto& [lr, c] : rqsym_coproduct_M(a)) {
            conv.add_scaled(lc_product(rqsym_antipode_M(lr.first), LinComb<RegularizedComposition>(lr.second),
                                       rqsym_product_M),
                            c);
        }
        const auto expected = a.empty() ? LinComb<RegularizedComposition>(a) : LinComb<RegularizedComposition>();
        ++checks;
        out.expect(conv == expected, "RQSym convolution on M_" + to_string(a));
    }
    out.note = std::to_string(checks) + " checks";
}

} // namespace

int main() {
    bool all = true;
    all &= run_criterion(1, "golden examples, exact", 0, golden_examples);
    all &= run_criterion(2, "Hopf axioms: HSym at four weights, SSym, RQSym", 120, hopf_suite);
    all &= run_criterion(3, "morphism laws and annihilation lemmas", 0, morphism_suite);
    all &= run_criterion(4, "commuting square on all signed permutations up to length 4", 30, square_suite);
    all &= run_criterion(5, "oracle equivalences", 0, oracle_suite);
    all &= run_criterion(6, "generating-function suite", 120, gamma_suite);
    all &= run_criterion(7, "antipode convolution identity", 0, antipode_suite);
    return all ? 0 : 1;
}
