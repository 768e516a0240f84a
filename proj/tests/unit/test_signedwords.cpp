#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hsym/error.hpp"
#include "hsym/signed_word.hpp"
#include "oracles.hpp"

using namespace hsym;
using hsym::test::perm;
using hsym::test::perms;
using hsym::test::word;

TEST(Standardize, Examples) {
    EXPECT_EQ(standardize(word("3,-2,7,-5")), perm("2,-1,4,-3"));
    EXPECT_EQ(standardize(word("2,-2,1,-2,2")), perm("2,-3,1,-4,5"));
    EXPECT_EQ(standardize(SignedWord()), SignedPermutation());
}

TEST(Standardize, MatchesSortOracleOnRepeatedLetters) {
    for (const auto& w : {word("1,1,1"), word("-2,2,-2,1"), word("5,-5,3,3,-1"), word("4,-4,4,-4")}) {
        EXPECT_EQ(standardize(w), oracle::standardize(w)) << to_string(w);
    }
}

TEST(Shift, Examples) {
    EXPECT_EQ(shift(word("2,-1"), 2), word("4,-3"));
    EXPECT_EQ(shift(word("1,2"), 2), word("3,4"));
    EXPECT_EQ(shift(word("3,-1,2"), 0), word("3,-1,2"));
}

TEST(QuasiShuffle, SingleLetters) {
    const auto bullet = BulletProduct::negative_left();
    const Rational q(2, 5);
    const LinComb<SignedWord> expected{{word("-1,-2"), 1}, {word("-2,-1"), 1}, {word("-1"), q}};
    EXPECT_EQ(quasi_shuffle(word("-1"), word("-2"), q, bullet), expected);
    const LinComb<SignedWord> at_minus_one{{word("-1,-2"), 1}, {word("-2,-1"), 1}, {word("-1"), -1}};
    EXPECT_EQ(quasi_shuffle(word("-1"), word("-2"), Rational(-1), bullet), at_minus_one);
}

TEST(QuasiShuffle, WeightZeroIsShuffle) {
    const auto bullet = BulletProduct::negative_left();
    const auto u = word("-1,2,-3");
    const auto v = word("-4,-5");
    Rational total(0);
    for (const auto& [w, c] : quasi_shuffle(u, v, Rational(0), bullet)) {
        EXPECT_EQ(w.size(), 5u);
        total += c;
    }
    EXPECT_EQ(total, Rational(10));
}

TEST(QuasiShuffle, MatchesDefinitionRecursion) {
    const auto bullet = BulletProduct::negative_left();
    const std::vector<SignedWord> words{word("-1"), word("2,-3"), word("-1,-2,3"), word("-4,-4"), word("1,-1,2")};
    for (const auto& u : words) {
        for (const auto& v : words) {
            for (const Rational lambda : {Rational(-1), Rational(0), Rational(3, 2)}) {
                EXPECT_EQ(quasi_shuffle(u, v, lambda, bullet), oracle::quasi_shuffle(u.letters(), v.letters(), lambda))
                    << to_string(u) << " * " << to_string(v);
            }
        }
    }
}

TEST(Stuffle, MapCounts) {
    for (std::size_t m = 0; m <= 4; ++m) {
        for (std::size_t n = 0; n <= 4; ++n) {
            std::size_t total = 0;
            for (std::size_t r = 0; r <= std::min(m, n); ++r) {
                total += stuffle_maps(m, n, r).size();
            }
            EXPECT_EQ(Rational(total), oracle::stuffle_pair_count(static_cast<long>(m), static_cast<long>(n)));
        }
    }
}

TEST(Stuffle, TwoNegativeLetters) {
    const auto bullet = BulletProduct::negative_left();
    EXPECT_EQ(stuffle_maps(1, 1, 0).size(), 2u);
    EXPECT_EQ(stuffle_maps(1, 1, 1).size(), 1u);
    const Rational q(7);
    const LinComb<SignedWord> expected{{word("-1,-2"), 1}, {word("-2,-1"), 1}, {word("-1"), q}};
    EXPECT_EQ(stuffle(word("-1"), word("-2"), q, bullet), expected);
}

TEST(RightRecursion, Examples) {
    const auto bullet = BulletProduct::negative_left();
    const LinComb<SignedWord> expected{{word("1,2,3"), 1}, {word("1,3,2"), 1}, {word("3,1,2"), 1}};
    EXPECT_EQ(right_quasi_shuffle_step(word("1,2"), word("3"), Rational(0), bullet), expected);
    EXPECT_EQ(right_quasi_shuffle_step(word("-1"), word("-2"), Rational(-1), bullet),
              quasi_shuffle(word("-1"), word("-2"), Rational(-1), bullet));
    EXPECT_THROW(right_quasi_shuffle_step(SignedWord(), word("1"), Rational(0), bullet), std::invalid_argument);
}

TEST(ShiftedQuasiShuffle, ShuffleOfTwelve) {
    const auto expected = perms({{"1,2,3,4", 1}, {"1,3,2,4", 1}, {"1,3,4,2", 1},
                                 {"3,1,2,4", 1}, {"3,1,4,2", 1}, {"3,4,1,2", 1}});
    EXPECT_EQ(shifted_quasi_shuffle(perm("1,2"), perm("1,2"), Rational(0)), expected);
    EXPECT_EQ(shifted_shuffle(perm("1,2"), perm("1,2")), expected);
}

TEST(ShiftedQuasiShuffle, EightTermExpansion) {
    for (const Rational lambda : {Rational(-1), Rational(0), Rational(1), Rational(2, 3)}) {
        const auto expected = perms({{"1,-2,4,-3", 1}, {"1,4,-2,-3", 1}, {"1,4,-3,-2", 1}, {"4,1,-2,-3", 1},
                                     {"4,1,-3,-2", 1}, {"4,-3,1,-2", 1}, {"1,3,-2", lambda}, {"3,1,-2", lambda}});
        EXPECT_EQ(shifted_quasi_shuffle(perm("1,-2"), perm("2,-1"), lambda), expected) << lambda;
    }
}

TEST(ShiftedQuasiShuffle, NegativeOneSquared) {
    EXPECT_EQ(shifted_quasi_shuffle(perm("-1"), perm("-1"), Rational(-1)),
              perms({{"-1,-2", 1}, {"-2,-1", 1}, {"-1", -1}}));
}

TEST(ShiftedQuasiShuffle, LargerShiftGivesSameProduct) {
    for (const auto& s : {perm("1,-2"), perm("-2,-1,3")}) {
        for (const auto& t : {perm("2,-1"), perm("-1")}) {
            for (unsigned k = static_cast<unsigned>(s.size()); k <= s.size() + 3; ++k) {
                EXPECT_EQ(shifted_quasi_shuffle_with_shift(s, t, Rational(-1), k),
                          shifted_quasi_shuffle(s, t, Rational(-1)));
            }
        }
    }
    EXPECT_THROW(shifted_quasi_shuffle_with_shift(perm("1,2"), perm("1"), Rational(-1), 1), std::invalid_argument);
}

TEST(WeakDescents, Examples) {
    EXPECT_EQ(weak_descent_set(perm("1,3,2")), (std::vector<int>{2, 3}));
    EXPECT_EQ(weak_descent_set(perm("5,-3,2,4,-6,-1")), (std::vector<int>{1, 4}));
    EXPECT_TRUE(weak_descent_set(perm("-2,-3,-1")).empty());
    EXPECT_TRUE(weak_descent_set(SignedPermutation()).empty());
}

TEST(WeakDescents, MatchesScanOracle) {
    for (unsigned n = 0; n <= 5; ++n) {
        for (const auto& pi : signed_permutations(n)) {
            ASSERT_EQ(weak_descent_set(pi), oracle::weak_descents(pi)) << to_string(pi);
        }
    }
}

TEST(MultinomialCollapse, Examples) {
    EXPECT_EQ(multinomial_collapse(1, 1), (LinComb<int>{{2, 2}, {1, -1}}));
    EXPECT_EQ(multinomial_collapse(0, 3), LinComb<int>(3));
}

TEST(MultinomialCollapse, MatchesNegativeRunProducts) {
    // The all-negative product only depends on the lengths; collapse it to them.
    for (unsigned m = 0; m <= 3; ++m) {
        for (unsigned n = 0; n <= 3; ++n) {
            std::vector<Letter> a, b;
            for (unsigned i = 1; i <= m; ++i) {
                a.push_back(-static_cast<Letter>(i));
            }
            for (unsigned i = 1; i <= n; ++i) {
                b.push_back(-static_cast<Letter>(i));
            }
            LinComb<int> lengths;
            for (const auto& [p, c] : shifted_quasi_shuffle(SignedPermutation(a), SignedPermutation(b), Rational(-1))) {
                lengths.add(static_cast<int>(p.size()), c);
            }
            EXPECT_EQ(multinomial_collapse(m, n), lengths) << m << "," << n;
        }
    }
}

TEST(Enumeration, Counts) {
    EXPECT_EQ(signed_permutations(0).size(), 1u);
    EXPECT_EQ(signed_permutations(3).size(), 48u);
    EXPECT_EQ(signed_permutations(4).size(), 384u);
    EXPECT_EQ(permutations(4).size(), 24u);
    const auto all = signed_permutations(3);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Encoding, RoundTrip) {
    for (const auto& pi : signed_permutations(3)) {
        EXPECT_EQ(parse_signed_permutation(to_string(pi)), pi);
    }
    EXPECT_EQ(to_string(SignedPermutation()), "id");
    EXPECT_EQ(parse_signed_permutation("id"), SignedPermutation());
}

TEST(Encoding, ErrorsCarryPositions) {
    try {
        parse_signed_permutation("1,x,2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
    EXPECT_THROW(parse_signed_permutation("1,1"), ParseError);
    EXPECT_THROW(parse_signed_permutation("1,0"), ParseError);
    EXPECT_THROW(parse_signed_word("2,,3"), ParseError);
}
