#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "hsym/compositions.hpp"
#include "hsym/error.hpp"

using namespace hsym;
using hsym::test::comp;
using hsym::test::comps;
using hsym::test::perm;

TEST(NTilde, Addition) {
    EXPECT_EQ(E + E, E);
    EXPECT_EQ(P(2) + E, P(2));
    EXPECT_EQ(E + P(2), P(2));
    EXPECT_EQ(NTilde::zero() + NTilde::zero(), NTilde::zero());
    EXPECT_EQ(NTilde::zero() + E, E);
    EXPECT_EQ(P(2) + P(3), P(5));
}

TEST(NTilde, Order) {
    EXPECT_LT(NTilde::zero(), E);
    EXPECT_LT(E, P(1));
    EXPECT_LT(P(1), P(2));
}

TEST(Regularize, Examples) {
    EXPECT_EQ(regularize(WeakComposition{1, 0, 2, 3}), comp("1,e,2,3"));
    EXPECT_EQ(regularize(WeakComposition{0}), comp("e"));
    EXPECT_EQ(regularize(WeakComposition{}), RegularizedComposition());
}

TEST(Regularize, BijectionOnSmallWeakCompositions) {
    std::set<RegularizedComposition> seen;
    std::size_t count = 0;
    for (std::size_t len = 0; len <= 5; ++len) {
        std::vector<long> parts(len, 0);
        while (true) {
            const WeakComposition w(parts);
            const RegularizedComposition r = regularize(w);
            EXPECT_EQ(deregularize(r), w);
            seen.insert(r);
            ++count;
            std::size_t i = 0;
            while (i < len && ++parts[i] == 5) {
                parts[i++] = 0;
            }
            if (i == len) {
                break;
            }
        }
    }
    EXPECT_EQ(seen.size(), count);
}

TEST(Stats, Examples) {
    const auto s = stats(comp("e,1,e,e"));
    EXPECT_EQ(s.weight, P(1));
    EXPECT_EQ(s.total_weight, 4);
    EXPECT_EQ(s.eps_length, 3);
    EXPECT_EQ(s.descent_set, std::vector<int>{2});

    const auto t = stats(comp("2,1"));
    EXPECT_EQ(t.descent_set, (std::vector<int>{2, 3}));
    EXPECT_EQ(t.total_weight, 3);

    const auto u = stats(comp("e,e"));
    EXPECT_EQ(u.weight, E);
    EXPECT_EQ(u.total_weight, 2);
    EXPECT_TRUE(u.descent_set.empty());

    EXPECT_EQ(weight(RegularizedComposition()), NTilde::zero());
}

TEST(CompOfDescents, Examples) {
    EXPECT_EQ(comp_of_descents({2, 3}, 3), (Composition{2, 1}));
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(comp_of_descents({n}, n), Composition{n});
    }
    EXPECT_THROW(comp_of_descents({1}, 3), std::invalid_argument);
    EXPECT_THROW(comp_of_descents({4, 3}, 3), std::invalid_argument);
}

TEST(CompOfDescents, InvertsDescentSet) {
    for (long n = 1; n <= 6; ++n) {
        for (const auto& c : compositions(n)) {
            EXPECT_EQ(comp_of_descents(c.descent_set(), static_cast<int>(n)), c);
        }
    }
}

TEST(Refines, Examples) {
    EXPECT_TRUE(refines(comp("1,2,e,e,1,3,2,e"), comp("3,e,e,1,e,5,e,e,e")));
    EXPECT_FALSE(refines(comp("1,2,e,e,1,3,2"), comp("3,e,e,1,e,5,e,e,e")));
    EXPECT_FALSE(refines(comp("3,e,e,1,e,5,e,e,e"), comp("1,2,e,e,1,3,2")));
    for (const auto& a : regularized_compositions_upto(4)) {
        EXPECT_TRUE(refines(a, a)) << to_string(a);
    }
}

TEST(Refinements, Examples) {
    EXPECT_EQ(enumerate_refinements(comp("2")), (std::vector<RegularizedComposition>{comp("2"), comp("1,1")}));
    EXPECT_EQ(enumerate_refinements(comp("e")), std::vector<RegularizedComposition>{comp("e")});
}

TEST(Refinements, EnumerationAgreesWithPredicate) {
    for (long w = 0; w <= 5; ++w) {
        const auto candidates = regularized_compositions_upto(w);
        for (const auto& a : regularized_compositions(w)) {
            std::vector<RegularizedComposition> filtered;
            for (const auto& b : candidates) {
                if (refines(b, a)) {
                    filtered.push_back(b);
                }
            }
            auto listed = enumerate_refinements(a);
            std::sort(listed.begin(), listed.end());
            std::sort(filtered.begin(), filtered.end());
            EXPECT_EQ(listed, filtered) << to_string(a);
            for (const auto& b : candidates) {
                EXPECT_EQ(refinement_coefficient(a, b) != 0, refines(b, a)) << to_string(a) << " / " << to_string(b);
            }
        }
    }
}

TEST(Structural, WorkedExample) {
    const auto alpha = comp("3,1,e");
    const auto beta = comp("2,e");
    EXPECT_EQ(reversal(alpha), comp("e,1,3"));
    EXPECT_EQ(j_apply(Composition{1, 2}, alpha), comp("3,1"));
    EXPECT_EQ(concat(alpha, beta), comp("3,1,e,2,e"));
    EXPECT_EQ(near_concat(reversal(alpha), beta), comp("e,1,5,e"));
    EXPECT_THROW(near_concat(alpha, beta), std::domain_error);
    EXPECT_THROW(j_apply(Composition{2, 2}, alpha), std::invalid_argument);
}

TEST(StarProduct, Examples) {
    EXPECT_EQ(star_product(comp("1"), comp("1")), comps({{"1,1", 2}, {"2", 1}}));
    EXPECT_EQ(star_product(comp("e"), comp("1")), comps({{"e,1", 1}, {"1,e", 1}, {"1", 1}}));
    EXPECT_EQ(star_product(comp("e"), comp("e")), comps({{"e,e", 2}, {"e", 1}}));
    for (const auto& a : regularized_compositions_upto(3)) {
        EXPECT_EQ(star_product(RegularizedComposition(), a), LinComb<RegularizedComposition>(a));
        EXPECT_EQ(star_product(a, RegularizedComposition()), LinComb<RegularizedComposition>(a));
    }
}

TEST(StarProduct, Commutative) {
    const auto all = regularized_compositions_upto(3);
    for (const auto& a : all) {
        for (const auto& b : all) {
            EXPECT_EQ(star_product(a, b), star_product(b, a));
        }
    }
}

TEST(Wcomp, Examples) {
    EXPECT_EQ(wcomp(perm("5,-1,2,4,3,-6,-7")), comp("1,e,2,1,e,e"));
    EXPECT_EQ(wcomp(perm("-4,2,-1,-3")), comp("e,1,e,e"));
    EXPECT_EQ(wcomp(SignedPermutation()), RegularizedComposition());
}

TEST(Wcomp, TotalWeightIsLength) {
    for (unsigned n = 0; n <= 4; ++n) {
        for (const auto& pi : signed_permutations(n)) {
            EXPECT_EQ(total_weight(wcomp(pi)), static_cast<long>(n));
        }
    }
}

TEST(Enumeration, Counts) {
    // a(w) = a(w-1) + sum_k a(w-k): an ε part or a positive part k at the end.
    EXPECT_EQ(regularized_compositions(0).size(), 1u);
    EXPECT_EQ(regularized_compositions(1).size(), 2u);
    EXPECT_EQ(regularized_compositions(2).size(), 5u);
    EXPECT_EQ(regularized_compositions(3).size(), 13u);
    EXPECT_EQ(compositions(4).size(), 8u);
}

TEST(Encoding, RoundTripAndErrors) {
    for (const auto& a : regularized_compositions_upto(4)) {
        EXPECT_EQ(parse_regularized_composition(to_string(a)), a);
    }
    EXPECT_EQ(to_string(RegularizedComposition()), "empty");
    EXPECT_EQ(parse_regularized_composition("1,ε,2"), comp("1,e,2"));
    try {
        parse_regularized_composition("1,e,0");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
    EXPECT_THROW(parse_regularized_composition("1,x"), ParseError);
}
