#pragma once

#include <string>

#include "hsym/compositions.hpp"
#include "hsym/lincomb.hpp"
#include "hsym/signed_word.hpp"

namespace hsym::test {

inline SignedPermutation perm(const std::string& s) { return parse_signed_permutation(s); }
inline SignedWord word(const std::string& s) { return parse_signed_word(s); }
inline RegularizedComposition comp(const std::string& s) { return parse_regularized_composition(s); }

// {"1,e": 2, "2": -1} style combinations.
inline LinComb<RegularizedComposition> comps(std::initializer_list<std::pair<const char*, int>> terms) {
    LinComb<RegularizedComposition> out;
    for (const auto& [k, c] : terms) {
        out.add(comp(k), Rational(c));
    }
    return out;
}

inline LinComb<SignedPermutation> perms(std::initializer_list<std::pair<const char*, Rational>> terms) {
    LinComb<SignedPermutation> out;
    for (const auto& [k, c] : terms) {
        out.add(perm(k), c);
    }
    return out;
}

} // namespace hsym::test
