#pragma once

#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include <nlohmann/json.hpp>

#include "hsym/compositions.hpp"
#include "hsym/lincomb.hpp"
#include "hsym/rational.hpp"
#include "hsym/signed_word.hpp"

namespace hsym {

using json = nlohmann::json;

// -- basis keys ----------------------------------------------------------------

inline json key_to_json(const SignedPermutation& p) { return to_string(p); }
inline json key_to_json(const SignedWord& w) { return to_string(w); }
inline json key_to_json(const RegularizedComposition& a) { return to_string(a); }
inline json key_to_json(int n) { return n; }

inline std::string key_to_text(const SignedPermutation& p) { return to_string(p); }
inline std::string key_to_text(const SignedWord& w) { return to_string(w); }
inline std::string key_to_text(const RegularizedComposition& a) { return to_string(a); }
inline std::string key_to_text(int n) { return std::to_string(n); }

template <class Key>
struct KeyCodec;

template <>
struct KeyCodec<SignedPermutation> {
    static SignedPermutation parse(const json& j) { return parse_signed_permutation(j.get<std::string>()); }
};
template <>
struct KeyCodec<SignedWord> {
    static SignedWord parse(const json& j) { return parse_signed_word(j.get<std::string>()); }
};
template <>
struct KeyCodec<RegularizedComposition> {
    static RegularizedComposition parse(const json& j) { return parse_regularized_composition(j.get<std::string>()); }
};
template <>
struct KeyCodec<int> {
    static int parse(const json& j) { return j.get<int>(); }
};

// -- JSON ----------------------------------------------------------------------

inline json to_json(const Rational& q) { return q.to_string(); }

/// {"terms":[{"coeff":"-1","key":"1,2"}, …]} in canonical key order.
template <class Key>
json to_json(const LinComb<Key>& a) {
    json terms = json::array();
    for (const auto& [key, coeff] : a) {
        terms.push_back(json{{"coeff", coeff.to_string()}, {"key", key_to_json(key)}});
    }
    return json{{"terms", std::move(terms)}};
}

/// {"terms":[{"coeff":…, "left":…, "right":…}, …]}.
template <class Key>
json to_json(const Tensor<Key>& t) {
    json terms = json::array();
    for (const auto& [lr, coeff] : t) {
        terms.push_back(
            json{{"coeff", coeff.to_string()}, {"left", key_to_json(lr.first)}, {"right", key_to_json(lr.second)}});
    }
    return json{{"terms", std::move(terms)}};
}

template <class Key>
json to_json(const Tensor3<Key>& t) {
    json terms = json::array();
    for (const auto& [abc, coeff] : t) {
        terms.push_back(json{{"coeff", coeff.to_string()},
                             {"keys", json::array({key_to_json(std::get<0>(abc)), key_to_json(std::get<1>(abc)),
                                                   key_to_json(std::get<2>(abc))})}});
    }
    return json{{"terms", std::move(terms)}};
}

/// Inverse of to_json(LinComb). Throws ParseError or json exceptions on malformed input.
template <class Key>
LinComb<Key> lincomb_from_json(const json& j) {
    LinComb<Key> out;
    for (const auto& term : j.at("terms")) {
        out.add(KeyCodec<Key>::parse(term.at("key")), Rational::parse(term.at("coeff").get<std::string>()));
    }
    return out;
}

template <class Key>
Tensor<Key> tensor_from_json(const json& j) {
    Tensor<Key> out;
    for (const auto& term : j.at("terms")) {
        out.add(std::pair<Key, Key>(KeyCodec<Key>::parse(term.at("left")), KeyCodec<Key>::parse(term.at("right"))),
                Rational::parse(term.at("coeff").get<std::string>()));
    }
    return out;
}

// -- text ----------------------------------------------------------------------

namespace detail {

inline std::string signed_term(bool first, const Rational& c, const std::string& body) {
    std::string out;
    if (first) {
        out = c.sign() < 0 ? "−" : "";
    } else {
        out = c.sign() < 0 ? " − " : " + ";
    }
    const Rational mag = c.sign() < 0 ? -c : c;
    return out + mag.to_string() + "·" + body;
}

} // namespace detail

/// "2·F[1,e,1,e] − 1·F[2,e]"; "0" for the empty combination.
template <class Key>
std::string to_text(const LinComb<Key>& a, std::string_view symbol) {
    if (a.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : a) {
        out += detail::signed_term(first, coeff, std::string(symbol) + "[" + key_to_text(key) + "]");
        first = false;
    }
    return out;
}

template <class Key>
std::string to_text(const Tensor<Key>& t, std::string_view symbol) {
    if (t.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    const std::string sym(symbol);
    for (const auto& [lr, coeff] : t) {
        out += detail::signed_term(first, coeff,
                                   sym + "[" + key_to_text(lr.first) + "]⊗" + sym + "[" + key_to_text(lr.second) + "]");
        first = false;
    }
    return out;
}

} // namespace hsym
