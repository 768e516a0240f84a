#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <tuple>
#include <type_traits>
#include <utility>

#include "hsym/rational.hpp"

namespace hsym {

/// Finite linear combination of basis keys with exact rational coefficients.
///
/// No stored coefficient is ever zero, so two combinations are equal exactly when
/// their term maps are equal. Iteration follows the key type's `operator<`, which
/// every basis type defines as its canonical order.
template <class Key>
class LinComb {
public:
    using key_type = Key;
    using container_type = std::map<Key, Rational>;
    using const_iterator = typename container_type::const_iterator;

    LinComb() = default;

    explicit LinComb(Key key, const Rational& coeff = Rational(1)) { add(std::move(key), coeff); }

    LinComb(std::initializer_list<std::pair<Key, Rational>> terms) {
        for (const auto& [key, coeff] : terms) {
            add(key, coeff);
        }
    }

    void add(const Key& key, const Rational& coeff) {
        if (coeff.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    void add(Key&& key, const Rational& coeff) {
        if (coeff.is_zero()) {
            return;
        }
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), coeff);
            return;
        }
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }

    /// Adds `scale * other` into this combination.
    void add_scaled(const LinComb& other, const Rational& scale) {
        if (scale.is_zero()) {
            return;
        }
        for (const auto& [key, coeff] : other.terms_) {
            add(key, coeff * scale);
        }
    }

    Rational coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool contains(const Key& key) const { return terms_.count(key) != 0; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const container_type& terms() const { return terms_; }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [key, coeff] : o.terms_) {
            add(key, coeff);
        }
        return *this;
    }

    LinComb& operator-=(const LinComb& o) {
        for (const auto& [key, coeff] : o.terms_) {
            add(key, -coeff);
        }
        return *this;
    }

    LinComb& operator*=(const Rational& scale) {
        if (scale.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& entry : terms_) {
            entry.second *= scale;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    container_type terms_;
};

/// Tensor-square combinations, keyed by ordered pairs (lexicographic order).
template <class Key>
using Tensor = LinComb<std::pair<Key, Key>>;

template <class Key>
using Tensor3 = LinComb<std::tuple<Key, Key, Key>>;

template <class Key>
LinComb<Key> lc_add(const LinComb<Key>& a, const LinComb<Key>& b) {
    return a + b;
}

/// Linear extension of a basis map `f : Key -> LinComb<K2>`.
template <class Key, class F>
auto lc_map(const LinComb<Key>& a, F&& f) -> std::decay_t<std::invoke_result_t<F&, const Key&>> {
    using Out = std::decay_t<std::invoke_result_t<F&, const Key&>>;
    Out out;
    for (const auto& [key, coeff] : a) {
        out.add_scaled(f(key), coeff);
    }
    return out;
}

/// Linear extension of a key relabeling `f : Key -> K2`.
template <class Key, class F>
auto lc_relabel(const LinComb<Key>& a, F&& f) -> LinComb<std::decay_t<std::invoke_result_t<F&, const Key&>>> {
    LinComb<std::decay_t<std::invoke_result_t<F&, const Key&>>> out;
    for (const auto& [key, coeff] : a) {
        out.add(f(key), coeff);
    }
    return out;
}

/// Bilinear extension of `mult : (Key, Key) -> LinComb<Key>`.
template <class Key, class Mult>
LinComb<Key> lc_product(const LinComb<Key>& a, const LinComb<Key>& b, Mult&& mult) {
    LinComb<Key> out;
    for (const auto& [x, cx] : a) {
        for (const auto& [y, cy] : b) {
            out.add_scaled(mult(x, y), cx * cy);
        }
    }
    return out;
}

/// Outer product `a ⊗ b` of two combinations.
template <class Key>
Tensor<Key> tensor_of(const LinComb<Key>& a, const LinComb<Key>& b) {
    Tensor<Key> out;
    for (const auto& [x, cx] : a) {
        for (const auto& [y, cy] : b) {
            out.add(std::pair<Key, Key>(x, y), cx * cy);
        }
    }
    return out;
}

/// Componentwise product (x⊗y)(u⊗v) = (x·u)⊗(y·v), extended bilinearly.
template <class Key, class Mult>
Tensor<Key> tensor_bilinear(const Tensor<Key>& a, const Tensor<Key>& b, Mult&& mult) {
    Tensor<Key> out;
    for (const auto& [xy, c1] : a) {
        for (const auto& [uv, c2] : b) {
            const LinComb<Key> left = mult(xy.first, uv.first);
            if (left.empty()) {
                continue;
            }
            const LinComb<Key> right = mult(xy.second, uv.second);
            const Rational scale = c1 * c2;
            for (const auto& [l, cl] : left) {
                for (const auto& [r, cr] : right) {
                    out.add(std::pair<Key, Key>(l, r), scale * cl * cr);
                }
            }
        }
    }
    return out;
}

/// (f ⊗ g)(t) for basis maps f, g into combinations over a common key type.
template <class Key, class F, class G>
auto tensor_map(const Tensor<Key>& t, F&& f, G&& g) {
    using K2 = typename std::decay_t<std::invoke_result_t<F&, const Key&>>::key_type;
    Tensor<K2> out;
    for (const auto& [xy, c] : t) {
        out.add_scaled(tensor_of(f(xy.first), g(xy.second)), c);
    }
    return out;
}

} // namespace hsym
