#pragma once

#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "hsym/lincomb.hpp"
#include "hsym/rational.hpp"

namespace hsym {

/// Quasi-shuffle product of weight `lambda` over an arbitrary alphabet.
///
/// `Word` must expose `letters()` (a `std::vector<L>`) and be constructible from
/// `std::vector<L>`. `bullet(a, b)` returns the merged letter, or `std::nullopt`
/// when a•b = 0; the bullet need not be commutative. The empty word is the unit
/// and
///
///     au ⋆ bv = a(u ⋆ bv) + b(au ⋆ v) + λ (a•b)(u ⋆ v).
///
/// Evaluated bottom-up over suffix pairs, so each suffix product is built once.
template <class Word, class Bullet>
LinComb<Word> quasi_shuffle_generic(const Word& u, const Word& v, const Rational& lambda, const Bullet& bullet) {
    using Letters = std::decay_t<decltype(u.letters())>;
    using Cell = LinComb<Letters>;

    const Letters& a = u.letters();
    const Letters& b = v.letters();
    const std::size_t m = a.size();
    const std::size_t n = b.size();

    auto prepend_into = [](Cell& dst, const auto& letter, const Cell& src, const Rational& scale) {
        for (const auto& [word, coeff] : src) {
            Letters w;
            w.reserve(word.size() + 1);
            w.push_back(letter);
            w.insert(w.end(), word.begin(), word.end());
            dst.add(std::move(w), coeff * scale);
        }
    };

    // next[j] holds a[i+1..] ⋆ b[j..]; row[j] holds a[i..] ⋆ b[j..].
    std::vector<Cell> next(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        next[j] = Cell(Letters(b.begin() + static_cast<std::ptrdiff_t>(j), b.end()));
    }
    for (std::size_t step = 0; step < m; ++step) {
        const std::size_t i = m - 1 - step;
        std::vector<Cell> row(n + 1);
        row[n] = Cell(Letters(a.begin() + static_cast<std::ptrdiff_t>(i), a.end()));
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t j = n - 1 - k;
            Cell cell;
            prepend_into(cell, a[i], next[j], Rational(1));
            prepend_into(cell, b[j], row[j + 1], Rational(1));
            if (!lambda.is_zero()) {
                if (auto merged = bullet(a[i], b[j])) {
                    prepend_into(cell, *merged, next[j + 1], lambda);
                }
            }
            row[j] = std::move(cell);
        }
        next = std::move(row);
    }

    LinComb<Word> out;
    for (const auto& [word, coeff] : next[0]) {
        out.add(Word(word), coeff);
    }
    return out;
}

} // namespace hsym
