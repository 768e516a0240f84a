#include "hsym/signed_word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "hsym/error.hpp"
#include "hsym/quasi_shuffle.hpp"

namespace hsym {

namespace detail {

std::strong_ordering length_lex(const std::vector<Letter>& a, const std::vector<Letter>& b) {
    if (a.size() != b.size()) {
        return a.size() <=> b.size();
    }
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace detail

SignedWord::SignedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] == 0) {
            throw std::invalid_argument("signed word letter " + std::to_string(i + 1) + " is 0");
        }
    }
}

SignedPermutation::SignedPermutation(std::vector<Letter> entries) : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
        const long v = std::labs(static_cast<long>(entries_[i]));
        if (v == 0 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("entry " + std::to_string(i + 1) + " (" + std::to_string(entries_[i]) +
                                        ") breaks the signed permutation of [" + std::to_string(n) + "]");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

bool SignedPermutation::is_unsigned() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Letter x) { return x > 0; });
}

BulletProduct BulletProduct::negative_left() {
    return BulletProduct([](Letter a, Letter b) -> std::optional<Letter> {
        if (a < 0 && b < 0) {
            return a;
        }
        return std::nullopt;
    });
}

BulletProduct BulletProduct::annihilating() {
    return BulletProduct([](Letter, Letter) -> std::optional<Letter> { return std::nullopt; });
}

SignedPermutation standardize(const SignedWord& w) {
    const auto& a = w.letters();
    std::vector<std::size_t> order(a.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return std::abs(a[x]) < std::abs(a[y]); });
    std::vector<Letter> out(a.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const std::size_t pos = order[rank];
        const Letter r = static_cast<Letter>(rank + 1);
        out[pos] = a[pos] < 0 ? -r : r;
    }
    return SignedPermutation(SignedPermutation::Unchecked{}, std::move(out));
}

SignedWord shift(const SignedWord& w, unsigned m) {
    std::vector<Letter> out = w.letters();
    const Letter s = static_cast<Letter>(m);
    for (auto& x : out) {
        x = x > 0 ? x + s : x - s;
    }
    return SignedWord(std::move(out));
}

SignedWord concat(const SignedWord& u, const SignedWord& v) {
    std::vector<Letter> out = u.letters();
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    return SignedWord(std::move(out));
}

SignedWord slice(const SignedWord& w, std::size_t first, std::size_t last) {
    const auto& a = w.letters();
    return SignedWord(std::vector<Letter>(a.begin() + static_cast<std::ptrdiff_t>(first),
                                          a.begin() + static_cast<std::ptrdiff_t>(last)));
}

LinComb<SignedWord> quasi_shuffle(const SignedWord& u, const SignedWord& v, const Rational& lambda,
                                  const BulletProduct& bullet) {
    return quasi_shuffle_generic(u, v, lambda, bullet);
}

namespace {

// Calls f on every k-subset of {0, …, n-1} given as a sorted index vector.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) {
        return;
    }
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

} // namespace

std::vector<StuffleMap> stuffle_maps(std::size_t m, std::size_t n, std::size_t r) {
    std::vector<StuffleMap> out;
    if (r > m || r > n) {
        return out;
    }
    const std::size_t len = m + n - r;
    for_each_subset(len, m, [&](const std::vector<std::size_t>& phi) {
        std::vector<std::size_t> rest;
        std::size_t p = 0;
        for (std::size_t i = 0; i < len; ++i) {
            if (p < phi.size() && phi[p] == i) {
                ++p;
            } else {
                rest.push_back(i);
            }
        }
        for_each_subset(m, r, [&](const std::vector<std::size_t>& collide) {
            std::vector<std::size_t> psi = rest;
            for (std::size_t c : collide) {
                psi.push_back(phi[c]);
            }
            std::sort(psi.begin(), psi.end());
            out.push_back(StuffleMap{phi, std::move(psi)});
        });
    });
    return out;
}

LinComb<SignedWord> stuffle(const SignedWord& u, const SignedWord& v, const Rational& lambda,
                            const BulletProduct& bullet) {
    const std::size_t m = u.size();
    const std::size_t n = v.size();
    LinComb<SignedWord> out;
    for (std::size_t r = 0; r <= std::min(m, n); ++r) {
        const Rational weight = lambda.pow(static_cast<unsigned>(r));
        if (weight.is_zero()) {
            continue;
        }
        const std::size_t len = m + n - r;
        for (const auto& map : stuffle_maps(m, n, r)) {
            std::vector<std::optional<Letter>> from_u(len), from_v(len);
            for (std::size_t i = 0; i < m; ++i) {
                from_u[map.phi[i]] = u[i];
            }
            for (std::size_t j = 0; j < n; ++j) {
                from_v[map.psi[j]] = v[j];
            }
            std::vector<Letter> word;
            word.reserve(len);
            bool zero = false;
            for (std::size_t i = 0; i < len && !zero; ++i) {
                if (from_u[i] && from_v[i]) {
                    if (auto merged = bullet(*from_u[i], *from_v[i])) {
                        word.push_back(*merged);
                    } else {
                        zero = true;
                    }
                } else {
                    word.push_back(from_u[i] ? *from_u[i] : *from_v[i]);
                }
            }
            if (!zero) {
                out.add(SignedWord(std::move(word)), weight);
            }
        }
    }
    return out;
}

LinComb<SignedWord> right_quasi_shuffle_step(const SignedWord& wc, const SignedWord& vd, const Rational& lambda,
                                             const BulletProduct& bullet) {
    if (wc.empty() || vd.empty()) {
        throw std::invalid_argument("right_quasi_shuffle_step needs two nonempty words");
    }
    const Letter c = wc[wc.size() - 1];
    const Letter d = vd[vd.size() - 1];
    const SignedWord w = slice(wc, 0, wc.size() - 1);
    const SignedWord v = slice(vd, 0, vd.size() - 1);

    auto append = [](LinComb<SignedWord>& dst, const LinComb<SignedWord>& src, Letter x, const Rational& scale) {
        for (const auto& [word, coeff] : src) {
            std::vector<Letter> letters = word.letters();
            letters.push_back(x);
            dst.add(SignedWord(std::move(letters)), coeff * scale);
        }
    };

    LinComb<SignedWord> out;
    append(out, quasi_shuffle(w, vd, lambda, bullet), c, Rational(1));
    append(out, quasi_shuffle(wc, v, lambda, bullet), d, Rational(1));
    if (!lambda.is_zero()) {
        if (auto merged = bullet(c, d)) {
            append(out, quasi_shuffle(w, v, lambda, bullet), *merged, lambda);
        }
    }
    return out;
}

LinComb<SignedPermutation> standardize(const LinComb<SignedWord>& words) {
    return lc_relabel(words, [](const SignedWord& w) { return standardize(w); });
}

LinComb<SignedPermutation> shifted_quasi_shuffle_with_shift(const SignedPermutation& sigma,
                                                            const SignedPermutation& tau, const Rational& lambda,
                                                            unsigned k) {
    if (k < sigma.size()) {
        throw std::invalid_argument("shift must be at least the length of the left factor");
    }
    static const BulletProduct bullet = BulletProduct::negative_left();
    return standardize(quasi_shuffle(sigma.word(), shift(tau.word(), k), lambda, bullet));
}

LinComb<SignedPermutation> shifted_quasi_shuffle(const SignedPermutation& sigma, const SignedPermutation& tau,
                                                 const Rational& lambda) {
    return shifted_quasi_shuffle_with_shift(sigma, tau, lambda, static_cast<unsigned>(sigma.size()));
}

LinComb<SignedPermutation> shifted_shuffle(const SignedPermutation& sigma, const SignedPermutation& tau) {
    return shifted_quasi_shuffle(sigma, tau, Rational(0));
}

std::vector<int> weak_descent_set(const SignedPermutation& pi) {
    std::vector<int> out;
    const std::size_t n = pi.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (pi[i] > std::max(0, pi[i + 1])) {
            out.push_back(static_cast<int>(i + 1));
        }
    }
    if (n > 0 && pi[n - 1] > 0) {
        out.push_back(static_cast<int>(n));
    }
    return out;
}

std::vector<int> descent_set(const SignedPermutation& pi) {
    std::vector<int> out;
    Letter prev = 0;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (prev > pi[i]) {
            out.push_back(static_cast<int>(i));
        }
        prev = pi[i];
    }
    return out;
}

LinComb<int> multinomial_collapse(unsigned m, unsigned n) {
    std::vector<Letter> left(m), right(n);
    for (unsigned i = 0; i < m; ++i) {
        left[i] = -static_cast<Letter>(i + 1);
    }
    for (unsigned j = 0; j < n; ++j) {
        right[j] = -static_cast<Letter>(j + 1);
    }
    const auto product = quasi_shuffle(SignedWord(std::move(left)), shift(SignedWord(std::move(right)), m),
                                       Rational(-1), BulletProduct::negative_left());
    LinComb<int> out;
    for (const auto& [word, coeff] : product) {
        const auto& letters = word.letters();
        if (std::all_of(letters.begin(), letters.end(), [](Letter x) { return x < 0; })) {
            out.add(static_cast<int>(word.size()), coeff);
        }
    }
    return out;
}

std::vector<SignedPermutation> permutations(unsigned n) {
    std::vector<Letter> base(n);
    std::iota(base.begin(), base.end(), 1);
    std::vector<SignedPermutation> out;
    do {
        out.emplace_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<SignedPermutation> signed_permutations(unsigned n) {
    std::vector<SignedPermutation> out;
    for (const auto& p : permutations(n)) {
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            std::vector<Letter> e = p.entries();
            for (unsigned i = 0; i < n; ++i) {
                if ((mask >> i) & 1U) {
                    e[i] = -e[i];
                }
            }
            out.emplace_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string join_letters(const std::vector<Letter>& letters) {
    if (letters.empty()) {
        return "id";
    }
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(letters[i]);
    }
    return out;
}

std::vector<Letter> split_letters(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
            s.remove_prefix(1);
        }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
            s.remove_suffix(1);
        }
        return s;
    };
    text = trim(text);
    std::vector<Letter> out;
    if (text == "id") {
        return out;
    }
    if (text.empty()) {
        throw ParseError("empty signed word (use \"id\" for the identity)");
    }
    std::size_t entry = 0;
    while (true) {
        ++entry;
        const auto comma = text.find(',');
        std::string_view item = trim(text.substr(0, comma));
        if (!item.empty() && item.front() == '+') {
            item.remove_prefix(1);
        }
        Letter value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw ParseError("malformed letter '" + std::string(item) + "'", entry);
        }
        if (value == 0) {
            throw ParseError("letter 0 is not allowed", entry);
        }
        out.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

std::string to_string(const SignedWord& w) { return join_letters(w.letters()); }

std::string to_string(const SignedPermutation& p) { return join_letters(p.entries()); }

SignedWord parse_signed_word(std::string_view text) { return SignedWord(split_letters(text)); }

SignedPermutation parse_signed_permutation(std::string_view text) {
    std::vector<Letter> letters = split_letters(text);
    const std::size_t n = letters.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<std::size_t>(std::abs(letters[i]));
        if (v > n || seen[v]) {
            throw ParseError("absolute values must be a permutation of [" + std::to_string(n) + "]", i + 1);
        }
        seen[v] = true;
    }
    return SignedPermutation(std::move(letters));
}

} // namespace hsym
