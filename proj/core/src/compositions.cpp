#include "hsym/compositions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <stdexcept>

#include "hsym/error.hpp"
#include "hsym/quasi_shuffle.hpp"

namespace hsym {

// -- NTilde ------------------------------------------------------------------

NTilde NTilde::of(long n) {
    if (n < 0) {
        throw std::invalid_argument("Ñ has no negative elements");
    }
    return n == 0 ? NTilde() : NTilde(Kind::positive, n);
}

std::string NTilde::to_string() const {
    switch (kind_) {
    case Kind::zero:
        return "0";
    case Kind::epsilon:
        return "e";
    case Kind::positive:
        break;
    }
    return std::to_string(value_);
}

NTilde operator+(NTilde a, NTilde b) {
    if (a.is_positive() || b.is_positive()) {
        return NTilde(NTilde::Kind::positive, a.value_ + b.value_);
    }
    if (a.is_epsilon() || b.is_epsilon()) {
        return NTilde::eps();
    }
    return NTilde::zero();
}

std::strong_ordering operator<=>(const NTilde& a, const NTilde& b) {
    if (a.kind_ != b.kind_) {
        return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    }
    return a.value_ <=> b.value_;
}

NTilde ntilde_add(NTilde a, NTilde b) { return a + b; }

// -- composition types -----------------------------------------------------------

WeakComposition::WeakComposition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (long p : parts_) {
        if (p < 0) {
            throw std::invalid_argument("weak composition part is negative");
        }
    }
}

Composition::Composition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (long p : parts_) {
        if (p <= 0) {
            throw std::invalid_argument("composition part is not positive");
        }
    }
}

long Composition::weight() const {
    long s = 0;
    for (long p : parts_) {
        s += p;
    }
    return s;
}

std::vector<int> Composition::descent_set() const {
    std::vector<int> out;
    long s = 0;
    for (long p : parts_) {
        s += p;
        out.push_back(static_cast<int>(s));
    }
    return out;
}

RegularizedComposition Composition::regularized() const {
    std::vector<NTilde> parts;
    parts.reserve(parts_.size());
    for (long p : parts_) {
        parts.push_back(NTilde::of(p));
    }
    return RegularizedComposition(std::move(parts));
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    if (a.parts_.size() != b.parts_.size()) {
        return a.parts_.size() <=> b.parts_.size();
    }
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                  b.parts_.end());
}

RegularizedComposition::RegularizedComposition(std::vector<NTilde> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].is_zero()) {
            throw std::invalid_argument("regularized composition part " + std::to_string(i + 1) + " is 0");
        }
    }
}

bool RegularizedComposition::is_composition() const {
    return std::none_of(parts_.begin(), parts_.end(), [](NTilde p) { return p.is_epsilon(); });
}

RegularizedComposition RegularizedComposition::without_eps() const {
    std::vector<NTilde> out;
    for (NTilde p : parts_) {
        if (p.is_positive()) {
            out.push_back(p);
        }
    }
    return RegularizedComposition(std::move(out));
}

std::strong_ordering operator<=>(const RegularizedComposition& a, const RegularizedComposition& b) {
    if (a.parts_.size() != b.parts_.size()) {
        return a.parts_.size() <=> b.parts_.size();
    }
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                  b.parts_.end());
}

// -- statistics --------------------------------------------------------------------

NTilde weight(const RegularizedComposition& alpha) {
    NTilde w;
    for (NTilde p : alpha.parts()) {
        w += p;
    }
    return w;
}

long total_weight(const RegularizedComposition& alpha) {
    long w = 0;
    for (NTilde p : alpha.parts()) {
        w += p.slots();
    }
    return w;
}

long eps_length(const RegularizedComposition& alpha) {
    return static_cast<long>(
        std::count_if(alpha.parts().begin(), alpha.parts().end(), [](NTilde p) { return p.is_epsilon(); }));
}

std::vector<int> descent_set(const RegularizedComposition& alpha) {
    std::vector<int> out;
    long pos = 0;
    for (NTilde p : alpha.parts()) {
        pos += p.slots();
        if (p.is_positive()) {
            out.push_back(static_cast<int>(pos));
        }
    }
    return out;
}

CompositionStats stats(const RegularizedComposition& alpha) {
    return CompositionStats{weight(alpha), total_weight(alpha), eps_length(alpha), descent_set(alpha)};
}

PartBlocks part_blocks(const RegularizedComposition& alpha) {
    PartBlocks out;
    long run = 0;
    for (NTilde p : alpha.parts()) {
        if (p.is_epsilon()) {
            ++run;
        } else {
            out.eps_runs.push_back(run);
            out.positives.push_back(p.value());
            run = 0;
        }
    }
    out.eps_runs.push_back(run);
    return out;
}

RegularizedComposition from_part_blocks(const PartBlocks& blocks) {
    if (blocks.eps_runs.size() != blocks.positives.size() + 1) {
        throw std::invalid_argument("block form needs one more ε run than positive parts");
    }
    std::vector<NTilde> parts;
    for (std::size_t q = 0; q < blocks.eps_runs.size(); ++q) {
        parts.insert(parts.end(), static_cast<std::size_t>(blocks.eps_runs[q]), NTilde::eps());
        if (q < blocks.positives.size()) {
            parts.push_back(NTilde::of(blocks.positives[q]));
        }
    }
    return RegularizedComposition(std::move(parts));
}

// -- conversions -------------------------------------------------------------------

RegularizedComposition regularize(const WeakComposition& alpha) {
    std::vector<NTilde> parts;
    parts.reserve(alpha.size());
    for (long p : alpha.parts()) {
        parts.push_back(p == 0 ? NTilde::eps() : NTilde::of(p));
    }
    return RegularizedComposition(std::move(parts));
}

WeakComposition deregularize(const RegularizedComposition& alpha) {
    std::vector<long> parts;
    parts.reserve(alpha.size());
    for (NTilde p : alpha.parts()) {
        parts.push_back(p.value());
    }
    return WeakComposition(std::move(parts));
}

Composition comp_of_descents(const std::vector<int>& S, int n) {
    std::vector<int> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("descent set has repeated entries");
    }
    if (n < 0 || (!sorted.empty() && (sorted.front() < 1 || sorted.back() > n))) {
        throw std::invalid_argument("descent set is not a subset of [" + std::to_string(n) + "]");
    }
    if (n > 0 && (sorted.empty() || sorted.back() != n)) {
        throw std::invalid_argument("descent set must contain n = " + std::to_string(n));
    }
    std::vector<long> parts;
    int prev = 0;
    for (int s : sorted) {
        parts.push_back(s - prev);
        prev = s;
    }
    return Composition(std::move(parts));
}

// -- refinement ----------------------------------------------------------------------

namespace {

bool trailing_ok(long i, long j) { return (i == 0 && j == 0) || (1 <= j && j <= i); }

// Walks β against the single-part block form of α and returns the ε-run
// lengths j₁ … j_{k+1} of β, or nullopt when β does not refine α.
std::optional<std::vector<long>> match_parts(const RegularizedComposition& beta, const RegularizedComposition& alpha) {
    const PartBlocks a = part_blocks(alpha);
    const auto& b = beta.parts();
    std::size_t pos = 0;
    std::vector<long> js;
    auto eat_eps = [&] {
        long j = 0;
        while (pos < b.size() && b[pos].is_epsilon()) {
            ++j;
            ++pos;
        }
        return j;
    };
    for (std::size_t q = 0; q < a.positives.size(); ++q) {
        const long j = eat_eps();
        if (j > a.eps_runs[q]) {
            return std::nullopt;
        }
        js.push_back(j);
        long sum = 0;
        while (sum < a.positives[q]) {
            if (pos >= b.size() || !b[pos].is_positive()) {
                return std::nullopt;
            }
            sum += b[pos++].value();
        }
        if (sum != a.positives[q]) {
            return std::nullopt;
        }
    }
    const long j = eat_eps();
    if (pos != b.size() || !trailing_ok(a.eps_runs.back(), j)) {
        return std::nullopt;
    }
    js.push_back(j);
    return js;
}

} // namespace

void for_each_refinement(const RegularizedComposition& alpha,
                         const std::function<void(const RegularizedComposition&, const BigInt&)>& visit) {
    const PartBlocks a = part_blocks(alpha);
    const std::size_t k = a.positives.size();
    std::vector<std::vector<Composition>> splits;
    for (long s : a.positives) {
        splits.push_back(compositions(s));
    }
    std::vector<NTilde> current;

    // Run q keeps j of its i ε's in C(i, j) ways; the trailing run keeps its last ε.
    std::function<void(std::size_t, const BigInt&)> rec = [&](std::size_t q, const BigInt& c) {
        if (q == k) {
            const long i = a.eps_runs[k];
            const long lo = i == 0 ? 0 : 1;
            for (long j = lo; j <= i; ++j) {
                const std::size_t mark = current.size();
                current.insert(current.end(), static_cast<std::size_t>(j), NTilde::eps());
                visit(RegularizedComposition(current), i == 0 ? c : c * binomial(i - 1, j - 1));
                current.resize(mark);
            }
            return;
        }
        for (long j = 0; j <= a.eps_runs[q]; ++j) {
            const BigInt cj = c * binomial(a.eps_runs[q], j);
            for (const Composition& split : splits[q]) {
                const std::size_t mark = current.size();
                current.insert(current.end(), static_cast<std::size_t>(j), NTilde::eps());
                for (long part : split.parts()) {
                    current.push_back(NTilde::of(part));
                }
                rec(q + 1, cj);
                current.resize(mark);
            }
        }
    };
    rec(0, BigInt(1));
}

std::vector<RegularizedComposition> enumerate_refinements(const RegularizedComposition& alpha) {
    std::vector<RegularizedComposition> out;
    for_each_refinement(alpha, [&](const RegularizedComposition& beta, const BigInt&) { out.push_back(beta); });
    std::sort(out.begin(), out.end());
    return out;
}

bool refines(const RegularizedComposition& beta, const RegularizedComposition& alpha) {
    return match_parts(beta, alpha).has_value();
}

BigInt refinement_coefficient(const RegularizedComposition& alpha, const RegularizedComposition& beta) {
    const auto js = match_parts(beta, alpha);
    if (!js) {
        return 0;
    }
    const PartBlocks a = part_blocks(alpha);
    const std::size_t k = a.positives.size();
    BigInt c = 1;
    for (std::size_t q = 0; q < k; ++q) {
        c *= binomial(a.eps_runs[q], (*js)[q]);
    }
    c *= binomial(a.eps_runs[k] - 1, (*js)[k] - 1);
    return c;
}

// -- structural operations -----------------------------------------------------------

RegularizedComposition reversal(const RegularizedComposition& alpha) {
    std::vector<NTilde> parts(alpha.parts().rbegin(), alpha.parts().rend());
    return RegularizedComposition(std::move(parts));
}

RegularizedComposition concat(const RegularizedComposition& alpha, const RegularizedComposition& beta) {
    std::vector<NTilde> parts = alpha.parts();
    parts.insert(parts.end(), beta.parts().begin(), beta.parts().end());
    return RegularizedComposition(std::move(parts));
}

RegularizedComposition near_concat(const RegularizedComposition& alpha, const RegularizedComposition& beta) {
    if (alpha.empty() || !alpha.parts().back().is_positive()) {
        throw std::domain_error("near concatenation needs a positive last part on the left (part " +
                                std::to_string(alpha.size()) + " of " + to_string(alpha) + ")");
    }
    if (beta.empty() || !beta.parts().front().is_positive()) {
        throw std::domain_error("near concatenation needs a positive first part on the right (part 1 of " +
                                to_string(beta) + ")");
    }
    std::vector<NTilde> parts = alpha.parts();
    parts.back() += beta.parts().front();
    parts.insert(parts.end(), beta.parts().begin() + 1, beta.parts().end());
    return RegularizedComposition(std::move(parts));
}

RegularizedComposition j_apply(const Composition& J, const RegularizedComposition& alpha) {
    if (J.weight() != static_cast<long>(alpha.size())) {
        throw std::invalid_argument("J = " + to_string(J) + " is not a composition of " +
                                    std::to_string(alpha.size()));
    }
    std::vector<NTilde> parts;
    std::size_t pos = 0;
    for (long len : J.parts()) {
        NTilde sum;
        for (long t = 0; t < len; ++t) {
            sum += alpha[pos++];
        }
        parts.push_back(sum);
    }
    return RegularizedComposition(std::move(parts));
}

LinComb<RegularizedComposition> star_product(const RegularizedComposition& alpha,
                                             const RegularizedComposition& beta) {
    return quasi_shuffle_generic(alpha, beta, Rational(1),
                                 [](NTilde a, NTilde b) { return std::optional<NTilde>(a + b); });
}

RegularizedComposition wcomp(const SignedPermutation& pi) {
    std::vector<NTilde> parts;
    const auto& e = pi.entries();
    std::size_t i = 0;
    while (i < e.size()) {
        if (e[i] < 0) {
            parts.push_back(NTilde::eps());
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < e.size() && e[j] > 0) {
            ++j;
        }
        const SignedPermutation block = standardize(slice(pi.word(), i, j));
        const Composition c = comp_of_descents(weak_descent_set(block), static_cast<int>(j - i));
        for (long p : c.parts()) {
            parts.push_back(NTilde::of(p));
        }
        i = j;
    }
    return RegularizedComposition(std::move(parts));
}

// -- enumeration ---------------------------------------------------------------------

std::vector<RegularizedComposition> regularized_compositions(long w) {
    std::vector<RegularizedComposition> out;
    std::vector<NTilde> current;
    std::function<void(long)> rec = [&](long left) {
        if (left == 0) {
            out.emplace_back(current);
            return;
        }
        current.push_back(NTilde::eps());
        rec(left - 1);
        current.pop_back();
        for (long s = 1; s <= left; ++s) {
            current.push_back(NTilde::of(s));
            rec(left - s);
            current.pop_back();
        }
    };
    if (w >= 0) {
        rec(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RegularizedComposition> regularized_compositions_upto(long w) {
    std::vector<RegularizedComposition> out;
    for (long t = 0; t <= w; ++t) {
        auto level = regularized_compositions(t);
        out.insert(out.end(), level.begin(), level.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> compositions(long n) {
    std::vector<Composition> out;
    if (n < 0) {
        return out;
    }
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Each subset of the n-1 gaps is a set of cut points.
    for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
        std::vector<long> parts;
        long run = 1;
        for (long g = 0; g < n - 1; ++g) {
            if ((mask >> g) & 1UL) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// -- text encoding ----------------------------------------------------------------------

std::string to_string(const RegularizedComposition& alpha) {
    if (alpha.empty()) {
        return "empty";
    }
    std::string out;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += alpha[i].to_string();
    }
    return out;
}

std::string to_string(const Composition& alpha) { return to_string(alpha.regularized()); }

RegularizedComposition parse_regularized_composition(std::string_view text) {
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
    std::vector<NTilde> parts;
    if (text == "empty") {
        return RegularizedComposition();
    }
    if (text.empty()) {
        throw ParseError("empty composition (use \"empty\" for ∅)");
    }
    std::size_t index = 0;
    while (true) {
        ++index;
        const auto comma = text.find(',');
        const std::string_view item = trim(text.substr(0, comma));
        if (item == "e" || item == "ε") {
            parts.push_back(NTilde::eps());
        } else {
            long value = 0;
            const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
                throw ParseError("malformed part '" + std::string(item) + "'", index);
            }
            if (value <= 0) {
                throw ParseError("parts must be positive or e", index);
            }
            parts.push_back(NTilde::of(value));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return RegularizedComposition(std::move(parts));
}

} // namespace hsym
