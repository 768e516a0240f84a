#include "hsym/ppartitions.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hsym/error.hpp"
#include "hsym/hopf.hpp"
#include "hsym/parallel.hpp"

namespace hsym {

// -- posets ----------------------------------------------------------------------

SignedLabeledPoset::SignedLabeledPoset(std::vector<Letter> labels, std::vector<std::pair<Letter, Letter>> covers)
    : labels_(std::move(labels)), covers_(std::move(covers)) {
    std::sort(labels_.begin(), labels_.end(), [](Letter a, Letter b) { return std::abs(a) < std::abs(b); });
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == 0) {
            throw std::invalid_argument("poset label 0 is not allowed");
        }
        if (i > 0 && std::abs(labels_[i]) == std::abs(labels_[i - 1])) {
            throw std::invalid_argument("poset labels " + std::to_string(labels_[i - 1]) + " and " +
                                        std::to_string(labels_[i]) + " share an absolute value");
        }
    }
    const std::size_t n = labels_.size();
    below_.assign(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : covers_) {
        below_[index_of(a)][index_of(b)] = true;
    }
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!below_[i][m]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (below_[m][j]) {
                    below_[i][j] = true;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (below_[i][i]) {
            throw std::invalid_argument("poset relations contain a cycle through " + std::to_string(labels_[i]));
        }
    }
    std::sort(covers_.begin(), covers_.end());
    covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
}

SignedLabeledPoset SignedLabeledPoset::chain(const std::vector<Letter>& word) {
    std::vector<std::pair<Letter, Letter>> covers;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        covers.emplace_back(word[i], word[i + 1]);
    }
    return SignedLabeledPoset(word, std::move(covers));
}

std::size_t SignedLabeledPoset::index_of(Letter label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return i;
        }
    }
    throw std::out_of_range("label " + std::to_string(label) + " is not in the poset");
}

bool SignedLabeledPoset::less(Letter a, Letter b) const { return below_[index_of(a)][index_of(b)]; }

std::map<Letter, Letter> SignedLabeledPoset::standardization_map() const {
    std::map<Letter, Letter> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const Letter rank = static_cast<Letter>(i + 1);
        out[labels_[i]] = labels_[i] < 0 ? -rank : rank;
    }
    return out;
}

SignedLabeledPoset SignedLabeledPoset::standardized() const {
    const auto st = standardization_map();
    std::vector<Letter> labels;
    for (Letter a : labels_) {
        labels.push_back(st.at(a));
    }
    std::vector<std::pair<Letter, Letter>> covers;
    for (const auto& [a, b] : covers_) {
        covers.emplace_back(st.at(a), st.at(b));
    }
    return SignedLabeledPoset(std::move(labels), std::move(covers));
}

SignedLabeledPoset disjoint_union(const SignedLabeledPoset& p, const SignedLabeledPoset& q) {
    std::vector<Letter> labels = p.labels_;
    labels.insert(labels.end(), q.labels_.begin(), q.labels_.end());
    std::vector<std::pair<Letter, Letter>> covers = p.covers_;
    covers.insert(covers.end(), q.covers_.begin(), q.covers_.end());
    return SignedLabeledPoset(std::move(labels), std::move(covers));
}

std::vector<CoverConstraint> cover_constraints(const SignedLabeledPoset& P) {
    std::vector<CoverConstraint> out;
    for (const auto& [a, b] : P.covers()) {
        out.push_back(CoverConstraint{a, b, a > std::max(0, b)});
    }
    return out;
}

std::vector<SignedPermutation> linear_extensions(const SignedLabeledPoset& P) {
    const SignedLabeledPoset Q = P.standardized();
    const auto& labels = Q.labels();
    const std::size_t n = labels.size();
    std::vector<bool> placed(n, false);
    std::vector<Letter> word;
    std::vector<SignedPermutation> out;
    std::function<void()> rec = [&] {
        if (word.size() == n) {
            out.emplace_back(word);
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (placed[i]) {
                continue;
            }
            bool minimal = true;
            for (std::size_t j = 0; j < n && minimal; ++j) {
                minimal = placed[j] || !Q.less(labels[j], labels[i]);
            }
            if (!minimal) {
                continue;
            }
            placed[i] = true;
            word.push_back(labels[i]);
            rec();
            word.pop_back();
            placed[i] = false;
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

int PPartition::at(Letter label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) {
            return values[i];
        }
    }
    throw std::out_of_range("label " + std::to_string(label) + " is not in the P-partition");
}

namespace {

// Visits every P-partition into [k] as a value vector in labels() order.
template <class Visit>
void for_each_ppartition(const SignedLabeledPoset& P, int k, Visit&& visit) {
    const auto& labels = P.labels();
    const std::size_t n = labels.size();

    // Topological order, then the constraints that bound each element from below.
    std::vector<std::size_t> order;
    std::vector<bool> done(n, false);
    while (order.size() < n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) {
                continue;
            }
            bool ready = true;
            for (std::size_t j = 0; j < n && ready; ++j) {
                ready = done[j] || !P.less(labels[j], labels[i]);
            }
            if (ready) {
                done[i] = true;
                order.push_back(i);
            }
        }
    }
    std::vector<std::vector<std::pair<std::size_t, int>>> lower(n);
    for (const auto& c : cover_constraints(P)) {
        lower[P.index_of(c.upper)].emplace_back(P.index_of(c.lower), c.strict ? 1 : 0);
    }

    std::vector<int> values(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t t) {
        if (t == n) {
            visit(values);
            return;
        }
        const std::size_t e = order[t];
        int lo = 1;
        for (const auto& [l, strict] : lower[e]) {
            lo = std::max(lo, values[l] + strict);
        }
        for (int v = lo; v <= k; ++v) {
            values[e] = v;
            rec(t + 1);
        }
        values[e] = 0;
    };
    rec(0);
}

} // namespace

std::vector<PPartition> enumerate_ppartitions(const SignedLabeledPoset& P, int k) {
    if (k < 1) {
        throw std::invalid_argument("need at least one variable");
    }
    std::vector<PPartition> out;
    for_each_ppartition(P, k, [&](const std::vector<int>& values) { out.push_back(PPartition{P.labels(), values}); });
    std::sort(out.begin(), out.end());
    return out;
}

// -- truncated series -----------------------------------------------------------------

TruncatedSeries TruncatedSeries::one(int k) {
    TruncatedSeries s(k);
    s.add(Exponents(static_cast<std::size_t>(k)), Rational(1));
    return s;
}

TruncatedSeries TruncatedSeries::monomial(Exponents exps, const Rational& coeff) {
    TruncatedSeries s(static_cast<int>(exps.size()));
    s.add(exps, coeff);
    return s;
}

Rational TruncatedSeries::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != k_) {
        throw std::invalid_argument("exponent vector of length " + std::to_string(e.size()) + " in a series in " +
                                    std::to_string(k_) + " variables");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.k_ != k_) {
        throw std::invalid_argument("series in different numbers of variables");
    }
    for (const auto& [e, c] : o.terms_) {
        add(e, c);
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) {
        term.second *= c;
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.k_ != b.k_) {
        throw std::invalid_argument("series in different numbers of variables");
    }
    TruncatedSeries out(a.k_);
    TruncatedSeries::Exponents e(static_cast<std::size_t>(a.k_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add(e, ca * cb);
        }
    }
    return out;
}

TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    TruncatedSeries neg = b;
    neg *= Rational(-1);
    return a += neg;
}

TruncatedSeries TruncatedSeries::restrict_to(int m) const {
    if (m < 0 || m > k_) {
        throw std::invalid_argument("cannot restrict to " + std::to_string(m) + " variables");
    }
    TruncatedSeries out(m);
    for (const auto& [e, c] : terms_) {
        if (std::all_of(e.begin() + m, e.end(), [](NTilde x) { return x.is_zero(); })) {
            out.add(Exponents(e.begin(), e.begin() + m), c);
        }
    }
    return out;
}

// -- generating functions ----------------------------------------------------------------

TruncatedSeries gamma(const SignedLabeledPoset& P, int k) {
    TruncatedSeries out(k);
    const auto& labels = P.labels();
    TruncatedSeries::Exponents e(static_cast<std::size_t>(k));
    for_each_ppartition(P, k, [&](const std::vector<int>& values) {
        std::fill(e.begin(), e.end(), NTilde::zero());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            e[static_cast<std::size_t>(values[i] - 1)] += labels[i] > 0 ? NTilde::of(1) : NTilde::eps();
        }
        out.add(e, Rational(1));
    });
    return out;
}

TruncatedSeries gamma(const SignedPermutation& pi, int k) { return gamma(SignedLabeledPoset::chain(pi), k); }

TruncatedSeries gamma(const LinComb<SignedPermutation>& a, int k) {
    TruncatedSeries out(k);
    for (const auto& [pi, c] : a) {
        out += gamma(pi, k) * c;
    }
    return out;
}

TruncatedSeries expand_M(const RegularizedComposition& alpha, int k) {
    TruncatedSeries out(k);
    const std::size_t len = alpha.size();
    if (len > static_cast<std::size_t>(k)) {
        return out;
    }
    TruncatedSeries::Exponents e(static_cast<std::size_t>(k));
    std::function<void(std::size_t, int)> rec = [&](std::size_t t, int next) {
        if (t == len) {
            out.add(e, Rational(1));
            return;
        }
        for (int j = next; j < k; ++j) {
            e[static_cast<std::size_t>(j)] = alpha[t];
            rec(t + 1, j + 1);
            e[static_cast<std::size_t>(j)] = NTilde::zero();
        }
    };
    rec(0, 0);
    return out;
}

TruncatedSeries expand_F(const RegularizedComposition& alpha, int k) {
    TruncatedSeries out(k);
    // Slot exponents and the slots after which the index must strictly increase.
    std::vector<NTilde> slot;
    std::vector<bool> strict_after;
    for (NTilde p : alpha.parts()) {
        if (p.is_epsilon()) {
            slot.push_back(NTilde::eps());
            strict_after.push_back(false);
        } else {
            for (long s = 0; s < p.value(); ++s) {
                slot.push_back(NTilde::of(1));
                strict_after.push_back(s + 1 == p.value());
            }
        }
    }
    const std::size_t n = slot.size();
    std::vector<int> idx(n);
    TruncatedSeries::Exponents e(static_cast<std::size_t>(k));
    std::function<void(std::size_t, int)> rec = [&](std::size_t t, int lo) {
        if (t == n) {
            std::fill(e.begin(), e.end(), NTilde::zero());
            for (std::size_t s = 0; s < n; ++s) {
                e[static_cast<std::size_t>(idx[s])] += slot[s];
            }
            out.add(e, Rational(1));
            return;
        }
        for (int j = lo; j < k; ++j) {
            idx[t] = j;
            rec(t + 1, strict_after[t] ? j + 1 : j);
        }
    };
    rec(0, 0);
    return out;
}

TruncatedSeries expand_M(const LinComb<RegularizedComposition>& a, int k) {
    TruncatedSeries out(k);
    for (const auto& [alpha, c] : a) {
        out += expand_M(alpha, k) * c;
    }
    return out;
}

TruncatedSeries expand_F(const LinComb<RegularizedComposition>& a, int k) {
    TruncatedSeries out(k);
    for (const auto& [alpha, c] : a) {
        out += expand_F(alpha, k) * c;
    }
    return out;
}

LinComb<RegularizedComposition> m_coordinates(const TruncatedSeries& s) {
    LinComb<RegularizedComposition> out;
    for (const auto& [e, c] : s.terms()) {
        const auto first_zero = std::find_if(e.begin(), e.end(), [](NTilde x) { return x.is_zero(); });
        if (std::all_of(first_zero, e.end(), [](NTilde x) { return x.is_zero(); })) {
            out.add(RegularizedComposition(std::vector<NTilde>(e.begin(), first_zero)), c);
        }
    }
    return out;
}

LinComb<RegularizedComposition> gamma_F(const SignedLabeledPoset& P) {
    return m_to_f(m_coordinates(gamma(P, static_cast<int>(P.size()))));
}

// -- text formats -------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

Letter parse_label(std::string_view item, std::size_t line) {
    item = trim(item);
    if (!item.empty() && item.front() == '+') {
        item.remove_prefix(1);
    }
    Letter v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        throw ParseError("malformed poset label '" + std::string(item) + "'", line);
    }
    if (v == 0) {
        throw ParseError("poset label 0 is not allowed", line);
    }
    return v;
}

NTilde parse_exponent(const std::string& s) {
    if (s == "e") {
        return NTilde::eps();
    }
    long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
        throw ParseError("malformed exponent '" + s + "'");
    }
    return NTilde::of(v);
}

std::string poset_to_string(const SignedLabeledPoset& P) {
    std::string out = "{";
    for (std::size_t i = 0; i < P.labels().size(); ++i) {
        out += (i ? "," : "") + std::to_string(P.labels()[i]);
    }
    out += "}";
    for (const auto& [a, b] : P.covers()) {
        out += " " + std::to_string(a) + "<" + std::to_string(b);
    }
    return out;
}

} // namespace

SignedLabeledPoset parse_poset(std::string_view text) {
    std::vector<Letter> labels;
    std::vector<std::pair<Letter, Letter>> relations;
    auto note = [&](Letter a) {
        if (std::find(labels.begin(), labels.end(), a) == labels.end()) {
            labels.push_back(a);
        }
    };
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        Letter prev = 0;
        bool first = true;
        while (true) {
            const auto lt = line.find('<');
            const Letter a = parse_label(line.substr(0, lt), line_no);
            note(a);
            if (!first) {
                relations.emplace_back(prev, a);
            }
            prev = a;
            first = false;
            if (lt == std::string_view::npos) {
                break;
            }
            line.remove_prefix(lt + 1);
        }
    }
    try {
        return SignedLabeledPoset(std::move(labels), std::move(relations));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json to_json(const TruncatedSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) {
        json exps = json::array();
        for (NTilde x : e) {
            exps.push_back(x.to_string());
        }
        terms.push_back(json{{"coeff", c.to_string()}, {"exps", std::move(exps)}});
    }
    return json{{"k", s.k()}, {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const json& j) {
    TruncatedSeries out(j.at("k").get<int>());
    for (const auto& term : j.at("terms")) {
        TruncatedSeries::Exponents e;
        for (const auto& x : term.at("exps")) {
            e.push_back(parse_exponent(x.get<std::string>()));
        }
        out.add(e, Rational::parse(term.at("coeff").get<std::string>()));
    }
    return out;
}

json to_json(const std::vector<PPartition>& fs) {
    json out = json::array();
    for (const auto& f : fs) {
        json row = json::object();
        for (std::size_t i = 0; i < f.labels.size(); ++i) {
            row[std::to_string(f.labels[i])] = f.values[i];
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::string to_text(const TruncatedSeries& s) {
    if (s.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : s.terms()) {
        std::string body;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i].is_zero()) {
                continue;
            }
            body += (body.empty() ? "" : " ") + ("x" + std::to_string(i + 1));
            if (!(e[i].is_positive() && e[i].value() == 1)) {
                body += "^" + e[i].to_string();
            }
        }
        out += detail::signed_term(first, c, body.empty() ? "1" : body);
        first = false;
    }
    return out;
}

// -- verification ----------------------------------------------------------------------------

GammaBudget GammaBudget::from_max_degree(long d) {
    GammaBudget b;
    b.single_max = d;
    b.single_k = static_cast<int>(2 * d);
    b.pair_max = d + 1;
    b.pair_k = static_cast<int>(2 * (d + 1));
    return b;
}

SignedLabeledPoset random_poset(std::mt19937& rng, int n, std::vector<Letter>& pool) {
    if (static_cast<std::size_t>(n) > pool.size()) {
        throw std::invalid_argument("label pool exhausted");
    }
    std::vector<Letter> labels;
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < n; ++i) {
        const Letter a = pool.back();
        pool.pop_back();
        labels.push_back(coin(rng) ? -a : a);
    }
    // Relations only go forward in a random order, so the result is acyclic.
    std::shuffle(labels.begin(), labels.end(), rng);
    std::bernoulli_distribution edge(0.4);
    std::vector<std::pair<Letter, Letter>> relations;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (edge(rng)) {
                relations.emplace_back(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);
            }
        }
    }
    return SignedLabeledPoset(std::move(labels), std::move(relations));
}

Report verify_gamma_theorems(const GammaBudget& budget, unsigned jobs) {
    const std::string l_single = "length <= " + std::to_string(budget.single_max) + ", k = " +
                                 std::to_string(budget.single_k);
    const std::string l_pair = "combined length <= " + std::to_string(budget.pair_max) + ", k = " +
                               std::to_string(budget.pair_k);
    const std::string l_union = std::to_string(budget.union_pairs) + " random pairs of size <= " +
                                std::to_string(budget.union_size) + ", k = " + std::to_string(budget.union_k);
    const std::string l_ext = std::to_string(budget.extension_posets) + " random posets of size <= " +
                              std::to_string(budget.extension_size) + ", k = " + std::to_string(budget.extension_k);

    Report blank("gamma");
    blank.law("Gamma(pi) = F_wcomp(pi)", l_single);
    blank.law("Gamma(sigma) Gamma(tau) = Gamma(sigma * tau)", l_pair);
    blank.law("Gamma(P u Q) = Gamma(P) Gamma(Q)", l_union);
    blank.law("A(P) = union of A(pi) over L(P)", l_ext);
    blank.law("Gamma(P) = Gamma(st(P))", l_ext);

    auto run = [&](std::size_t n, auto&& work) {
        Report out = blank;
        for (const auto& part : parallel_chunks<Report>(n, jobs, [&](std::size_t b, std::size_t e) {
                 Report r = blank;
                 work(r, b, e);
                 return r;
             })) {
            out.merge(part);
        }
        return out;
    };

    Report out = blank;

    std::vector<SignedPermutation> singles;
    for (long n = 0; n <= budget.single_max; ++n) {
        const auto level = signed_permutations(static_cast<unsigned>(n));
        singles.insert(singles.end(), level.begin(), level.end());
    }
    out.merge(run(singles.size(), [&](Report& r, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            const auto& pi = singles[i];
            r.expect_equal(r.law("Gamma(pi) = F_wcomp(pi)"), {to_string(pi)}, gamma(pi, budget.single_k),
                           expand_F(wcomp(pi), budget.single_k));
        }
    }));

    std::vector<SignedPermutation> perms;
    for (long n = 0; n <= budget.pair_max; ++n) {
        const auto level = signed_permutations(static_cast<unsigned>(n));
        perms.insert(perms.end(), level.begin(), level.end());
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < perms.size(); ++a) {
        for (std::size_t b = 0; b < perms.size(); ++b) {
            if (static_cast<long>(perms[a].size() + perms[b].size()) <= budget.pair_max) {
                pairs.emplace_back(a, b);
            }
        }
    }
    out.merge(run(pairs.size(), [&](Report& r, std::size_t b, std::size_t e) {
        std::map<SignedPermutation, TruncatedSeries> cache;
        auto g = [&](const SignedPermutation& p) -> const TruncatedSeries& {
            auto it = cache.find(p);
            if (it == cache.end()) {
                it = cache.emplace(p, gamma(p, budget.pair_k)).first;
            }
            return it->second;
        };
        for (std::size_t i = b; i < e; ++i) {
            const auto& s = perms[pairs[i].first];
            const auto& t = perms[pairs[i].second];
            TruncatedSeries rhs(budget.pair_k);
            for (const auto& [p, c] : shifted_quasi_shuffle(s, t, Rational(-1))) {
                rhs += g(p) * c;
            }
            r.expect_equal(r.law("Gamma(sigma) Gamma(tau) = Gamma(sigma * tau)"), {to_string(s), to_string(t)},
                           g(s) * g(t), rhs);
        }
    }));

    std::mt19937 rng(budget.seed);
    std::uniform_int_distribution<int> union_size(1, std::max(1, budget.union_size));
    std::vector<std::pair<SignedLabeledPoset, SignedLabeledPoset>> unions;
    for (int i = 0; i < budget.union_pairs; ++i) {
        std::vector<Letter> pool(static_cast<std::size_t>(2 * budget.union_size + 2));
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        SignedLabeledPoset p = random_poset(rng, union_size(rng), pool);
        SignedLabeledPoset q = random_poset(rng, union_size(rng), pool);
        unions.emplace_back(std::move(p), std::move(q));
    }
    out.merge(run(unions.size(), [&](Report& r, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            const auto& [p, q] = unions[i];
            r.expect_equal(r.law("Gamma(P u Q) = Gamma(P) Gamma(Q)"), {poset_to_string(p), poset_to_string(q)},
                           gamma(disjoint_union(p, q), budget.union_k),
                           gamma(p, budget.union_k) * gamma(q, budget.union_k));
        }
    }));

    std::uniform_int_distribution<int> ext_size(1, std::max(1, budget.extension_size));
    std::vector<SignedLabeledPoset> posets;
    for (int i = 0; i < budget.extension_posets; ++i) {
        std::vector<Letter> pool(static_cast<std::size_t>(2 * budget.extension_size + 2));
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        posets.push_back(random_poset(rng, ext_size(rng), pool));
    }
    out.merge(run(posets.size(), [&](Report& r, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            const auto& P = posets[i];
            const int k = budget.extension_k;
            const auto st = P.standardization_map();
            const SignedLabeledPoset Q = P.standardized();

            // A(P), transported to the labels of st(P).
            std::vector<PPartition> lhs;
            for (const auto& f : enumerate_ppartitions(P, k)) {
                PPartition g{Q.labels(), std::vector<int>(Q.size())};
                for (std::size_t t = 0; t < f.labels.size(); ++t) {
                    g.values[Q.index_of(st.at(f.labels[t]))] = f.values[t];
                }
                lhs.push_back(std::move(g));
            }
            std::sort(lhs.begin(), lhs.end());

            std::vector<PPartition> rhs;
            for (const auto& pi : linear_extensions(P)) {
                for (auto& f : enumerate_ppartitions(SignedLabeledPoset::chain(pi), k)) {
                    rhs.push_back(std::move(f));
                }
            }
            std::sort(rhs.begin(), rhs.end());
            rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());

            const std::vector<std::string> in{poset_to_string(P)};
            r.expect_equal(r.law("A(P) = union of A(pi) over L(P)"), in, lhs, rhs);
            r.expect_equal(r.law("Gamma(P) = Gamma(st(P))"), in, gamma(P, k), gamma(Q, k));
        }
    }));

    return out;
}

} // namespace hsym
