#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hsym/io.hpp"

namespace hsym {

namespace detail {
// Unqualified so that argument-dependent lookup finds to_json overloads
// declared after this header.
template <class T>
json serialize(const T& value) {
    return to_json(value);
}
} // namespace detail

struct Counterexample {
    std::vector<std::string> inputs;
    json lhs;
    json rhs;
};

/// Tally for one law. A failure always carries both evaluated sides.
struct LawResult {
    std::string law;
    std::string budget;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<Counterexample> counterexamples;

    std::size_t checks() const { return passed + failed; }
};

/// Outcome of a verification sweep; partial reports from workers are merged in
/// a fixed order so the result does not depend on the worker count.
class Report {
public:
    Report() = default;
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    const std::vector<LawResult>& laws() const { return laws_; }

    /// Finds or registers a law; registration order is the output order.
    LawResult& law(const std::string& name, const std::string& budget = "");
    const LawResult* find(const std::string& name) const;

    /// Records a comparison; serializes both sides only on failure.
    template <class T>
    bool expect_equal(LawResult& r, std::vector<std::string> inputs, const T& lhs, const T& rhs) {
        if (lhs == rhs) {
            ++r.passed;
            return true;
        }
        ++r.failed;
        r.counterexamples.push_back(Counterexample{std::move(inputs), detail::serialize(lhs), detail::serialize(rhs)});
        return false;
    }

    void merge(const Report& other);

    std::size_t checks() const;
    std::size_t failures() const;
    bool ok() const { return failures() == 0; }

    /// {"checks":[…], "summary":{…}}. Passing laws appear once with their count;
    /// each failing tuple is listed with both sides.
    json to_json() const;
    /// One line per law, ending with "<failures> mismatches / <checks> checks".
    std::string to_text() const;

private:
    std::string suite_;
    std::vector<LawResult> laws_;
};

} // namespace hsym
