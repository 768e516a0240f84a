#include "hsym/report.hpp"

#include <algorithm>
#include <sstream>

namespace hsym {

LawResult& Report::law(const std::string& name, const std::string& budget) {
    for (auto& r : laws_) {
        if (r.law == name) {
            if (r.budget.empty()) {
                r.budget = budget;
            }
            return r;
        }
    }
    laws_.push_back(LawResult{name, budget, 0, 0, {}});
    return laws_.back();
}

const LawResult* Report::find(const std::string& name) const {
    auto it = std::find_if(laws_.begin(), laws_.end(), [&](const LawResult& r) { return r.law == name; });
    return it == laws_.end() ? nullptr : &*it;
}

void Report::merge(const Report& other) {
    if (suite_.empty()) {
        suite_ = other.suite_;
    }
    for (const auto& src : other.laws_) {
        LawResult& dst = law(src.law, src.budget);
        dst.passed += src.passed;
        dst.failed += src.failed;
        dst.counterexamples.insert(dst.counterexamples.end(), src.counterexamples.begin(), src.counterexamples.end());
    }
}

std::size_t Report::checks() const {
    std::size_t n = 0;
    for (const auto& r : laws_) {
        n += r.checks();
    }
    return n;
}

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& r : laws_) {
        n += r.failed;
    }
    return n;
}

json Report::to_json() const {
    json checks = json::array();
    json per_law = json::array();
    for (const auto& r : laws_) {
        for (const auto& c : r.counterexamples) {
            checks.push_back(
                json{{"law", r.law}, {"inputs", c.inputs}, {"status", "fail"}, {"lhs", c.lhs}, {"rhs", c.rhs}});
        }
        if (r.failed == 0) {
            checks.push_back(json{{"law", r.law}, {"inputs", json::array()}, {"status", "pass"}, {"count", r.passed}});
        }
        per_law.push_back(json{{"law", r.law}, {"budget", r.budget}, {"passed", r.passed}, {"failed", r.failed}});
    }
    return json{{"checks", std::move(checks)},
                {"summary",
                 {{"suite", suite_}, {"checks", this->checks()}, {"mismatches", failures()}, {"laws", per_law}}}};
}

std::string Report::to_text() const {
    std::ostringstream os;
    if (!suite_.empty()) {
        os << "suite " << suite_ << '\n';
    }
    for (const auto& r : laws_) {
        os << (r.failed == 0 ? "  ok    " : "  FAIL  ") << r.law;
        if (!r.budget.empty()) {
            os << " [" << r.budget << "]";
        }
        os << ": " << r.passed << " passed, " << r.failed << " failed\n";
        for (const auto& c : r.counterexamples) {
            os << "    inputs:";
            for (const auto& in : c.inputs) {
                os << ' ' << in;
            }
            os << "\n      lhs " << c.lhs.dump() << "\n      rhs " << c.rhs.dump() << '\n';
        }
    }
    os << failures() << " mismatches / " << checks() << " checks\n";
    return os.str();
}

} // namespace hsym
