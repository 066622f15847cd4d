#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tq {

// Malformed input: wrong shape, out-of-range entry, unparseable file.
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input that fails a mathematical requirement
// (quandle axiom, continuity, cocycle condition, move pattern).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Violation {
    std::string rule;
    std::vector<long long> witness;  // rule-specific tuple, 0-indexed
    std::string detail;              // printable, 1-indexed
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(std::string rule, std::vector<long long> witness, std::string detail) {
        ok = false;
        violations.push_back({std::move(rule), std::move(witness), std::move(detail)});
    }
    std::string summary() const {
        if (ok) return "ok";
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "\n";
            s += v.rule + ": " + v.detail;
        }
        return s;
    }
    bool has(const std::string& rule) const {
        for (const auto& v : violations)
            if (v.rule == rule) return true;
        return false;
    }
};

}  // namespace tq
