#pragma once

#include <string>
#include <vector>

namespace ug {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;  // nonempty exactly when the check failed
};

struct Report {
    std::string command;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    void add(const std::string& name, bool ok, const std::string& witness = "") {
        checks.push_back({name, ok, ok ? "" : witness});
    }
    void merge(const Report& other, const std::string& prefix = "") {
        for (const auto& c : other.checks)
            checks.push_back({prefix.empty() ? c.name : prefix + "/" + c.name, c.passed, c.witness});
    }
};

} // namespace ug
