#pragma once

#include <map>
#include <string>
#include <vector>

namespace grasspack {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Structured pass/fail record for a verification run: named checks plus a
/// flat map of exact summary values (counts, distances as "p/q" strings).
class VerificationReport {
public:
    explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

    void check(std::string name, bool passed, std::string detail = "") {
        checks_.push_back({std::move(name), passed, std::move(detail)});
    }
    void note(const std::string& key, std::string value) { data_[key] = std::move(value); }

    const std::string& subject() const { return subject_; }
    const std::vector<CheckResult>& checks() const { return checks_; }
    const std::map<std::string, std::string>& data() const { return data_; }

    bool all_passed() const {
        for (const auto& c : checks_)
            if (!c.passed) return false;
        return true;
    }

    /// One line per check, human readable.
    std::string summary() const;

private:
    std::string subject_;
    std::vector<CheckResult> checks_;
    std::map<std::string, std::string> data_;
};

}  // namespace grasspack
