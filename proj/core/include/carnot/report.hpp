#ifndef CARNOT_REPORT_HPP
#define CARNOT_REPORT_HPP

#include <string>
#include <vector>

namespace carnot {

/// Result list of a verification sweep. overall() is true iff every check
/// passed; checks keep their insertion order, which callers make
/// deterministic.
class VerificationReport {
public:
    struct Check {
        std::string name;
        bool pass = false;
        std::string detail;
    };

    void add(std::string name, bool pass, std::string detail = "") {
        checks_.push_back({std::move(name), pass, std::move(detail)});
    }

    void merge(const VerificationReport& o) {
        checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end());
    }

    bool overall() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }

    size_t failed_count() const {
        size_t n = 0;
        for (const auto& c : checks_)
            if (!c.pass) ++n;
        return n;
    }

    const std::vector<Check>& checks() const { return checks_; }

    std::string to_text() const {
        std::string s;
        for (const auto& c : checks_) {
            s += c.pass ? "[pass] " : "[FAIL] ";
            s += c.name;
            if (!c.pass && !c.detail.empty()) s += ": " + c.detail;
            s += "\n";
        }
        s += overall() ? "overall: pass\n" : "overall: FAIL\n";
        return s;
    }

private:
    std::vector<Check> checks_;
};

}  // namespace carnot

#endif
