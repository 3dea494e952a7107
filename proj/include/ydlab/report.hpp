#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace ydlab {

/**
 * Outcome of a verification pass. Axiom failures are data, not exceptions:
 * each named check records pass/fail plus an optional detail line (typically
 * the first counterexample). Ordering is insertion order, which callers keep
 * deterministic.
 */
class Report {
public:
    struct Entry {
        std::string name;
        bool pass;
        std::string detail;
    };

    void add(std::string name, bool pass, std::string detail = "") {
        entries_.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const Report& other, const std::string& prefix = "") {
        for (const auto& e : other.entries_)
            entries_.push_back({prefix.empty() ? e.name : prefix + "." + e.name, e.pass, e.detail});
    }

    bool ok() const {
        for (const auto& e : entries_)
            if (!e.pass) return false;
        return true;
    }
    bool passed(const std::string& name) const {
        for (const auto& e : entries_)
            if (e.name == name) return e.pass;
        return false;
    }
    std::size_t size() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    std::string str() const {
        std::ostringstream os;
        for (const auto& e : entries_) {
            os << (e.pass ? "pass" : "FAIL") << "  " << e.name;
            if (!e.detail.empty()) os << "  [" << e.detail << "]";
            os << '\n';
        }
        return os.str();
    }

private:
    std::vector<Entry> entries_;
};

} // namespace ydlab
