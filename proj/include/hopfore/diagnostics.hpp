#ifndef HOPFORE_DIAGNOSTICS_HPP
#define HOPFORE_DIAGNOSTICS_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace hopfore {

/// One verification check: named check, the generator/relation it concerns,
/// the printed residual ("0" when the check passes).
struct CheckEntry {
    std::string check;
    std::string subject;
    std::string residual;
    bool pass = true;
};

struct Diagnostic {
    std::vector<CheckEntry> entries;
    bool pass = true;

    void add(std::string check, std::string subject, std::string residual, bool ok) {
        entries.push_back({std::move(check), std::move(subject), std::move(residual), ok});
        if (!ok) pass = false;
    }

    void merge(const Diagnostic& o) {
        for (const auto& e : o.entries) entries.push_back(e);
        pass = pass && o.pass;
    }

    /// Canonical report order: by subject, then check name (stable).
    void sort_entries() {
        std::stable_sort(entries.begin(), entries.end(),
                         [](const CheckEntry& a, const CheckEntry& b) {
                             if (a.subject != b.subject) return a.subject < b.subject;
                             return a.check < b.check;
                         });
    }

    bool has_failure(const std::string& check, const std::string& subject) const {
        for (const auto& e : entries)
            if (!e.pass && e.check == check && e.subject == subject) return true;
        return false;
    }
};

} // namespace hopfore

#endif
