#pragma once

#include <string>
#include <vector>

namespace parhox {

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> notes;

    bool ok() const { return violations.empty(); }
    void fail(std::string what) { violations.push_back(std::move(what)); }
    void note(std::string what) { notes.push_back(std::move(what)); }
    void merge(const ValidationReport& other, const std::string& prefix = {}) {
        for (const auto& v : other.violations) violations.push_back(prefix + v);
        for (const auto& n : other.notes) notes.push_back(prefix + n);
    }
    // Caps the violation list so reports on badly broken input stay readable.
    bool full() const { return violations.size() >= 64; }
};

}  // namespace parhox
