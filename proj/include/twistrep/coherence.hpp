#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistrep {

/// Outcome of one axiom checked over a family of tuples.
struct AxiomCheck {
    std::string axiom;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::optional<std::string> witness;  // first failing tuple, if any

    [[nodiscard]] bool passed() const { return failures == 0; }

    void record(bool ok, const auto& describe_witness) {
        ++checked;
        if (ok) return;
        ++failures;
        if (!witness) witness = describe_witness();
    }
};

struct CoherenceReport {
    std::vector<AxiomCheck> checks;

    [[nodiscard]] bool passed() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }

    [[nodiscard]] const AxiomCheck* find(const std::string& axiom) const {
        for (const auto& c : checks)
            if (c.axiom == axiom) return &c;
        return nullptr;
    }

    [[nodiscard]] const AxiomCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed()) return &c;
        return nullptr;
    }

    void merge(const CoherenceReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

    [[nodiscard]] std::string summary() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << (c.passed() ? "PASS " : "FAIL ") << c.axiom << " (" << c.checked << " checked";
            if (!c.passed()) os << ", " << c.failures << " failing, first witness " << *c.witness;
            os << ")\n";
        }
        return os.str();
    }
};

/// Raised when eager validation rejects an input; carries the full report.
class ValidationError : public std::runtime_error {
  public:
    ValidationError(const std::string& what, CoherenceReport report)
        : std::runtime_error(what), report_(std::move(report)) {}

    [[nodiscard]] const CoherenceReport& report() const { return report_; }

  private:
    CoherenceReport report_;
};

}  // namespace twistrep
