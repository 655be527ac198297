#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace e7f {

struct CheckRecord {
    std::string name;
    std::string anchor; // the identity or fact being checked
    bool pass = false;
    double residual = 0;
    double tolerance = 0;
};

struct VerificationReport {
    std::string suite;
    std::string construction = "tits";
    std::string scalar_mode = "float";
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;

    void add(const std::string& name, const std::string& anchor, double residual,
             double tolerance) {
        checks.push_back({name, anchor, residual < tolerance, residual, tolerance});
    }
    void add_flag(const std::string& name, const std::string& anchor, bool ok) {
        checks.push_back({name, anchor, ok, ok ? 0.0 : 1.0, 0.5});
    }
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckRecord* worst() const;

    /// JSON with stable key ordering.
    std::string to_json() const;
};

} // namespace e7f
