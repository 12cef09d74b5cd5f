#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ordcert/sod.hpp"

namespace ordcert {

inline const char* kToolkitVersion = "0.1.0";

struct CertifyParams {
    int r = 3;
    std::uint64_t p = 0;     // 0: smallest prime >= 101 with p = 1 (mod r)
    int depth = 0;           // 0: 2r + 4
    std::vector<int> data;   // empty: r ones
    int trunc = 2;
    std::uint64_t seed = 1;

    /// Fills defaults; throws std::invalid_argument on unusable parameters.
    void resolve();
};

struct CheckResult {
    std::string id;
    std::string anchor;
    std::string status;  // "pass" | "fail" | "skipped"
    nlohmann::json expected;
    nlohmann::json got;
    double ms = 0.0;
};

struct CertificationReport {
    CertifyParams params;
    std::vector<CheckResult> checks;
    std::string version = kToolkitVersion;

    bool all_pass() const;
    const CheckResult* first_failure() const;
    nlohmann::json to_json() const;
    static CertificationReport from_json(const nlohmann::json& j);
    std::string to_text() const;

    /// Equality up to timings (reports are deterministic given params+seed).
    bool same_results(const CertificationReport& o) const;
};

nlohmann::json certificate_to_json(const SodCertificate& cert);

/// Runs the full battery of checks; a failing check never aborts siblings.
CertificationReport certify(const CertifyParams& params);

}  // namespace ordcert
