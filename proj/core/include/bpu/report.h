#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace bpu {

enum class Status { Pass, Fail, PreconditionError };

std::string to_string(Status s);

/// Outcome of one verification.  A failing report always carries a witness in
/// `counterexample`.
struct VerdictReport {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::Pass;
    nlohmann::json details = nlohmann::json::array();
    std::optional<nlohmann::json> counterexample;
    double elapsed_ms = 0.0;

    bool passed() const { return status == Status::Pass; }

    /// Records a failure unless one is already recorded; the first witness wins.
    void fail(nlohmann::json witness);
    /// Appends a detail record and fails with it as witness when !ok.
    void expect(bool ok, nlohmann::json record);
};

VerdictReport precondition_failure(std::string check, nlohmann::json params,
                                   const std::string& message);

nlohmann::json to_json(const VerdictReport& r);

}  // namespace bpu
