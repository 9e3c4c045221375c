#include "bpu/report.h"

namespace bpu {

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::PreconditionError:
        return "precondition-error";
    }
    return "unknown";
}

void VerdictReport::fail(nlohmann::json witness)
{
    if (status == Status::Fail)
        return;
    status = Status::Fail;
    counterexample = std::move(witness);
}

void VerdictReport::expect(bool ok, nlohmann::json record)
{
    record["ok"] = ok;
    details.push_back(record);
    if (!ok)
        fail(std::move(record));
}

VerdictReport precondition_failure(std::string check, nlohmann::json params,
                                   const std::string& message)
{
    VerdictReport r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.status = Status::PreconditionError;
    r.details.push_back({{"error", message}});
    return r;
}

nlohmann::json to_json(const VerdictReport& r)
{
    nlohmann::json j;
    j["check"] = r.check;
    j["params"] = r.params;
    j["status"] = to_string(r.status);
    j["details"] = r.details;
    j["counterexample"] = r.counterexample ? *r.counterexample : nlohmann::json(nullptr);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

}  // namespace bpu
