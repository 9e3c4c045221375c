#include <doctest.h>

#include "cli.h"

#include <nlohmann/json.hpp>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = bpu::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json without_timing(nlohmann::json doc)
{
    for (auto& r : doc["reports"])
        r.erase("elapsed_ms");
    return doc;
}

}  // namespace

TEST_CASE("theta report")
{
    auto r = call({"verify-theta", "--p", "3"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == 1);
    REQUIRE(doc["reports"].size() == 1);
    const auto& rep = doc["reports"][0];
    CHECK(rep["check"] == "theta-delta");
    CHECK(rep["status"] == "pass");
    for (const char* key : {"check", "params", "status", "details", "counterexample", "elapsed_ms"})
        CHECK(rep.contains(key));
    CHECK(rep.dump().find("-eta^6") != std::string::npos);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(call({"verify-mui", "--p", "4"}).code == 2);
    CHECK(call({"verify-mui", "--p", "9"}).code == 2);
    CHECK(call({"verify-nothing"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"verify-theta", "--format", "xml"}).code == 2);
    CHECK(call({"verify-main", "--blocks", "0"}).code == 2);
    CHECK(call({"verify-theta", "--p"}).code == 2);
}

TEST_CASE("precondition failures exit with 2")
{
    auto r = call({"verify-ln", "--n", "4"});
    CHECK(r.code == 2);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["reports"][0]["status"] == "precondition-error");
    CHECK(call({"verify-nabla-onto", "--n", "4"}).code == 2);
}

TEST_CASE("passing subcommands")
{
    CHECK(call({"verify-main", "--p", "3", "--blocks", "1"}).code == 0);
    CHECK(call({"verify-prop-s"}).code == 0);
    CHECK(call({"verify-ln"}).code == 0);
    CHECK(call({"verify-nabla-onto"}).code == 0);
    CHECK(call({"verify-delta"}).code == 0);
    CHECK(call({"verify-e4", "--n", "3", "--kmax", "4"}).code == 0);
    CHECK(call({"verify-lambda"}).code == 0);
    CHECK(call({"verify-yagita"}).code == 0);
    CHECK(call({"verify-vistoli", "--max-degree", "12"}).code == 0);
    CHECK(call({"verify-mui", "--max-degree", "16", "--samples", "5"}).code == 0);
}

TEST_CASE("reports are sorted and deterministic")
{
    auto a = call({"verify-mui", "--max-degree", "14", "--seed", "11", "--samples", "10"});
    auto b = call({"verify-mui", "--max-degree", "14", "--seed", "11", "--samples", "10"});
    CHECK(without_timing(nlohmann::json::parse(a.out)) == without_timing(nlohmann::json::parse(b.out)));
    auto doc = nlohmann::json::parse(a.out);
    REQUIRE(doc["reports"].size() == 2);
    CHECK(doc["reports"][0]["check"] == "mui-presentation");
    CHECK(doc["reports"][1]["check"] == "sl2-equivariance");

    auto d = nlohmann::json::parse(call({"verify-delta"}).out);
    for (std::size_t i = 1; i < d["reports"].size(); ++i)
        CHECK(d["reports"][i - 1]["params"].dump() <= d["reports"][i]["params"].dump());
}

TEST_CASE("text format")
{
    auto r = call({"verify-theta", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("pass  theta-delta", 0) == 0);
    CHECK(r.out.find(" ms") != std::string::npos);
}

TEST_CASE("exit code follows the report status")
{
    // the two-block alpha sum keeps a cross term
    auto r = call({"verify-main", "--p", "3", "--blocks", "2"});
    auto doc = nlohmann::json::parse(r.out);
    const auto& rep = doc["reports"][0];
    if (rep["status"] == "fail") {
        CHECK(r.code == 1);
        CHECK_FALSE(rep["counterexample"].is_null());
    }
    else {
        CHECK(r.code == 0);
    }
}
