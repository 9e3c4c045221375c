#include <doctest.h>

#include "../support/properties.h"

#include "bpu/spectral.h"
#include "bpu/symfun.h"

namespace {

void run_suite(const props::Suite& s, std::uint64_t seed)
{
    auto o = s.run(seed, props::default_cases);
    INFO(o.name << ": " << o.first_failure);
    CHECK(o.cases >= 200);
    CHECK(o.failures == 0);
}

}  // namespace

TEST_CASE("property suites, seed 1")
{
    for (const auto& s : props::all_suites()) {
        SUBCASE(s.name.c_str())
        {
            run_suite(s, 1);
        }
    }
}

TEST_CASE("property suites, seed 20260101")
{
    for (const auto& s : props::all_suites()) {
        SUBCASE(s.name.c_str())
        {
            run_suite(s, 20260101);
        }
    }
}
