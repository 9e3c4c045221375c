#include <doctest.h>

#include "bpu/invariants.h"
#include "bpu/steenrod.h"
#include "bpu/topology.h"

using namespace bpu;

namespace {

struct Gens {
    AlgebraPtr alg;
    Element xi, eta, a, b;
};

Gens gens(std::int64_t p)
{
    auto alg = gamma_model(p).algebra;
    return {alg, Element::generator(alg, "xi"), Element::generator(alg, "eta"), Element::generator(alg, "a"),
            Element::generator(alg, "b")};
}

}  // namespace

TEST_CASE("Bockstein")
{
    const auto& act = gamma_model(3).action;
    auto [alg, xi, eta, a, b] = gens(3);
    auto m = mui_elements(3);
    auto d = dickson_elements(3);
    CHECK(act.bockstein(a * b) == m.s);
    CHECK(act.bockstein(xi).is_zero());
    CHECK(act.bockstein(m.z) == d.f);
    CHECK(act.bockstein(m.z) == pow(xi, 3) * eta - pow(eta, 3) * xi);
    CHECK(act.bockstein(Element::constant(alg, 1)).is_zero());
}

TEST_CASE("total power")
{
    const auto& act = gamma_model(3).action;
    auto [alg, xi, eta, a, b] = gens(3);
    CHECK(act.total_power(xi) == xi + pow(xi, 3));
    CHECK(act.total_power(a) == a);
    CHECK(act.total_power(pow(xi, 3)) == pow(xi, 3) + pow(xi, 9));
    CHECK(act.total_power_truncated(pow(xi, 3), 10) == pow(xi, 3));
}

TEST_CASE("reduced powers")
{
    const auto& act = gamma_model(3).action;
    auto m = mui_elements(3);
    CHECK(act.power(1, m.s) == m.z);
    CHECK(act.power(3, m.z) == m.w);
    CHECK(act.power(2, m.s).is_zero());
    CHECK(act.power(0, m.s) == m.s);
    CHECK_THROWS_AS(act.power(1, m.s + m.z), Error);
}

TEST_CASE("Milnor operations")
{
    const auto& act = gamma_model(3).action;
    auto [alg, xi, eta, a, b] = gens(3);
    auto m = mui_elements(3);
    CHECK(act.milnor_Q(0, m.s).is_zero());
    CHECK(act.milnor_Q(1, a) == pow(xi, 3));
    CHECK(act.milnor_Q(1, xi).is_zero());
    CHECK(act.milnor_Q(2, b) == pow(eta, 9));
    CHECK(act.milnor_Q(3, a) == pow(xi, 27));
    CHECK(act.milnor_Q(1, m.s) == -dickson_elements(3).f);

    const auto& act5 = gamma_model(5).action;
    auto g5 = gens(5);
    CHECK(act5.milnor_Q(1, g5.a) == pow(g5.xi, 5));
    CHECK(act5.milnor_Q(2, g5.a) == pow(g5.xi, 25));
}

TEST_CASE("generic odd derivations")
{
    auto [alg, xi, eta, a, b] = gens(3);
    // D(a) = xi, D(b) = eta, zero on polynomial generators: the Bockstein again
    std::vector<Element> images{Element(alg), Element(alg), xi, eta};
    CHECK(apply_odd_derivation(alg, images, a * b) == xi * b - a * eta);
}

TEST_CASE("action constructor validation")
{
    auto [alg, xi, eta, a, b] = gens(3);
    std::vector<Element> beta{Element(alg), Element(alg), xi, eta};
    std::vector<Element> power{xi + pow(xi, 3), eta + pow(eta, 3), a, b};
    CHECK_NOTHROW(SteenrodAction(alg, beta, power));
    std::vector<Element> bad_beta{Element(alg), Element(alg), a, eta};
    CHECK_THROWS_AS(SteenrodAction(alg, bad_beta, power), Error);
    std::vector<Element> unstable{xi + pow(xi, 5), eta, a, b};
    CHECK_THROWS_AS(SteenrodAction(alg, beta, unstable), Error);
}
