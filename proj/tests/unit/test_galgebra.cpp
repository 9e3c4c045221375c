#include <doctest.h>

#include "bpu/galgebra.h"
#include "bpu/invariants.h"

using namespace bpu;

namespace {

AlgebraPtr h_gamma()
{
    return make_algebra({{"xi", 2, Parity::Even},
                         {"eta", 2, Parity::Even},
                         {"a", 1, Parity::Odd},
                         {"b", 1, Parity::Odd}},
                        CoefficientRing::prime_field(3));
}

Element g(const AlgebraPtr& alg, const char* name)
{
    return Element::generator(alg, name);
}

}  // namespace

TEST_CASE("descriptors")
{
    auto h = h_gamma();
    CHECK(h->size() == 4);
    CHECK(h->ring().characteristic() == 3);
    CHECK(h->index_of("b") == 3);
    CHECK_FALSE(h->index_of("c"));

    auto empty = make_algebra({}, CoefficientRing::prime_field(3));
    CHECK(basis(*empty, 0).size() == 1);
    CHECK(basis(*empty, 2).empty());

    auto lambda3 = make_algebra({{"sigma1", 2, Parity::Even}, {"sigma2", 4, Parity::Even}, {"sigma3", 6, Parity::Even}},
                                CoefficientRing::integers());
    CHECK(lambda3->degree(2) == 6);
}

TEST_CASE("descriptor validation")
{
    CHECK_THROWS_AS(make_algebra({{"x", 2, Parity::Even}, {"x", 4, Parity::Even}}, CoefficientRing::integers()),
                    Error);
    CHECK_THROWS_AS(make_algebra({{"x", 0, Parity::Even}}, CoefficientRing::integers()), Error);
    CHECK_THROWS_AS(make_algebra({{"x", 3, Parity::Even}}, CoefficientRing::integers()), Error);
    CHECK_THROWS_AS(make_algebra({{"x", 2, Parity::Odd}}, CoefficientRing::integers()), Error);
    CHECK_THROWS(CoefficientRing::prime_field(4));
}

TEST_CASE("exterior signs and nilpotence")
{
    auto h = h_gamma();
    auto xi = g(h, "xi"), eta = g(h, "eta"), a = g(h, "a"), b = g(h, "b");
    CHECK(b * a == -(a * b));
    CHECK((xi * b * (xi * b)).is_zero());
    Element s = xi * b - eta * a;
    CHECK((s * s).is_zero());
    CHECK((a * a).is_zero());
    CHECK(xi * eta == eta * xi);
}

TEST_CASE("addition and characteristic")
{
    auto h = h_gamma();
    auto xi = g(h, "xi"), eta = g(h, "eta");
    CHECK((xi + Integer(-1) * xi).is_zero());
    CHECK((Integer(3) * xi).is_zero());
    Element f = pow(xi, 3) * eta + Integer(-1) * (pow(eta, 3) * xi);
    CHECK(f == dickson_elements(3).f);
}

TEST_CASE("homogeneous components")
{
    auto h = h_gamma();
    auto xi = g(h, "xi");
    CHECK(homogeneous_component(xi + pow(xi, 3), 6) == pow(xi, 3));
    auto f = dickson_elements(3).f;
    CHECK(homogeneous_component(f, 8) == f);
    CHECK(homogeneous_component(Element(h), 4).is_zero());
    CHECK((xi + pow(xi, 3)).degrees() == std::vector<int>{2, 6});
    CHECK_FALSE((xi + pow(xi, 3)).homogeneous_degree());
}

TEST_CASE("bases in graded-lex order")
{
    auto h = h_gamma();
    auto b2 = basis(*h, 2);
    REQUIRE(b2.size() == 3);
    CHECK(Element::monomial(h, b2[0]) == g(h, "xi"));
    CHECK(Element::monomial(h, b2[1]) == g(h, "eta"));
    CHECK(Element::monomial(h, b2[2]) == g(h, "a") * g(h, "b"));

    auto lambda3 = make_algebra({{"sigma1", 2, Parity::Even}, {"sigma2", 4, Parity::Even}, {"sigma3", 6, Parity::Even}},
                                CoefficientRing::integers());
    auto b4 = basis(*lambda3, 4);
    REQUIRE(b4.size() == 2);
    CHECK(Element::monomial(lambda3, b4[0]) == pow(g(lambda3, "sigma1"), 2));
    CHECK(Element::monomial(lambda3, b4[1]) == g(lambda3, "sigma2"));
    CHECK(basis(*lambda3, 0).size() == 1);
    CHECK(basis(*lambda3, 3).empty());
    // partitions of 6 into parts <= 3
    CHECK(basis(*lambda3, 12).size() == 7);
}

TEST_CASE("coordinates")
{
    auto h = h_gamma();
    auto f = dickson_elements(3).f;
    auto c = coords(f, 8);
    auto b8 = basis(*h, 8);
    REQUIRE(c.size() == b8.size());
    auto xi = g(h, "xi"), eta = g(h, "eta");
    for (std::size_t i = 0; i < b8.size(); ++i) {
        Element m = Element::monomial(h, b8[i]);
        if (m == pow(xi, 3) * eta)
            CHECK(h->ring().symmetric(c[i]) == 1);
        else if (m == xi * pow(eta, 3))
            CHECK(h->ring().symmetric(c[i]) == -1);
        else
            CHECK(c[i] == 0);
    }
    for (const auto& x : coords(Element(h), 6))
        CHECK(x == 0);

    auto lambda3 = make_algebra({{"sigma1", 2, Parity::Even}, {"sigma2", 4, Parity::Even}, {"sigma3", 6, Parity::Even}},
                                CoefficientRing::integers());
    auto e = pow(g(lambda3, "sigma1"), 2) + Integer(-3) * g(lambda3, "sigma2");
    CHECK(coords(e, 4) == std::vector<Integer>{1, -3});
    CHECK_THROWS_AS(coords(e, 6), Error);
}

TEST_CASE("substitution and truncation")
{
    auto h = h_gamma();
    auto xi = g(h, "xi"), eta = g(h, "eta"), a = g(h, "a"), b = g(h, "b");
    // swap the two blocks of generators with a sign on one odd generator
    std::vector<Element> images{eta, xi, -b, a};
    Element s = xi * b - eta * a;
    CHECK(substitute(s, h, images) == eta * a + xi * b);
    std::vector<Element> bad{a, xi, a, b};
    CHECK_THROWS_AS(substitute(xi, h, bad), Error);

    Element one_plus = Element::constant(h, 1) + xi;
    CHECK(pow_truncated(one_plus, 5, 4) == Element::constant(h, 1) + Integer(5) * xi + Integer(10) * pow(xi, 2));
    CHECK(mul_truncated(xi, pow(xi, 2), 4).is_zero());
}

TEST_CASE("mismatched algebras are rejected")
{
    auto h = h_gamma();
    auto other = make_algebra({{"u", 2, Parity::Even}}, CoefficientRing::prime_field(3));
    CHECK_THROWS_AS(g(h, "xi") + Element::generator(other, 0), Error);
    CHECK_THROWS_AS(Monomial::from_exponents(*h, {0, 0, 2, 0}), Error);
    CHECK_THROWS_AS(Monomial::from_exponents(*h, {0, 0}), Error);
}
