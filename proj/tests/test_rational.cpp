#include <catch2/catch_amalgamated.hpp>

#include "bergman/rational.hpp"

using namespace bergman;

TEST_CASE("gaussian rational arithmetic is exact") {
    const GaussianRational a = GaussianRational::ratio(1, 3);
    const GaussianRational b = GaussianRational::ratio(1, 6);
    CHECK(a + b == GaussianRational::ratio(1, 2));
    CHECK(a - b == b);
    CHECK(a * b == GaussianRational::ratio(1, 18));
    CHECK(a / b == GaussianRational(2));
}

TEST_CASE("complex units multiply correctly") {
    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(i.conj() == -i);
    const GaussianRational z = GaussianRational(mpq_class(3), mpq_class(4));
    CHECK(z * z.conj() == GaussianRational(25));
    CHECK((z / z) == GaussianRational(1));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), ZeroConstantTerm);
}

TEST_CASE("rational strings parse and round-trip canonically") {
    CHECK(GaussianRational::parse_rational("4/6") == mpq_class(2, 3));
    CHECK(GaussianRational::parse_rational("-12") == mpq_class(-12));
    CHECK(GaussianRational::parse("2/4", "0").str() == "1/2");
    CHECK_THROWS_AS(GaussianRational::parse_rational("1/0"), SpecError);
    CHECK_THROWS_AS(GaussianRational::parse_rational("abc"), SpecError);
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial_mpz(0) == 1);
    CHECK(factorial_mpz(6) == 720);
    CHECK(binomial_mpz(10, 4) == 210);
}
