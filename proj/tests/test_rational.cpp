#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tbm/rational.hpp"

#include <sstream>
#include <stdexcept>

using namespace tbm;

TEST_CASE("construction and normalization") {
    CHECK(BigRat(6, 8) == BigRat(3, 4));
    CHECK(BigRat(-6, 8) == BigRat(3, -4));
    CHECK(BigRat(0, 7) == BigRat(0));
    CHECK(BigRat(5) == BigRat(5, 1));
    CHECK_THROWS_AS(BigRat(1, 0), std::domain_error);
}

TEST_CASE("parsing and printing") {
    CHECK(BigRat::parse("-516/961") == BigRat(-516, 961));
    CHECK(BigRat::parse("7") == BigRat(7));
    CHECK(BigRat::parse("-0") == BigRat(0));
    CHECK(BigRat::parse("10/4") == BigRat(5, 2));
    CHECK(BigRat(-516, 961).str() == "-516/961");
    CHECK(BigRat(4, 2).str() == "2");
    CHECK_THROWS(BigRat::parse("abc"));
    CHECK_THROWS(BigRat::parse("1/0"));
    CHECK_THROWS(BigRat::parse(""));
    std::ostringstream os;
    os << BigRat(22, 7);
    CHECK(os.str() == "22/7");
}

TEST_CASE("field operations") {
    BigRat a(3, 4), b(-5, 6);
    CHECK(a + b == BigRat(-1, 12));
    CHECK(a - b == BigRat(19, 12));
    CHECK(a * b == BigRat(-5, 8));
    CHECK(a / b == BigRat(-9, 10));
    CHECK(-a == BigRat(-3, 4));
    CHECK(a.inverse() == BigRat(4, 3));
    CHECK_THROWS(BigRat(0).inverse());
    CHECK(a.pow(3) == BigRat(27, 64));
    CHECK(a.pow(-2) == BigRat(16, 9));
    CHECK(BigRat(0).pow(0) == BigRat(1));
    CHECK_THROWS(BigRat(0).pow(-1));
}

TEST_CASE("ordering") {
    CHECK(BigRat(1, 3) < BigRat(1, 2));
    CHECK(BigRat(-1, 2) < BigRat(-1, 3));
    CHECK(BigRat(2, 4) == BigRat(1, 2));
    CHECK(BigRat(5) > BigRat(9, 2));
}

TEST_CASE("p-adic valuation of rationals") {
    CHECK(val_p(BigRat(1, 5), 5) == Valuation::finite(-1));
    CHECK(val_p(BigRat(8, 31), 5) == Valuation::finite(0));
    CHECK(val_p(BigRat(6, 7), 3) == Valuation::finite(1));
    CHECK(val_p(BigRat(-516, 961), 5) == Valuation::finite(0));
    CHECK(val_p(BigRat(0), 7).is_infinite());
    CHECK(val_p(BigRat(250), 5) == Valuation::finite(3));
    CHECK(val_p(BigRat(9, 50), 5) == Valuation::finite(-2));
}

TEST_CASE("p-adic norm") {
    CHECK(norm_p(BigRat(-516, 961), 5) == BigRat(1));
    CHECK(norm_p(BigRat(6, 7), 3) == BigRat(1, 3));
    CHECK(norm_p(BigRat(1, 5), 5) == BigRat(5));
    CHECK(norm_p(BigRat(0), 3) == BigRat(0));
}

TEST_CASE("valuation arithmetic and ordering") {
    Valuation inf = Valuation::infinite();
    Valuation two = Valuation::finite(2);
    Valuation neg = Valuation::finite(-3);
    CHECK(inf.is_infinite());
    CHECK(!two.is_infinite());
    CHECK(two.value() == 2);
    CHECK_THROWS(inf.value());
    CHECK(neg < two);
    CHECK(two < inf);
    CHECK(inf == Valuation::infinite());
    CHECK((two + neg) == Valuation::finite(-1));
    CHECK((two + inf).is_infinite());
    CHECK(two >= Valuation::finite(2));
    CHECK(inf >= Valuation::finite(1000000));
    CHECK(Valuation::finite(2).str() == "2");
    CHECK(inf.str() == "inf");
}

TEST_CASE("integer helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(7919));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));
    CHECK(pow_mod(mpz_class(2), 10, mpz_class(1000)) == 24);
    CHECK(inv_mod(mpz_class(7), mpz_class(81)) == 58);
    CHECK_THROWS(inv_mod(mpz_class(3), mpz_class(81)));
    CHECK(pow_ui(3, 4) == 81);
    CHECK(val_p(mpz_class(675), 3) == Valuation::finite(3));
    CHECK(val_p(mpz_class(0), 3).is_infinite());
}
