#include <doctest.h>

#include <stdexcept>
#include <vector>

#include <ctid/exact_arith.hpp>

using namespace ctid;

namespace
{

// Catalan numbers from Segner's recurrence C_{k+1} = sum C_i C_{k-i}, C_0 = 1,
// shifted so that index 1 is the first value 1.
std::vector<Integer> segner_catalan(long count)
{
    std::vector<Integer> c{1};
    for (long k = 0; k < count; ++k) {
        Integer next = 0;
        for (long i = 0; i <= k; ++i) {
            next += c[i] * c[k - i];
        }
        c.push_back(next);
    }
    return c;
}

} // namespace

TEST_CASE("binomial small values")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("binomial satisfies Pascal's rule")
{
    for (long n = 1; n <= 60; ++n) {
        for (long k = 0; k <= n; ++k) {
            REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("catalan")
{
    CHECK(catalan(1) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(4) == 14);
    CHECK_THROWS_AS(catalan(0), std::domain_error);
    CHECK_THROWS_AS(catalan(-3), std::domain_error);

    const auto segner = segner_catalan(80);
    for (long i = 1; i <= 80; ++i) {
        // (i + 1) | C(2i, i) and the quotient agrees with the recurrence.
        REQUIRE(mpz_divisible_ui_p(binomial(2 * i, i).get_mpz_t(), static_cast<unsigned long>(i + 1)) != 0);
        REQUIRE(catalan(i) == segner[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("catalan_product")
{
    CHECK(catalan_product(0) == 1);
    CHECK(catalan_product(3) == 10);
    CHECK(catalan_product(5) == 5880);
    for (long n = 1; n <= 40; ++n) {
        REQUIRE(catalan_product(n) / catalan_product(n - 1) == catalan(n));
        REQUIRE(catalan_product(n) % catalan_product(n - 1) == 0);
    }
}

TEST_CASE("rationals are canonical")
{
    const Rational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(make_rational(0, -7).get_den() == 1);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);

    Rational r(Integer(10), Integer(-15));
    normalize(r);
    const Rational once = r;
    normalize(r);
    CHECK(r == once);
    CHECK(r.get_den() > 0);
    CHECK(to_decimal(r) == "-2/3");
}

TEST_CASE("decimal strings round-trip")
{
    const Integer big = factorial(40) * -7;
    CHECK(parse_integer(to_decimal(big)) == big);
    const Rational q = make_rational(factorial(25), factorial(30) + 1);
    CHECK(parse_rational(to_decimal(q)) == q);
    CHECK(to_decimal(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_integer("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer("-"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
}
