#include <doctest.h>

#include <stdexcept>

#include <ctid/exact_arith.hpp>
#include <ctid/gamma.hpp>

using namespace ctid;

namespace
{

HalfInteger hz(long twice)
{
    return HalfInteger::from_twice(twice);
}

} // namespace

TEST_CASE("gamma_half at small arguments")
{
    CHECK(gamma_half(hz(2)) == PiPower(1, 0));
    CHECK(gamma_half(hz(1)) == PiPower(1, 1));
    CHECK(gamma_half(hz(5)) == PiPower(make_rational(3, 4), 1));
    CHECK(gamma_half(hz(10)) == PiPower(24, 0));
    CHECK_THROWS_AS(gamma_half(hz(0)), std::domain_error);
    CHECK_THROWS_AS(gamma_half(hz(-1)), std::domain_error);
    CHECK_THROWS_AS(gamma_half(hz(-4)), std::domain_error);
}

TEST_CASE("gamma_half satisfies Gamma(z+1) = z Gamma(z)")
{
    for (long twice = 1; twice <= 120; ++twice) {
        const HalfInteger z = hz(twice);
        REQUIRE(gamma_half(z + HalfInteger::from_integer(1)) == PiPower(z.value()) * gamma_half(z));
    }
}

TEST_CASE("PiPower arithmetic")
{
    const PiPower x(make_rational(2, 3), 1), y(make_rational(9, 4), -3);
    CHECK(x * y == PiPower(make_rational(3, 2), -2));
    CHECK(x / y == PiPower(make_rational(8, 27), 4));
    CHECK(PiPower(0, 5) == PiPower(0, 0));
    CHECK(PiPower(0, 5).pi_half_power() == 0);
    CHECK_THROWS_AS(x / PiPower(0), std::domain_error);
    CHECK(x.to_string() == "2/3*pi^(1/2)");
    CHECK(PiPower(1, -2).to_string() == "pi^(-2/2)");
    CHECK(PiPower(-7).to_string() == "-7");
}

TEST_CASE("morris_rhs")
{
    CHECK(morris_rhs(0, {5, 3, 2}) == 1);
    CHECK(morris_rhs(1, cry_params) == 1);
    CHECK(morris_rhs(3, cry_params) == 10);
    CHECK(morris_rhs(2, {1, 0, 1}) == 1);
    CHECK(morris_rhs(1, {1, 1, 1}) == 1);
    CHECK_THROWS_AS(morris_rhs(-1, cry_params), std::invalid_argument);
    CHECK_THROWS_AS(morris_rhs(2, {0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(morris_rhs(2, {1, -1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(morris_rhs(2, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("morris_rhs at a = 2, b = 0, c = 1/2 is the Catalan product")
{
    for (long n = 1; n <= 30; ++n) {
        REQUIRE(morris_rhs(n, cry_params) == Rational(catalan_product(n)));
        REQUIRE(morris_ratio(n, cry_params) == Rational(catalan(n)));
    }
}

TEST_CASE("morris_ratio")
{
    CHECK(morris_ratio(1, cry_params) == 1);
    CHECK(morris_ratio(4, cry_params) == 14);
    CHECK(morris_ratio(2, {1, 0, 1}) == 1);
    CHECK_THROWS_AS(morris_ratio(0, cry_params), std::invalid_argument);
}

TEST_CASE("pi powers cancel and ratios telescope")
{
    for (long a = 1; a <= 4; ++a) {
        for (long b = 0; b <= 3; ++b) {
            for (long m = 1; m <= 4; ++m) {
                const MorrisParams p{a, b, m};
                Rational telescoped = 1;
                for (long n = 0; n <= 8; ++n) {
                    CAPTURE(p.to_string());
                    CAPTURE(n);
                    REQUIRE(morris_product(n, p).pi_half_power() == 0);
                    if (n >= 1) {
                        telescoped *= morris_ratio(n, p);
                        REQUIRE(morris_rhs(n, p) == telescoped);
                    }
                    REQUIRE(morris_rhs(n, p) > 0);
                }
            }
        }
    }
}

TEST_CASE("PiCancellationError carries the residual")
{
    const PiCancellationError e(3, "residual");
    CHECK(e.residual() == 3);
    CHECK(std::string(e.what()) == "residual");
}

TEST_CASE("Legendre duplication")
{
    CHECK(legendre_duplication_check(hz(1)));
    CHECK(legendre_duplication_check(hz(2)));
    CHECK(legendre_duplication_check(hz(7)));
    CHECK(legendre_duplication_sides(hz(2)).lhs == PiPower(make_rational(1, 2), 1));
    for (long twice = 1; twice <= 20; ++twice) {
        REQUIRE(legendre_duplication_check(hz(twice)));
    }
    CHECK_THROWS_AS(legendre_duplication_check(hz(0)), std::domain_error);
    CHECK_THROWS_AS(legendre_duplication_check(hz(-3)), std::domain_error);
}

TEST_CASE("HalfInteger")
{
    CHECK(hz(5).to_string() == "5/2");
    CHECK(hz(6).to_string() == "3");
    CHECK(hz(5).value() == make_rational(5, 2));
    CHECK((hz(3) + half).is_integer());
    CHECK(hz(3) - half == HalfInteger::from_integer(1));
    CHECK(hz(3) < hz(4));
}
