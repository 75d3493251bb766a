#include <ctid/gamma.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace ctid
{

Rational HalfInteger::value() const
{
    return make_rational(m_twice, 2);
}

std::string HalfInteger::to_string() const
{
    return is_integer() ? std::to_string(m_twice / 2) : std::to_string(m_twice) + "/2";
}

PiPower::PiPower(Rational r, long p) : m_r(std::move(r)), m_p(p)
{
    normalize(m_r);
    if (m_r == 0) {
        m_p = 0;
    }
}

PiPower operator*(const PiPower &x, const PiPower &y)
{
    return PiPower(x.m_r * y.m_r, x.m_p + y.m_p);
}

PiPower operator/(const PiPower &x, const PiPower &y)
{
    if (y.m_r == 0) {
        throw std::domain_error("PiPower division by zero");
    }
    return PiPower(x.m_r / y.m_r, x.m_p - y.m_p);
}

std::string PiPower::to_string() const
{
    if (m_p == 0) {
        return to_decimal(m_r);
    }
    const std::string pi = "pi^(" + std::to_string(m_p) + "/2)";
    return m_r == 1 ? pi : to_decimal(m_r) + "*" + pi;
}

PiCancellationError::PiCancellationError(long residual, const std::string &what)
    : std::logic_error(what), m_residual(residual)
{
}

PiPower gamma_half(HalfInteger z)
{
    if (z.twice() <= 0) {
        throw std::domain_error("Gamma is evaluated only at positive half-integers, got " + z.to_string());
    }
    if (z.is_integer()) {
        return PiPower(Rational(factorial(z.twice() / 2 - 1)));
    }
    const long k = (z.twice() - 1) / 2;
    Integer four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    return PiPower(make_rational(factorial(2 * k), four_k * factorial(k)), 1);
}

PiPower morris_product(long n, const MorrisParams &p)
{
    p.validate();
    if (n < 0) {
        throw std::invalid_argument("morris_rhs requires n >= 0");
    }
    const auto g = [](long twice) { return gamma_half(HalfInteger::from_twice(twice)); };
    // All arguments are stored doubled, so c contributes m.
    PiPower num(Rational(1));
    PiPower den(Rational(factorial(n)));
    for (long j = 0; j < n; ++j) {
        num = num * g(2 * p.a + 2 * p.b + (n - 1 + j) * p.m) * g(p.m);
        den = den * g(2 * p.a + j * p.m) * g(p.m + j * p.m) * g(2 * p.b + j * p.m + 2);
    }
    return num / den;
}

Rational morris_rhs(long n, const MorrisParams &p)
{
    const PiPower value = morris_product(n, p);
    if (value.pi_half_power() != 0) {
        throw PiCancellationError(value.pi_half_power(), "Morris product at n = " + std::to_string(n) + ", "
                                                             + p.to_string() + " left residual pi^("
                                                             + std::to_string(value.pi_half_power()) + "/2)");
    }
    return value.rational();
}

Rational morris_ratio(long n, const MorrisParams &p)
{
    if (n < 1) {
        throw std::invalid_argument("morris_ratio requires n >= 1");
    }
    return morris_rhs(n, p) / morris_rhs(n - 1, p);
}

DuplicationSides legendre_duplication_sides(HalfInteger z)
{
    if (z.twice() <= 0) {
        throw std::domain_error("duplication check needs z > 0, got " + z.to_string());
    }
    const PiPower lhs = gamma_half(z) * gamma_half(z + half);
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(z.twice() - 1));
    const PiPower rhs = gamma_half(HalfInteger::from_integer(z.twice())) * gamma_half(half) / PiPower(Rational(pow2));
    return {lhs, rhs};
}

bool legendre_duplication_check(HalfInteger z)
{
    const auto sides = legendre_duplication_sides(z);
    return sides.lhs == sides.rhs;
}

} // namespace ctid
