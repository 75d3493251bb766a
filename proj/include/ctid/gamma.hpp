#ifndef CTID_GAMMA_HPP
#define CTID_GAMMA_HPP

#include <stdexcept>
#include <string>

#include <ctid/exact_arith.hpp>
#include <ctid/morris_params.hpp>

namespace ctid
{

// An element of (1/2)Z, stored as twice its value.
class HalfInteger
{
public:
    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_twice(long twice)
    {
        HalfInteger h;
        h.m_twice = twice;
        return h;
    }
    static constexpr HalfInteger from_integer(long n)
    {
        return from_twice(2 * n);
    }

    constexpr long twice() const
    {
        return m_twice;
    }
    constexpr bool is_integer() const
    {
        return m_twice % 2 == 0;
    }

    friend constexpr HalfInteger operator+(HalfInteger x, HalfInteger y)
    {
        return from_twice(x.m_twice + y.m_twice);
    }
    friend constexpr HalfInteger operator-(HalfInteger x, HalfInteger y)
    {
        return from_twice(x.m_twice - y.m_twice);
    }
    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

    Rational value() const;
    std::string to_string() const;

private:
    long m_twice = 0;
};

inline constexpr HalfInteger half = HalfInteger::from_twice(1);

// The exact number r * pi^(p/2).
class PiPower
{
public:
    PiPower() = default;
    PiPower(Rational r, long p = 0);

    const Rational &rational() const
    {
        return m_r;
    }
    long pi_half_power() const
    {
        return m_p;
    }

    friend PiPower operator*(const PiPower &x, const PiPower &y);
    // Throws std::domain_error on division by zero.
    friend PiPower operator/(const PiPower &x, const PiPower &y);
    friend bool operator==(const PiPower &, const PiPower &) = default;

    // "3/4*pi^(1/2)", "6", "pi^(1/2)".
    std::string to_string() const;

private:
    Rational m_r = 0;
    long m_p = 0;
};

// Non-cancelling pi-power where the Morris product must be rational.
class PiCancellationError : public std::logic_error
{
public:
    PiCancellationError(long residual, const std::string &what);
    long residual() const
    {
        return m_residual;
    }

private:
    long m_residual;
};

// Gamma(z) for z > 0 in (1/2)Z: (n-1)! for z = n, (2k)!/(4^k k!) * pi^(1/2)
// for z = k + 1/2. Throws std::domain_error for z <= 0.
PiPower gamma_half(HalfInteger z);

// The Morris product (1/n!) prod_{j<n} Gamma(a+b+(n-1+j)c) Gamma(c) /
// (Gamma(a+jc) Gamma(c+jc) Gamma(b+jc+1)) with c = m/2, before the pi check.
PiPower morris_product(long n, const MorrisParams &p);

// morris_product with the pi-power required to vanish. Throws
// PiCancellationError otherwise; std::invalid_argument on bad input.
Rational morris_rhs(long n, const MorrisParams &p);

// morris_rhs(n, p) / morris_rhs(n - 1, p) for n >= 1.
Rational morris_ratio(long n, const MorrisParams &p);

// Gamma(z) Gamma(z + 1/2) == Gamma(2z) Gamma(1/2) / 2^(2z - 1), evaluated
// exactly on both sides. Throws std::domain_error for z <= 0.
bool legendre_duplication_check(HalfInteger z);

// The two sides compared by legendre_duplication_check.
struct DuplicationSides {
    PiPower lhs;
    PiPower rhs;
};
DuplicationSides legendre_duplication_sides(HalfInteger z);

} // namespace ctid

#endif
