#include <ctid/exact_arith.hpp>

#include <stdexcept>
#include <string>

namespace ctid
{

Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational q(num, den);
    return normalize(q);
}

Rational &normalize(Rational &q)
{
    q.canonicalize();
    return q;
}

bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

std::string to_decimal(const Integer &z)
{
    return z.get_str(10);
}

std::string to_decimal(const Rational &q)
{
    if (is_integer(q)) {
        return q.get_num().get_str(10);
    }
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

namespace
{

bool is_decimal_integer(const std::string &s)
{
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

Integer parse_integer(const std::string &s)
{
    if (!is_decimal_integer(s)) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
    return Integer(s, 10);
}

Rational parse_rational(const std::string &s)
{
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(s));
    }
    return make_rational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
}

Integer factorial(long n)
{
    if (n < 0) {
        throw std::domain_error("factorial of a negative integer");
    }
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k)
{
    if (n < 0) {
        throw std::domain_error("binomial with negative upper index");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer catalan(long i)
{
    if (i < 1) {
        throw std::domain_error("catalan index must be >= 1");
    }
    const Integer central = binomial(2 * i, i);
    Integer q, r;
    const Integer d = i + 1;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), central.get_mpz_t(), d.get_mpz_t());
    if (r != 0) {
        throw std::logic_error("C(2i, i) not divisible by i + 1 at i = " + std::to_string(i));
    }
    return q;
}

Integer catalan_product(long n)
{
    Integer r = 1;
    for (long i = 1; i <= n; ++i) {
        r *= catalan(i);
    }
    return r;
}

} // namespace ctid
