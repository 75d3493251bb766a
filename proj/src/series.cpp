#include <ctid/series.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ctid
{

void CTProblem::validate() const
{
    if (num_vars < 1) {
        throw std::invalid_argument("CTProblem needs at least one variable");
    }
    if (target.size() != num_vars) {
        throw std::invalid_argument("target length " + std::to_string(target.size()) + " != num_vars "
                                    + std::to_string(num_vars));
    }
    for (const auto &f : factors) {
        if (f.base.size() != num_vars) {
            throw std::invalid_argument("factor base " + to_string(f.base) + " has wrong length");
        }
        if (f.multiplicity < 1) {
            throw std::invalid_argument("factor multiplicity must be >= 1");
        }
        bool nonzero = false;
        for (auto e : f.base) {
            if (e < 0) {
                throw std::invalid_argument("factor base " + to_string(f.base) + " has a negative exponent");
            }
            nonzero = nonzero || e > 0;
        }
        if (!nonzero) {
            throw std::invalid_argument("factor base must not be the unit monomial");
        }
    }
}

std::string to_string(const ExponentVector &e)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e.size(); ++i) {
        os << (i ? "," : "") << e[i];
    }
    os << ')';
    return os.str();
}

std::string to_string(const GeometricFactor &f)
{
    return "(1 - y^" + to_string(f.base) + ")^-" + std::to_string(f.multiplicity);
}

std::string to_string(const CTProblem &p)
{
    std::string s = "[y^" + to_string(p.target) + "]";
    for (const auto &f : p.factors) {
        s += " " + to_string(f);
    }
    return s;
}

ExponentVector partial_sum_transform(const ExponentVector &x_exps)
{
    ExponentVector y(x_exps.size());
    long acc = 0;
    for (std::size_t t = 0; t < x_exps.size(); ++t) {
        acc += x_exps[t];
        y[t] = acc;
    }
    return y;
}

ExponentVector first_differences(const ExponentVector &y_exps)
{
    ExponentVector x(y_exps.size());
    for (std::size_t t = 0; t < y_exps.size(); ++t) {
        x[t] = y_exps[t] - (t ? y_exps[t - 1] : 0);
    }
    return x;
}

namespace
{

bool within(const ExponentVector &e, const ExponentVector &cap)
{
    for (std::size_t t = 0; t < e.size(); ++t) {
        if (e[t] > cap[t]) {
            return false;
        }
    }
    return true;
}

void check_cap(const ExponentVector &cap)
{
    for (auto c : cap) {
        if (c < 0) {
            throw std::invalid_argument("truncation cap " + to_string(cap) + " has a negative entry");
        }
    }
}

// Mixed-radix addressing of the box [0, cap]. The first coordinate is most
// significant, so key order is lexicographic exponent order, and keys add
// without carry whenever the exponent sum stays inside the box.
class BoxIndex
{
public:
    explicit BoxIndex(const ExponentVector &cap) : m_stride(cap.size())
    {
        std::uint64_t s = 1;
        for (std::size_t t = cap.size(); t-- > 0;) {
            m_stride[t] = s;
            const auto radix = static_cast<std::uint64_t>(cap[t]) + 1;
            if (s > std::numeric_limits<std::uint64_t>::max() / radix) {
                throw std::length_error("truncation box " + to_string(cap) + " too large to index");
            }
            s *= radix;
        }
    }

    std::uint64_t key(const ExponentVector &e) const
    {
        std::uint64_t k = 0;
        for (std::size_t t = 0; t < e.size(); ++t) {
            k += static_cast<std::uint64_t>(e[t]) * m_stride[t];
        }
        return k;
    }

    ExponentVector decode(std::uint64_t k) const
    {
        ExponentVector e(m_stride.size());
        for (std::size_t t = 0; t < e.size(); ++t) {
            e[t] = static_cast<long>(k / m_stride[t]);
            k %= m_stride[t];
        }
        return e;
    }

private:
    std::vector<std::uint64_t> m_stride;
};

// Terms of s inside cap, flattened for the product loop.
struct Flat {
    std::vector<long> exps;
    std::vector<std::uint64_t> keys;
    std::vector<const Integer *> coeffs;
};

Flat flatten(const TruncatedSeries &s, const ExponentVector &cap, const BoxIndex &box)
{
    Flat f;
    for (const auto &term : s.terms()) {
        if (!within(term.exps, cap)) {
            continue;
        }
        f.exps.insert(f.exps.end(), term.exps.begin(), term.exps.end());
        f.keys.push_back(box.key(term.exps));
        f.coeffs.push_back(&term.coeff);
    }
    return f;
}

} // namespace

TruncatedSeries::TruncatedSeries(ExponentVector cap) : m_cap(std::move(cap))
{
    check_cap(m_cap);
}

TruncatedSeries TruncatedSeries::one(ExponentVector cap)
{
    TruncatedSeries s(std::move(cap));
    s.m_terms.push_back({ExponentVector(s.m_cap.size(), 0), Integer(1)});
    return s;
}

Integer TruncatedSeries::coefficient(const ExponentVector &exps) const
{
    const auto it = std::lower_bound(m_terms.begin(), m_terms.end(), exps,
                                     [](const Term &t, const ExponentVector &e) { return t.exps < e; });
    if (it != m_terms.end() && it->exps == exps) {
        return it->coeff;
    }
    return 0;
}

void TruncatedSeries::add(const ExponentVector &exps, const Integer &c)
{
    if (exps.size() != m_cap.size()) {
        throw std::invalid_argument("exponent " + to_string(exps) + " does not match cap " + to_string(m_cap));
    }
    for (auto e : exps) {
        if (e < 0) {
            throw std::invalid_argument("negative exponent in series term " + to_string(exps));
        }
    }
    if (c == 0 || !within(exps, m_cap)) {
        return;
    }
    const auto it = std::lower_bound(m_terms.begin(), m_terms.end(), exps,
                                     [](const Term &t, const ExponentVector &e) { return t.exps < e; });
    if (it != m_terms.end() && it->exps == exps) {
        it->coeff += c;
        if (it->coeff == 0) {
            m_terms.erase(it);
        }
    } else {
        m_terms.insert(it, Term{exps, c});
    }
}

TruncatedSeries TruncatedSeries::truncated(const ExponentVector &cap) const
{
    TruncatedSeries r(cap);
    for (const auto &t : m_terms) {
        if (within(t.exps, cap)) {
            r.m_terms.push_back(t);
        }
    }
    return r;
}

TruncatedSeries geometric_expand(const GeometricFactor &f, const ExponentVector &cap)
{
    if (f.base.size() != cap.size()) {
        throw std::invalid_argument("factor base " + to_string(f.base) + " does not match cap " + to_string(cap));
    }
    if (f.multiplicity < 1) {
        throw std::invalid_argument("factor multiplicity must be >= 1");
    }
    // Largest k with k * base <= cap.
    long kmax = std::numeric_limits<long>::max();
    for (std::size_t t = 0; t < cap.size(); ++t) {
        if (f.base[t] < 0) {
            throw std::invalid_argument("factor base " + to_string(f.base) + " has a negative exponent");
        }
        if (f.base[t] > 0) {
            kmax = std::min(kmax, cap[t] / f.base[t]);
        }
    }
    if (kmax == std::numeric_limits<long>::max()) {
        throw std::invalid_argument("factor base must not be the unit monomial");
    }
    TruncatedSeries s(cap);
    ExponentVector e(cap.size(), 0);
    for (long k = 0; k <= kmax; ++k) {
        for (std::size_t t = 0; t < cap.size(); ++t) {
            e[t] = k * f.base[t];
        }
        // Increasing k gives lexicographically increasing exponents.
        s.add(e, binomial(k + f.multiplicity - 1, f.multiplicity - 1));
    }
    return s;
}

TruncatedSeries series_mul_truncated(const TruncatedSeries &a, const TruncatedSeries &b, const ExponentVector &cap)
{
    if (a.cap().size() != cap.size() || b.cap().size() != cap.size()) {
        throw std::invalid_argument("series_mul_truncated: variable count mismatch");
    }
    TruncatedSeries result(cap);
    const BoxIndex box(cap);
    const Flat fa = flatten(a, cap, box);
    const Flat fb = flatten(b, cap, box);
    const std::size_t nv = cap.size();

    std::unordered_map<std::uint64_t, Integer> acc;
    acc.reserve(std::max(fa.keys.size(), fb.keys.size()) * 2);
    for (std::size_t i = 0; i < fa.keys.size(); ++i) {
        const long *ea = &fa.exps[i * nv];
        for (std::size_t j = 0; j < fb.keys.size(); ++j) {
            const long *eb = &fb.exps[j * nv];
            bool fits = true;
            for (std::size_t t = 0; t < nv; ++t) {
                if (ea[t] + eb[t] > cap[t]) {
                    fits = false;
                    break;
                }
            }
            if (!fits) {
                continue;
            }
            Integer &slot = acc[fa.keys[i] + fb.keys[j]];
            mpz_addmul(slot.get_mpz_t(), fa.coeffs[i]->get_mpz_t(), fb.coeffs[j]->get_mpz_t());
        }
    }

    std::vector<std::pair<std::uint64_t, Integer>> entries;
    entries.reserve(acc.size());
    for (auto &[k, c] : acc) {
        if (c != 0) {
            entries.emplace_back(k, std::move(c));
        }
    }
    std::sort(entries.begin(), entries.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    result.m_terms.reserve(entries.size());
    for (auto &[k, c] : entries) {
        result.m_terms.push_back({box.decode(k), std::move(c)});
    }
    return result;
}

std::vector<GeometricFactor> kernel_factor_order(std::vector<GeometricFactor> factors)
{
    const auto rank = [](const GeometricFactor &f) {
        long support = 0, degree = 0;
        for (auto e : f.base) {
            support += e != 0;
            degree += e;
        }
        return std::pair{support, degree};
    };
    std::stable_sort(factors.begin(), factors.end(),
                     [&](const GeometricFactor &x, const GeometricFactor &y) { return rank(x) < rank(y); });
    return factors;
}

Integer coefficient_of(const CTProblem &p)
{
    p.validate();
    for (auto e : p.target) {
        if (e < 0) {
            return 0;
        }
    }
    TruncatedSeries acc = TruncatedSeries::one(p.target);
    for (const auto &f : kernel_factor_order(p.factors)) {
        acc = series_mul_truncated(acc, geometric_expand(f, p.target), p.target);
        if (acc.empty()) {
            return 0;
        }
    }
    return acc.coefficient(p.target);
}

namespace
{

class DiophantineSearch
{
public:
    explicit DiophantineSearch(const CTProblem &p) : m_factors(p.factors), m_covered(p.factors.size() + 1)
    {
        // m_covered[f][t]: some factor at position >= f can raise coordinate t.
        m_covered.back().assign(p.num_vars, false);
        for (std::size_t f = m_factors.size(); f-- > 0;) {
            m_covered[f] = m_covered[f + 1];
            for (std::size_t t = 0; t < p.num_vars; ++t) {
                if (m_factors[f].base[t] > 0) {
                    m_covered[f][t] = true;
                }
            }
        }
    }

    Integer run(ExponentVector remaining)
    {
        return visit(0, remaining);
    }

private:
    Integer visit(std::size_t f, ExponentVector &remaining)
    {
        for (std::size_t t = 0; t < remaining.size(); ++t) {
            if (remaining[t] > 0 && !m_covered[f][t]) {
                return 0;
            }
        }
        if (f == m_factors.size()) {
            return 1;
        }
        const auto &base = m_factors[f].base;
        const long e = m_factors[f].multiplicity;
        long kmax = std::numeric_limits<long>::max();
        for (std::size_t t = 0; t < base.size(); ++t) {
            if (base[t] > 0) {
                kmax = std::min(kmax, remaining[t] / base[t]);
            }
        }
        Integer total = 0;
        for (long k = 0; k <= kmax; ++k) {
            if (k > 0) {
                for (std::size_t t = 0; t < base.size(); ++t) {
                    remaining[t] -= base[t];
                }
            }
            const Integer sub = visit(f + 1, remaining);
            if (sub != 0) {
                total += binomial(k + e - 1, e - 1) * sub;
            }
        }
        for (std::size_t t = 0; t < base.size(); ++t) {
            remaining[t] += kmax * base[t];
        }
        return total;
    }

    const std::vector<GeometricFactor> &m_factors;
    std::vector<std::vector<bool>> m_covered;
};

} // namespace

Integer diophantine_coefficient(const CTProblem &p)
{
    p.validate();
    for (auto e : p.target) {
        if (e < 0) {
            return 0;
        }
    }
    return DiophantineSearch(p).run(p.target);
}

} // namespace ctid
