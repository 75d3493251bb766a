#ifndef CTID_SERIES_HPP
#define CTID_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <ctid/exact_arith.hpp>

namespace ctid
{

// One exponent per variable. Entries are nonnegative for every stored series
// term; negative entries only appear in x-space targets before the
// triangular substitution.
using ExponentVector = std::vector<long>;

// (1 - y^base)^(-multiplicity) with a monic monomial base.
struct GeometricFactor {
    ExponentVector base;
    long multiplicity = 1;

    friend bool operator==(const GeometricFactor &, const GeometricFactor &) = default;
};

// "Coefficient of y^target in the product of factors."
struct CTProblem {
    std::size_t num_vars = 0;
    ExponentVector target;
    std::vector<GeometricFactor> factors;

    // Throws std::invalid_argument when the shape invariants do not hold.
    void validate() const;

    friend bool operator==(const CTProblem &, const CTProblem &) = default;
};

std::string to_string(const ExponentVector &e);
std::string to_string(const GeometricFactor &f);
std::string to_string(const CTProblem &p);

// y_t = x_1 + ... + x_t. The substitution x_i = y_i y_{i+1} ... y_n maps the
// monomial x^alpha to y^partial_sum_transform(alpha).
ExponentVector partial_sum_transform(const ExponentVector &x_exps);

// Inverse of partial_sum_transform.
ExponentVector first_differences(const ExponentVector &y_exps);

// Sparse multivariate power series truncated componentwise at cap. Terms are
// kept sorted lexicographically by exponent and never hold a zero
// coefficient.
class TruncatedSeries
{
public:
    struct Term {
        ExponentVector exps;
        Integer coeff;

        friend bool operator==(const Term &, const Term &) = default;
    };

    explicit TruncatedSeries(ExponentVector cap);

    // The constant series 1 truncated at cap.
    static TruncatedSeries one(ExponentVector cap);

    const ExponentVector &cap() const
    {
        return m_cap;
    }
    const std::vector<Term> &terms() const
    {
        return m_terms;
    }
    std::size_t size() const
    {
        return m_terms.size();
    }
    bool empty() const
    {
        return m_terms.empty();
    }

    // Zero for exponents that are absent or outside the cap.
    Integer coefficient(const ExponentVector &exps) const;

    // Adds c to the coefficient at exps. Exponents beyond the cap are
    // silently dropped; negative exponents throw std::invalid_argument.
    void add(const ExponentVector &exps, const Integer &c);

    // The same series re-truncated at a smaller cap.
    TruncatedSeries truncated(const ExponentVector &cap) const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    friend TruncatedSeries series_mul_truncated(const TruncatedSeries &, const TruncatedSeries &,
                                                const ExponentVector &);

    ExponentVector m_cap;
    std::vector<Term> m_terms;
};

// Sum over k >= 0 of C(k + e - 1, e - 1) y^(k * base), keeping k * base <= cap.
TruncatedSeries geometric_expand(const GeometricFactor &f, const ExponentVector &cap);

// a * b with every term exceeding cap in any coordinate dropped.
TruncatedSeries series_mul_truncated(const TruncatedSeries &a, const TruncatedSeries &b,
                                     const ExponentVector &cap);

// Factors in the order the kernel multiplies them: fewer nonzero base
// coordinates first, then smaller base degree.
std::vector<GeometricFactor> kernel_factor_order(std::vector<GeometricFactor> factors);

// Coefficient of p.target in the product of p's factors, by folding
// series_mul_truncated with cap = p.target. Zero if a target entry is negative.
Integer coefficient_of(const CTProblem &p);

// Brute-force oracle: sums prod_f C(k_f + e_f - 1, e_f - 1) over all
// nonnegative (k_f) with sum_f k_f * base_f = target.
Integer diophantine_coefficient(const CTProblem &p);

} // namespace ctid

#endif
