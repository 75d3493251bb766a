#ifndef CTID_IDENTITIES_HPP
#define CTID_IDENTITIES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <ctid/exact_arith.hpp>
#include <ctid/gamma.hpp>
#include <ctid/morris_params.hpp>
#include <ctid/series.hpp>

namespace ctid
{

// The iterated constant term CT_{x_n} ... CT_{x_1} of
//
//   prod_i (1-x_i)^-a  prod_i x_i^-b  prod_{i<j} (x_j-x_i)^-m
//
// is taken in the region |x_1| < ... < |x_n| < 1, so (x_j-x_i)^-m expands as
// x_j^-m (1-x_i/x_j)^-m. The monomial prefactors move into the target and the
// substitution x_i = y_i...y_n turns every factor into a monic y-monomial
// geometric series:
//
//   x_i     -> y_i ... y_n
//   x_i/x_j -> y_i ... y_{j-1}
//
// with y-target y_t = b t + m t(t-1)/2.
CTProblem build_morris_problem(long n, const MorrisParams &p);

// build_morris_problem(n, cry_params).
CTProblem build_cry_problem(long n);

// The t^k coefficient of prod_i (t + x_i/(1-x_i)) is e_{n-k}(x_i/(1-x_i)),
// so the modified integrand splits into one problem per subset S of size
// n-k: (1-x_i)^-2 on S, (1-x_i)^-1 off S, the m = 1 Vandermonde factors, and
// x_i for i in S taken out of the target. Subsets come in lexicographic
// order. Targets may have negative entries; such terms are zero.
std::vector<CTProblem> build_conjecture2_terms(long n, long k);

// The subsets used by build_conjecture2_terms, 1-based, in the same order.
std::vector<std::vector<long>> conjecture2_subsets(long n, long k);

// Kernel and oracle disagree: an implementation bug.
class OracleMismatchError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// coefficient_of(p); with crosscheck also diophantine_coefficient(p), throwing
// OracleMismatchError if they differ.
Integer eval_ct(const CTProblem &p, bool crosscheck = false);

enum class Method { kernel, oracle, both, gamma };

std::string to_string(Method m);
Method method_from_string(const std::string &s);

// One verification case. lhs and rhs are exact; integer and rational values
// have pi-power zero. match is set exactly when both sides are present and
// then equals (lhs == rhs).
struct VerificationReport {
    std::string identity;
    long n = 0;
    std::optional<MorrisParams> params;
    std::optional<long> k;
    std::optional<PiPower> lhs;
    std::optional<PiPower> rhs;
    std::optional<bool> match;
    Method method = Method::kernel;
    double elapsed_ms = 0;

    // Recomputes match from lhs and rhs.
    void settle();

    bool operator==(const VerificationReport &) const = default;
};

// lhs = eval_ct(build_cry_problem(n)), rhs = catalan_product(n).
VerificationReport verify_cry(long n, bool crosscheck = false);

// lhs = eval_ct(build_morris_problem(n, p)), rhs = morris_rhs(n, p).
// A disagreement is reported through match, not thrown.
VerificationReport verify_morris(long n, const MorrisParams &p, bool crosscheck = false);

// Sum of eval_ct over build_conjecture2_terms(n, k).
Integer conjecture2_lhs(long n, long k, bool crosscheck = false);

// Per-k rows (no rhs) for k = 0..n.
std::vector<VerificationReport> conjecture2_rows(long n, bool crosscheck = false);

// Setting t = 1 recovers prod (1-x_i)^-2, so sum_k LHS_k must be the Catalan
// product.
VerificationReport conjecture2_sum_check(long n, bool crosscheck = false);

// morris_ratio(n, p) against catalan(n).
VerificationReport ratio_row(long n, const MorrisParams &p);

// Both sides of the duplication formula at z.
VerificationReport duplication_row(HalfInteger z);

} // namespace ctid

#endif
