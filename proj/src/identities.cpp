#include <ctid/identities.hpp>

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctid
{

void MorrisParams::validate() const
{
    if (a < 1 || b < 0 || m < 1) {
        throw std::invalid_argument("invalid Morris parameters " + to_string() + ": need a >= 1, b >= 0, m >= 1");
    }
}

std::string MorrisParams::to_string() const
{
    return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " m=" + std::to_string(m);
}

namespace
{

void require_n(long n)
{
    if (n < 1) {
        throw std::invalid_argument("number of variables must be >= 1, got " + std::to_string(n));
    }
}

// y-monomial y_first ... y_last (0-based, inclusive).
ExponentVector run_of_ones(std::size_t num_vars, long first, long last)
{
    ExponentVector e(num_vars, 0);
    for (long t = first; t <= last; ++t) {
        e[static_cast<std::size_t>(t)] = 1;
    }
    return e;
}

// The (x_j - x_i)^-m factors for i < j, as (1 - y_i ... y_{j-1})^-m.
void append_vandermonde(CTProblem &p, long n, long m)
{
    for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) {
            p.factors.push_back({run_of_ones(p.num_vars, i, j - 1), m});
        }
    }
}

double millis_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

PiPower exact(const Integer &z)
{
    return PiPower(Rational(z));
}

} // namespace

CTProblem build_morris_problem(long n, const MorrisParams &params)
{
    require_n(n);
    params.validate();
    CTProblem p;
    p.num_vars = static_cast<std::size_t>(n);
    // x-space target: b from x_i^-b, (j-1) m from the x_j^-m pulled out of
    // each (x_j - x_i)^-m.
    ExponentVector x_target(p.num_vars);
    for (long i = 0; i < n; ++i) {
        x_target[static_cast<std::size_t>(i)] = params.b + params.m * i;
    }
    p.target = partial_sum_transform(x_target);
    for (long i = 0; i < n; ++i) {
        p.factors.push_back({run_of_ones(p.num_vars, i, n - 1), params.a});
    }
    append_vandermonde(p, n, params.m);
    return p;
}

CTProblem build_cry_problem(long n)
{
    return build_morris_problem(n, cry_params);
}

std::vector<std::vector<long>> conjecture2_subsets(long n, long k)
{
    require_n(n);
    if (k < 0 || k > n) {
        throw std::invalid_argument("k must lie in [0, " + std::to_string(n) + "], got " + std::to_string(k));
    }
    const long size = n - k;
    std::vector<std::vector<long>> out;
    std::vector<long> current;
    // Lexicographic enumeration of size-element subsets of {1..n}.
    auto extend = [&](auto &&self, long next) -> void {
        if (static_cast<long>(current.size()) == size) {
            out.push_back(current);
            return;
        }
        for (long i = next; i <= n - (size - static_cast<long>(current.size())) + 1; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    extend(extend, 1);
    return out;
}

std::vector<CTProblem> build_conjecture2_terms(long n, long k)
{
    std::vector<CTProblem> terms;
    for (const auto &subset : conjecture2_subsets(n, k)) {
        CTProblem p;
        p.num_vars = static_cast<std::size_t>(n);
        std::vector<bool> in_s(p.num_vars, false);
        for (long i : subset) {
            in_s[static_cast<std::size_t>(i - 1)] = true;
        }
        ExponentVector x_target(p.num_vars);
        for (long i = 0; i < n; ++i) {
            x_target[static_cast<std::size_t>(i)] = i - (in_s[static_cast<std::size_t>(i)] ? 1 : 0);
        }
        p.target = partial_sum_transform(x_target);
        for (long i = 0; i < n; ++i) {
            p.factors.push_back({run_of_ones(p.num_vars, i, n - 1), in_s[static_cast<std::size_t>(i)] ? 2L : 1L});
        }
        append_vandermonde(p, n, 1);
        terms.push_back(std::move(p));
    }
    return terms;
}

Integer eval_ct(const CTProblem &p, bool crosscheck)
{
    Integer value = coefficient_of(p);
    if (crosscheck) {
        const Integer oracle = diophantine_coefficient(p);
        if (oracle != value) {
            throw OracleMismatchError("kernel/oracle disagreement on " + to_string(p) + ": kernel "
                                      + to_decimal(value) + ", oracle " + to_decimal(oracle));
        }
    }
    return value;
}

std::string to_string(Method m)
{
    switch (m) {
        case Method::kernel:
            return "kernel";
        case Method::oracle:
            return "oracle";
        case Method::both:
            return "both";
        case Method::gamma:
            return "gamma";
    }
    throw std::logic_error("unknown method");
}

Method method_from_string(const std::string &s)
{
    for (auto m : {Method::kernel, Method::oracle, Method::both, Method::gamma}) {
        if (to_string(m) == s) {
            return m;
        }
    }
    throw std::invalid_argument("unknown method tag '" + s + "'");
}

void VerificationReport::settle()
{
    if (lhs && rhs) {
        match = (*lhs == *rhs);
    } else {
        match.reset();
    }
}

VerificationReport verify_cry(long n, bool crosscheck)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.identity = "cry";
    r.n = n;
    r.lhs = exact(eval_ct(build_cry_problem(n), crosscheck));
    r.rhs = exact(catalan_product(n));
    r.method = crosscheck ? Method::both : Method::kernel;
    r.settle();
    r.elapsed_ms = millis_since(start);
    return r;
}

VerificationReport verify_morris(long n, const MorrisParams &p, bool crosscheck)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.identity = "morris";
    r.n = n;
    r.params = p;
    r.lhs = exact(eval_ct(build_morris_problem(n, p), crosscheck));
    r.rhs = PiPower(morris_rhs(n, p));
    r.method = crosscheck ? Method::both : Method::kernel;
    r.settle();
    r.elapsed_ms = millis_since(start);
    return r;
}

Integer conjecture2_lhs(long n, long k, bool crosscheck)
{
    Integer sum = 0;
    for (const auto &term : build_conjecture2_terms(n, k)) {
        sum += eval_ct(term, crosscheck);
    }
    return sum;
}

std::vector<VerificationReport> conjecture2_rows(long n, bool crosscheck)
{
    std::vector<VerificationReport> rows;
    for (long k = 0; k <= n; ++k) {
        const auto start = std::chrono::steady_clock::now();
        VerificationReport r;
        r.identity = "conjecture2";
        r.n = n;
        r.k = k;
        r.lhs = exact(conjecture2_lhs(n, k, crosscheck));
        r.method = crosscheck ? Method::both : Method::kernel;
        r.settle();
        r.elapsed_ms = millis_since(start);
        rows.push_back(std::move(r));
    }
    return rows;
}

VerificationReport conjecture2_sum_check(long n, bool crosscheck)
{
    const auto start = std::chrono::steady_clock::now();
    Integer sum = 0;
    for (long k = 0; k <= n; ++k) {
        sum += conjecture2_lhs(n, k, crosscheck);
    }
    VerificationReport r;
    r.identity = "conjecture2-sum";
    r.n = n;
    r.lhs = exact(sum);
    r.rhs = exact(catalan_product(n));
    r.method = crosscheck ? Method::both : Method::kernel;
    r.settle();
    r.elapsed_ms = millis_since(start);
    return r;
}

VerificationReport ratio_row(long n, const MorrisParams &p)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.identity = "morris-ratio";
    r.n = n;
    r.params = p;
    r.lhs = PiPower(morris_ratio(n, p));
    r.rhs = exact(catalan(n));
    r.method = Method::gamma;
    r.settle();
    r.elapsed_ms = millis_since(start);
    return r;
}

VerificationReport duplication_row(HalfInteger z)
{
    const auto start = std::chrono::steady_clock::now();
    const auto sides = legendre_duplication_sides(z);
    VerificationReport r;
    r.identity = "legendre-duplication";
    r.n = z.twice();
    r.lhs = sides.lhs;
    r.rhs = sides.rhs;
    r.method = Method::gamma;
    r.settle();
    r.elapsed_ms = millis_since(start);
    return r;
}

} // namespace ctid
