#ifndef CTID_MORRIS_PARAMS_HPP
#define CTID_MORRIS_PARAMS_HPP

#include <string>

namespace ctid
{

// Exponents of prod (1-x_i)^-a prod x_i^-b prod_{i<j} (x_j-x_i)^-m, where
// m = 2c keeps half-integral c exact.
struct MorrisParams {
    long a = 2;
    long b = 0;
    long m = 1;

    // Throws std::invalid_argument unless a >= 1, b >= 0, m >= 1.
    void validate() const;
    std::string to_string() const;

    friend bool operator==(const MorrisParams &, const MorrisParams &) = default;
};

// a = 2, b = 0, c = 1/2: the Catalan-product specialization.
inline constexpr MorrisParams cry_params{2, 0, 1};

} // namespace ctid

#endif
