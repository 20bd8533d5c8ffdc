#ifndef QCORBIT_NUMTH_HPP
#define QCORBIT_NUMTH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qcorbit/errors.hpp"

namespace qcorbit {

/// gcd of m and the absolute values of all entries. gcd(m, 0) = m, so an
/// empty list returns m itself.
std::int64_t gcd_list(std::span<const std::int64_t> values, std::int64_t m);

/// Euler's totient by direct count.
std::int64_t euler_phi(std::int64_t n);

/// Least t >= 1 with q^t = 1 (mod m). Requires gcd(q, m) = 1.
std::int64_t multiplicative_order(std::int64_t q, std::int64_t m);

/// Orbit of an integer under multiplication by q modulo m.
/// rep is the smallest member; members are listed in generation order
/// starting from rep: {rep, rep*q, rep*q^2, ...} mod m.
struct CyclotomicCoset {
    std::int64_t rep = 0;
    std::vector<std::int64_t> members;

    std::int64_t size() const { return std::int64_t(members.size()); }
    bool contains(std::int64_t i) const;
};

/// All distinct cosets mod m, sorted by rep ascending. The first one is
/// always {0}. Requires gcd(q, m) = 1.
std::vector<CyclotomicCoset> cyclotomic_cosets(std::int64_t q, std::int64_t m);

/// The unique coset containing i (0 <= i < m), in canonical form.
CyclotomicCoset coset_of(std::int64_t q, std::int64_t m, std::int64_t i);

} // namespace qcorbit

#endif
