#ifndef QCORBIT_BOUNDS_HPP
#define QCORBIT_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>

#include "qcorbit/errors.hpp"

namespace qcorbit {

using BigInt = boost::multiprecision::cpp_int;

/// Arithmetic data of one constituent: representative i of its coset,
/// coset size k, and F_q-dimension K of the constituent (a multiple of
/// k). Coset structure guarantees m | i*(q^k - 1).
struct ConstituentArith {
    std::int64_t i = 0;
    std::int64_t k = 0;
    std::int64_t K = 0;
};

/// Orbit count of the l-step shift group on the nonzero words of a
/// single-constituent code: gcd(m, i) * (q^K - 1) / m.
BigInt shift_orbit_count_single(std::int64_t m, std::int64_t i, std::int64_t K, std::int64_t q);

/// Orbit count of the shift-plus-scalars group, single constituent:
/// gcd(m, (q-1)*i) * (q^K - 1) / (m*(q-1)).
BigInt shift_scalar_orbit_count_single(std::int64_t m, std::int64_t i, std::int64_t K,
                                       std::int64_t q);

/// Orbit count of the full group (shift, scalars and the multiplier) for
/// a one-generator single-constituent code with K = k:
/// (1/k) * sum over r | k of phi(k/r) * gcd(q^r-1, (q^k-1)/(q-1), i*(q^k-1)/m).
BigInt full_orbit_count_single(std::int64_t q, std::int64_t k, std::int64_t i, std::int64_t m);

/// Shift orbit count of a direct sum: sum over nonempty subsets S of the
/// constituents of gcd(m, {i_t}_S) * prod_S (q^{K_t} - 1) / m.
BigInt shift_orbit_count(std::span<const ConstituentArith> cons, std::int64_t m, std::int64_t q);

/// Shift-plus-scalars orbit count of a direct sum; each subset term picks
/// up the extra factor gcd(q-1, {m / gcd(m, i_t)}_S) and the denominator
/// m*(q-1).
BigInt shift_scalar_orbit_count(std::span<const ConstituentArith> cons, std::int64_t m,
                                std::int64_t q);

/// Full-group orbit bound of a one-generator direct sum. Every
/// constituent must have K = k (dimension one over its constituent
/// field); otherwise the bound is not applicable. Upper-bounds the true
/// orbit count; exact for a single constituent.
BigInt full_orbit_bound(std::span<const ConstituentArith> cons, std::int64_t m, std::int64_t q);

/// The mixed two-constituent term of the full-group bound in its
/// specialized form for k1 | k2. Must agree with the corresponding
/// subset term inside full_orbit_bound.
BigInt full_orbit_bound_pair_term(const ConstituentArith& c1, const ConstituentArith& c2,
                                  std::int64_t m, std::int64_t q);

} // namespace qcorbit

#endif
