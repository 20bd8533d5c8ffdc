#include "qcorbit/numth.hpp"

#include <algorithm>
#include <numeric>

namespace qcorbit {

std::int64_t gcd_list(std::span<const std::int64_t> values, std::int64_t m) {
    if (m <= 0) throw InvalidInput("gcd_list requires m >= 1");
    std::int64_t g = m;
    for (std::int64_t v : values) g = std::gcd(g, v < 0 ? -v : v);
    return g;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n <= 0) throw InvalidInput("euler_phi requires n >= 1");
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

std::int64_t multiplicative_order(std::int64_t q, std::int64_t m) {
    if (m < 1) throw InvalidInput("multiplicative order requires m >= 1");
    if (std::gcd(q, m) != 1) throw InvalidInput("multiplicative order requires gcd(q, m) = 1");
    if (m == 1) return 1;
    std::int64_t t = 1;
    std::int64_t x = ((q % m) + m) % m;
    std::int64_t acc = x;
    while (acc != 1) {
        acc = acc * x % m;
        ++t;
        if (t > m) throw InternalError("multiplicative order search did not terminate");
    }
    return t;
}

bool CyclotomicCoset::contains(std::int64_t i) const {
    return std::find(members.begin(), members.end(), i) != members.end();
}

CyclotomicCoset coset_of(std::int64_t q, std::int64_t m, std::int64_t i) {
    if (m < 1) throw InvalidInput("cosets require m >= 1");
    if (std::gcd(q, m) != 1) throw InvalidInput("cosets require gcd(q, m) = 1");
    if (i < 0 || i >= m) throw InvalidInput("coset element out of range");
    std::int64_t qm = ((q % m) + m) % m;
    // walk the orbit, find the minimum, then regenerate from it
    std::int64_t rep = i, j = i;
    do {
        rep = std::min(rep, j);
        j = j * qm % m;
    } while (j != i);
    CyclotomicCoset c;
    c.rep = rep;
    j = rep;
    do {
        c.members.push_back(j);
        j = j * qm % m;
    } while (j != rep);
    return c;
}

std::vector<CyclotomicCoset> cyclotomic_cosets(std::int64_t q, std::int64_t m) {
    if (m < 1) throw InvalidInput("cosets require m >= 1");
    if (std::gcd(q, m) != 1) throw InvalidInput("cosets require gcd(q, m) = 1");
    std::vector<bool> seen(std::size_t(m), false);
    std::vector<CyclotomicCoset> out;
    for (std::int64_t i = 0; i < m; ++i) {
        if (seen[std::size_t(i)]) continue;
        CyclotomicCoset c = coset_of(q, m, i);
        for (std::int64_t member : c.members) seen[std::size_t(member)] = true;
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace qcorbit
