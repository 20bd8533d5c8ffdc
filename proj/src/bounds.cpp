#include "qcorbit/bounds.hpp"

#include <numeric>
#include <vector>

#include "qcorbit/numth.hpp"

namespace qcorbit {

namespace {

using boost::multiprecision::gcd;

BigInt pow_big(std::int64_t base, std::int64_t e) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= base;
    return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    if (den == 0 || num % den != 0)
        throw InvalidInput(std::string("non-integral ") + what +
                           "; constituent data is inconsistent");
    return num / den;
}

void check_params(std::int64_t m, std::int64_t q) {
    if (m < 1) throw InvalidInput("m must be >= 1");
    if (q < 2) throw InvalidInput("q must be >= 2");
}

BigInt abs_big(BigInt v) {
    return v < 0 ? -v : v;
}

} // namespace

BigInt shift_orbit_count_single(std::int64_t m, std::int64_t i, std::int64_t K, std::int64_t q) {
    check_params(m, q);
    if (K < 0) throw InvalidInput("dimension must be nonnegative");
    std::int64_t ii[] = {i};
    BigInt num = BigInt(gcd_list(ii, m)) * (pow_big(q, K) - 1);
    return exact_div(num, m, "shift orbit count");
}

BigInt shift_scalar_orbit_count_single(std::int64_t m, std::int64_t i, std::int64_t K,
                                       std::int64_t q) {
    check_params(m, q);
    if (K < 0) throw InvalidInput("dimension must be nonnegative");
    std::int64_t ii[] = {(q - 1) * i};
    BigInt num = BigInt(gcd_list(ii, m)) * (pow_big(q, K) - 1);
    return exact_div(num, BigInt(m) * (q - 1), "shift-scalar orbit count");
}

BigInt full_orbit_count_single(std::int64_t q, std::int64_t k, std::int64_t i, std::int64_t m) {
    check_params(m, q);
    if (k < 1) throw InvalidInput("coset size must be >= 1");
    BigInt qk1 = pow_big(q, k) - 1;
    if (BigInt(i) * qk1 % m != 0)
        throw InvalidInput("representative violates m | i*(q^k - 1)");
    BigInt ideal_index = exact_div(BigInt(i) * qk1, m, "coset index term");
    BigInt scalar_index = exact_div(qk1, q - 1, "scalar index term");
    BigInt total = 0;
    for (std::int64_t r = 1; r <= k; ++r) {
        if (k % r != 0) continue;
        BigInt g = gcd(gcd(pow_big(q, r) - 1, scalar_index), ideal_index);
        total += euler_phi(k / r) * g;
    }
    return exact_div(total, k, "full orbit count");
}

BigInt shift_orbit_count(std::span<const ConstituentArith> cons, std::int64_t m, std::int64_t q) {
    check_params(m, q);
    const std::size_t U = cons.size();
    if (U > 20) throw InvalidInput("too many constituents for the subset sum");
    BigInt total = 0;
    for (std::uint32_t mask = 1; mask < (1u << U); ++mask) {
        std::vector<std::int64_t> reps;
        BigInt prod = 1;
        for (std::size_t j = 0; j < U; ++j) {
            if (!(mask >> j & 1)) continue;
            reps.push_back(cons[j].i);
            prod *= pow_big(q, cons[j].K) - 1;
        }
        total += exact_div(BigInt(gcd_list(reps, m)) * prod, m, "shift orbit term");
    }
    return total;
}

BigInt shift_scalar_orbit_count(std::span<const ConstituentArith> cons, std::int64_t m,
                                std::int64_t q) {
    check_params(m, q);
    const std::size_t U = cons.size();
    if (U > 20) throw InvalidInput("too many constituents for the subset sum");
    BigInt total = 0;
    for (std::uint32_t mask = 1; mask < (1u << U); ++mask) {
        std::vector<std::int64_t> reps;
        BigInt prod = 1;
        std::int64_t scalar_gcd = q - 1;
        for (std::size_t j = 0; j < U; ++j) {
            if (!(mask >> j & 1)) continue;
            reps.push_back(cons[j].i);
            prod *= pow_big(q, cons[j].K) - 1;
            std::int64_t ij[] = {cons[j].i};
            scalar_gcd = std::gcd(scalar_gcd, m / gcd_list(ij, m));
        }
        BigInt num = BigInt(gcd_list(reps, m)) * prod * scalar_gcd;
        total += exact_div(num, BigInt(m) * (q - 1), "shift-scalar orbit term");
    }
    return total;
}

BigInt full_orbit_bound(std::span<const ConstituentArith> cons, std::int64_t m, std::int64_t q) {
    check_params(m, q);
    const std::size_t U = cons.size();
    if (U > 20) throw InvalidInput("too many constituents for the subset sum");
    for (const auto& c : cons) {
        if (c.K != c.k)
            throw GroupNotApplicable(
                "full-group bound needs dimension-one constituents (K = k)");
        if (BigInt(c.i) * (pow_big(q, c.k) - 1) % m != 0)
            throw InvalidInput("representative violates m | i*(q^k - 1)");
    }
    const std::int64_t mp = multiplicative_order(q, m);
    const BigInt I = q - 1;
    BigInt grand_num = 0;
    for (std::uint32_t mask = 1; mask < (1u << U); ++mask) {
        std::vector<const ConstituentArith*> sel;
        for (std::size_t j = 0; j < U; ++j)
            if (mask >> j & 1) sel.push_back(&cons[j]);
        for (std::int64_t r = 0; r < mp; ++r) {
            std::vector<BigInt> Iv(sel.size());
            BigInt prod = 1;
            for (std::size_t v = 0; v < sel.size(); ++v) {
                BigInt small = pow_big(q, std::gcd(sel[v]->k, r)) - 1;
                Iv[v] = exact_div(pow_big(q, sel[v]->k) - 1, small, "index quotient");
                prod *= small;
            }
            BigInt g1 = m;
            for (std::size_t v = 0; v < sel.size(); ++v)
                g1 = gcd(g1, sel[v]->i * exact_div(I * Iv[v], gcd(I, Iv[v]), "lcm term"));
            for (std::size_t a = 0; a < sel.size(); ++a)
                for (std::size_t b = a + 1; b < sel.size(); ++b) {
                    BigInt diff = abs_big(BigInt(sel[b]->i) - sel[a]->i);
                    g1 = gcd(g1, diff * exact_div(Iv[a] * Iv[b], gcd(Iv[a], Iv[b]), "lcm term"));
                }
            BigInt g2 = I;
            for (const BigInt& x : Iv) g2 = gcd(g2, x);
            grand_num += g1 * g2 * prod;
        }
    }
    return exact_div(grand_num, BigInt(mp) * m * (q - 1), "full orbit bound");
}

BigInt full_orbit_bound_pair_term(const ConstituentArith& c1, const ConstituentArith& c2,
                                  std::int64_t m, std::int64_t q) {
    check_params(m, q);
    if (c1.k < 1 || c2.k < 1) throw InvalidInput("coset sizes must be >= 1");
    if (c2.k % c1.k != 0)
        throw GroupNotApplicable("pair term requires the first coset size to divide the second");
    if (c1.i == c2.i) throw InvalidInput("constituents must use distinct cosets");
    BigInt qk1 = pow_big(q, c1.k) - 1;
    BigInt qk2 = pow_big(q, c2.k) - 1;
    if (BigInt(c1.i) * qk1 % m != 0 || BigInt(c2.i) * qk2 % m != 0)
        throw InvalidInput("representative violates m | i*(q^k - 1)");
    const std::int64_t mp = multiplicative_order(q, m);
    BigInt total = 0;
    for (std::int64_t r = 0; r < mp; ++r) {
        BigInt A = pow_big(q, std::gcd(c1.k, r)) - 1; // divides B since k1 | k2
        BigInt B = pow_big(q, std::gcd(c2.k, r)) - 1;
        BigInt inner = B;
        inner = gcd(inner, exact_div(qk1 * B, BigInt(q - 1) * A, "pair scalar term"));
        inner = gcd(inner, exact_div(BigInt(c1.i) * qk1, m, "pair index term") *
                               exact_div(B, A, "pair quotient"));
        inner = gcd(inner, exact_div(BigInt(c2.i) * qk2, m, "pair index term"));
        BigInt outer = gcd(A * inner,
                           exact_div(abs_big(BigInt(c2.i) - c1.i) * qk1 * qk2,
                                     BigInt(m) * (q - 1), "pair difference term"));
        total += outer;
    }
    return exact_div(total, mp, "pair term");
}

} // namespace qcorbit
