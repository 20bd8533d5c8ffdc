#ifndef QCORBIT_CODE_HPP
#define QCORBIT_CODE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qcorbit/ring.hpp"

namespace qcorbit {

/// Codeword over F_q in interleaved layout: position (i, j) lives at
/// index i*l + j, so the l-step cyclic shift is a rotation by l places.
using Codeword = std::vector<elt_t>;

struct RowEntry {
    enum Kind { Zero, Gen, Explicit } kind = Zero;
    FqPoly poly; // only for Explicit

    static RowEntry zero() { return {Zero, {}}; }
    static RowEntry gen() { return {Gen, {}}; }
    static RowEntry explicit_poly(FqPoly f) { return {Explicit, std::move(f)}; }
};

/// One summand of the code: a coset choice plus generator rows of length
/// l. Every entry is projected into the minimal ideal, and the rows are
/// spanned over the constituent field.
struct ConstituentSpec {
    std::int64_t coset_rep = 0; // user-chosen representative, kept verbatim
    std::vector<std::vector<RowEntry>> rows;
};

struct QccSpec {
    std::uint64_t q = 0;
    std::int64_t m = 0;
    int l = 0;
    std::vector<ConstituentSpec> constituents;
};

struct WeightDistribution {
    std::map<std::int64_t, std::uint64_t> counts;

    bool operator==(const WeightDistribution&) const = default;
};

/// Number of distinct nonzero weights.
int nonzero_weight_count(const WeightDistribution& wd);

struct ExpandedConstituent {
    CyclotomicCoset coset;   // canonical form (rep = min member)
    std::int64_t i_user = 0; // representative as given by the caller
    std::int64_t k = 0;      // coset size
    std::int64_t K = 0;      // F_q dimension: rank * k
    int rank = 0;            // dimension over the constituent field
    FqPoly h;                // minimal polynomial
    RingElement gen;         // generator polynomial of the ideal
    RingElement eps;         // idempotent
    std::vector<std::vector<FqPoly>> reduced_rows; // echelon rows over F_q[x]/(h)
    bool degenerate = false; // all rows project to zero
    bool qualifies_one_generator = false; // single row, entries in {0, f}, f != 0
};

struct ExpandedCode {
    const RingContext* ctx = nullptr;
    int l = 0;
    std::vector<ExpandedConstituent> constituents;
    std::int64_t K = 0;          // total F_q dimension
    std::vector<Codeword> basis; // K independent codewords

    std::int64_t n() const { return std::int64_t(l) * ctx->m(); }
    bool qualifies_one_generator() const;
};

/// Validates a constituent against the context and computes its ideal
/// data, row rank and dimension. Degenerate (all-zero) constituents are
/// permitted and flagged.
ExpandedConstituent expand_constituent(const RingContext& ctx, const ConstituentSpec& spec,
                                       int l);

/// Validates the whole spec (gcd(m, q) = 1, l >= 2, pairwise distinct
/// cosets, entry shapes) and expands every constituent.
ExpandedCode expand(const RingContext& ctx, const QccSpec& spec);

/// q^K as a decimal string (exact, any size).
std::string codeword_count_str(const ExpandedCode& code);

/// Streams every codeword of the direct sum exactly once, in a fixed
/// deterministic order starting with the zero word. Throws
/// EnumerationLimit when q^K > limit.
void for_each_codeword(const ExpandedCode& code, std::uint64_t limit,
                       const std::function<void(const Codeword&)>& fn);

std::vector<Codeword> enumerate_codewords(const ExpandedCode& code, std::uint64_t limit);

WeightDistribution weight_distribution(const ExpandedCode& code, std::uint64_t limit);

std::int64_t hamming_weight(const Codeword& w);

/// Interleaving bijection between F_q^{lm} and R_m^l and its inverse:
/// slot j collects the coefficients c_{ij} x^i.
std::vector<RingElement> phi(const RingContext& ctx, int l, const Codeword& w);
Codeword phi_inv(const RingContext& ctx, const std::vector<RingElement>& slots);

} // namespace qcorbit

#endif
