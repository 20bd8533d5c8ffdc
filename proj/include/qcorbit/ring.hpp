#ifndef QCORBIT_RING_HPP
#define QCORBIT_RING_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "qcorbit/fields.hpp"
#include "qcorbit/fqpoly.hpp"
#include "qcorbit/numth.hpp"

namespace qcorbit {

/// Element of R_m = F_q[x]/(x^m - 1): exactly m coefficients, ascending.
struct RingElement {
    std::vector<elt_t> coeffs;

    bool operator==(const RingElement&) const = default;
    bool is_zero() const {
        for (elt_t c : coeffs)
            if (c != 0) return false;
        return true;
    }
};

/// Evaluations of a ring element at zeta^0 .. zeta^{m-1}, as big-field
/// values. Images of F_q-polynomials are exactly the spectra satisfying
/// s[(q*i) mod m] == s[i]^q for all i.
using Spectrum = std::vector<elt_t>;

/// Shared read-only context for one (q, m) pair: the coefficient field
/// F_q with q = p^e, the splitting field F_{q^{m'}}, the embedding
/// between them, a fixed primitive m-th root of unity, and the
/// cyclotomic-coset structure with per-coset idempotents and
/// generator/minimal polynomials. Construct once, share freely.
///
/// omega_index selects the primitive element of the splitting field the
/// root of unity is derived from (1 = first in canonical order). All
/// downstream weight and orbit statistics are independent of it.
class RingContext {
public:
    RingContext(std::uint64_t q, std::int64_t m, unsigned omega_index = 1);

    RingContext(const RingContext&) = delete;
    RingContext& operator=(const RingContext&) = delete;

    std::uint64_t q() const { return q_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::int64_t m() const { return m_; }
    std::int64_t m_prime() const { return m_prime_; }
    unsigned omega_index() const { return omega_index_; }

    const Field& fq() const { return *fq_; }
    const Field& big() const { return *big_; }
    const Embedding& emb() const { return emb_; }

    elt_t omega() const { return omega_; }
    elt_t zeta() const { return zeta_pow_[1 % std::size_t(m_)]; }
    /// zeta^e with e taken mod m (negative exponents allowed).
    elt_t zeta_pow(std::int64_t e) const {
        e %= m_;
        if (e < 0) e += m_;
        return zeta_pow_[std::size_t(e)];
    }
    elt_t inv_m() const { return inv_m_; }

    const std::vector<CyclotomicCoset>& cosets() const { return cosets_; }
    std::size_t coset_index_of(std::int64_t i) const;
    const CyclotomicCoset& coset_containing(std::int64_t i) const {
        return cosets_[coset_index_of(i)];
    }

    /// Cached per-coset structures, indexed like cosets().
    const RingElement& idempotent(std::size_t t) const { return idempotents_[t]; }
    const FqPoly& minimal_polynomial(std::size_t t) const { return min_polys_[t]; }
    const RingElement& generator_polynomial(std::size_t t) const { return gen_polys_[t]; }

    RingElement zero_element() const;
    RingElement one_element() const;
    /// x^i as a ring element.
    RingElement monomial(std::int64_t i) const;
    RingElement from_poly(const FqPoly& f) const;

private:
    std::uint64_t q_;
    std::uint32_t p_ = 0, e_ = 0;
    std::int64_t m_, m_prime_;
    unsigned omega_index_;
    std::shared_ptr<const Field> fq_;
    std::shared_ptr<const Field> big_;
    Embedding emb_;
    elt_t omega_ = 0;
    std::vector<elt_t> zeta_pow_;
    elt_t inv_m_ = 0;
    std::vector<CyclotomicCoset> cosets_;
    std::vector<std::size_t> coset_index_;   // member -> coset index
    std::vector<RingElement> idempotents_;
    std::vector<FqPoly> min_polys_;
    std::vector<RingElement> gen_polys_;
};

RingElement ring_add(const RingContext& ctx, const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingContext& ctx, const RingElement& a, const RingElement& b);

/// Evaluation at the powers of zeta.
Spectrum dft(const RingContext& ctx, const RingElement& a);

/// Inverse transform. Fails with a domain error when the spectrum is not
/// the image of an F_q-polynomial (coefficients would leave F_q).
RingElement idft(const RingContext& ctx, const Spectrum& s);

/// The idempotent generating the minimal ideal of the given coset:
/// spectrum 1 on the coset, 0 elsewhere. Coefficients are in F_q.
RingElement primitive_idempotent(const RingContext& ctx, const CyclotomicCoset& coset);

/// Monic product of (x - zeta^r) over the coset, coerced down to F_q.
/// Divides x^m - 1 exactly.
FqPoly minimal_poly(const RingContext& ctx, const CyclotomicCoset& coset);

/// (x^m - 1) / minimal_poly(coset); generates the same minimal ideal.
RingElement generator_poly(const RingContext& ctx, const CyclotomicCoset& coset);

/// Isomorphism between the minimal ideal and F_q[x]/(h_t): reduction mod
/// h_t one way, multiplication by the idempotent the other. Both are
/// additive and multiplicative and mutually inverse on the ideal.
/// to_constituent_field requires a * idempotent == a.
FqPoly to_constituent_field(const RingContext& ctx, const RingElement& a,
                            const CyclotomicCoset& coset);
RingElement from_constituent_field(const RingContext& ctx, const FqPoly& u,
                                   const CyclotomicCoset& coset);

/// Arithmetic in the constituent field F_q[x]/(h), elements as FqPoly of
/// degree < deg h.
class ConstituentField {
public:
    ConstituentField(const Field& fq, FqPoly h);

    const Field& base() const { return *fq_; }
    const FqPoly& modulus() const { return h_; }
    int k() const { return k_; }
    std::uint64_t size() const { return size_; }

    FqPoly zero() const { return {}; }
    FqPoly one() const { return {1}; }
    bool is_zero(const FqPoly& a) const { return poly_is_zero(a); }

    FqPoly add(const FqPoly& a, const FqPoly& b) const { return poly_add(*fq_, a, b); }
    FqPoly sub(const FqPoly& a, const FqPoly& b) const { return poly_sub(*fq_, a, b); }
    FqPoly mul(const FqPoly& a, const FqPoly& b) const {
        return poly_mod(*fq_, poly_mul(*fq_, a, b), h_);
    }
    FqPoly inv(const FqPoly& a) const { return poly_inv_mod(*fq_, a, h_); }
    FqPoly reduce(const FqPoly& a) const { return poly_mod(*fq_, a, h_); }

    /// Deterministic enumeration: idx in [0, size) decomposed into base-q
    /// digits, digit i becoming the coefficient of x^i.
    FqPoly element(std::uint64_t idx) const;
    std::uint64_t index_of(const FqPoly& a) const;

private:
    const Field* fq_;
    FqPoly h_;
    int k_;
    std::uint64_t size_;
};

} // namespace qcorbit

#endif
