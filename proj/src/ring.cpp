#include "qcorbit/ring.hpp"

#include <numeric>

namespace qcorbit {

namespace {

struct PrimePower {
    std::uint32_t p;
    std::uint32_t e;
};

PrimePower factor_prime_power(std::uint64_t q) {
    if (q < 2) throw InvalidInput("q must be a prime power >= 2");
    std::uint64_t p = q;
    for (std::uint64_t f = 2; f * f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    std::uint32_t e = 0;
    std::uint64_t acc = 1;
    while (acc < q) {
        acc *= p;
        ++e;
    }
    if (acc != q) throw InvalidInput("q must be a prime power");
    return {std::uint32_t(p), e};
}

} // namespace

RingContext::RingContext(std::uint64_t q, std::int64_t m, unsigned omega_index)
    : q_(q),
      p_(factor_prime_power(q).p),
      e_(factor_prime_power(q).e),
      m_(m),
      m_prime_(multiplicative_order(std::int64_t(q), m)),
      omega_index_(omega_index),
      fq_(build_field(p_, e_)),
      big_(build_field(p_, e_ * std::uint32_t(m_prime_))),
      emb_(fq_, big_) {
    omega_ = big_->primitive_element(omega_index_);
    elt_t zeta = big_->root_of_unity(std::uint64_t(m_), omega_);
    zeta_pow_.resize(std::size_t(m_));
    elt_t cur = 1;
    for (std::int64_t i = 0; i < m_; ++i) {
        zeta_pow_[std::size_t(i)] = cur;
        cur = big_->mul(cur, zeta);
    }
    if (cur != 1) throw InternalError("zeta is not an m-th root of unity");
    inv_m_ = big_->inv(big_->from_int(m_));

    cosets_ = cyclotomic_cosets(std::int64_t(q_), m_);
    coset_index_.assign(std::size_t(m_), 0);
    for (std::size_t t = 0; t < cosets_.size(); ++t)
        for (std::int64_t member : cosets_[t].members)
            coset_index_[std::size_t(member)] = t;

    idempotents_.reserve(cosets_.size());
    min_polys_.reserve(cosets_.size());
    gen_polys_.reserve(cosets_.size());
    for (const CyclotomicCoset& c : cosets_) {
        idempotents_.push_back(primitive_idempotent(*this, c));
        min_polys_.push_back(minimal_poly(*this, c));
        gen_polys_.push_back(generator_poly(*this, c));
    }
}

std::size_t RingContext::coset_index_of(std::int64_t i) const {
    if (i < 0 || i >= m_) throw InvalidInput("coset representative out of range");
    return coset_index_[std::size_t(i)];
}

RingElement RingContext::zero_element() const {
    return RingElement{std::vector<elt_t>(std::size_t(m_), 0)};
}

RingElement RingContext::one_element() const {
    RingElement a = zero_element();
    a.coeffs[0] = 1;
    return a;
}

RingElement RingContext::monomial(std::int64_t i) const {
    RingElement a = zero_element();
    i %= m_;
    if (i < 0) i += m_;
    a.coeffs[std::size_t(i)] = 1;
    return a;
}

RingElement RingContext::from_poly(const FqPoly& f) const {
    RingElement a = zero_element();
    for (std::size_t i = 0; i < f.size(); ++i)
        a.coeffs[i % std::size_t(m_)] = fq_->add(a.coeffs[i % std::size_t(m_)], f[i]);
    return a;
}

RingElement ring_add(const RingContext& ctx, const RingElement& a, const RingElement& b) {
    if (a.coeffs.size() != std::size_t(ctx.m()) || b.coeffs.size() != std::size_t(ctx.m()))
        throw InvalidInput("ring elements have mismatched shape");
    RingElement out;
    out.coeffs.resize(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        out.coeffs[i] = ctx.fq().add(a.coeffs[i], b.coeffs[i]);
    return out;
}

RingElement ring_mul(const RingContext& ctx, const RingElement& a, const RingElement& b) {
    const std::size_t m = std::size_t(ctx.m());
    if (a.coeffs.size() != m || b.coeffs.size() != m)
        throw InvalidInput("ring elements have mismatched shape");
    const Field& F = ctx.fq();
    RingElement out;
    out.coeffs.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        elt_t x = a.coeffs[i];
        if (x == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (b.coeffs[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= m) k -= m;
            out.coeffs[k] = F.add(out.coeffs[k], F.mul(x, b.coeffs[j]));
        }
    }
    return out;
}

Spectrum dft(const RingContext& ctx, const RingElement& a) {
    const std::int64_t m = ctx.m();
    if (a.coeffs.size() != std::size_t(m)) throw InvalidInput("ring element has wrong length");
    const Field& B = ctx.big();
    std::vector<elt_t> lifted(std::size_t(m), 0);
    for (std::int64_t j = 0; j < m; ++j)
        lifted[std::size_t(j)] = ctx.emb().fwd(a.coeffs[std::size_t(j)]);
    Spectrum out(std::size_t(m), 0);
    for (std::int64_t i = 0; i < m; ++i) {
        elt_t acc = 0;
        for (std::int64_t j = 0; j < m; ++j) {
            if (lifted[std::size_t(j)] == 0) continue;
            acc = B.add(acc, B.mul(lifted[std::size_t(j)], ctx.zeta_pow(i * j)));
        }
        out[std::size_t(i)] = acc;
    }
    return out;
}

RingElement idft(const RingContext& ctx, const Spectrum& s) {
    const std::int64_t m = ctx.m();
    if (s.size() != std::size_t(m)) throw InvalidInput("spectrum has wrong length");
    const Field& B = ctx.big();
    RingElement out;
    out.coeffs.resize(std::size_t(m));
    for (std::int64_t j = 0; j < m; ++j) {
        elt_t acc = 0;
        for (std::int64_t i = 0; i < m; ++i) {
            if (s[std::size_t(i)] == 0) continue;
            acc = B.add(acc, B.mul(s[std::size_t(i)], ctx.zeta_pow(-i * j)));
        }
        acc = B.mul(acc, ctx.inv_m());
        auto down = ctx.emb().back(acc);
        if (!down)
            throw DomainError("spectrum is not the transform of a base-field polynomial");
        out.coeffs[std::size_t(j)] = *down;
    }
    return out;
}

RingElement primitive_idempotent(const RingContext& ctx, const CyclotomicCoset& coset) {
    Spectrum indicator(std::size_t(ctx.m()), 0);
    for (std::int64_t r : coset.members) indicator[std::size_t(r)] = ctx.big().one();
    return idft(ctx, indicator);
}

FqPoly minimal_poly(const RingContext& ctx, const CyclotomicCoset& coset) {
    const Field& B = ctx.big();
    std::vector<elt_t> prod{B.one()};
    for (std::int64_t r : coset.members) {
        elt_t root = ctx.zeta_pow(r);
        std::vector<elt_t> next(prod.size() + 1, 0);
        for (std::size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] = B.add(next[i + 1], prod[i]);
            next[i] = B.add(next[i], B.mul(prod[i], B.neg(root)));
        }
        prod = std::move(next);
    }
    FqPoly out(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i) {
        auto down = ctx.emb().back(prod[i]);
        if (!down) throw InternalError("minimal polynomial has a coefficient outside F_q");
        out[i] = *down;
    }
    return out;
}

RingElement generator_poly(const RingContext& ctx, const CyclotomicCoset& coset) {
    const Field& F = ctx.fq();
    FqPoly h = minimal_poly(ctx, coset);
    FqPoly xm1(std::size_t(ctx.m()) + 1, 0);
    xm1[0] = F.neg(1);
    xm1[std::size_t(ctx.m())] = 1;
    auto [quo, rem] = poly_divmod(F, xm1, h);
    if (!poly_is_zero(rem)) throw InternalError("minimal polynomial does not divide x^m - 1");
    quo.resize(std::size_t(ctx.m()), 0);
    return RingElement{std::move(quo)};
}

FqPoly to_constituent_field(const RingContext& ctx, const RingElement& a,
                            const CyclotomicCoset& coset) {
    std::size_t t = ctx.coset_index_of(coset.rep);
    if (ring_mul(ctx, a, ctx.idempotent(t)) != a)
        throw DomainError("element is not in the minimal ideal of the coset");
    return poly_mod(ctx.fq(), a.coeffs, ctx.minimal_polynomial(t));
}

RingElement from_constituent_field(const RingContext& ctx, const FqPoly& u,
                                   const CyclotomicCoset& coset) {
    std::size_t t = ctx.coset_index_of(coset.rep);
    if (poly_degree(u) >= int(coset.members.size()))
        throw InvalidInput("constituent-field element has degree >= k");
    return ring_mul(ctx, ctx.from_poly(u), ctx.idempotent(t));
}

ConstituentField::ConstituentField(const Field& fq, FqPoly h) : fq_(&fq), h_(poly_trim(std::move(h))) {
    k_ = poly_degree(h_);
    if (k_ < 1) throw InvalidInput("constituent modulus must have degree >= 1");
    size_ = 1;
    for (int i = 0; i < k_; ++i) size_ *= fq.size();
}

FqPoly ConstituentField::element(std::uint64_t idx) const {
    FqPoly out(std::size_t(k_), 0);
    for (int i = 0; i < k_; ++i) {
        out[std::size_t(i)] = elt_t(idx % fq_->size());
        idx /= fq_->size();
    }
    return poly_trim(std::move(out));
}

std::uint64_t ConstituentField::index_of(const FqPoly& a) const {
    std::uint64_t idx = 0;
    for (std::size_t i = std::size_t(k_); i-- > 0;)
        idx = idx * fq_->size() + (i < a.size() ? a[i] : 0);
    return idx;
}

} // namespace qcorbit
