#include <doctest.h>

#include <algorithm>
#include <random>

#include "qcorbit/ring.hpp"

using namespace qcorbit;

namespace {

RingElement random_element(const RingContext& ctx, std::mt19937_64& rng) {
    RingElement a = ctx.zero_element();
    std::uniform_int_distribution<elt_t> dist(0, elt_t(ctx.q() - 1));
    for (auto& c : a.coeffs) c = dist(rng);
    return a;
}

} // namespace

TEST_CASE("quotient-ring arithmetic") {
    RingContext ctx(2, 9);
    // x^{m-1} * x == 1
    CHECK(ring_mul(ctx, ctx.monomial(8), ctx.monomial(1)) == ctx.one_element());

    std::mt19937_64 rng(11);
    RingElement a = random_element(ctx, rng);
    CHECK(ring_mul(ctx, a, ctx.one_element()) == a);

    // oracle: g = (x^9-1)/(x^2+x+1) computed by long division, then
    // (x^2+x+1) * g must be x^9-1 = 0 in the ring
    FqPoly xm1(10, 0);
    xm1[0] = 1;
    xm1[9] = 1; // -1 = 1 over F_2
    FqPoly h{1, 1, 1};
    auto [g, rem] = poly_divmod(ctx.fq(), xm1, h);
    CHECK(poly_is_zero(rem));
    RingElement prod = ring_mul(ctx, ctx.from_poly(h), ctx.from_poly(g));
    CHECK(prod.is_zero());

    RingContext other(2, 15);
    CHECK_THROWS_AS(ring_add(ctx, a, other.zero_element()), InvalidInput);
}

TEST_CASE("transform basics") {
    RingContext ctx(2, 9);
    Spectrum ones = dft(ctx, ctx.one_element());
    for (elt_t v : ones) CHECK(v == ctx.big().one());

    Spectrum sx = dft(ctx, ctx.monomial(1));
    for (std::int64_t i = 0; i < ctx.m(); ++i) CHECK(sx[std::size_t(i)] == ctx.zeta_pow(i));
}

TEST_CASE("transform round-trip on random elements") {
    for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::int64_t>>{
             {2, 9}, {2, 15}, {3, 26}, {5, 39}}) {
        RingContext ctx(q, m);
        std::mt19937_64 rng(q * 100 + std::uint64_t(m));
        for (int trial = 0; trial < 100; ++trial) {
            RingElement a = random_element(ctx, rng);
            Spectrum s = dft(ctx, a);
            // conjugacy: s[(q*i) mod m] == s[i]^q
            for (std::int64_t i = 0; i < m; ++i)
                CHECK(s[std::size_t(std::int64_t(q) * i % m)] ==
                      ctx.big().pow(s[std::size_t(i)], std::int64_t(q)));
            CHECK(idft(ctx, s) == a);
        }
    }
}

TEST_CASE("idft rejects spectra outside the base field") {
    RingContext ctx(2, 9);
    Spectrum s(9, 0);
    s[1] = ctx.big().one(); // not conjugacy-closed: s[2] would need to be 1 too
    CHECK_THROWS_AS(idft(ctx, s), DomainError);
}

TEST_CASE("idempotents for m=3 over F_2") {
    RingContext ctx(2, 3);
    RingElement e0 = primitive_idempotent(ctx, coset_of(2, 3, 0));
    CHECK(e0.coeffs == std::vector<elt_t>{1, 1, 1});
    RingElement e1 = primitive_idempotent(ctx, coset_of(2, 3, 1));
    CHECK(e1.coeffs == std::vector<elt_t>{0, 1, 1});

    RingElement sum = ring_add(ctx, e0, e1);
    CHECK(sum == ctx.one_element());
}

TEST_CASE("idempotent algebra across the example parameter sets") {
    for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::int64_t>>{
             {2, 9}, {2, 15}, {3, 26}, {4, 11}, {5, 39}}) {
        RingContext ctx(q, m);
        RingElement sum = ctx.zero_element();
        for (std::size_t s = 0; s < ctx.cosets().size(); ++s) {
            const RingElement& es = ctx.idempotent(s);
            CHECK(ring_mul(ctx, es, es) == es);
            for (std::size_t t = s + 1; t < ctx.cosets().size(); ++t)
                CHECK(ring_mul(ctx, es, ctx.idempotent(t)).is_zero());
            sum = ring_add(ctx, sum, es);
        }
        CHECK(sum == ctx.one_element());
    }
}

TEST_CASE("multiplication by x^r scales the spectrum by zeta^{ir}") {
    RingContext ctx(3, 26);
    for (std::size_t t = 0; t < ctx.cosets().size(); ++t) {
        const RingElement& eps = ctx.idempotent(t);
        Spectrum before = dft(ctx, eps);
        for (std::int64_t r : {1, 2, 7}) {
            Spectrum after = dft(ctx, ring_mul(ctx, ctx.monomial(r), eps));
            for (std::int64_t i = 0; i < ctx.m(); ++i)
                CHECK(after[std::size_t(i)] ==
                      ctx.big().mul(ctx.zeta_pow(i * r), before[std::size_t(i)]));
        }
    }
}

TEST_CASE("idempotent weight profiles are independent of the root of unity") {
    for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::int64_t>>{
             {2, 15}, {3, 26}, {4, 11}}) {
        RingContext a(q, m, 1);
        RingContext b(q, m, 2);
        // the labeling of cosets may permute, the multiset of weight
        // profiles may not
        auto profile = [](const RingContext& ctx) {
            std::vector<std::int64_t> weights;
            for (std::size_t t = 0; t < ctx.cosets().size(); ++t) {
                std::int64_t w = 0;
                for (elt_t c : ctx.idempotent(t).coeffs)
                    if (c != 0) ++w;
                weights.push_back(w);
            }
            std::sort(weights.begin(), weights.end());
            return weights;
        };
        CHECK(profile(a) == profile(b));
    }
}

TEST_CASE("minimal polynomials") {
    RingContext ctx(2, 9);
    CHECK(minimal_poly(ctx, coset_of(2, 9, 3)) == FqPoly{1, 1, 1});
    CHECK(minimal_poly(ctx, coset_of(2, 9, 0)) == FqPoly{1, 1}); // x - 1 over F_2

    RingContext ctx15(2, 15);
    CHECK(minimal_poly(ctx15, coset_of(2, 15, 0)) == FqPoly{1, 1});

    // over F_3 the coset {0} gives x - 1 = x + 2
    RingContext ctx3(3, 26);
    CHECK(minimal_poly(ctx3, coset_of(3, 26, 0)) == FqPoly{2, 1});
}

TEST_CASE("minimal polynomials divide x^m - 1 and have degree k") {
    for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::int64_t>>{
             {2, 9}, {3, 26}, {4, 11}, {9, 91}}) {
        RingContext ctx(q, m);
        FqPoly xm1(std::size_t(m) + 1, 0);
        xm1[0] = ctx.fq().neg(1);
        xm1[std::size_t(m)] = 1;
        for (std::size_t t = 0; t < ctx.cosets().size(); ++t) {
            const FqPoly& h = ctx.minimal_polynomial(t);
            CHECK(poly_degree(h) == int(ctx.cosets()[t].size()));
            CHECK(h.back() == 1);
            CHECK(poly_is_zero(poly_mod(ctx.fq(), xm1, h)));
        }
    }
}

TEST_CASE("generator polynomials") {
    RingContext ctx(2, 9);
    RingElement g = generator_poly(ctx, coset_of(2, 9, 3));
    CHECK(poly_trim(g.coeffs) == FqPoly{1, 1, 0, 1, 1, 0, 1, 1});

    RingElement g0 = generator_poly(ctx, coset_of(2, 9, 0));
    CHECK(g0.coeffs == std::vector<elt_t>(9, 1));

    RingContext ctx15(2, 15);
    CHECK(generator_poly(ctx15, coset_of(2, 15, 0)).coeffs == std::vector<elt_t>(15, 1));

    // g * eps == g and g generates the ideal
    for (std::size_t t = 0; t < ctx.cosets().size(); ++t) {
        const RingElement& gt = ctx.generator_polynomial(t);
        CHECK(ring_mul(ctx, gt, ctx.idempotent(t)) == gt);
    }
}

TEST_CASE("constituent-field isomorphism") {
    RingContext ctx(2, 9);
    CyclotomicCoset c = coset_of(2, 9, 3);
    std::size_t t = ctx.coset_index_of(3);
    const RingElement& eps = ctx.idempotent(t);

    CHECK(to_constituent_field(ctx, eps, c) == FqPoly{1});
    CHECK(to_constituent_field(ctx, ctx.zero_element(), c) == FqPoly{});
    CHECK(from_constituent_field(ctx, FqPoly{}, c) == ctx.zero_element());

    // round-trip over all q^k = 4 ideal elements, and homomorphism checks
    ConstituentField cf(ctx.fq(), ctx.minimal_polynomial(t));
    REQUIRE(cf.size() == 4);
    for (std::uint64_t i = 0; i < cf.size(); ++i) {
        FqPoly u = cf.element(i);
        RingElement lifted = from_constituent_field(ctx, u, c);
        CHECK(to_constituent_field(ctx, lifted, c) == u);
        for (std::uint64_t j = 0; j < cf.size(); ++j) {
            FqPoly v = cf.element(j);
            RingElement lv = from_constituent_field(ctx, v, c);
            CHECK(from_constituent_field(ctx, cf.mul(u, v), c) == ring_mul(ctx, lifted, lv));
            CHECK(from_constituent_field(ctx, cf.add(u, v), c) == ring_add(ctx, lifted, lv));
        }
    }

    // membership precondition
    CHECK_THROWS_AS(to_constituent_field(ctx, ctx.one_element(), c), DomainError);
}

TEST_CASE("context rejects invalid parameters") {
    CHECK_THROWS_AS(RingContext(6, 5), InvalidInput);  // q not a prime power
    CHECK_THROWS_AS(RingContext(2, 4), InvalidInput);  // gcd(m, q) != 1
    CHECK_THROWS_AS(RingContext(2, 29), InvalidInput); // splitting field over the cap
}

TEST_CASE("degenerate co-index m=1") {
    RingContext ctx(4, 1);
    CHECK(ctx.m_prime() == 1);
    CHECK(ctx.cosets().size() == 1);
    CHECK(ctx.idempotent(0) == ctx.one_element());
    CHECK(minimal_poly(ctx, ctx.cosets()[0]) == FqPoly{ctx.fq().neg(1), 1});
}
