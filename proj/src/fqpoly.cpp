#include "qcorbit/fqpoly.hpp"

#include <algorithm>

namespace qcorbit {

int poly_degree(const FqPoly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[std::size_t(i)] != 0) return i;
    return -1;
}

FqPoly poly_trim(FqPoly f) {
    f.resize(std::size_t(poly_degree(f) + 1));
    return f;
}

bool poly_is_zero(const FqPoly& f) {
    return poly_degree(f) < 0;
}

FqPoly poly_add(const Field& F, const FqPoly& a, const FqPoly& b) {
    FqPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        elt_t x = i < a.size() ? a[i] : 0;
        elt_t y = i < b.size() ? b[i] : 0;
        out[i] = F.add(x, y);
    }
    return out;
}

FqPoly poly_sub(const Field& F, const FqPoly& a, const FqPoly& b) {
    FqPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        elt_t x = i < a.size() ? a[i] : 0;
        elt_t y = i < b.size() ? b[i] : 0;
        out[i] = F.sub(x, y);
    }
    return out;
}

FqPoly poly_mul(const Field& F, const FqPoly& a, const FqPoly& b) {
    int da = poly_degree(a), db = poly_degree(b);
    if (da < 0 || db < 0) return {};
    FqPoly out(std::size_t(da + db + 1), 0);
    for (int i = 0; i <= da; ++i) {
        elt_t x = a[std::size_t(i)];
        if (x == 0) continue;
        for (int j = 0; j <= db; ++j)
            out[std::size_t(i + j)] = F.add(out[std::size_t(i + j)], F.mul(x, b[std::size_t(j)]));
    }
    return out;
}

FqPoly poly_scale(const Field& F, const FqPoly& a, elt_t c) {
    FqPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], c);
    return out;
}

std::pair<FqPoly, FqPoly> poly_divmod(const Field& F, const FqPoly& num, const FqPoly& den) {
    int dd = poly_degree(den);
    if (dd < 0) throw DomainError("polynomial division by zero");
    FqPoly rem = num;
    int dr = poly_degree(rem);
    if (dr < dd) return {FqPoly{}, poly_trim(std::move(rem))};
    FqPoly quo(std::size_t(dr - dd + 1), 0);
    elt_t lead_inv = F.inv(den[std::size_t(dd)]);
    for (int i = dr; i >= dd; --i) {
        elt_t c = rem[std::size_t(i)];
        if (c == 0) continue;
        c = F.mul(c, lead_inv);
        quo[std::size_t(i - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            rem[std::size_t(i - dd + j)] =
                F.sub(rem[std::size_t(i - dd + j)], F.mul(c, den[std::size_t(j)]));
    }
    return {std::move(quo), poly_trim(std::move(rem))};
}

FqPoly poly_mod(const Field& F, const FqPoly& num, const FqPoly& den) {
    return poly_divmod(F, num, den).second;
}

elt_t poly_eval(const Field& F, const FqPoly& f, elt_t x) {
    elt_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
    return acc;
}

FqPoly poly_gcd(const Field& F, FqPoly a, FqPoly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!poly_is_zero(b)) {
        FqPoly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = poly_degree(a);
    if (d >= 0 && a[std::size_t(d)] != 1) a = poly_scale(F, a, F.inv(a[std::size_t(d)]));
    return poly_trim(std::move(a));
}

FqPoly poly_inv_mod(const Field& F, const FqPoly& a, const FqPoly& mod) {
    // extended Euclid: r0 = mod, r1 = a mod mod
    FqPoly r0 = poly_trim(mod), r1 = poly_mod(F, a, mod);
    FqPoly t0{}, t1{1};
    while (!poly_is_zero(r1)) {
        auto [q, r] = poly_divmod(F, r0, r1);
        FqPoly t2 = poly_sub(F, t0, poly_mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = poly_trim(std::move(t2));
    }
    if (poly_degree(r0) != 0) throw DomainError("element is not invertible modulo the modulus");
    return poly_trim(poly_scale(F, t0, F.inv(r0[0])));
}

} // namespace qcorbit
