#include "qcorbit/fields.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace qcorbit {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Coefficient-vector arithmetic over F_p, used while the element tables
// are not available yet (modulus search, primitive-element search).
struct RawCtx {
    std::uint32_t p;
    std::uint32_t d;
    std::vector<std::uint32_t> mod; // d+1 coeffs, monic
    elt_t modmask = 0;              // packed modulus bits, p == 2 only

    std::vector<std::uint32_t> unpack(elt_t v) const {
        std::vector<std::uint32_t> c(d);
        for (std::uint32_t i = 0; i < d; ++i) {
            c[i] = v % p;
            v /= p;
        }
        return c;
    }
    elt_t pack(const std::vector<std::uint32_t>& c) const {
        elt_t v = 0;
        for (std::uint32_t i = d; i-- > 0;) v = v * p + c[i];
        return v;
    }

    elt_t mul(elt_t a, elt_t b) const {
        if (p == 2) {
            // carryless multiply, then reduce by the modulus bit pattern
            std::uint64_t acc = 0;
            for (std::uint32_t i = 0; i < d; ++i)
                if (a >> i & 1) acc ^= std::uint64_t(b) << i;
            for (std::uint32_t k = 2 * d - 1; k >= d && k < 64; --k)
                if (acc >> k & 1) acc ^= std::uint64_t(modmask) << (k - d);
            return elt_t(acc);
        }
        auto ca = unpack(a), cb = unpack(b);
        std::vector<std::uint32_t> prod(2 * d - 1, 0);
        for (std::uint32_t i = 0; i < d; ++i) {
            if (ca[i] == 0) continue;
            for (std::uint32_t j = 0; j < d; ++j)
                prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        }
        for (std::uint32_t k = 2 * d - 2; k >= d && k + 1 != 0; --k) {
            std::uint32_t c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (std::uint32_t j = 0; j < d; ++j)
                prod[k - d + j] = (prod[k - d + j] + (p - mod[j]) % p * c) % p;
        }
        prod.resize(d);
        return pack(prod);
    }

    elt_t pow(elt_t a, std::uint64_t e) const {
        elt_t r = 1, b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
};

// --- dense polynomials over F_p (for irreducibility testing) ---

using PPoly = std::vector<std::uint32_t>; // ascending coefficients

int pdeg(const PPoly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

PPoly ptrim(PPoly f) {
    f.resize(std::size_t(pdeg(f) + 1));
    return f;
}

std::uint32_t p_inv_scalar(std::uint32_t a, std::uint32_t p) {
    // p is prime and small; Fermat
    std::uint32_t r = 1;
    std::uint64_t b = a, e = p - 2;
    while (e) {
        if (e & 1) r = std::uint32_t(r * b % p);
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, std::uint32_t p) {
    int da = pdeg(a), db = pdeg(b), df = pdeg(f);
    if (da < 0 || db < 0) return {};
    PPoly prod(std::size_t(da + db + 1), 0);
    for (int i = 0; i <= da; ++i) {
        if (!a[std::size_t(i)]) continue;
        for (int j = 0; j <= db; ++j)
            prod[std::size_t(i + j)] =
                (prod[std::size_t(i + j)] + a[std::size_t(i)] * b[std::size_t(j)]) % p;
    }
    std::uint32_t lead_inv = p_inv_scalar(f[std::size_t(df)], p);
    for (int k = da + db; k >= df; --k) {
        std::uint32_t c = prod[std::size_t(k)];
        if (!c) continue;
        c = std::uint32_t(std::uint64_t(c) * lead_inv % p);
        for (int j = 0; j <= df; ++j)
            prod[std::size_t(k - df + j)] =
                (prod[std::size_t(k - df + j)] + (p - f[std::size_t(j)]) % p * c) % p;
    }
    prod.resize(std::size_t(df));
    return prod;
}

PPoly ppowmod_x(std::uint64_t e, const PPoly& f, std::uint32_t p) {
    // x^e mod f
    PPoly r{1}, b{0, 1};
    r.resize(std::size_t(pdeg(f)), 0);
    b.resize(std::size_t(std::max(pdeg(f), 2)), 0);
    while (e) {
        if (e & 1) r = pmulmod(r, b, f, p);
        b = pmulmod(b, b, f, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, std::uint32_t p) {
    a = ptrim(std::move(a));
    b = ptrim(std::move(b));
    while (pdeg(b) >= 0) {
        // a mod b
        int db = pdeg(b);
        std::uint32_t lead_inv = p_inv_scalar(b[std::size_t(db)], p);
        while (pdeg(a) >= db) {
            int da = pdeg(a);
            std::uint32_t c = std::uint32_t(std::uint64_t(a[std::size_t(da)]) * lead_inv % p);
            for (int j = 0; j <= db; ++j)
                a[std::size_t(da - db + j)] =
                    (a[std::size_t(da - db + j)] + (p - b[std::size_t(j)]) % p * c) % p;
        }
        a = ptrim(std::move(a));
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const PPoly& f, std::uint32_t p, std::uint32_t d) {
    if (d == 1) return true;
    std::uint64_t pd = 1;
    for (std::uint32_t i = 0; i < d; ++i) pd *= p;
    // x^(p^d) == x mod f
    PPoly xq = ppowmod_x(pd, f, p);
    PPoly x{0, 1};
    x.resize(std::size_t(d), 0);
    if (ptrim(xq) != ptrim(x)) return false;
    // gcd(x^(p^(d/r)) - x, f) == 1 for every prime r | d
    for (std::uint64_t r : prime_factors(d)) {
        std::uint64_t e = 1;
        for (std::uint32_t i = 0; i < d / r; ++i) e *= p;
        PPoly g = ppowmod_x(e, f, p);
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        PPoly gg = pgcd(std::move(g), f, p);
        if (pdeg(gg) != 0) return false;
    }
    return true;
}

} // namespace

Field Field::build(std::uint32_t p, std::uint32_t d) {
    if (!is_prime(p)) throw InvalidInput("field characteristic must be prime");
    if (d < 1 || d > 24) throw InvalidInput("extension degree out of range");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        q *= p;
        if (q > kMaxSize) throw InvalidInput("field size p^d exceeds the 2^20 cap");
    }
    // scan monic candidates in ascending canonical order (coefficient
    // lists compared low index first) for the smallest irreducible
    for (std::uint64_t key = 0; key < q; ++key) {
        PPoly mod(d + 1, 0);
        mod[d] = 1;
        // key encodes [mod_0 .. mod_{d-1}] with index 0 most significant
        std::uint64_t k = key;
        for (std::uint32_t i = d; i-- > 0;) {
            mod[i] = std::uint32_t(k % p);
            k /= p;
        }
        if (is_irreducible(mod, p, d)) {
            Field f;
            f.spec_ = FieldSpec{p, d, std::vector<std::uint32_t>(mod.begin(), mod.end())};
            f.q_ = q;
            f.init_tables();
            return f;
        }
    }
    throw InternalError("no irreducible modulus found");
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw InvalidInput("field characteristic must be prime");
    if (modulus.size() < 2) throw InvalidInput("modulus must have degree >= 1");
    std::uint32_t d = std::uint32_t(modulus.size() - 1);
    if (modulus[d] != 1) throw InvalidInput("modulus must be monic");
    for (std::uint32_t c : modulus)
        if (c >= p) throw InvalidInput("modulus coefficient out of range");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        q *= p;
        if (q > kMaxSize) throw InvalidInput("field size p^d exceeds the 2^20 cap");
    }
    if (!is_irreducible(modulus, p, d)) throw InvalidInput("modulus is reducible");
    Field f;
    f.spec_ = FieldSpec{p, d, std::move(modulus)};
    f.q_ = q;
    f.init_tables();
    return f;
}

void Field::init_tables() {
    const std::uint32_t p = spec_.p, d = spec_.d;
    RawCtx raw{p, d, spec_.modulus, 0};
    if (p == 2) {
        for (std::uint32_t i = 0; i <= d; ++i)
            if (spec_.modulus[i]) raw.modmask |= elt_t(1) << i;
    }

    q1_prime_factors_ = prime_factors(q_ - 1);

    // first primitive element in canonical order
    primitive_ = 0;
    for (std::uint64_t key = 0; key < q_; ++key) {
        elt_t cand = from_ord_key(key);
        if (cand == 0) continue;
        bool ok = true;
        for (std::uint64_t r : q1_prime_factors_)
            if (raw.pow(cand, (q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            primitive_ = cand;
            break;
        }
    }
    if (primitive_ == 0) throw InternalError("no primitive element found");

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    elt_t cur = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = std::uint32_t(i);
        cur = raw.mul(cur, primitive_);
    }
    if (cur != 1) throw InternalError("primitive element order mismatch");

    if (p != 2 && q_ <= 2048) {
        add_table_.resize(q_ * q_);
        for (elt_t a = 0; a < q_; ++a) {
            auto ca = raw.unpack(a);
            for (elt_t b = 0; b <= a; ++b) {
                auto cb = raw.unpack(b);
                std::vector<std::uint32_t> cs(d);
                for (std::uint32_t i = 0; i < d; ++i) cs[i] = (ca[i] + cb[i]) % p;
                elt_t s = raw.pack(cs);
                add_table_[a * q_ + b] = s;
                add_table_[b * q_ + a] = s;
            }
        }
    }
}

elt_t Field::generator() const {
    // residue of y; for d == 1 the modulus is x, so the root is 0
    return spec_.d == 1 ? elt_t(0) : elt_t(spec_.p);
}

elt_t Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != spec_.d) throw InvalidInput("coefficient list has wrong length");
    elt_t v = 0;
    for (std::uint32_t i = spec_.d; i-- > 0;) {
        if (coeffs[i] >= spec_.p) throw InvalidInput("coefficient out of range");
        v = elt_t(v * spec_.p + coeffs[i]);
    }
    return v;
}

std::vector<std::uint32_t> Field::coeffs(elt_t a) const {
    std::vector<std::uint32_t> c(spec_.d);
    for (std::uint32_t i = 0; i < spec_.d; ++i) {
        c[i] = a % spec_.p;
        a /= spec_.p;
    }
    return c;
}

elt_t Field::from_int(std::int64_t n) const {
    std::int64_t r = n % std::int64_t(spec_.p);
    if (r < 0) r += spec_.p;
    return elt_t(r);
}

elt_t Field::add(elt_t a, elt_t b) const {
    if (spec_.p == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    elt_t v = 0;
    std::uint64_t w = 1;
    for (std::uint32_t i = 0; i < spec_.d; ++i) {
        v += elt_t((a % spec_.p + b % spec_.p) % spec_.p * w);
        a /= spec_.p;
        b /= spec_.p;
        w *= spec_.p;
    }
    return v;
}

elt_t Field::neg(elt_t a) const {
    if (spec_.p == 2) return a;
    elt_t v = 0;
    std::uint64_t w = 1;
    for (std::uint32_t i = 0; i < spec_.d; ++i) {
        v += elt_t((spec_.p - a % spec_.p) % spec_.p * w);
        a /= spec_.p;
        w *= spec_.p;
    }
    return v;
}

elt_t Field::sub(elt_t a, elt_t b) const {
    return add(a, neg(b));
}

elt_t Field::mul(elt_t a, elt_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
}

elt_t Field::inv(elt_t a) const {
    if (a == 0) throw DomainError("division by zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

elt_t Field::div(elt_t a, elt_t b) const {
    if (b == 0) throw DomainError("division by zero");
    if (a == 0) return 0;
    std::uint64_t e = (std::uint64_t(log_[a]) + (q_ - 1) - log_[b]) % (q_ - 1);
    return exp_[e];
}

elt_t Field::pow(elt_t a, std::int64_t e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw DomainError("zero raised to a negative power");
    }
    std::int64_t order = std::int64_t(q_ - 1);
    std::int64_t r = e % order;
    if (r < 0) r += order;
    return exp_[(std::uint64_t(log_[a]) * std::uint64_t(r)) % std::uint64_t(order)];
}

std::uint64_t Field::element_order(elt_t a) const {
    if (a == 0) throw DomainError("order of zero is undefined");
    std::uint64_t e = log_[a];
    return (q_ - 1) / std::gcd(q_ - 1, e);
}

std::uint64_t Field::log(elt_t a) const {
    if (a == 0) throw DomainError("log of zero is undefined");
    return log_[a];
}

std::uint64_t Field::ord_key(elt_t a) const {
    std::uint64_t key = 0;
    for (std::uint32_t i = 0; i < spec_.d; ++i) {
        key = key * spec_.p + a % spec_.p;
        a /= spec_.p;
    }
    return key;
}

elt_t Field::from_ord_key(std::uint64_t key) const {
    // least-significant digit of key is the highest-index coefficient
    elt_t v = 0;
    for (std::uint32_t i = 0; i < spec_.d; ++i) {
        std::uint64_t w = 1;
        for (std::uint32_t j = 0; j + 1 + i < spec_.d; ++j) w *= spec_.p;
        v += elt_t(key % spec_.p * w);
        key /= spec_.p;
    }
    return v;
}

elt_t Field::primitive_element(unsigned index) const {
    if (index < 1) throw InvalidInput("primitive-element index is 1-based");
    unsigned seen = 0;
    for (std::uint64_t key = 0; key < q_; ++key) {
        elt_t cand = from_ord_key(key);
        if (cand == 0) continue;
        if (element_order(cand) == q_ - 1) {
            if (++seen == index) return cand;
        }
    }
    throw InvalidInput("field has fewer primitive elements than requested");
}

elt_t Field::root_of_unity(std::uint64_t m, elt_t omega) const {
    if (m == 0 || (q_ - 1) % m != 0)
        throw InvalidInput("m does not divide the multiplicative group order");
    return pow(omega, std::int64_t((q_ - 1) / m));
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    if (a.field == nullptr || b.field == nullptr)
        throw InvalidInput("element is not attached to a field");
    if (!(a.field->spec() == b.field->spec()))
        throw InvalidInput("elements belong to different fields");
    const Field& f = *a.field;
    switch (op) {
        case ArithOp::Add: return {a.field, f.add(a.v, b.v)};
        case ArithOp::Sub: return {a.field, f.sub(a.v, b.v)};
        case ArithOp::Mul: return {a.field, f.mul(a.v, b.v)};
        case ArithOp::Div: return {a.field, f.div(a.v, b.v)};
    }
    throw InvalidInput("unknown arithmetic op");
}

std::shared_ptr<const Field> build_field(std::uint32_t p, std::uint32_t d) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const Field>(Field::build(p, d));
    cache.emplace(key, f);
    return f;
}

Embedding::Embedding(std::shared_ptr<const Field> sub, std::shared_ptr<const Field> sup)
    : sub_(std::move(sub)), sup_(std::move(sup)) {
    if (sub_->p() != sup_->p()) throw InvalidInput("embedding requires equal characteristic");
    if (sup_->degree() % sub_->degree() != 0)
        throw InvalidInput("subfield degree must divide the big-field degree");

    const std::uint32_t d_sub = sub_->degree();
    if (sub_->spec() == sup_->spec()) {
        image_ = d_sub == 1 ? sup_->zero() : elt_t(sup_->p());
        fwd_.resize(sub_->size());
        for (elt_t a = 0; a < sub_->size(); ++a) fwd_[a] = a;
    } else {
        // first root of the subfield modulus, canonical order
        const auto& mod = sub_->spec().modulus;
        bool found = false;
        for (std::uint64_t key = 0; key < sup_->size() && !found; ++key) {
            elt_t cand = sup_->from_ord_key(key);
            elt_t acc = 0;
            for (std::uint32_t i = d_sub + 1; i-- > 0;) {
                acc = sup_->mul(acc, cand);
                acc = sup_->add(acc, sup_->from_int(std::int64_t(mod[i])));
            }
            if (acc == 0) {
                image_ = cand;
                found = true;
            }
        }
        if (!found) throw InternalError("subfield modulus has no root in the big field");
        fwd_.resize(sub_->size());
        for (elt_t a = 0; a < sub_->size(); ++a) {
            auto c = sub_->coeffs(a);
            elt_t acc = 0;
            for (std::uint32_t i = d_sub; i-- > 0;) {
                acc = sup_->mul(acc, image_);
                acc = sup_->add(acc, sup_->from_int(std::int64_t(c[i])));
            }
            fwd_[a] = acc;
        }
    }
    back_.reserve(fwd_.size() * 2);
    for (elt_t a = 0; a < fwd_.size(); ++a) back_.emplace(fwd_[a], a);
}

std::optional<elt_t> Embedding::back(elt_t a) const {
    auto it = back_.find(a);
    if (it == back_.end()) return std::nullopt;
    return it->second;
}

} // namespace qcorbit
