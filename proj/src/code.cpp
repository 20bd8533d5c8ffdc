#include "qcorbit/code.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <set>

namespace qcorbit {

namespace {

using BigUint = boost::multiprecision::cpp_int;

BigUint total_words(const ExpandedCode& code) {
    BigUint total = 1;
    for (const auto& c : code.constituents)
        for (std::int64_t i = 0; i < c.K; ++i) total *= code.ctx->q();
    return total;
}

/// The codeword lambda * row, with lambda an element of the constituent
/// field (degree < k) and row the projected generator row (entries in the
/// minimal ideal).
Codeword line_word(const RingContext& ctx, int l, const FqPoly& lambda,
                   const std::vector<RingElement>& proj_row) {
    const std::size_t m = std::size_t(ctx.m());
    Codeword w(m * std::size_t(l), 0);
    RingElement lam = ctx.from_poly(lambda);
    for (int j = 0; j < l; ++j) {
        RingElement slot = ring_mul(ctx, lam, proj_row[std::size_t(j)]);
        for (std::size_t i = 0; i < m; ++i) w[i * std::size_t(l) + std::size_t(j)] = slot.coeffs[i];
    }
    return w;
}

void add_into(const Field& F, Codeword& acc, const Codeword& w) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = F.add(acc[i], w[i]);
}

} // namespace

int nonzero_weight_count(const WeightDistribution& wd) {
    int s = 0;
    for (const auto& [weight, count] : wd.counts)
        if (weight > 0 && count > 0) ++s;
    return s;
}

std::int64_t hamming_weight(const Codeword& w) {
    std::int64_t wt = 0;
    for (elt_t c : w)
        if (c != 0) ++wt;
    return wt;
}

bool ExpandedCode::qualifies_one_generator() const {
    for (const auto& c : constituents)
        if (!c.qualifies_one_generator) return false;
    return true;
}

ExpandedConstituent expand_constituent(const RingContext& ctx, const ConstituentSpec& spec,
                                       int l) {
    if (spec.rows.empty()) throw InvalidInput("constituent must have at least one row");
    for (const auto& row : spec.rows) {
        if (int(row.size()) != l) throw InvalidInput("row length must equal the index l");
        for (const auto& entry : row)
            if (entry.kind == RowEntry::Explicit && poly_degree(entry.poly) >= ctx.m())
                throw InvalidInput("explicit polynomial must have degree < m");
    }

    ExpandedConstituent out;
    out.coset = ctx.coset_containing(spec.coset_rep); // range-checks the representative
    out.i_user = spec.coset_rep;
    out.k = out.coset.size();
    std::size_t t = ctx.coset_index_of(out.coset.rep);
    out.eps = ctx.idempotent(t);
    out.h = ctx.minimal_polynomial(t);
    out.gen = ctx.generator_polynomial(t);

    // project rows into the minimal ideal
    std::vector<std::vector<RingElement>> projected;
    for (const auto& row : spec.rows) {
        std::vector<RingElement> pr;
        pr.reserve(row.size());
        for (const auto& entry : row) {
            switch (entry.kind) {
                case RowEntry::Zero: pr.push_back(ctx.zero_element()); break;
                case RowEntry::Gen: pr.push_back(out.gen); break;
                case RowEntry::Explicit:
                    pr.push_back(ring_mul(ctx, out.eps, ctx.from_poly(entry.poly)));
                    break;
            }
        }
        projected.push_back(std::move(pr));
    }

    // one-generator shape: a single row whose nonzero entries are all the
    // same ideal element
    if (spec.rows.size() == 1) {
        const RingElement* f = nullptr;
        bool uniform = true;
        for (const auto& re : projected[0]) {
            if (re.is_zero()) continue;
            if (f == nullptr)
                f = &re;
            else if (!(*f == re))
                uniform = false;
        }
        out.qualifies_one_generator = uniform && f != nullptr;
    }

    // row rank over the constituent field
    ConstituentField cf(ctx.fq(), out.h);
    std::vector<std::vector<FqPoly>> work;
    for (const auto& pr : projected) {
        std::vector<FqPoly> row;
        row.reserve(pr.size());
        for (const auto& re : pr) row.push_back(to_constituent_field(ctx, re, out.coset));
        work.push_back(std::move(row));
    }
    std::vector<std::vector<FqPoly>> echelon;
    for (auto& row : work) {
        for (const auto& piv : echelon) {
            int col = -1;
            for (std::size_t j = 0; j < piv.size(); ++j)
                if (!cf.is_zero(piv[j])) {
                    col = int(j);
                    break;
                }
            if (col >= 0 && !cf.is_zero(row[std::size_t(col)])) {
                FqPoly factor = row[std::size_t(col)];
                for (std::size_t j = 0; j < row.size(); ++j)
                    row[j] = cf.sub(row[j], cf.mul(factor, piv[std::size_t(j)]));
            }
        }
        int lead = -1;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!cf.is_zero(row[j])) {
                lead = int(j);
                break;
            }
        if (lead >= 0) {
            FqPoly inv = cf.inv(row[std::size_t(lead)]);
            for (std::size_t j = 0; j < row.size(); ++j) row[j] = cf.mul(row[j], inv);
            echelon.push_back(std::move(row));
        }
    }
    std::sort(echelon.begin(), echelon.end(), [&](const auto& a, const auto& b) {
        auto lead = [&](const std::vector<FqPoly>& r) {
            for (std::size_t j = 0; j < r.size(); ++j)
                if (!cf.is_zero(r[j])) return j;
            return r.size();
        };
        return lead(a) < lead(b);
    });
    out.reduced_rows = std::move(echelon);
    out.rank = int(out.reduced_rows.size());
    out.K = std::int64_t(out.rank) * out.k;
    out.degenerate = out.rank == 0;
    if (out.degenerate) out.qualifies_one_generator = false;
    return out;
}

ExpandedCode expand(const RingContext& ctx, const QccSpec& spec) {
    if (spec.q != ctx.q() || spec.m != ctx.m())
        throw InvalidInput("spec parameters do not match the ring context");
    if (spec.l < 2) throw InvalidInput("index l must be at least 2");

    ExpandedCode code;
    code.ctx = &ctx;
    code.l = spec.l;
    std::set<std::int64_t> seen_cosets;
    for (const auto& cs : spec.constituents) {
        ExpandedConstituent ec = expand_constituent(ctx, cs, spec.l);
        if (!seen_cosets.insert(ec.coset.rep).second)
            throw InvalidInput("constituents must use pairwise distinct cosets");
        code.K += ec.K;
        code.constituents.push_back(std::move(ec));
    }

    for (const auto& c : code.constituents) {
        for (const auto& row : c.reduced_rows) {
            std::vector<RingElement> proj_row;
            proj_row.reserve(row.size());
            for (const auto& u : row) proj_row.push_back(from_constituent_field(ctx, u, c.coset));
            for (std::int64_t u = 0; u < c.k; ++u) {
                FqPoly mono(std::size_t(u) + 1, 0);
                mono[std::size_t(u)] = 1;
                code.basis.push_back(line_word(ctx, spec.l, mono, proj_row));
            }
        }
    }
    return code;
}

std::string codeword_count_str(const ExpandedCode& code) {
    return total_words(code).str();
}

void for_each_codeword(const ExpandedCode& code, std::uint64_t limit,
                       const std::function<void(const Codeword&)>& fn) {
    BigUint total = total_words(code);
    if (total > limit)
        throw EnumerationLimit("codeword count q^K = " + total.str() +
                                   " exceeds the enumeration limit " + std::to_string(limit),
                               total.str());

    const RingContext& ctx = *code.ctx;
    const std::size_t n = std::size_t(code.n());

    // per reduced row, precompute the word for every multiplier in the
    // constituent field
    struct Level {
        std::vector<Codeword> words; // indexed by the field-element index
    };
    std::vector<Level> levels;
    for (const auto& c : code.constituents) {
        ConstituentField cf(ctx.fq(), c.h);
        for (const auto& row : c.reduced_rows) {
            std::vector<RingElement> proj_row;
            proj_row.reserve(row.size());
            for (const auto& u : row) proj_row.push_back(from_constituent_field(ctx, u, c.coset));
            Level lv;
            lv.words.reserve(std::size_t(cf.size()));
            for (std::uint64_t idx = 0; idx < cf.size(); ++idx)
                lv.words.push_back(line_word(ctx, code.l, cf.element(idx), proj_row));
            levels.push_back(std::move(lv));
        }
    }

    Codeword acc(n, 0);
    const Field& F = ctx.fq();
    auto rec = [&](auto&& self, std::size_t depth, const Codeword& cur) -> void {
        if (depth == levels.size()) {
            fn(cur);
            return;
        }
        for (const Codeword& w : levels[depth].words) {
            Codeword next = cur;
            add_into(F, next, w);
            self(self, depth + 1, next);
        }
    };
    rec(rec, 0, acc);
}

std::vector<Codeword> enumerate_codewords(const ExpandedCode& code, std::uint64_t limit) {
    std::vector<Codeword> out;
    for_each_codeword(code, limit, [&](const Codeword& w) { out.push_back(w); });
    return out;
}

WeightDistribution weight_distribution(const ExpandedCode& code, std::uint64_t limit) {
    WeightDistribution wd;
    for_each_codeword(code, limit, [&](const Codeword& w) { ++wd.counts[hamming_weight(w)]; });
    return wd;
}

std::vector<RingElement> phi(const RingContext& ctx, int l, const Codeword& w) {
    const std::size_t m = std::size_t(ctx.m());
    if (w.size() != m * std::size_t(l)) throw InvalidInput("codeword has wrong length");
    std::vector<RingElement> slots(std::size_t(l), ctx.zero_element());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < std::size_t(l); ++j)
            slots[j].coeffs[i] = w[i * std::size_t(l) + j];
    return slots;
}

Codeword phi_inv(const RingContext& ctx, const std::vector<RingElement>& slots) {
    const std::size_t m = std::size_t(ctx.m());
    const std::size_t l = slots.size();
    if (l == 0) throw InvalidInput("phi_inv needs at least one slot");
    for (const auto& s : slots)
        if (s.coeffs.size() != m) throw InvalidInput("slot has wrong length");
    Codeword w(m * l, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < l; ++j) w[i * l + j] = slots[j].coeffs[i];
    return w;
}

} // namespace qcorbit
