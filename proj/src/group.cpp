#include "qcorbit/group.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace qcorbit {

const char* group_name(GroupKind kind) {
    switch (kind) {
        case GroupKind::Shift: return "shift";
        case GroupKind::ShiftScalar: return "shift-scalar";
        case GroupKind::Full: return "full";
    }
    return "?";
}

GroupAction::GroupAction(const RingContext& ctx, int l) : ctx_(&ctx), l_(l) {
    if (l < 1) throw InvalidInput("index l must be positive");
}

Codeword GroupAction::apply_rho_l(const Codeword& w) const {
    const std::size_t m = std::size_t(ctx_->m());
    const std::size_t l = std::size_t(l_);
    Codeword out(w.size());
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t dest = (i + 1) % m;
        for (std::size_t j = 0; j < l; ++j) out[dest * l + j] = w[i * l + j];
    }
    return out;
}

Codeword GroupAction::apply_sigma(elt_t a, const Codeword& w) const {
    if (a == 0) throw InvalidInput("scalar multiplication requires a nonzero scalar");
    const Field& F = ctx_->fq();
    Codeword out(w.size());
    for (std::size_t p = 0; p < w.size(); ++p) out[p] = F.mul(a, w[p]);
    return out;
}

Codeword GroupAction::apply_mu_q(const Codeword& w) const {
    const std::size_t m = std::size_t(ctx_->m());
    const std::size_t l = std::size_t(l_);
    const std::size_t q = std::size_t(ctx_->q() % std::uint64_t(ctx_->m()));
    Codeword out(w.size());
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t dest = i * q % m;
        for (std::size_t j = 0; j < l; ++j) out[dest * l + j] = w[i * l + j];
    }
    return out;
}

std::vector<std::int32_t> GroupAction::permutation(const GroupElement& g) const {
    const std::int64_t m = ctx_->m();
    const std::int64_t l = l_;
    // q^{r1} mod m
    std::int64_t qr = 1;
    std::int64_t qm = std::int64_t(ctx_->q()) % m;
    for (std::int64_t i = 0; i < g.r1; ++i) qr = qr * qm % m;
    std::vector<std::int32_t> perm(std::size_t(m * l));
    for (std::int64_t i = 0; i < m; ++i) {
        std::int64_t dest = qr * ((i + g.r2) % m) % m;
        for (std::int64_t j = 0; j < l; ++j)
            perm[std::size_t(i * l + j)] = std::int32_t(dest * l + j);
    }
    return perm;
}

Codeword GroupAction::apply(const GroupElement& g, const Codeword& w) const {
    if (g.a == 0) throw InvalidInput("scalar part of a group element must be nonzero");
    std::vector<std::int32_t> perm = permutation(g);
    const Field& F = ctx_->fq();
    Codeword out(w.size());
    for (std::size_t p = 0; p < w.size(); ++p)
        out[std::size_t(perm[p])] = F.mul(g.a, w[p]);
    return out;
}

std::vector<GroupElement> GroupAction::elements(GroupKind kind) const {
    const std::int64_t m = ctx_->m();
    const std::int64_t mp = kind == GroupKind::Full ? ctx_->m_prime() : 1;
    const Field& F = ctx_->fq();
    std::vector<elt_t> scalars;
    if (kind == GroupKind::Shift) {
        scalars = {1};
    } else {
        for (std::uint64_t j = 0; j < F.size() - 1; ++j) scalars.push_back(F.exp(j));
    }
    std::vector<GroupElement> out;
    out.reserve(std::size_t(mp * m) * scalars.size());
    for (std::int64_t r1 = 0; r1 < mp; ++r1)
        for (std::int64_t r2 = 0; r2 < m; ++r2)
            for (elt_t a : scalars) out.push_back(GroupElement{r1, r2, a});
    return out;
}

std::int64_t GroupAction::order(GroupKind kind) const {
    const std::int64_t m = ctx_->m();
    const std::int64_t q1 = std::int64_t(ctx_->fq().size()) - 1;
    switch (kind) {
        case GroupKind::Shift: return m;
        case GroupKind::ShiftScalar: return m * q1;
        case GroupKind::Full: return ctx_->m_prime() * m * q1;
    }
    return 0;
}

std::size_t CodewordHash::operator()(const Codeword& w) const {
    std::size_t h = 1469598103934665603ull;
    for (elt_t c : w) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

CodewordIndex index_codewords(const std::vector<Codeword>& words) {
    CodewordIndex index;
    index.reserve(words.size() * 2);
    for (std::uint32_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    return index;
}

bool verify_closure(const GroupAction& action, const ExpandedCode& code,
                    const CodewordIndex& index, const GroupElement& g) {
    for (const Codeword& b : code.basis)
        if (index.find(action.apply(g, b)) == index.end()) return false;
    return true;
}

OrbitPartition orbit_partition(const GroupAction& action, GroupKind kind,
                               const std::vector<Codeword>& words, const CodewordIndex& index) {
    OrbitPartition part;
    part.orbit_of.assign(words.size(), -2);

    const Field& F = action.ctx().fq();
    std::vector<std::function<Codeword(const Codeword&)>> gens;
    gens.emplace_back([&](const Codeword& w) { return action.apply_rho_l(w); });
    if (kind != GroupKind::Shift && F.size() > 2) {
        elt_t xi = F.primitive_element(1);
        gens.emplace_back([&, xi](const Codeword& w) { return action.apply_sigma(xi, w); });
    }
    if (kind == GroupKind::Full)
        gens.emplace_back([&](const Codeword& w) { return action.apply_mu_q(w); });

    std::int32_t next_orbit = 0;
    std::deque<std::uint32_t> queue;
    for (std::uint32_t start = 0; start < words.size(); ++start) {
        if (part.orbit_of[start] != -2) continue;
        if (hamming_weight(words[start]) == 0) {
            part.orbit_of[start] = -1;
            continue;
        }
        std::int32_t id = next_orbit++;
        part.orbit_of[start] = id;
        queue.push_back(start);
        while (!queue.empty()) {
            std::uint32_t cur = queue.front();
            queue.pop_front();
            for (const auto& gen : gens) {
                Codeword img = gen(words[cur]);
                auto it = index.find(img);
                if (it == index.end())
                    throw GroupNotApplicable("group generator leaves the code; closure not verified");
                if (part.orbit_of[it->second] == -2) {
                    part.orbit_of[it->second] = id;
                    queue.push_back(it->second);
                }
            }
        }
    }
    part.orbit_count = next_orbit;
    return part;
}

std::int64_t burnside_count(const GroupAction& action, GroupKind kind,
                            const std::vector<Codeword>& basis) {
    const Field& F = action.ctx().fq();
    const std::size_t K = basis.size();
    boost::multiprecision::cpp_int fix_sum = 0;
    std::vector<GroupElement> elems = action.elements(kind);
    std::vector<std::vector<elt_t>> cols;
    cols.reserve(K);
    for (const GroupElement& g : elems) {
        std::vector<std::int32_t> perm = action.permutation(g);
        // nullity of (g - id) restricted to the code
        cols.clear();
        std::size_t rank = 0;
        std::vector<int> pivot_row;
        for (const Codeword& b : basis) {
            std::vector<elt_t> col(b.size());
            for (std::size_t p = 0; p < b.size(); ++p)
                col[std::size_t(perm[p])] = F.mul(g.a, b[p]);
            for (std::size_t p = 0; p < b.size(); ++p) col[p] = F.sub(col[p], b[p]);
            // eliminate against existing pivots
            for (std::size_t c = 0; c < cols.size(); ++c) {
                elt_t factor = col[std::size_t(pivot_row[c])];
                if (factor == 0) continue;
                for (std::size_t p = 0; p < col.size(); ++p)
                    col[p] = F.sub(col[p], F.mul(factor, cols[c][p]));
            }
            int lead = -1;
            for (std::size_t p = 0; p < col.size(); ++p)
                if (col[p] != 0) {
                    lead = int(p);
                    break;
                }
            if (lead >= 0) {
                elt_t inv = F.inv(col[std::size_t(lead)]);
                for (std::size_t p = 0; p < col.size(); ++p) col[p] = F.mul(col[p], inv);
                cols.push_back(std::move(col));
                pivot_row.push_back(lead);
                ++rank;
            }
        }
        std::size_t nullity = K - rank;
        boost::multiprecision::cpp_int fixed = 1;
        for (std::size_t i = 0; i < nullity; ++i) fixed *= F.size();
        fix_sum += fixed - 1;
    }
    boost::multiprecision::cpp_int order = action.order(kind);
    if (fix_sum % order != 0)
        throw InternalError("fixed-point sum is not divisible by the group order");
    return std::int64_t(fix_sum / order);
}

bool tightness_check(const std::vector<Codeword>& words, const OrbitPartition& partition) {
    if (words.size() != partition.orbit_of.size())
        throw InvalidInput("partition does not match the word list");
    std::map<std::int64_t, std::set<std::int32_t>> orbits_by_weight;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (partition.orbit_of[i] < 0) continue;
        orbits_by_weight[hamming_weight(words[i])].insert(partition.orbit_of[i]);
    }
    for (const auto& [weight, ids] : orbits_by_weight)
        if (ids.size() != 1) return false;
    return true;
}

} // namespace qcorbit
