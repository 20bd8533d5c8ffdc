#ifndef QCORBIT_GROUP_HPP
#define QCORBIT_GROUP_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcorbit/code.hpp"

namespace qcorbit {

/// The three automorphism subgroups analyzed for a quasi-cyclic code:
/// the l-step shift alone, shift plus scalar multiplications, and the
/// full group that adds the coefficient multiplier x -> x^q.
enum class GroupKind { Shift, ShiftScalar, Full };

const char* group_name(GroupKind kind); // "shift", "shift-scalar", "full"

/// Normal form mu^{r1} rho^{l*r2} sigma_a with 0 <= r1 < m',
/// 0 <= r2 < m and a nonzero. Every group element has exactly one such
/// form, so the three groups have orders m, m(q-1), m'm(q-1).
struct GroupElement {
    std::int64_t r1 = 0;
    std::int64_t r2 = 0;
    elt_t a = 1;
};

/// Applies the generators and their normal-form products to codewords in
/// the interleaved layout. Every element acts as a coordinate permutation
/// combined with one global scalar, so it preserves Hamming weight.
class GroupAction {
public:
    GroupAction(const RingContext& ctx, int l);

    const RingContext& ctx() const { return *ctx_; }
    int l() const { return l_; }

    /// Multiplication by x on every slot: coordinate (i, j) moves to
    /// ((i+1) mod m, j), a rotation by l positions.
    Codeword apply_rho_l(const Codeword& w) const;
    /// Scalar multiplication by a != 0.
    Codeword apply_sigma(elt_t a, const Codeword& w) const;
    /// Coefficient permutation (i, j) -> ((q*i) mod m, j).
    Codeword apply_mu_q(const Codeword& w) const;

    Codeword apply(const GroupElement& g, const Codeword& w) const;

    /// dest[perm[pos]] = a * src[pos].
    std::vector<std::int32_t> permutation(const GroupElement& g) const;

    std::vector<GroupElement> elements(GroupKind kind) const;
    std::int64_t order(GroupKind kind) const;

private:
    const RingContext* ctx_;
    int l_;
};

struct CodewordHash {
    std::size_t operator()(const Codeword& w) const;
};

using CodewordIndex = std::unordered_map<Codeword, std::uint32_t, CodewordHash>;

CodewordIndex index_codewords(const std::vector<Codeword>& words);

/// True iff g maps every basis codeword back into the code. Shift and
/// scalar generators always pass on a valid quasi-cyclic code; the
/// multiplier needs this check before any Full-group analysis.
bool verify_closure(const GroupAction& action, const ExpandedCode& code,
                    const CodewordIndex& index, const GroupElement& g);

struct OrbitPartition {
    std::int64_t orbit_count = 0;
    /// Orbit id per word position; -1 marks the zero word.
    std::vector<std::int32_t> orbit_of;
};

/// Partition of the nonzero codewords into orbits of the chosen group,
/// by breadth-first closure under the generators. `words` is the full
/// enumerated code; `index` must index exactly those words.
OrbitPartition orbit_partition(const GroupAction& action, GroupKind kind,
                               const std::vector<Codeword>& words, const CodewordIndex& index);

/// Orbit count via the fixed-point average over all group elements in
/// normal form. Fixed points of each element are counted exactly as
/// q^nullity - 1 where the nullity is taken on the given basis of the
/// code. Independent of orbit_partition, used to cross-check it.
std::int64_t burnside_count(const GroupAction& action, GroupKind kind,
                            const std::vector<Codeword>& basis);

/// True iff any two equal-weight nonzero codewords lie in one orbit,
/// i.e. the number of distinct nonzero weights equals the orbit count.
bool tightness_check(const std::vector<Codeword>& words, const OrbitPartition& partition);

} // namespace qcorbit

#endif
