#ifndef QCORBIT_FIELDS_HPP
#define QCORBIT_FIELDS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qcorbit/errors.hpp"

namespace qcorbit {

/// Packed representation of a field element: sum of coeffs[i] * p^i,
/// where coeffs[i] is the coordinate of y^i in the power basis of the
/// modulus root y. 0 is the zero element, 1 the one element.
using elt_t = std::uint32_t;

/// Construction data of F_{p^d}: characteristic, degree and the monic
/// irreducible modulus (coefficient list, ascending powers, length d+1).
struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t d = 0;
    std::vector<std::uint32_t> modulus;

    bool operator==(const FieldSpec&) const = default;
};

/// F_{p^d} with exact table-driven arithmetic. Immutable after
/// construction; all operations are const and safe to share across
/// threads.
///
/// The canonical element ordering is ascending lexicographic on
/// coefficient lists (index 0 compared first). It fixes the modulus
/// choice, the primitive elements and embedding images, so equal inputs
/// always produce bit-identical fields.
class Field {
public:
    /// Sizes above this are rejected. Splitting fields of every supported
    /// code fit comfortably below it.
    static constexpr std::uint64_t kMaxSize = std::uint64_t(1) << 20;

    /// Builds F_{p^d} with the lexicographically smallest monic
    /// irreducible modulus of degree d over F_p.
    static Field build(std::uint32_t p, std::uint32_t d);

    /// Builds F_{p^d} with a caller-supplied modulus (validated).
    static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t degree() const { return spec_.d; }
    std::uint64_t size() const { return q_; }

    elt_t zero() const { return 0; }
    elt_t one() const { return 1; }
    /// The modulus root y (for d == 1 this is the residue of x, i.e. 0).
    elt_t generator() const;

    elt_t from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    std::vector<std::uint32_t> coeffs(elt_t a) const;
    /// The scalar n * 1 (n reduced mod p).
    elt_t from_int(std::int64_t n) const;

    elt_t add(elt_t a, elt_t b) const;
    elt_t sub(elt_t a, elt_t b) const;
    elt_t neg(elt_t a) const;
    elt_t mul(elt_t a, elt_t b) const;
    elt_t inv(elt_t a) const;
    elt_t div(elt_t a, elt_t b) const;
    elt_t pow(elt_t a, std::int64_t e) const;

    /// Least t >= 1 with a^t = 1. Always divides size()-1.
    std::uint64_t element_order(elt_t a) const;

    /// Discrete log with respect to the canonical primitive element.
    std::uint64_t log(elt_t a) const;
    elt_t exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

    /// Position of an element in the canonical ordering and its inverse.
    std::uint64_t ord_key(elt_t a) const;
    elt_t from_ord_key(std::uint64_t key) const;

    /// The index-th element of multiplicative order size()-1 in the
    /// canonical ordering (1-based). index 1 is the element the log
    /// tables are built on.
    elt_t primitive_element(unsigned index = 1) const;

    /// omega^((size()-1)/m); requires m | size()-1.
    elt_t root_of_unity(std::uint64_t m, elt_t omega) const;
    elt_t root_of_unity(std::uint64_t m) const { return root_of_unity(m, primitive_); }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;
    Field(Field&&) = default;
    Field& operator=(Field&&) = default;

private:
    Field() = default;
    void init_tables();

    FieldSpec spec_;
    std::uint64_t q_ = 0;
    elt_t primitive_ = 0;
    std::vector<elt_t> exp_;          // exp_[i] = primitive_^i, size q-1
    std::vector<std::uint32_t> log_;  // log_[v] for v != 0, size q
    std::vector<elt_t> add_table_;    // only for small odd-characteristic fields
    std::vector<std::uint64_t> q1_prime_factors_;
};

/// Shared, cached field handle. Repeated requests for the same (p, d)
/// return the same object; the construction itself is deterministic.
std::shared_ptr<const Field> build_field(std::uint32_t p, std::uint32_t d);

/// An element tagged with its field, for API-boundary checking.
struct FieldElement {
    const Field* field = nullptr;
    elt_t v = 0;

    bool operator==(const FieldElement&) const = default;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Checked arithmetic on tagged elements. Mixing fields is invalid-input;
/// dividing by zero is a domain error.
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Ring homomorphism F_{p^e} -> F_{p^d} with e | d, fixing F_p.
/// The image of the subfield generator is the first root of the subfield
/// modulus in the canonical ordering of the big field; embedding a field
/// into itself is the identity.
class Embedding {
public:
    Embedding(std::shared_ptr<const Field> sub, std::shared_ptr<const Field> sup);

    const Field& sub() const { return *sub_; }
    const Field& sup() const { return *sup_; }
    elt_t image() const { return image_; }

    elt_t fwd(elt_t a) const { return fwd_[a]; }
    /// Preimage lookup; nullopt when a is outside the embedded subfield.
    std::optional<elt_t> back(elt_t a) const;

private:
    std::shared_ptr<const Field> sub_;
    std::shared_ptr<const Field> sup_;
    elt_t image_ = 0;
    std::vector<elt_t> fwd_;
    std::unordered_map<elt_t, elt_t> back_;
};

} // namespace qcorbit

#endif
