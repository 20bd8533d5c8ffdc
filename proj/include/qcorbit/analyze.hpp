#ifndef QCORBIT_ANALYZE_HPP
#define QCORBIT_ANALYZE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcorbit/bounds.hpp"
#include "qcorbit/code.hpp"
#include "qcorbit/group.hpp"

namespace qcorbit {

struct AnalysisOptions {
    std::uint64_t max_enum = std::uint64_t(1) << 20;
    /// Groups to analyze; empty means "all applicable" (shift,
    /// shift-scalar, and full when the code has the one-generator shape
    /// and the multiplier stabilizes it). When explicitly set, an
    /// inapplicable full-group request is an error.
    std::vector<GroupKind> groups;
    bool groups_explicit = false;
    unsigned omega_index = 1;
};

struct GroupResult {
    GroupKind kind = GroupKind::Shift;
    BigInt formula = 0;
    std::optional<std::int64_t> orbits; // brute force; absent in bounds-only runs
    std::optional<bool> tight;
    bool formula_exceeds_orbits = false;
};

struct ConstituentReport {
    std::int64_t coset_rep = 0; // canonical (minimum member)
    std::int64_t i_user = 0;    // representative as written in the config
    std::int64_t k = 0;
    std::int64_t K = 0;
    int rank = 0;
    FqPoly h;
    FqPoly g; // trimmed generator polynomial
    bool one_generator_shape = false;
    bool degenerate = false;
};

struct AnalysisReport {
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::int64_t m = 0;
    std::int64_t m_prime = 0;
    int l = 0;
    std::int64_t n = 0;
    std::int64_t K = 0;
    unsigned omega_index = 1;
    std::vector<CyclotomicCoset> cosets;
    std::vector<ConstituentReport> constituents;
    std::vector<GroupResult> groups;
    std::optional<WeightDistribution> wd;
    std::optional<int> s;
    std::vector<std::string> warnings;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// Full pipeline: expand, enumerate, count weights, run every selected
/// group both by closed form and by brute force, and check tightness.
AnalysisReport analyze(const QccSpec& spec, const AnalysisOptions& opt);

/// Closed-form values only; no enumeration.
AnalysisReport evaluate_bounds(const QccSpec& spec, const AnalysisOptions& opt);

} // namespace qcorbit

#endif
