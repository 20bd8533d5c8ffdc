#include "qcorbit/analyze.hpp"

#include <algorithm>
#include <sstream>

namespace qcorbit {

namespace {

std::vector<ConstituentArith> arith_data(const ExpandedCode& code) {
    std::vector<ConstituentArith> out;
    out.reserve(code.constituents.size());
    for (const auto& c : code.constituents)
        out.push_back(ConstituentArith{c.i_user, c.k, c.K});
    return out;
}

BigInt formula_for(GroupKind kind, const std::vector<ConstituentArith>& cons, std::int64_t m,
                   std::int64_t q) {
    switch (kind) {
        case GroupKind::Shift: return shift_orbit_count(cons, m, q);
        case GroupKind::ShiftScalar: return shift_scalar_orbit_count(cons, m, q);
        case GroupKind::Full: return full_orbit_bound(cons, m, q);
    }
    throw InternalError("unknown group kind");
}

void fill_static_report(AnalysisReport& rep, const RingContext& ctx, const ExpandedCode& code) {
    rep.q = ctx.q();
    rep.p = ctx.p();
    rep.e = ctx.e();
    rep.m = ctx.m();
    rep.m_prime = ctx.m_prime();
    rep.l = code.l;
    rep.n = code.n();
    rep.K = code.K;
    rep.omega_index = ctx.omega_index();
    rep.cosets = ctx.cosets();
    for (const auto& c : code.constituents) {
        ConstituentReport cr;
        cr.coset_rep = c.coset.rep;
        cr.i_user = c.i_user;
        cr.k = c.k;
        cr.K = c.K;
        cr.rank = c.rank;
        cr.h = c.h;
        cr.g = poly_trim(c.gen.coeffs);
        cr.one_generator_shape = c.qualifies_one_generator;
        cr.degenerate = c.degenerate;
        rep.constituents.push_back(std::move(cr));
        if (c.degenerate)
            rep.warnings.push_back("constituent with coset " + std::to_string(c.coset.rep) +
                                   " spans only the zero word");
    }
    if (code.constituents.empty())
        rep.warnings.push_back("no constituents: this is the zero code");
}

std::vector<GroupKind> requested_groups(const AnalysisOptions& opt) {
    if (!opt.groups.empty()) return opt.groups;
    return {GroupKind::Shift, GroupKind::ShiftScalar, GroupKind::Full};
}

} // namespace

AnalysisReport analyze(const QccSpec& spec, const AnalysisOptions& opt) {
    RingContext ctx(spec.q, spec.m, opt.omega_index);
    ExpandedCode code = expand(ctx, spec);

    AnalysisReport rep;
    fill_static_report(rep, ctx, code);

    std::vector<Codeword> words = enumerate_codewords(code, opt.max_enum);
    CodewordIndex index = index_codewords(words);
    if (index.size() != words.size())
        throw InternalError("codeword enumeration produced duplicates");

    WeightDistribution wd;
    for (const Codeword& w : words) ++wd.counts[hamming_weight(w)];
    rep.wd = wd;
    rep.s = nonzero_weight_count(wd);

    GroupAction action(ctx, code.l);

    bool shape_ok = code.qualifies_one_generator();
    bool closure_ok =
        shape_ok && verify_closure(action, code, index, GroupElement{1, 0, 1});
    std::vector<GroupKind> kinds = requested_groups(opt);
    std::vector<GroupKind> selected;
    for (GroupKind kind : kinds) {
        if (kind == GroupKind::Full && !(shape_ok && closure_ok)) {
            std::string reason = shape_ok ? "the multiplier does not stabilize the code"
                                          : "the code is not in one-generator {0, f} shape";
            if (opt.groups_explicit)
                throw GroupNotApplicable("full-group analysis refused: " + reason);
            rep.warnings.push_back("full group skipped: " + reason);
            continue;
        }
        selected.push_back(kind);
    }

    std::vector<ConstituentArith> cons = arith_data(code);
    for (GroupKind kind : selected) {
        GroupResult gr;
        gr.kind = kind;
        gr.formula = formula_for(kind, cons, ctx.m(), std::int64_t(ctx.q()));

        OrbitPartition part = orbit_partition(action, kind, words, index);
        std::int64_t burnside = burnside_count(action, kind, code.basis);
        if (burnside != part.orbit_count)
            throw InternalError("fixed-point count disagrees with the orbit partition");
        gr.orbits = part.orbit_count;
        gr.tight = tightness_check(words, part);

        if (*rep.s > part.orbit_count)
            throw InternalError("weight count exceeds the orbit count");
        // equal-weight-words-share-an-orbit is the same statement as
        // s == N; the two are computed differently, so compare them
        if (*gr.tight != (*rep.s == part.orbit_count))
            throw InternalError("tightness disagrees with s == N");

        if (kind == GroupKind::Shift) {
            // the shift count rests on a complete fixed-point argument
            if (gr.formula != *gr.orbits)
                throw InternalError("shift closed form disagrees with the orbit count");
        } else {
            // the shift-scalar and full closed forms can overcount: the
            // shift-scalar subset terms assume the constituents' shift
            // congruences share a solution, and the full bound is only
            // an upper bound for direct sums
            if (gr.formula > *gr.orbits) {
                gr.formula_exceeds_orbits = true;
                rep.warnings.push_back(std::string(group_name(kind)) + " closed form (" +
                                       gr.formula.str() +
                                       ") exceeds the brute-force orbit count (" +
                                       std::to_string(*gr.orbits) + ")");
            } else if (gr.formula < *gr.orbits) {
                throw InternalError(std::string(group_name(kind)) +
                                    " closed form fell below the orbit count");
            }
        }
        rep.groups.push_back(std::move(gr));
    }
    return rep;
}

AnalysisReport evaluate_bounds(const QccSpec& spec, const AnalysisOptions& opt) {
    RingContext ctx(spec.q, spec.m, opt.omega_index);
    ExpandedCode code = expand(ctx, spec);

    AnalysisReport rep;
    fill_static_report(rep, ctx, code);

    bool shape_ok = code.qualifies_one_generator();
    std::vector<ConstituentArith> cons = arith_data(code);
    for (GroupKind kind : requested_groups(opt)) {
        if (kind == GroupKind::Full && !shape_ok) {
            if (opt.groups_explicit)
                throw GroupNotApplicable(
                    "full-group analysis refused: the code is not in one-generator {0, f} shape");
            rep.warnings.push_back(
                "full group skipped: the code is not in one-generator {0, f} shape");
            continue;
        }
        GroupResult gr;
        gr.kind = kind;
        gr.formula = formula_for(kind, cons, ctx.m(), std::int64_t(ctx.q()));
        rep.groups.push_back(std::move(gr));
    }
    return rep;
}

nlohmann::ordered_json AnalysisReport::to_json() const {
    nlohmann::ordered_json j;
    j["parameters"] = {{"q", q},       {"p", p},           {"e", e},
                       {"m", m},       {"m_prime", m_prime}, {"l", l},
                       {"n", n},       {"K", K},           {"omega_index", omega_index}};
    j["cosets"] = nlohmann::ordered_json::array();
    for (const auto& c : cosets)
        j["cosets"].push_back({{"rep", c.rep}, {"size", c.size()}, {"members", c.members}});
    j["constituents"] = nlohmann::ordered_json::array();
    for (const auto& c : constituents)
        j["constituents"].push_back({{"coset", c.coset_rep},
                                     {"i", c.i_user},
                                     {"k", c.k},
                                     {"K", c.K},
                                     {"rank", c.rank},
                                     {"h", c.h},
                                     {"g", c.g},
                                     {"one_generator_shape", c.one_generator_shape},
                                     {"degenerate", c.degenerate}});
    nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
    nlohmann::ordered_json orbit_counts = nlohmann::ordered_json::object();
    nlohmann::ordered_json tightness = nlohmann::ordered_json::object();
    for (const auto& g : groups) {
        bounds[group_name(g.kind)] = g.formula.str();
        if (g.orbits) orbit_counts[group_name(g.kind)] = *g.orbits;
        if (g.tight) tightness[group_name(g.kind)] = *g.tight;
    }
    j["bounds"] = bounds;
    j["orbit_counts"] = orbit_counts;
    if (wd) {
        nlohmann::ordered_json dist = nlohmann::ordered_json::object();
        for (const auto& [weight, count] : wd->counts)
            dist[std::to_string(weight)] = count;
        j["weight_distribution"] = dist;
    } else {
        j["weight_distribution"] = nullptr;
    }
    j["s"] = s ? nlohmann::ordered_json(*s) : nlohmann::ordered_json(nullptr);
    j["tightness"] = tightness;
    j["warnings"] = warnings;
    return j;
}

namespace {

std::string poly_str(const FqPoly& f) {
    if (poly_is_zero(f)) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << f[i];
        } else {
            if (f[i] != 1) os << f[i] << "*";
            os << "x^" << i;
        }
    }
    return os.str();
}

} // namespace

std::string AnalysisReport::to_text() const {
    std::ostringstream os;
    os << "code: q=" << q << " (p=" << p << ", e=" << e << ")  m=" << m << "  l=" << l
       << "  n=" << n << "  K=" << K << "  m'=" << m_prime << "\n";
    os << "cosets mod " << m << " (" << cosets.size() << "):\n";
    for (const auto& c : cosets) {
        os << "  {";
        for (std::size_t i = 0; i < c.members.size(); ++i)
            os << (i ? "," : "") << c.members[i];
        os << "}  size " << c.size() << "\n";
    }
    os << "constituents:\n";
    for (const auto& c : constituents) {
        os << "  coset " << c.coset_rep << " (i=" << c.i_user << ", k=" << c.k
           << "): rank " << c.rank << ", K=" << c.K << "\n";
        os << "    h = " << poly_str(c.h) << "\n";
        os << "    g = " << poly_str(c.g) << "\n";
    }
    if (wd) {
        os << "weight distribution:\n";
        for (const auto& [weight, count] : wd->counts)
            os << "  " << weight << ": " << count << "\n";
        os << "distinct nonzero weights s = " << *s << "\n";
    }
    os << "groups:\n";
    for (const auto& g : groups) {
        os << "  " << group_name(g.kind) << ": closed form " << g.formula.str();
        if (g.orbits) os << ", orbits " << *g.orbits;
        if (g.tight) os << ", tight " << (*g.tight ? "yes" : "no");
        if (g.formula_exceeds_orbits) os << " (closed form exceeds orbit count)";
        os << "\n";
    }
    for (const auto& w : warnings) os << "warning: " << w << "\n";
    return os.str();
}

} // namespace qcorbit
