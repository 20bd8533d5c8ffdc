#include "qcorbit/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace qcorbit {

namespace {

struct PrimePower {
    std::uint32_t p;
    std::uint32_t e;
};

std::optional<PrimePower> try_factor_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = q;
    for (std::uint64_t f = 2; f * f <= q; ++f)
        if (q % f == 0) {
            p = f;
            break;
        }
    std::uint32_t e = 0;
    std::uint64_t acc = 1;
    while (acc < q) {
        acc *= p;
        ++e;
    }
    if (acc != q) return std::nullopt;
    return PrimePower{std::uint32_t(p), e};
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

std::int64_t parse_int(const std::string& s, int line, int col, const char* what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError(line, col, std::string("expected a nonnegative integer for ") + what);
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size() || v < 0)
        throw ParseError(line, col, std::string("integer out of range for ") + what);
    return v;
}

/// key=value token
std::int64_t parse_kv(const std::string& tok, const char* key, int line, int col) {
    std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw ParseError(line, col, "expected " + prefix + "<int>, got '" + tok + "'");
    return parse_int(tok.substr(prefix.size()), line, col, key);
}

struct TermParser {
    const Field& fq;
    elt_t w; // first primitive element, used by w^j coefficients
    bool q_prime;
    std::int64_t m;
    int line;
    int col;

    elt_t parse_coeff(const std::string& s) const {
        if (s.rfind("w^", 0) == 0) {
            if (q_prime)
                throw ParseError(line, col,
                                 "coefficient 'w^' is only valid when q is not prime");
            std::int64_t j = parse_int(s.substr(2), line, col, "generator exponent");
            return fq.pow(w, j);
        }
        std::int64_t v = parse_int(s, line, col, "coefficient");
        return fq.from_int(v);
    }

    // fills coefficient of x^exp; term forms: coeff | coeff*x^e | x^e | x
    void parse_term(const std::string& term, FqPoly& poly) const {
        if (term.empty()) throw ParseError(line, col, "empty term in polynomial");
        std::string coeff_part, x_part;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coeff_part = term.substr(0, star);
            x_part = term.substr(star + 1);
            if (x_part.rfind("x^", 0) != 0)
                throw ParseError(line, col, "expected x^<exp> after '*' in '" + term + "'");
        } else if (term[0] == 'x') {
            x_part = term;
        } else {
            coeff_part = term;
        }

        elt_t coeff = coeff_part.empty() ? fq.one() : parse_coeff(coeff_part);
        std::int64_t exp = 0;
        if (x_part == "x") {
            exp = 1;
        } else if (x_part.rfind("x^", 0) == 0) {
            exp = parse_int(x_part.substr(2), line, col, "exponent");
        } else if (!x_part.empty()) {
            throw ParseError(line, col, "malformed term '" + term + "'");
        }
        if (exp >= m)
            throw ParseError(line, col,
                             "exponent " + std::to_string(exp) + " exceeds m-1 = " +
                                 std::to_string(m - 1));
        if (std::size_t(exp) >= poly.size()) poly.resize(std::size_t(exp) + 1, 0);
        poly[std::size_t(exp)] = fq.add(poly[std::size_t(exp)], coeff);
    }

    RowEntry parse_entry(std::string s) const {
        s.erase(std::remove_if(s.begin(), s.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                s.end());
        if (s.empty()) throw ParseError(line, col, "empty row entry");
        if (s == "0") return RowEntry::zero();
        if (s == "g") return RowEntry::gen();
        FqPoly poly;
        std::size_t start = 0;
        while (start <= s.size()) {
            auto plus = s.find('+', start);
            std::string term =
                plus == std::string::npos ? s.substr(start) : s.substr(start, plus - start);
            parse_term(term, poly);
            if (plus == std::string::npos) break;
            start = plus + 1;
        }
        return RowEntry::explicit_poly(poly_trim(std::move(poly)));
    }
};

} // namespace

QccSpec parse_config(const std::string& text) {
    std::istringstream input(text);
    std::string raw;
    int lineno = 0;

    QccSpec spec;
    bool have_header = false;
    std::shared_ptr<const Field> fq;
    elt_t w = 0;
    bool q_prime = true;
    std::set<std::int64_t> coset_reps;

    while (std::getline(input, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        auto toks = split_ws(line);
        int col = int(raw.find_first_not_of(" \t")) + 1;

        if (!have_header) {
            if (toks[0] != "code")
                throw ParseError(lineno, col, "first directive must be 'code', got '" + toks[0] + "'");
            if (toks.size() != 4)
                throw ParseError(lineno, col, "expected: code q=<int> m=<int> l=<int>");
            spec.q = std::uint64_t(parse_kv(toks[1], "q", lineno, col));
            spec.m = parse_kv(toks[2], "m", lineno, col);
            spec.l = int(parse_kv(toks[3], "l", lineno, col));
            auto pp = try_factor_prime_power(spec.q);
            if (!pp) throw InvalidInput("q must be a prime power >= 2");
            if (spec.m < 1) throw InvalidInput("m must be >= 1");
            if (std::gcd(std::int64_t(spec.q), spec.m) != 1)
                throw InvalidInput("gcd(m,q) must be 1");
            if (spec.l < 2) throw InvalidInput("l must be at least 2");
            fq = build_field(pp->p, pp->e);
            q_prime = pp->e == 1;
            w = q_prime ? 0 : fq->primitive_element(1);
            have_header = true;
            continue;
        }

        if (toks[0] == "constituent") {
            if (toks.size() != 2)
                throw ParseError(lineno, col, "expected: constituent coset=<int>");
            std::int64_t rep = parse_kv(toks[1], "coset", lineno, col);
            if (rep < 0 || rep >= spec.m)
                throw InvalidInput("coset representative must lie in 0..m-1");
            std::int64_t canon = coset_of(std::int64_t(spec.q), spec.m, rep).rep;
            if (!coset_reps.insert(canon).second)
                throw InvalidInput("constituents must use pairwise distinct cosets");
            spec.constituents.push_back(ConstituentSpec{rep, {}});
            continue;
        }

        if (toks[0] == "row") {
            if (spec.constituents.empty())
                throw ParseError(lineno, col, "row before any constituent block");
            std::string rest = line.substr(line.find("row") + 3);
            std::vector<std::string> entries;
            std::size_t start = 0;
            while (start <= rest.size()) {
                auto bar = rest.find('|', start);
                entries.push_back(bar == std::string::npos ? rest.substr(start)
                                                           : rest.substr(start, bar - start));
                if (bar == std::string::npos) break;
                start = bar + 1;
            }
            if (int(entries.size()) != spec.l)
                throw ParseError(lineno, col,
                                 "row has " + std::to_string(entries.size()) + " entries, expected l = " +
                                     std::to_string(spec.l));
            TermParser tp{*fq, w, q_prime, spec.m, lineno, col};
            std::vector<RowEntry> row;
            row.reserve(entries.size());
            for (const auto& e : entries) row.push_back(tp.parse_entry(e));
            spec.constituents.back().rows.push_back(std::move(row));
            continue;
        }

        throw ParseError(lineno, col, "unknown keyword '" + toks[0] + "'");
    }

    if (!have_header) throw InvalidInput("empty config: missing 'code' directive");
    for (const auto& c : spec.constituents)
        if (c.rows.empty())
            throw InvalidInput("constituent with coset " + std::to_string(c.coset_rep) +
                               " has no rows");
    return spec;
}

} // namespace qcorbit
