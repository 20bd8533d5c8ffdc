#include <CLI11.hpp>

#include <algorithm>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qcorbit/analyze.hpp"
#include "qcorbit/config.hpp"

namespace {

using namespace qcorbit;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<GroupKind> parse_groups(const std::string& csv) {
    std::vector<GroupKind> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        auto comma = csv.find(',', start);
        std::string tok = comma == std::string::npos ? csv.substr(start)
                                                     : csv.substr(start, comma - start);
        if (tok == "shift")
            out.push_back(GroupKind::Shift);
        else if (tok == "shift-scalar")
            out.push_back(GroupKind::ShiftScalar);
        else if (tok == "full")
            out.push_back(GroupKind::Full);
        else
            throw InvalidInput("unknown group '" + tok + "' (expected shift, shift-scalar, full)");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw InvalidInput("group list must not be empty");
    // keep the first occurrence of each group
    std::vector<GroupKind> uniq;
    for (GroupKind g : out)
        if (std::find(uniq.begin(), uniq.end(), g) == uniq.end()) uniq.push_back(g);
    return uniq;
}

int run(int argc, char** argv) {
    CLI::App app{"orbit counts and nonzero-weight bounds for quasi-cyclic codes"};
    app.require_subcommand(1);

    std::string input_path;
    bool as_json = false;
    std::uint64_t max_enum = std::uint64_t(1) << 20;
    std::string groups_csv;
    unsigned omega_index = 1;

    CLI::App* cmd_analyze = app.add_subcommand(
        "analyze", "enumerate a code, count orbits and verify the weight bounds");
    cmd_analyze->add_option("file", input_path, "code description file")->required();
    cmd_analyze->add_flag("--json", as_json, "emit a JSON report");
    cmd_analyze->add_option("--max-enum", max_enum, "codeword enumeration limit")
        ->check(CLI::PositiveNumber);
    cmd_analyze->add_option("--groups", groups_csv,
                            "comma-separated subset of shift,shift-scalar,full");
    cmd_analyze->add_option("--omega-index", omega_index,
                            "which primitive element to base the root of unity on (>= 1)")
        ->check(CLI::PositiveNumber);

    CLI::App* cmd_bounds =
        app.add_subcommand("bounds", "evaluate the closed-form bounds without enumeration");
    cmd_bounds->add_option("file", input_path, "code description file")->required();
    cmd_bounds->add_flag("--json", as_json, "emit a JSON report");
    cmd_bounds->add_option("--groups", groups_csv,
                           "comma-separated subset of shift,shift-scalar,full");
    cmd_bounds->add_option("--omega-index", omega_index, "primitive-element index (>= 1)")
        ->check(CLI::PositiveNumber);

    std::int64_t q = 0, m = 0;
    CLI::App* cmd_cosets = app.add_subcommand("cosets", "list the q-cyclotomic cosets modulo m");
    cmd_cosets->add_option("--q", q, "field size (prime power)")->required();
    cmd_cosets->add_option("--m", m, "modulus")->required();
    cmd_cosets->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (cmd_cosets->parsed()) {
        if (q < 2) throw InvalidInput("q must be >= 2");
        auto cosets = cyclotomic_cosets(q, m);
        std::int64_t mp = multiplicative_order(q, m);
        if (as_json) {
            nlohmann::ordered_json j;
            j["q"] = q;
            j["m"] = m;
            j["m_prime"] = mp;
            j["cosets"] = nlohmann::ordered_json::array();
            for (const auto& c : cosets)
                j["cosets"].push_back(
                    {{"rep", c.rep}, {"size", c.size()}, {"members", c.members}});
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << q << "-cyclotomic cosets modulo " << m << " (m' = " << mp << "):\n";
            for (const auto& c : cosets) {
                std::cout << "  rep " << c.rep << ", size " << c.size() << ": {";
                for (std::size_t i = 0; i < c.members.size(); ++i)
                    std::cout << (i ? "," : "") << c.members[i];
                std::cout << "}\n";
            }
        }
        return 0;
    }

    AnalysisOptions opt;
    opt.max_enum = max_enum;
    opt.omega_index = omega_index;
    if (!groups_csv.empty()) {
        opt.groups = parse_groups(groups_csv);
        opt.groups_explicit = true;
    }

    QccSpec spec = parse_config(read_file(input_path));
    AnalysisReport rep =
        cmd_bounds->parsed() ? evaluate_bounds(spec, opt) : analyze(spec, opt);
    if (as_json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qcorbit::EnumerationLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qcorbit::GroupNotApplicable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qcorbit::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const qcorbit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
