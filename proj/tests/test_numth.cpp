#include <doctest.h>

#include <numeric>
#include <set>

#include "qcorbit/numth.hpp"

using namespace qcorbit;

namespace {

std::int64_t modexp(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

} // namespace

TEST_CASE("gcd_list") {
    std::int64_t a[] = {0, 3};
    CHECK(gcd_list(a, 9) == 3);
    CHECK(gcd_list(std::span<const std::int64_t>{}, 15) == 15);
    std::int64_t b[] = {-13};
    CHECK(gcd_list(b, 26) == 13);
    CHECK_THROWS_AS(gcd_list(std::span<const std::int64_t>{}, 0), InvalidInput);
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(9) == 6);
    CHECK_THROWS_AS(euler_phi(0), InvalidInput);

    // divisor-sum identity
    for (std::int64_t n = 1; n <= 1000; ++n) {
        std::int64_t sum = 0;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) sum += euler_phi(d);
        CHECK(sum == n);
    }
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(2, 9) == 6);
    CHECK(modexp(2, 6, 9) == 1); // oracle
    CHECK(multiplicative_order(7, 1) == 1);
    CHECK(multiplicative_order(9, 91) == 3);
    CHECK(modexp(9, 3, 91) == 1);
    CHECK_THROWS_AS(multiplicative_order(3, 9), InvalidInput);
}

TEST_CASE("cyclotomic cosets mod 9, base 2") {
    auto cs = cyclotomic_cosets(2, 9);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].members == std::vector<std::int64_t>{0});
    CHECK(std::set<std::int64_t>(cs[1].members.begin(), cs[1].members.end()) ==
          std::set<std::int64_t>{1, 2, 4, 5, 7, 8});
    CHECK(std::set<std::int64_t>(cs[2].members.begin(), cs[2].members.end()) ==
          std::set<std::int64_t>{3, 6});
}

TEST_CASE("cyclotomic cosets mod 15, base 2") {
    auto cs = cyclotomic_cosets(2, 15);
    REQUIRE(cs.size() == 5);
    std::vector<std::set<std::int64_t>> expected = {
        {0}, {1, 2, 4, 8}, {3, 6, 9, 12}, {5, 10}, {7, 11, 13, 14}};
    for (std::size_t i = 0; i < cs.size(); ++i)
        CHECK(std::set<std::int64_t>(cs[i].members.begin(), cs[i].members.end()) == expected[i]);
}

TEST_CASE("singleton coset of 13 mod 26, base 3") {
    auto c = coset_of(3, 26, 13);
    CHECK(c.rep == 13);
    CHECK(c.members == std::vector<std::int64_t>{13});
}

TEST_CASE("coset_of") {
    auto c = coset_of(4, 11, 1);
    CHECK(std::set<std::int64_t>(c.members.begin(), c.members.end()) ==
          std::set<std::int64_t>{1, 3, 4, 5, 9});
    CHECK(coset_of(7, 12, 0).members == std::vector<std::int64_t>{0});
    auto c539 = coset_of(5, 39, 1);
    CHECK(std::set<std::int64_t>(c539.members.begin(), c539.members.end()) ==
          std::set<std::int64_t>{1, 5, 8, 25});
    CHECK_THROWS_AS(coset_of(2, 9, 9), InvalidInput);
}

TEST_CASE("coset partition invariants") {
    for (auto [q, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 9}, {2, 15}, {3, 26}, {5, 39}, {4, 11}, {9, 91}, {2, 25}}) {
        auto cs = cyclotomic_cosets(q, m);
        std::int64_t mp = multiplicative_order(q, m);
        std::set<std::int64_t> all;
        std::int64_t total = 0;
        std::int64_t prev_rep = -1;
        for (const auto& c : cs) {
            CHECK(c.rep == *std::min_element(c.members.begin(), c.members.end()));
            CHECK(c.rep > prev_rep);
            prev_rep = c.rep;
            total += c.size();
            for (auto member : c.members) {
                CHECK(all.insert(member).second); // pairwise disjoint
                // closure under multiplication by q
                CHECK(c.contains(member * q % m));
            }
            CHECK(mp % c.size() == 0);
            // size equals the order of q modulo m / gcd(m, rep)
            std::int64_t reduced = m / std::gcd(m, c.rep);
            if (reduced == 1)
                CHECK(c.size() == 1);
            else
                CHECK(c.size() == multiplicative_order(q, reduced));
            // regeneration from the representative gives the same set
            auto again = coset_of(q, m, c.rep);
            CHECK(again.members == c.members);
        }
        CHECK(total == m);
        CHECK(cs.front().members == std::vector<std::int64_t>{0});
    }
}
