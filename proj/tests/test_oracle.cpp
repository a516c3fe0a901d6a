#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>

#include "rhocap/clique_union.hpp"
#include "rhocap/graph_io.hpp"
#include "rhocap/oracle.hpp"

using namespace rhocap;
using doctest::Approx;

#ifndef TEST_DATA_DIR
#define TEST_DATA_DIR "tests/data"
#endif

TEST_CASE("big integer log2") {
    CHECK(log2_big(BigInt(1)) == 0.0);
    CHECK(log2_big(BigInt(1024)) == Approx(10.0).epsilon(1e-12));
    CHECK(log2_big(BigInt(5)) == Approx(std::log2(5.0)).epsilon(1e-12));
    const BigInt huge = boost::multiprecision::pow(BigInt(10), 300);
    CHECK(log2_big(huge) == Approx(300 * std::log2(10.0)).epsilon(1e-10));
    const BigInt gigantic = boost::multiprecision::pow(BigInt(7), 1000);
    CHECK(log2_big(gigantic) == Approx(1000 * std::log2(7.0)).epsilon(1e-10));
    CHECK_THROWS(log2_big(BigInt(0)));
}

TEST_CASE("subset size target") {
    CHECK(power_subset_size(0.0, 4) == 1);
    CHECK(power_subset_size(0.6, 2) == 3);   // 2^1.2 = 2.297 -> 3
    CHECK(power_subset_size(1.0, 3) == 8);
    CHECK(power_subset_size(0.5, 2) == 2);   // exact power of two
    CHECK_THROWS(power_subset_size(-0.1, 2));
}

TEST_CASE("counting sums for the worked two-clique case") {
    // sizes {1,2}, n=2, rho=0.6: types (2,0),(1,1),(0,2) carry weights
    // 0, 1, 2 bits against a budget of 1.2 bits
    const MultinomialSums s = multinomial_sums({1, 2}, 2, 0.6);
    CHECK(s.a_numerator == 5);  // 1*1 + 2*2 from types (2,0) and (1,1)
    CHECK(s.b == 1);            // only type (0,2)
    CHECK(s.rate_a == Approx(std::log2(5.0) / 2 - 0.6).epsilon(1e-12));
    CHECK(s.rate_b == Approx(0.0).epsilon(1e-12));
    CHECK(count_upper_bound(s, 2, 0.6) == Approx(2.0 + 1.0));  // floor(5/2^1.2)+1
}

TEST_CASE("counting sums cover everything at the extremes") {
    // rho = 0: every type enters B, so b = s^n; only the zero-weight type
    // enters A
    const MultinomialSums s0 = multinomial_sums({1, 2}, 5, 0.0);
    CHECK(s0.b == BigInt(32));
    CHECK(s0.a_numerator == BigInt(1));
    // rho = log2(sum m_i): every type enters A, so a_numerator = (sum m_i)^n
    const MultinomialSums s1 = multinomial_sums({1, 2}, 5, std::log2(3.0));
    CHECK(s1.a_numerator == BigInt(243));
}

TEST_CASE("rates bracket the closed form and converge") {
    CliqueUnion cu({1, 2});
    const double rho = 0.6;
    const double exact = capacity(cu, rho);
    const auto pts = rate_convergence({1, 2}, {16, 32, 64}, rho);
    REQUIRE(pts.size() == 3);
    for (const auto& p : pts) {
        // supermultiplicativity keeps every finite-n lower rate below the limit
        CHECK(p.rate_b <= exact + 1e-9);
        CHECK(p.gap >= 0);
    }
    CHECK(pts[1].gap < pts[0].gap);
    CHECK(pts[2].gap < pts[1].gap);
    CHECK(std::abs(pts[2].rate_b - exact) < 0.05);
}

TEST_CASE("sandwich against the exact solver at desk scale") {
    for (double rho : {0.55, 0.6, 0.65}) {
        const SandwichCheck c2 = sandwich_check({1, 2}, 2, rho);
        CHECK(c2.ok);
        const SandwichCheck c3 = sandwich_check({1, 2}, 3, rho);
        CHECK(c3.ok);
    }
    const SandwichCheck u = sandwich_check({2, 2}, 2, 0.5);
    CHECK(u.ok);
    CHECK(u.k == 2);
    CHECK(u.exact == 4);  // alpha_2 of (2K_2)^2: the four product cliques
}

TEST_CASE("type-class explosion is refused") {
    CHECK_THROWS_AS(multinomial_sums(std::vector<int>(18, 2), 64, 1.0),
                    SizeLimitError);
}

TEST_CASE("verify accepts the published pentagon-square families") {
    const Graph g = cycle_graph(5);
    for (const char* name :
         {"pentagon_family_ii.txt", "pentagon_family_iii.txt"}) {
        std::ifstream f(std::string(TEST_DATA_DIR) + "/" + name);
        REQUIRE(f.good());
        VertexFamily fam;
        fam.power = 2;
        fam.subsets = parse_family_text(f, 5, 2);
        const VerifyResult res = verify_broadcast_code(g, fam);
        CHECK(res.check.ok);
    }
    std::ifstream f(std::string(TEST_DATA_DIR) + "/pentagon_family_iii.txt");
    VertexFamily fam;
    fam.power = 2;
    fam.subsets = parse_family_text(f, 5, 2);
    const VerifyResult res = verify_broadcast_code(g, fam);
    CHECK(res.n == 2);
    CHECK(res.rho == Approx(0.5).epsilon(1e-12));  // min size 2, n = 2
    CHECK(res.rate == Approx(1.0).epsilon(1e-12));  // 4 subsets, n = 2
}

TEST_CASE("verify rejects the adjacent rows family with the offending pair") {
    const Graph g = cycle_graph(5);
    std::ifstream f(std::string(TEST_DATA_DIR) + "/pentagon_family_i.txt");
    REQUIRE(f.good());
    VertexFamily fam;
    fam.power = 2;
    fam.subsets = parse_family_text(f, 5, 2);
    const VerifyResult res = verify_broadcast_code(g, fam);
    CHECK_FALSE(res.check.ok);
    // rows 3 and 4 of the pentagon are adjacent
    CHECK(res.check.first == 1);
    CHECK(res.check.second == 2);
}

TEST_CASE("verify rejects an empty family") {
    VertexFamily fam;
    fam.power = 1;
    const VerifyResult res = verify_broadcast_code(cycle_graph(5), fam);
    CHECK_FALSE(res.check.ok);
    CHECK(res.check.reason.find("empty") != std::string::npos);
}
