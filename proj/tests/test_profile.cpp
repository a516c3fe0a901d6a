#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rhocap/clique_union.hpp"
#include "rhocap/profile.hpp"
#include "rhocap/spectral.hpp"

using namespace rhocap;
using doctest::Approx;

namespace {

AggregateOptions fast_options() {
    AggregateOptions opts;
    opts.samples = 129;
    return opts;
}

}  // namespace

TEST_CASE("clique unions take the exact path") {
    const Graph g = clique_union_graph({1, 2});
    const BoundProfile p = aggregate(g, fast_options());
    CHECK(p.lower.kind == CurveKind::exact);
    CHECK(p.upper.kind == CurveKind::exact);
    CliqueUnion cu({1, 2});
    for (size_t i = 0; i < p.lower.grid.size(); ++i) {
        CHECK(p.lower.values[i] == Approx(capacity(cu, p.lower.grid[i])).epsilon(1e-12));
        CHECK(p.upper.values[i] == Approx(p.lower.values[i]).epsilon(1e-12));
    }
    CHECK(p.free_lunch_lower == Approx(0.5).epsilon(1e-12));
    CHECK(p.packing == Approx(2.0 / 3).epsilon(1e-12));
    REQUIRE(!p.certificates.empty());
    CHECK(p.certificates.front().theorem == "Thm2-exact");
}

TEST_CASE("clique-minus-clique lower envelope is the time-sharing line") {
    for (auto [m, d] : {std::pair{4, 2}, std::pair{8, 3}}) {
        const Graph g = clique_minus_clique(m, d);
        const BoundProfile p = aggregate(g, fast_options());
        const double log_m = std::log2(double(m)), log_d = std::log2(double(d));
        for (size_t i = 0; i < p.lower.grid.size(); ++i) {
            const double rho = p.lower.grid[i];
            CHECK(p.lower.values[i] ==
                  Approx(log_d * (1 - rho / log_m)).epsilon(1e-9));
            CHECK(p.upper.values[i] + 1e-9 >= p.lower.values[i]);
        }
    }
}

TEST_CASE("pentagon profile combines family and spectral evidence") {
    const BoundProfile p = aggregate(cycle_graph(5), fast_options());
    // alpha(C5^2) = 5 certifies C_0 >= (log2 5)/2, matching the theta bound,
    // so lower and upper meet at rho = 0
    CHECK(p.lower.values.front() == Approx(0.5 * std::log2(5.0)).epsilon(1e-9));
    CHECK(p.upper.values.front() == Approx(0.5 * std::log2(5.0)).epsilon(1e-9));
    CHECK(p.packing == Approx(std::log2(5.0)).epsilon(1e-12));
    for (size_t i = 0; i < p.lower.grid.size(); ++i) {
        CHECK(p.lower.values[i] <= p.upper.values[i] + 1e-9);
        CHECK(p.lower.values[i] >= 0.0);
        if (i) {
            CHECK(p.lower.values[i] <= p.lower.values[i - 1] + 1e-9);
            CHECK(p.upper.values[i] <= p.upper.values[i - 1] + 1e-9);
        }
    }
    bool spectral = false, family = false;
    for (const auto& c : p.certificates) {
        if (c.theorem == "Thm4-spectral") spectral = true;
        if (c.theorem == "Thm2-family") family = true;
    }
    CHECK(spectral);
    CHECK(family);
    // the 2-subset families of C5^2 certify 1 bit at rho = 1/2
    const double at_half = evaluate(p.lower, 0.5);
    CHECK(at_half >= 1.0 - 1e-9);
}

TEST_CASE("user families feed the lower envelope") {
    AggregateOptions opts = fast_options();
    opts.power_cap = 1;      // suppress automatic power-two families
    opts.family_k_cap = 1;
    VertexFamily fam;
    fam.power = 2;
    // four 2-subsets of C5^2, encoded (a-1)*5 + (b-1)
    fam.subsets = {{19, 24}, {5, 9}, {2, 7}, {16, 17}};
    opts.user_families = {fam};
    const BoundProfile p = aggregate(cycle_graph(5), opts);
    CHECK(evaluate(p.lower, 0.5) >= 1.0 - 1e-9);

    VertexFamily bad;
    bad.power = 1;
    bad.subsets = {{0}, {1}};
    opts.user_families = {bad};
    CHECK_THROWS(aggregate(cycle_graph(5), opts));
}

TEST_CASE("JSON round trip is bit identical") {
    const BoundProfile p = aggregate(cycle_graph(5), fast_options());
    const nlohmann::json j = profile_to_json(p);
    const std::string once = j.dump(2);
    const BoundProfile q = profile_from_json(nlohmann::json::parse(once));
    const std::string twice = profile_to_json(q).dump(2);
    CHECK(once == twice);
    CHECK(q.lower.grid == p.lower.grid);
    CHECK(q.lower.values == p.lower.values);
    CHECK(q.upper.values == p.upper.values);

    const BoundProfile e = aggregate(clique_union_graph({1, 2}), fast_options());
    const nlohmann::json je = profile_to_json(e);
    CHECK(je.at("kind") == "exact");
    const BoundProfile e2 = profile_from_json(je);
    CHECK(e2.lower.kind == CurveKind::exact);
    CHECK(profile_to_json(e2).dump() == je.dump());
}

TEST_CASE("CSV export shape and precision") {
    const BoundProfile p = aggregate(clique_union_graph({1, 2}), fast_options());
    const std::string csv = profile_to_csv(p);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "rho,lower,upper");
    size_t rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 2);
    }
    CHECK(rows == p.lower.grid.size());
    // the domain endpoint log2(3) prints with 12 significant digits
    CHECK(csv.find("1.58496250072") != std::string::npos);
}
