#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "rhocap/clique_union.hpp"
#include "rhocap/curve.hpp"
#include "rhocap/graph.hpp"
#include "rhocap/independence.hpp"

using namespace rhocap;

namespace {

Graph random_graph(std::mt19937& rng, int max_n = 6) {
    std::uniform_int_distribution<int> nd(1, max_n);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    const int n = nd(rng);
    const double p = pd(rng);
    Graph g(n);
    std::bernoulli_distribution ed(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (ed(rng)) g.add_edge(u, v);
    return g;
}

std::vector<int> random_sizes(std::mt19937& rng, int max_s = 4, int max_m = 5) {
    std::uniform_int_distribution<int> sd(1, max_s);
    std::uniform_int_distribution<int> md(1, max_m);
    std::vector<int> sizes(sd(rng));
    for (int& m : sizes) m = md(rng);
    return sizes;
}

// All partitions of m (multisets of positive integers summing to m).
void partitions_of(int m, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(m, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(m - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_partitions(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_of(m, m, cur, out);
    for (auto& p : out) std::sort(p.begin(), p.end());
    return out;
}

// Clique-union strong product: component sizes multiply pairwise.
std::vector<int> product_sizes(const std::vector<int>& a,
                               const std::vector<int>& b) {
    std::vector<int> out;
    for (int x : a)
        for (int y : b) out.push_back(x * y);
    return out;
}

}  // namespace

TEST_CASE("product superadditivity of family counts") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> kd(1, 2);
    for (int it = 0; it < 200; ++it) {
        const Graph g = random_graph(rng, 5);
        const Graph h = random_graph(rng, 4);
        const int k1 = kd(rng), k2 = kd(rng);
        const int lhs = alpha_k(strong_product(g, h), k1 * k2);
        const int rhs = alpha_k(g, k1) * alpha_k(h, k2);
        CHECK(lhs >= rhs);
    }
}

TEST_CASE("clique absorption leaves the family count unchanged") {
    std::mt19937 rng(20240812);
    std::uniform_int_distribution<int> kd(1, 3);
    std::uniform_int_distribution<int> md(1, 3);
    for (int it = 0; it < 200; ++it) {
        const Graph g = random_graph(rng, 6);
        const int k = kd(rng), m = md(rng);
        CHECK(alpha_k(g, k) ==
              alpha_k(strong_product(g, complete_graph(m)), k * m));
    }
}

TEST_CASE("disjoint union sandwich for family counts") {
    std::mt19937 rng(20240813);
    std::uniform_int_distribution<int> rd(2, 3);
    std::uniform_int_distribution<int> kd(2, 3);
    for (int it = 0; it < 200; ++it) {
        const int parts = rd(rng);
        const int k = kd(rng);
        std::vector<Graph> gs;
        for (int i = 0; i < parts; ++i) gs.push_back(random_graph(rng, 5));
        Graph total = gs[0];
        int sum = alpha_k(gs[0], k);
        double cap = 2.0 * alpha_k(gs[0], k) + 1;
        for (int i = 1; i < parts; ++i) {
            total = disjoint_union(total, gs[i]);
            sum += alpha_k(gs[i], k);
            cap += 2.0 * alpha_k(gs[i], k) + 1;
        }
        const int whole = alpha_k(total, k);
        CHECK(whole >= sum);
        const double upper =
            std::min(static_cast<double>(total.vertex_count()) / k,
                     (k - 1.0) / k * cap);
        CHECK(whole <= upper + 1e-9);
    }
}

TEST_CASE("mass cap for families of bounded subset size") {
    std::mt19937 rng(20240814);
    std::uniform_int_distribution<int> kd(2, 3);
    for (int it = 0; it < 200; ++it) {
        const Graph g = random_graph(rng, 7);
        const int n = g.vertex_count();
        const int k = kd(rng);
        if (k > n) continue;
        // grow a random independent family with subset sizes <= k
        std::vector<std::vector<int>> fam;
        std::uniform_int_distribution<int> tries(1, 8);
        std::uniform_int_distribution<int> szd(1, k);
        std::uniform_int_distribution<int> vd(0, n - 1);
        for (int t = tries(rng); t-- > 0;) {
            std::vector<int> subset;
            const int sz = szd(rng);
            while ((int)subset.size() < sz) {
                const int v = vd(rng);
                if (std::find(subset.begin(), subset.end(), v) == subset.end())
                    subset.push_back(v);
            }
            std::sort(subset.begin(), subset.end());
            auto trial = fam;
            trial.push_back(subset);
            if (is_independent_family(g, trial)) fam = std::move(trial);
        }
        if (fam.empty()) continue;
        int mass = 0;
        for (const auto& s : fam) mass += (int)s.size();
        const int ak = alpha_k(g, k);
        CHECK(mass <= std::min(n, (k - 1) * (2 * ak + 1)));
    }
}

TEST_CASE("conjugate duality gap on random clique unions") {
    std::mt19937 rng(20240815);
    for (int it = 0; it < 200; ++it) {
        CliqueUnion cu(random_sizes(rng));
        // refine the grid along the corner arc, where all the curvature sits:
        // the slope-beta point of the curve is the weighted mean of the sizes
        std::vector<double> extra;
        for (int i = 0; i <= 512; ++i) {
            const double beta = i / 512.0;
            double num = 0, den = 0;
            for (int m : cu.sizes) {
                const double w = std::pow((double)m, beta);
                num += w * std::log2((double)m);
                den += w;
            }
            extra.push_back(num / den);
        }
        CapacityCurve curve;
        curve.log_m = cu.log_m();
        curve.kind = CurveKind::exact;
        curve.grid = make_grid(curve.log_m, 1025, extra);
        for (double rho : curve.grid) curve.values.push_back(capacity(cu, rho));
        for (double gamma : {-1.0, -0.8, -0.6, -0.4, -0.2, 0.0}) {
            const double gap =
                std::abs(conjugate_numeric(curve, gamma) - conjugate(cu, gamma));
            CHECK(gap < 1e-6);
        }
    }
}

TEST_CASE("conjugate subadditivity under the strong product") {
    std::mt19937 rng(20240816);
    for (int it = 0; it < 200; ++it) {
        const auto a = random_sizes(rng), b = random_sizes(rng);
        CliqueUnion ga(a), gb(b), gab(product_sizes(a, b));
        for (double gamma : {-1.0, -0.7, -0.5, -0.3, -0.1, 0.0})
            CHECK(conjugate(gab, gamma) <=
                  conjugate(ga, gamma) + conjugate(gb, gamma) + 1e-9);
    }
}

TEST_CASE("packing point equals the component-entropy formula") {
    std::mt19937 rng(20240817);
    for (int it = 0; it < 200; ++it) {
        const auto sizes = random_sizes(rng, 5, 6);
        CliqueUnion cu(sizes);
        const Graph g = clique_union_graph(sizes);
        CHECK(packing_point_exact(g) ==
              doctest::Approx(packing_point(cu)).epsilon(1e-12));
        // log m - H(Q) spelled out
        const double m = static_cast<double>(cu.vertex_count());
        double h = 0;
        for (int s : sizes) h -= s / m * std::log2(s / m);
        CHECK(packing_point_exact(g) ==
              doctest::Approx(std::log2(m) - h).epsilon(1e-12));
    }
}

TEST_CASE("corner points coincide exactly for uniform unions") {
    // exhaustive over all clique unions with at most 12 vertices
    for (int m = 1; m <= 12; ++m) {
        for (const auto& sizes : all_partitions(m)) {
            CliqueUnion cu(sizes);
            const bool meet = std::abs(free_lunch_point(cu) - packing_point(cu)) <
                              1e-12;
            CHECK(meet == cu.uniform());
            CHECK(uniform_clique_union_test(clique_union_graph(sizes)) ==
                  cu.uniform());
        }
    }
}

TEST_CASE("capacity curves separate clique unions") {
    // exhaustive over all clique unions with at most 10 vertices; distinct
    // size multisets give curves differing somewhere by more than 1e-6
    std::map<int, std::vector<std::vector<int>>> by_m;
    for (int m = 1; m <= 10; ++m) by_m[m] = all_partitions(m);
    int pairs = 0;
    for (const auto& [m, parts] : by_m) {
        std::vector<CapacityCurve> curves;
        for (const auto& sizes : parts)
            curves.push_back(exact_clique_union_curve(CliqueUnion(sizes), 257));
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i + 1; j < parts.size(); ++j) {
                ++pairs;
                double worst = 0;
                for (size_t t = 0; t < curves[i].grid.size(); ++t)
                    worst = std::max(
                        worst, std::abs(curves[i].values[t] -
                                        evaluate(curves[j], curves[i].grid[t])));
                CHECK(worst > 1e-6);
            }
    }
    CHECK(pairs >= 200);
}

TEST_CASE("prime-size unions are identified by two invariants") {
    // Corollary: distinct prime clique sizes make (C_0, packing point)
    // a complete invariant among unions with the same vertex count
    auto is_prime = [](int x) {
        if (x < 2) return false;
        for (int d = 2; d * d <= x; ++d)
            if (x % d == 0) return false;
        return true;
    };
    int checked = 0;
    for (int m = 2; m <= 30; ++m) {
        const auto parts = all_partitions(m);
        for (const auto& g_sizes : parts) {
            bool distinct_primes = true;
            for (size_t i = 0; i < g_sizes.size() && distinct_primes; ++i) {
                if (!is_prime(g_sizes[i])) distinct_primes = false;
                if (i && g_sizes[i] == g_sizes[i - 1]) distinct_primes = false;
            }
            if (!distinct_primes) continue;
            CliqueUnion g(g_sizes);
            const double c0 = std::log2((double)g.component_count());
            const double pk = packing_point(g);
            for (const auto& h_sizes : parts) {
                CliqueUnion h(h_sizes);
                const bool match =
                    std::abs(c0 - std::log2((double)h.component_count())) <
                        1e-9 &&
                    std::abs(pk - packing_point(h)) < 1e-9;
                ++checked;
                if (match) CHECK(g_sizes == h_sizes);
            }
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("power superadditivity of the oracle counts") {
    // alpha_k(G^(n1+n2)) >= alpha_k1(G^n1) * alpha_k2(G^n2) on one desk case
    const Graph g = clique_union_graph({1, 2});
    const Graph g2 = strong_power(g, 2);
    const Graph g3 = strong_power(g, 3);
    for (int k1 = 1; k1 <= 2; ++k1)
        for (int k2 = 1; k2 <= 2; ++k2)
            CHECK(alpha_k(g3, k1 * k2) >=
                  alpha_k(g, k1) * alpha_k(g2, k2));
}
