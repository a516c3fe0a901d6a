#include "rhocap/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rhocap {

Graph::Graph(int n, std::string name) : n_(n), adj_(n), name_(std::move(name)) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
}

bool Graph::adjacent(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (adjacent(u, v)) return;  // duplicates tolerated
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edges_;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

Graph complete_graph(int m) {
    Graph g(m, "K" + std::to_string(m));
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int m) { return Graph(m, "E" + std::to_string(m)); }

Graph cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(m, "C" + std::to_string(m));
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
    return g;
}

Graph clique_minus_clique(int m, int d) {
    if (d < 1 || d > m) throw std::invalid_argument("need 1 <= d <= m");
    Graph g(m, "K" + std::to_string(m) + "-K" + std::to_string(d));
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (u >= d || v >= d) g.add_edge(u, v);
    return g;
}

Graph clique_union_graph(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("empty clique multiset");
    long long total = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("clique sizes must be positive");
        total += s;
    }
    Graph g(static_cast<int>(total));
    int base = 0;
    for (int s : sizes) {
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v) g.add_edge(base + u, base + v);
        base += s;
    }
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph u(g.vertex_count() + h.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (w > v) u.add_edge(v, w);
    const int off = g.vertex_count();
    for (int v = 0; v < h.vertex_count(); ++v)
        for (int w : h.neighbors(v))
            if (w > v) u.add_edge(off + v, off + w);
    return u;
}

Graph strong_product(const Graph& g, const Graph& h) {
    const long long ng = g.vertex_count(), nh = h.vertex_count();
    if (ng * nh > static_cast<long long>(std::numeric_limits<int>::max()))
        throw SizeLimitError("strong product too large");
    Graph p(static_cast<int>(ng * nh));
    for (int u = 0; u < ng; ++u) {
        for (int a = 0; a < nh; ++a) {
            const int x = static_cast<int>(u * nh + a);
            // same first coordinate, adjacent second
            for (int b : h.neighbors(a))
                if (b > a) p.add_edge(x, static_cast<int>(u * nh + b));
            // adjacent first coordinate, equal or adjacent second
            for (int v : g.neighbors(u)) {
                if (v < u) continue;
                p.add_edge(x, static_cast<int>(v * nh + a));
                for (int b : h.neighbors(a)) p.add_edge(x, static_cast<int>(v * nh + b));
            }
        }
    }
    return p;
}

Graph strong_power(const Graph& g, int n, long long vertex_cap) {
    if (n < 1) throw std::invalid_argument("power must be >= 1");
    long long count = 1;
    for (int i = 0; i < n; ++i) {
        count *= g.vertex_count();
        if (count > vertex_cap)
            throw SizeLimitError("strong power exceeds vertex cap of " +
                                 std::to_string(vertex_cap));
    }
    Graph p = g;
    for (int i = 1; i < n; ++i) p = strong_product(p, g);
    return p;
}

ComponentPartition connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    ComponentPartition part;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(part.components.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        part.components.push_back(std::move(members));
    }
    std::stable_sort(part.components.begin(), part.components.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (const auto& c : part.components)
        part.sizes.push_back(static_cast<int>(c.size()));
    return part;
}

std::optional<int> regular_degree(const Graph& g) {
    const int r = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != r) return std::nullopt;
    return r;
}

bool subsets_adjacent(const Graph& g, const std::vector<int>& s1,
                      const std::vector<int>& s2) {
    for (int u : s1)
        for (int v : s2)
            if (u == v) throw std::invalid_argument("subsets must be disjoint");
    for (int u : s1)
        for (int v : s2)
            if (g.adjacent(u, v)) return true;
    return false;
}

std::optional<std::vector<int>> as_clique_union(const Graph& g) {
    auto part = connected_components(g);
    std::vector<int> sizes;
    for (const auto& c : part.components) {
        const int k = static_cast<int>(c.size());
        for (int v : c)
            if (g.degree(v) != k - 1) return std::nullopt;
        sizes.push_back(k);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace rhocap
