#ifndef RHOCAP_GRAPH_HPP
#define RHOCAP_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

namespace rhocap {

// Finite simple graph. Vertices are 0-indexed internally; all text I/O is
// 1-indexed (see graph_io.hpp). Immutable once built.
class Graph {
public:
    explicit Graph(int n, std::string name = "");

    int vertex_count() const { return n_; }
    long long edge_count() const { return edges_; }
    const std::string& name() const { return name_; }

    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);

    // Sorted neighbor list of v.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::vector<int> degrees() const;

private:
    int n_;
    long long edges_ = 0;
    std::vector<std::vector<int>> adj_;
    std::string name_;
};

// Builders ------------------------------------------------------------------

Graph complete_graph(int m);
Graph empty_graph(int m);
Graph cycle_graph(int m);
// Complete graph on m vertices minus a clique on the first d vertices.
Graph clique_minus_clique(int m, int d);
// Disjoint union of cliques with the given sizes, laid out in order.
Graph clique_union_graph(const std::vector<int>& sizes);

// Composition ---------------------------------------------------------------

Graph disjoint_union(const Graph& g, const Graph& h);

// Strong product. Vertex (i, j) of G x H is encoded as i * |V(H)| + j, so
// repeated products have a deterministic mixed-radix vertex order.
Graph strong_product(const Graph& g, const Graph& h);

// n-fold strong product. Throws SizeLimitError when the product would exceed
// vertex_cap vertices.
Graph strong_power(const Graph& g, int n, long long vertex_cap = 1000000);

// Queries -------------------------------------------------------------------

struct ComponentPartition {
    std::vector<std::vector<int>> components;  // sorted by size descending
    std::vector<int> sizes;
};

ComponentPartition connected_components(const Graph& g);

// Degree r when the graph is regular, nullopt otherwise.
std::optional<int> regular_degree(const Graph& g);

// True iff some edge crosses between the disjoint subsets s1 and s2.
bool subsets_adjacent(const Graph& g, const std::vector<int>& s1,
                      const std::vector<int>& s2);

// Component sizes (ascending) when every connected component is a clique,
// nullopt otherwise.
std::optional<std::vector<int>> as_clique_union(const Graph& g);

// Thrown when a construction or solver exceeds its configured cap.
class SizeLimitError : public std::exception {
public:
    explicit SizeLimitError(std::string what) : what_(std::move(what)) {}
    const char* what() const noexcept override { return what_.c_str(); }

private:
    std::string what_;
};

}  // namespace rhocap

#endif
