#ifndef RHOCAP_INDEPENDENCE_HPP
#define RHOCAP_INDEPENDENCE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "rhocap/graph.hpp"

namespace rhocap {

struct SolverOptions {
    double timeout_s = 60.0;
};

// Raised when an exact search runs out of time. Carries the best lower bound
// found so far; never returned as if it were the optimum.
class SolverTimeout : public std::runtime_error {
public:
    SolverTimeout(std::string what, int best)
        : std::runtime_error(std::move(what)), best_lower(best) {}
    int best_lower;
};

// Family of disjoint vertex subsets living in the power-th strong power of a
// base graph (power == 1 for the base graph itself).
struct VertexFamily {
    std::vector<std::vector<int>> subsets;
    int power = 1;
};

struct FamilyCheck {
    bool ok = true;
    // When !ok: indices of the offending subsets, or -1 for a malformed-input
    // diagnostic that does not involve a pair.
    int first = -1;
    int second = -1;
    std::string reason;
};

// True iff the subsets are pairwise disjoint and pairwise non-adjacent.
// Malformed input (out-of-range vertex, duplicate member) yields ok == false
// with a diagnostic, never a throw.
FamilyCheck check_independent_family(const Graph& g,
                                     const std::vector<std::vector<int>>& subsets);

inline bool is_independent_family(const Graph& g,
                                  const std::vector<std::vector<int>>& subsets) {
    return check_independent_family(g, subsets).ok;
}

// Exact independence number.
int alpha(const Graph& g, const SolverOptions& opts = {});

// Exact k-independence number: the maximum number of pairwise disjoint,
// pairwise non-adjacent vertex subsets of size >= k.
int alpha_k(const Graph& g, int k, const SolverOptions& opts = {});

// A maximum k-independent family, subsets trimmed to exactly k vertices and
// canonicalized (members sorted, subsets sorted lexicographically).
VertexFamily max_family(const Graph& g, int k, const SolverOptions& opts = {});

struct CliqueCover {
    std::vector<std::vector<int>> cliques;
};

// Minimum vertex clique cover via exact coloring of the complement graph.
// Exact-search cap on the vertex count (default 20).
CliqueCover clique_cover(const Graph& g, int cap = 20,
                         const SolverOptions& opts = {});

}  // namespace rhocap

#endif
