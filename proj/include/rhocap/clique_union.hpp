#ifndef RHOCAP_CLIQUE_UNION_HPP
#define RHOCAP_CLIQUE_UNION_HPP

#include <vector>

#include "rhocap/graph.hpp"

namespace rhocap {

// Disjoint union of cliques, identified by its multiset of clique sizes.
// The only graph class whose rho-capacity has a closed form here.
struct CliqueUnion {
    std::vector<int> sizes;  // sorted ascending

    explicit CliqueUnion(std::vector<int> s);

    int component_count() const { return static_cast<int>(sizes.size()); }
    long long vertex_count() const;
    bool uniform() const;  // all clique sizes equal

    double log_m() const;  // log2 of the vertex count, domain endpoint
};

// Entropy helpers (all rates in bits) ----------------------------------------

// Order-beta Renyi entropy; the Shannon entropy at beta == 1 (computed by the
// Shannon formula, not a numeric limit).
double renyi_entropy(const std::vector<double>& probs, double beta);
double binary_entropy(double p);
double binary_kl(double q, double p);

// Closed-form capacity --------------------------------------------------------

// Corner abscissas of the capacity curve: the largest rho at which the curve
// still equals log s, and the smallest rho from which it equals log m - rho.
double free_lunch_point(const CliqueUnion& cu);
double packing_point(const CliqueUnion& cu);

struct BetaSolution {
    double rho;    // bits
    double beta;   // in [0, 1]
    double value;  // capacity at rho, bits
};

// Solves (sum m_i^beta log m_i) / (sum m_i^beta) = rho for beta in [0, 1] by
// bisection (the map is strictly increasing in beta). Requires rho inside
// [free_lunch_point, packing_point] and non-uniform sizes.
BetaSolution beta_for_rho(const CliqueUnion& cu, double rho);

// Exact rho-capacity of the clique union at rho in [0, log m].
double capacity(const CliqueUnion& cu, double rho);

// Concave conjugate -log2 sum m_i^(-gamma), gamma in [-1, 0].
double conjugate(const CliqueUnion& cu, double gamma);

// d/drho of the capacity: 0 up to the free-lunch point, -1 past the packing
// point, -beta in between. Requires non-uniform sizes.
double derivative(const CliqueUnion& cu, double rho);

// Theorem-2 bounds for general graphs (both reduce to the closed form) -------

// Certified lower bound on C_rho(G) from an independent family of G^t with
// the given subset sizes: (1/t) * capacity(CliqueUnion(sizes), t*rho).
// Throws std::domain_error when t*rho exceeds log2 of the family mass
// (the bound is vacuous there).
double family_lower_bound(const std::vector<int>& family_sizes, int t, double rho);

// Upper bound on C_rho(G) from a vertex clique cover with the given clique
// sizes (which must sum to the vertex count of G).
double cover_upper_bound(const std::vector<int>& cover_sizes, double rho);

}  // namespace rhocap

#endif
