#ifndef RHOCAP_SPECTRAL_HPP
#define RHOCAP_SPECTRAL_HPP

#include <utility>
#include <vector>

#include "rhocap/curve.hpp"
#include "rhocap/graph.hpp"

namespace rhocap {

// Smallest eigenvalue of the adjacency matrix, cyclic Jacobi iteration,
// absolute accuracy 1e-10. Deterministic. Requires at least one edge.
double smallest_eigenvalue(const Graph& g);

struct SpectralData {
    int m;         // vertices
    long long e;   // edges
    int r;         // degree
    double mu;     // smallest adjacency eigenvalue, <= -1
};

// Throws std::invalid_argument unless the graph is regular with e >= 1.
SpectralData spectral_data(const Graph& g);

// Shannon-capacity upper bound log2(m|mu| / (r + |mu|)).
double lovasz_baseline(const SpectralData& sd);
double lovasz_baseline(const Graph& g);

// Open rho-interval on which the rho-dependent bound applies.
std::pair<double, double> validity_interval(const SpectralData& sd);
std::pair<double, double> validity_interval(const Graph& g);

struct RegularBoundSolution {
    double rho;
    double p;      // in (0, r/(r+|mu|))
    double value;  // the bound, bits
};

// Root of Delta(q) = rho - (log((r+|mu|)/|mu|) + q log|mu| - D(q||r/(r+|mu|))/2),
// strictly decreasing in q. Requires rho strictly inside validity_interval.
RegularBoundSolution solve_p(const SpectralData& sd, double rho);
RegularBoundSolution solve_p(const Graph& g, double rho);

// log2 m - rho - D(p || r/(r+|mu|)) / 2 at the solved p.
double regular_upper_bound(const SpectralData& sd, double rho);
double regular_upper_bound(const Graph& g, double rho);

// Pointwise min of the baseline, log m - rho, and the rho-dependent bound
// where valid, tightened by a running minimum.
CapacityCurve regular_upper_curve(const Graph& g, int samples = 1025);

}  // namespace rhocap

#endif
