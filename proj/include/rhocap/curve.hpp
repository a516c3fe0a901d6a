#ifndef RHOCAP_CURVE_HPP
#define RHOCAP_CURVE_HPP

#include <string>
#include <vector>

#include "rhocap/clique_union.hpp"
#include "rhocap/graph.hpp"
#include "rhocap/independence.hpp"

namespace rhocap {

enum class CurveKind { lower, upper, exact };

std::string to_string(CurveKind kind);
CurveKind curve_kind_from_string(const std::string& s);

// Sampled capacity curve on [0, log_m], evaluated by linear interpolation.
struct CapacityCurve {
    double log_m = 0;
    std::vector<double> grid;    // strictly increasing, from 0 to log_m
    std::vector<double> values;  // bits, finite and >= 0
    CurveKind kind = CurveKind::lower;
};

// Provenance record for a bound contribution.
struct BoundCertificate {
    std::string theorem;
    std::string witness;
    int t = 1;
};

double evaluate(const CapacityCurve& curve, double rho);

// Uniform grid on [0, log_m] with the given extra abscissas inserted exactly
// (corner points are where capacity curves kink).
std::vector<double> make_grid(double log_m, int samples = 1025,
                              std::vector<double> extra = {});

// Exact closed-form curve of a disjoint union of cliques.
CapacityCurve exact_clique_union_curve(const CliqueUnion& cu, int samples = 1025);

// Time-sharing lower bound and min(c0_upper, log m - rho) upper bound from
// Shannon-capacity bounds c0_lower <= C(G) <= c0_upper.
std::pair<CapacityCurve, CapacityCurve> trivial_bounds(long long m, double c0_lower,
                                                       double c0_upper,
                                                       int samples = 1025);

// Upper concave hull of the union of lower-bound curves and anchor points,
// resampled on a common grid. Anchors (log_m, 0) and the best value at 0 are
// always included.
CapacityCurve concave_envelope(const std::vector<CapacityCurve>& curves,
                               const std::vector<std::pair<double, double>>& anchors,
                               double log_m, int samples = 1025);

// Running minimum in rho, then the chord through (log_m, 0): any upper bound
// value at rho1 caps everything left of it along the time-sharing line.
CapacityCurve tighten_upper(const CapacityCurve& curve);

// Supremal convolution: lower bound for the strong product of the two graphs.
CapacityCurve sup_convolution(const CapacityCurve& c1, const CapacityCurve& c2);

// Exact curve of G x K_m from the exact curve of G.
CapacityCurve product_with_clique(const CapacityCurve& curve, int m);

// Exact curve of G + G from the exact curve of G.
CapacityCurve double_union(const CapacityCurve& curve);

// Lower bound for G + H via time sharing across the union.
CapacityCurve union_lower_bound(const CapacityCurve& c1, long long m1,
                                const CapacityCurve& c2, long long m2,
                                int p_samples = 513);

// Exact curve of G + K_m2 from the exact curve of G (m1 vertices).
CapacityCurve union_with_clique(const CapacityCurve& g_curve, long long m1,
                                long long m2, int p_samples = 513);

// Concave conjugate min over the grid of gamma*rho - value(rho).
double conjugate_numeric(const CapacityCurve& curve, double gamma);

// Exact packing point log m - H(component-size distribution).
double packing_point_exact(const Graph& g);

// Certified free-lunch lower bound from an independent family of G^t whose
// size attains the Shannon-capacity lower bound.
double free_lunch_lower(const Graph& g, const VertexFamily& family, int t);

// True iff the graph is a disjoint union of equal-size cliques.
bool uniform_clique_union_test(const Graph& g);

}  // namespace rhocap

#endif
