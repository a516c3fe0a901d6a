#ifndef RHOCAP_PROFILE_HPP
#define RHOCAP_PROFILE_HPP

#include <string>
#include <vector>

#include "rhocap/curve.hpp"
#include "rhocap/graph.hpp"

#include <json.hpp>

namespace rhocap {

// Certified lower/upper bound pair with the provenance of every contribution.
struct BoundProfile {
    CapacityCurve lower;
    CapacityCurve upper;
    std::vector<BoundCertificate> certificates;
    double free_lunch_lower = 0;  // certified lower bound on rho*
    double packing = 0;           // exact rho_*
};

struct AggregateOptions {
    int samples = 1025;
    int power_cap = 2;                  // max t for auto-found families of G^t
    long long power_vertex_cap = 32;    // skip G^t beyond this many vertices
    int family_k_cap = 4;               // max subset size for auto families
    long long candidate_cap = 20000;    // skip k with too many k-subsets
    int clique_cover_cap = 20;
    double solver_timeout_s = 10;       // per exact-search call
    // Extra independent families (living in G^power) supplied by the caller.
    std::vector<VertexFamily> user_families;
};

// Bound pipeline for an arbitrary graph: exact closed form when the graph is
// a disjoint union of cliques, otherwise the concave envelope of family
// bounds against the tightened min of cover/spectral/trivial upper bounds.
BoundProfile aggregate(const Graph& g, const AggregateOptions& opts = {});

// Serialization per the curve JSON schema / CSV export -----------------------

nlohmann::json profile_to_json(const BoundProfile& profile);
BoundProfile profile_from_json(const nlohmann::json& j);
// Header "rho,lower,upper", one row per grid point, 12 significant digits.
std::string profile_to_csv(const BoundProfile& profile);

}  // namespace rhocap

#endif
