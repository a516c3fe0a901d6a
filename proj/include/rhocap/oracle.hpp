#ifndef RHOCAP_ORACLE_HPP
#define RHOCAP_ORACLE_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rhocap/graph.hpp"
#include "rhocap/independence.hpp"

namespace rhocap {

using BigInt = boost::multiprecision::cpp_int;

// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& x);

// ceil(2^(rho * n)), the subset-size target for the n-th power at rate rho.
long long power_subset_size(double rho, int n);

// Exact counting sums over the type classes of the n-th strong power of a
// clique union with the given sizes. With L(i) = sum_j i_j log2 m_j over
// compositions i of n:
//   a_numerator = sum of multinomial(n; i) * prod m_j^i_j over L(i) <= rho n,
//   b           = sum of multinomial(n; i)                over L(i) >= rho n.
// Ties (within 1e-12 * n) count on both sides. Then
//   b <= alpha_k(G^n) <= floor(a_numerator / 2^(rho n)) + b
// for k = ceil(2^(rho n)).
struct MultinomialSums {
    BigInt a_numerator;
    BigInt b;
    double rate_a;  // log2(a_numerator) / n - rho, upper-bound rate
    double rate_b;  // log2(b) / n, lower-bound rate (-inf when b == 0)
};

MultinomialSums multinomial_sums(const std::vector<int>& sizes, int n, double rho);

// floor(a_numerator / 2^(rho n)) + b as a double, the count upper bound.
double count_upper_bound(const MultinomialSums& sums, int n, double rho);

// Exact alpha_k of the n-th strong power of the clique union at
// k = power_subset_size(rho, n). Power capped at vertex_cap vertices.
int alpha_k_power(const std::vector<int>& sizes, int n, double rho,
                  long long vertex_cap = 64, const SolverOptions& opts = {});

struct SandwichCheck {
    int n;
    long long k;
    int exact;     // alpha_k(G^n), exact search
    double lower;  // b
    double upper;  // floor(A) + b
    bool ok;       // lower <= exact <= upper
};

// Exhaustive consistency check of the counting sums against the exact solver.
SandwichCheck sandwich_check(const std::vector<int>& sizes, int n, double rho,
                             long long vertex_cap = 64,
                             const SolverOptions& opts = {});

struct RatePoint {
    int n;
    double rate_a;
    double rate_b;
    double gap;  // closed-form capacity minus rate_b, shrinks as n grows
};

// Counting-sum rates for each block length in ns.
std::vector<RatePoint> rate_convergence(const std::vector<int>& sizes,
                                        const std::vector<int>& ns, double rho);

// Verification of a user-supplied family living in the power-th strong power
// of the base graph. When the family is valid, reports the operating point:
// rho = log2(min subset size) / n and rate = log2(family count) / n.
struct VerifyResult {
    FamilyCheck check;
    int n = 1;
    double rho = 0;
    double rate = 0;
};

VerifyResult verify_broadcast_code(const Graph& base, const VertexFamily& family,
                                   long long vertex_cap = 1000000);

}  // namespace rhocap

#endif
