#include "rhocap/oracle.hpp"

#include "rhocap/clique_union.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rhocap {

double log2_big(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log2 of a non-positive integer");
    const auto bits = boost::multiprecision::msb(x);  // floor(log2 x)
    if (bits < 512) return std::log2(x.convert_to<double>());
    // keep the top 512 bits, shift the rest into the exponent
    const unsigned shift = static_cast<unsigned>(bits) - 511;
    const BigInt top = x >> shift;
    return std::log2(top.convert_to<double>()) + shift;
}

long long power_subset_size(double rho, int n) {
    if (rho < 0 || n < 1) throw std::domain_error("need rho >= 0 and n >= 1");
    return static_cast<long long>(std::ceil(std::exp2(rho * n) - 1e-9));
}

namespace {

struct SumState {
    const std::vector<int>& sizes;
    const std::vector<double>& log_sizes;
    std::vector<BigInt> factorial;  // 0..n
    int n;
    double budget;  // rho * n
    double tol;
    BigInt a_numerator = 0;
    BigInt b = 0;

    // Assign counts to components `idx`.. with `left` vertices remaining.
    // `weight` is sum of i_j log2 m_j so far, `coeff` the running multinomial
    // numerator n! / prod of chosen i_j!, `prod` the running prod of m_j^i_j.
    void recurse(size_t idx, int left, double weight, const BigInt& coeff,
                 const BigInt& prod) {
        if (idx + 1 == sizes.size()) {
            const double total = weight + left * log_sizes[idx];
            const BigInt multinomial = coeff / factorial[left];
            if (total <= budget + tol)
                a_numerator += multinomial * prod *
                               boost::multiprecision::pow(BigInt(sizes[idx]), left);
            if (total >= budget - tol) b += multinomial;
            return;
        }
        BigInt power = 1;
        for (int i = 0; i <= left; ++i) {
            recurse(idx + 1, left - i, weight + i * log_sizes[idx],
                    coeff / factorial[i], prod * power);
            power *= sizes[idx];
        }
    }
};

long long composition_count(int n, int s) {
    // C(n + s - 1, s - 1), capped to avoid overflow
    long long c = 1;
    for (int i = 1; i <= s - 1; ++i) {
        c = c * (n + i) / i;
        if (c > (1LL << 40)) return -1;
    }
    return c;
}

}  // namespace

MultinomialSums multinomial_sums(const std::vector<int>& sizes, int n, double rho) {
    if (sizes.empty()) throw std::invalid_argument("empty size list");
    for (int m : sizes)
        if (m < 1) throw std::invalid_argument("clique sizes must be positive");
    if (n < 1) throw std::domain_error("block length must be positive");
    const int s = static_cast<int>(sizes.size());
    const long long tuples = composition_count(n, s);
    if (tuples < 0 || tuples > 20000000)
        throw SizeLimitError("too many type classes for the counting sums");

    std::vector<double> log_sizes(sizes.size());
    for (size_t j = 0; j < sizes.size(); ++j)
        log_sizes[j] = std::log2(static_cast<double>(sizes[j]));

    SumState st{sizes, log_sizes, {}, n, rho * n, 1e-12 * std::max(1, n)};
    st.factorial.resize(n + 1);
    st.factorial[0] = 1;
    for (int i = 1; i <= n; ++i) st.factorial[i] = st.factorial[i - 1] * i;
    st.recurse(0, n, 0.0, st.factorial[n], 1);

    MultinomialSums out;
    out.a_numerator = st.a_numerator;
    out.b = st.b;
    out.rate_a = st.a_numerator > 0
                     ? log2_big(st.a_numerator) / n - rho
                     : -std::numeric_limits<double>::infinity();
    out.rate_b = st.b > 0 ? log2_big(st.b) / n
                          : -std::numeric_limits<double>::infinity();
    return out;
}

double count_upper_bound(const MultinomialSums& sums, int n, double rho) {
    double a = 0;
    if (sums.a_numerator > 0)
        a = std::floor(std::exp2(log2_big(sums.a_numerator) - rho * n) + 1e-9);
    return a + sums.b.convert_to<double>();
}

int alpha_k_power(const std::vector<int>& sizes, int n, double rho,
                  long long vertex_cap, const SolverOptions& opts) {
    const Graph base = clique_union_graph(sizes);
    const Graph gn = strong_power(base, n, vertex_cap);
    const long long k = power_subset_size(rho, n);
    if (k > gn.vertex_count()) return 0;
    return alpha_k(gn, static_cast<int>(k), opts);
}

SandwichCheck sandwich_check(const std::vector<int>& sizes, int n, double rho,
                             long long vertex_cap, const SolverOptions& opts) {
    SandwichCheck out;
    out.n = n;
    out.k = power_subset_size(rho, n);
    out.exact = alpha_k_power(sizes, n, rho, vertex_cap, opts);
    const MultinomialSums sums = multinomial_sums(sizes, n, rho);
    out.lower = sums.b.convert_to<double>();
    out.upper = count_upper_bound(sums, n, rho);
    out.ok = out.lower <= out.exact + 1e-9 && out.exact <= out.upper + 1e-9;
    return out;
}

std::vector<RatePoint> rate_convergence(const std::vector<int>& sizes,
                                        const std::vector<int>& ns, double rho) {
    std::vector<RatePoint> out;
    out.reserve(ns.size());
    const double exact = capacity(CliqueUnion(sizes), rho);
    for (int n : ns) {
        const MultinomialSums sums = multinomial_sums(sizes, n, rho);
        out.push_back({n, sums.rate_a, sums.rate_b, exact - sums.rate_b});
    }
    return out;
}

VerifyResult verify_broadcast_code(const Graph& base, const VertexFamily& family,
                                   long long vertex_cap) {
    VerifyResult out;
    out.n = family.power;
    if (family.power < 1) {
        out.check.ok = false;
        out.check.reason = "power must be at least 1";
        return out;
    }
    const Graph gn =
        family.power == 1 ? base : strong_power(base, family.power, vertex_cap);
    out.check = check_independent_family(gn, family.subsets);
    if (!out.check.ok) return out;
    if (family.subsets.empty()) {
        out.check.ok = false;
        out.check.reason = "empty family carries no code";
        return out;
    }
    size_t min_size = family.subsets.front().size();
    for (const auto& s : family.subsets) min_size = std::min(min_size, s.size());
    out.rho = std::log2(static_cast<double>(min_size)) / family.power;
    out.rate = std::log2(static_cast<double>(family.subsets.size())) / family.power;
    return out;
}

}  // namespace rhocap
