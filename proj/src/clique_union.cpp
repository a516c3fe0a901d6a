#include "rhocap/clique_union.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rhocap {

namespace {

constexpr double kRhoSlack = 1e-12;  // tolerance on domain endpoints

// Weighted mean (sum m_i^beta log2 m_i) / (sum m_i^beta); strictly increasing
// in beta when the sizes are not all equal.
double size_mean(const std::vector<int>& sizes, double beta) {
    double num = 0, den = 0;
    for (int m : sizes) {
        const double w = std::pow(static_cast<double>(m), beta);
        num += w * std::log2(static_cast<double>(m));
        den += w;
    }
    return num / den;
}

double log_power_sum(const std::vector<int>& sizes, double beta) {
    double sum = 0;
    for (int m : sizes) sum += std::pow(static_cast<double>(m), beta);
    return std::log2(sum);
}

}  // namespace

CliqueUnion::CliqueUnion(std::vector<int> s) : sizes(std::move(s)) {
    if (sizes.empty()) throw std::invalid_argument("empty clique union");
    for (int m : sizes)
        if (m < 1) throw std::invalid_argument("clique sizes must be positive");
    std::sort(sizes.begin(), sizes.end());
}

long long CliqueUnion::vertex_count() const {
    long long total = 0;
    for (int m : sizes) total += m;
    return total;
}

bool CliqueUnion::uniform() const { return sizes.front() == sizes.back(); }

double CliqueUnion::log_m() const {
    return std::log2(static_cast<double>(vertex_count()));
}

double renyi_entropy(const std::vector<double>& probs, double beta) {
    if (beta < 0) throw std::domain_error("Renyi order must be nonnegative");
    if (std::abs(beta - 1.0) < 1e-9) {
        double h = 0;
        for (double p : probs)
            if (p > 0) h -= p * std::log2(p);
        return h;
    }
    double sum = 0;
    for (double p : probs)
        if (p > 0) sum += std::pow(p, beta);
    return std::log2(sum) / (1.0 - beta);
}

double binary_entropy(double p) {
    if (p < 0 || p > 1) throw std::domain_error("p must be in [0,1]");
    double h = 0;
    if (p > 0) h -= p * std::log2(p);
    if (p < 1) h -= (1 - p) * std::log2(1 - p);
    return h;
}

double binary_kl(double q, double p) {
    if (q < 0 || q > 1) throw std::domain_error("q must be in [0,1]");
    if (p <= 0 || p >= 1) {
        if (p == q) return 0;
        throw std::domain_error("binary_kl needs p in (0,1)");
    }
    double d = 0;
    if (q > 0) d += q * std::log2(q / p);
    if (q < 1) d += (1 - q) * std::log2((1 - q) / (1 - p));
    return d;
}

double free_lunch_point(const CliqueUnion& cu) {
    double sum = 0;
    for (int m : cu.sizes) sum += std::log2(static_cast<double>(m));
    return sum / cu.component_count();
}

double packing_point(const CliqueUnion& cu) {
    double sum = 0;
    for (int m : cu.sizes) sum += m * std::log2(static_cast<double>(m));
    return sum / static_cast<double>(cu.vertex_count());
}

BetaSolution beta_for_rho(const CliqueUnion& cu, double rho) {
    if (cu.uniform())
        throw std::domain_error("beta root is undefined for a uniform clique union");
    const double lo = free_lunch_point(cu), hi = packing_point(cu);
    if (rho < lo - kRhoSlack || rho > hi + kRhoSlack)
        throw std::domain_error("rho outside the corner interval");
    rho = std::clamp(rho, lo, hi);
    double a = 0.0, b = 1.0;
    for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
        const double mid = 0.5 * (a + b);
        if (size_mean(cu.sizes, mid) < rho)
            a = mid;
        else
            b = mid;
    }
    BetaSolution sol;
    sol.rho = rho;
    sol.beta = 0.5 * (a + b);
    sol.value = log_power_sum(cu.sizes, sol.beta) - sol.beta * rho;
    return sol;
}

double capacity(const CliqueUnion& cu, double rho) {
    const double logm = cu.log_m();
    if (rho < -kRhoSlack || rho > logm + kRhoSlack)
        throw std::domain_error("rho outside [0, log m]");
    rho = std::clamp(rho, 0.0, logm);
    const double logs = std::log2(static_cast<double>(cu.component_count()));
    if (cu.uniform()) return std::min(logs, logm - rho);
    if (rho <= free_lunch_point(cu)) return logs;
    if (rho >= packing_point(cu)) return logm - rho;
    return beta_for_rho(cu, rho).value;
}

double conjugate(const CliqueUnion& cu, double gamma) {
    if (gamma < -1 - kRhoSlack || gamma > kRhoSlack)
        throw std::domain_error("gamma outside [-1, 0]");
    return -log_power_sum(cu.sizes, -gamma);
}

double derivative(const CliqueUnion& cu, double rho) {
    if (cu.uniform())
        throw std::domain_error(
            "derivative is undefined at the corner of a uniform clique union");
    const double logm = cu.log_m();
    if (rho < -kRhoSlack || rho > logm + kRhoSlack)
        throw std::domain_error("rho outside [0, log m]");
    if (rho <= free_lunch_point(cu)) return 0.0;
    if (rho >= packing_point(cu)) return -1.0;
    return -beta_for_rho(cu, rho).beta;
}

double family_lower_bound(const std::vector<int>& family_sizes, int t, double rho) {
    if (t < 1) throw std::invalid_argument("power t must be >= 1");
    CliqueUnion cu(family_sizes);
    const double scaled = t * rho;
    if (scaled < -kRhoSlack || scaled > cu.log_m() + kRhoSlack)
        throw std::domain_error("t*rho exceeds the family mass; bound is vacuous");
    return capacity(cu, scaled) / t;
}

double cover_upper_bound(const std::vector<int>& cover_sizes, double rho) {
    return capacity(CliqueUnion(cover_sizes), rho);
}

}  // namespace rhocap
