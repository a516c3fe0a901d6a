#include "rhocap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rhocap/clique_union.hpp"

namespace rhocap {

namespace {

// Cyclic Jacobi rotations on a dense symmetric matrix; converges
// quadratically, no randomized state.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const int n = static_cast<int>(a.size());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i][i];
    return eig;
}

}  // namespace

double smallest_eigenvalue(const Graph& g) {
    if (g.edge_count() < 1)
        throw std::invalid_argument("edgeless graph has no negative eigenvalue");
    const int n = g.vertex_count();
    if (n > 2048) throw SizeLimitError("eigensolver cap of 2048 vertices exceeded");
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) a[v][u] = 1.0;
    auto eig = jacobi_eigenvalues(std::move(a));
    return *std::min_element(eig.begin(), eig.end());
}

SpectralData spectral_data(const Graph& g) {
    auto r = regular_degree(g);
    if (!r) throw std::invalid_argument("spectral bound needs a regular graph");
    if (g.edge_count() < 1)
        throw std::invalid_argument("spectral bound needs at least one edge");
    SpectralData sd;
    sd.m = g.vertex_count();
    sd.e = g.edge_count();
    sd.r = *r;
    sd.mu = smallest_eigenvalue(g);
    return sd;
}

double lovasz_baseline(const SpectralData& sd) {
    const double amu = -sd.mu;
    return std::log2(sd.m * amu / (sd.r + amu));
}

double lovasz_baseline(const Graph& g) { return lovasz_baseline(spectral_data(g)); }

std::pair<double, double> validity_interval(const SpectralData& sd) {
    const double amu = -sd.mu;
    const double scale = std::log2((sd.r + amu) / amu);
    return {0.5 * scale, scale + sd.r / (sd.r + amu) * std::log2(amu)};
}

std::pair<double, double> validity_interval(const Graph& g) {
    return validity_interval(spectral_data(g));
}

namespace {

double delta_fn(const SpectralData& sd, double rho, double q) {
    const double amu = -sd.mu;
    const double p0 = sd.r / (sd.r + amu);
    return rho - (std::log2((sd.r + amu) / amu) + q * std::log2(amu) -
                  0.5 * binary_kl(q, p0));
}

}  // namespace

RegularBoundSolution solve_p(const SpectralData& sd, double rho) {
    const auto [lo, hi] = validity_interval(sd);
    if (rho <= lo || rho >= hi)
        throw std::domain_error("rho outside the open validity interval");
    const double amu = -sd.mu;
    const double p0 = sd.r / (sd.r + amu);
    double a = 0.0, b = p0;
    // Delta is strictly decreasing on [0, p0] with Delta(a) > 0 > Delta(b)
    for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
        const double mid = 0.5 * (a + b);
        if (delta_fn(sd, rho, mid) > 0)
            a = mid;
        else
            b = mid;
    }
    RegularBoundSolution sol;
    sol.rho = rho;
    sol.p = 0.5 * (a + b);
    sol.value = std::log2(static_cast<double>(sd.m)) - rho -
                0.5 * binary_kl(sol.p, p0);
    return sol;
}

RegularBoundSolution solve_p(const Graph& g, double rho) {
    return solve_p(spectral_data(g), rho);
}

double regular_upper_bound(const SpectralData& sd, double rho) {
    return solve_p(sd, rho).value;
}

double regular_upper_bound(const Graph& g, double rho) {
    return regular_upper_bound(spectral_data(g), rho);
}

CapacityCurve regular_upper_curve(const Graph& g, int samples) {
    const SpectralData sd = spectral_data(g);
    const double baseline = lovasz_baseline(sd);
    const auto [lo, hi] = validity_interval(sd);
    const double log_m = std::log2(static_cast<double>(sd.m));
    CapacityCurve curve;
    curve.log_m = log_m;
    curve.kind = CurveKind::upper;
    curve.grid = make_grid(log_m, samples, {lo, hi, log_m - baseline});
    for (double rho : curve.grid) {
        double v = std::min(baseline, log_m - rho);
        if (rho > lo && rho < hi) v = std::min(v, solve_p(sd, rho).value);
        curve.values.push_back(std::max(v, 0.0));
    }
    // C_rho is non-increasing, so the running minimum stays an upper bound
    for (size_t i = 1; i < curve.values.size(); ++i)
        curve.values[i] = std::min(curve.values[i], curve.values[i - 1]);
    return curve;
}

}  // namespace rhocap
