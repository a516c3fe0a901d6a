#include "rhocap/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rhocap {

namespace {

constexpr double kEps = 1e-12;
constexpr int kDefaultSamples = 1025;

void check_curve(const CapacityCurve& c) {
    if (c.grid.empty() || c.grid.size() != c.values.size())
        throw std::invalid_argument("malformed curve");
    if (std::abs(c.grid.front()) > kEps ||
        std::abs(c.grid.back() - c.log_m) > kEps)
        throw std::invalid_argument("curve grid must span [0, log_m]");
}

}  // namespace

std::string to_string(CurveKind kind) {
    switch (kind) {
        case CurveKind::lower: return "lower";
        case CurveKind::upper: return "upper";
        case CurveKind::exact: return "exact";
    }
    return "?";
}

CurveKind curve_kind_from_string(const std::string& s) {
    if (s == "lower") return CurveKind::lower;
    if (s == "upper") return CurveKind::upper;
    if (s == "exact") return CurveKind::exact;
    throw std::invalid_argument("unknown curve kind '" + s + "'");
}

double evaluate(const CapacityCurve& curve, double rho) {
    check_curve(curve);
    if (rho < -kEps || rho > curve.log_m + kEps)
        throw std::domain_error("rho outside the curve domain");
    rho = std::clamp(rho, curve.grid.front(), curve.grid.back());
    auto it = std::lower_bound(curve.grid.begin(), curve.grid.end(), rho);
    size_t j = static_cast<size_t>(it - curve.grid.begin());
    if (j < curve.grid.size() && std::abs(curve.grid[j] - rho) <= kEps)
        return curve.values[j];
    // rho is strictly between grid[j-1] and grid[j]
    const double x0 = curve.grid[j - 1], x1 = curve.grid[j];
    const double w = (rho - x0) / (x1 - x0);
    return (1 - w) * curve.values[j - 1] + w * curve.values[j];
}

std::vector<double> make_grid(double log_m, int samples, std::vector<double> extra) {
    if (log_m < 0) throw std::invalid_argument("negative domain");
    if (log_m < kEps) return {0.0};
    if (samples < 2) throw std::invalid_argument("need at least 2 samples");
    std::vector<double> grid;
    grid.reserve(samples + extra.size());
    for (int i = 0; i < samples; ++i)
        grid.push_back(log_m * i / (samples - 1));
    for (double x : extra)
        if (x > kEps && x < log_m - kEps) grid.push_back(x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-13; }),
               grid.end());
    grid.front() = 0.0;
    grid.back() = log_m;
    return grid;
}

CapacityCurve exact_clique_union_curve(const CliqueUnion& cu, int samples) {
    CapacityCurve c;
    c.log_m = cu.log_m();
    c.kind = CurveKind::exact;
    std::vector<double> extra{free_lunch_point(cu), packing_point(cu)};
    for (int m : cu.sizes) extra.push_back(std::log2(static_cast<double>(m)));
    c.grid = make_grid(c.log_m, samples, extra);
    c.values.reserve(c.grid.size());
    for (double rho : c.grid) c.values.push_back(capacity(cu, rho));
    return c;
}

std::pair<CapacityCurve, CapacityCurve> trivial_bounds(long long m, double c0_lower,
                                                       double c0_upper, int samples) {
    const double log_m = std::log2(static_cast<double>(m));
    if (c0_lower < -kEps || c0_lower > c0_upper + kEps || c0_upper > log_m + kEps)
        throw std::invalid_argument("need 0 <= c0_lower <= c0_upper <= log m");
    CapacityCurve lower, upper;
    lower.log_m = upper.log_m = log_m;
    lower.kind = CurveKind::lower;
    upper.kind = CurveKind::upper;
    lower.grid = make_grid(log_m, samples);
    upper.grid = make_grid(log_m, samples, {log_m - c0_upper});
    for (double rho : lower.grid)
        lower.values.push_back(log_m > 0 ? c0_lower / log_m * (log_m - rho) : 0.0);
    for (double rho : upper.grid)
        upper.values.push_back(std::min(c0_upper, log_m - rho));
    return {lower, upper};
}

CapacityCurve concave_envelope(const std::vector<CapacityCurve>& curves,
                               const std::vector<std::pair<double, double>>& anchors,
                               double log_m, int samples) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& c : curves) {
        check_curve(c);
        if (std::abs(c.log_m - log_m) > 1e-9)
            throw std::invalid_argument("curve domain mismatch in envelope");
        for (size_t i = 0; i < c.grid.size(); ++i)
            pts.emplace_back(c.grid[i], c.values[i]);
    }
    for (auto [x, y] : anchors) {
        if (x < -kEps || x > log_m + kEps)
            throw std::invalid_argument("anchor outside domain");
        pts.emplace_back(std::clamp(x, 0.0, log_m), y);
    }
    pts.emplace_back(log_m, 0.0);
    pts.emplace_back(0.0, 0.0);
    std::sort(pts.begin(), pts.end());
    // upper hull, left to right
    std::vector<std::pair<double, double>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            const double cross = (b.first - a.first) * (p.second - a.second) -
                                 (b.second - a.second) * (p.first - a.first);
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        while (!hull.empty() && std::abs(hull.back().first - p.first) < 1e-13)
            hull.pop_back();  // keep only the highest point per abscissa
        hull.push_back(p);
    }
    CapacityCurve env;
    env.log_m = log_m;
    env.kind = CurveKind::lower;
    std::vector<double> extra;
    for (const auto& h : hull) extra.push_back(h.first);
    env.grid = make_grid(log_m, samples, extra);
    size_t seg = 0;
    for (double rho : env.grid) {
        while (seg + 1 < hull.size() && hull[seg + 1].first < rho - kEps) ++seg;
        if (seg + 1 >= hull.size() || std::abs(hull[seg].first - rho) <= kEps) {
            env.values.push_back(hull[seg].second);
        } else {
            const auto& a = hull[seg];
            const auto& b = hull[seg + 1];
            const double w = (rho - a.first) / (b.first - a.first);
            env.values.push_back((1 - w) * a.second + w * b.second);
        }
    }
    return env;
}

CapacityCurve tighten_upper(const CapacityCurve& curve) {
    check_curve(curve);
    if (curve.kind != CurveKind::upper)
        throw std::invalid_argument("tighten_upper expects an upper-kind curve");
    CapacityCurve out = curve;
    // running minimum: capacity is non-increasing in rho
    for (size_t i = 1; i < out.values.size(); ++i)
        out.values[i] = std::min(out.values[i], out.values[i - 1]);
    // chord through (log_m, 0): value(rho) <= v1 * (log_m - rho) / (log_m - rho1)
    // for every rho1 > rho, i.e. a suffix minimum of v / (log_m - rho)
    const size_t n = out.values.size();
    double best_ratio = std::numeric_limits<double>::infinity();
    for (size_t i = n; i-- > 0;) {
        const double denom = out.log_m - out.grid[i];
        if (denom > kEps)
            out.values[i] = std::min(out.values[i], best_ratio * denom);
        if (denom > kEps)
            best_ratio = std::min(best_ratio, out.values[i] / denom);
    }
    return out;
}

CapacityCurve sup_convolution(const CapacityCurve& c1, const CapacityCurve& c2) {
    check_curve(c1);
    check_curve(c2);
    if (c1.kind == CurveKind::upper || c2.kind == CurveKind::upper)
        throw std::invalid_argument("sup_convolution expects lower/exact curves");
    CapacityCurve out;
    out.log_m = c1.log_m + c2.log_m;
    out.kind = CurveKind::lower;
    const int samples = static_cast<int>(std::max(c1.grid.size(), c2.grid.size()));
    out.grid = make_grid(out.log_m, std::max(samples, kDefaultSamples));
    out.values.reserve(out.grid.size());
    // The interpolants are piecewise linear, so the max over splits is
    // attained with one of the parts at a grid node of its curve.
    for (double rho : out.grid) {
        double best = -std::numeric_limits<double>::infinity();
        auto try_split = [&](double r1) {
            if (r1 < -kEps || r1 > c1.log_m + kEps) return;
            const double r2 = rho - std::clamp(r1, 0.0, c1.log_m);
            if (r2 < -kEps || r2 > c2.log_m + kEps) return;
            best = std::max(best, evaluate(c1, std::clamp(r1, 0.0, c1.log_m)) +
                                      evaluate(c2, std::clamp(r2, 0.0, c2.log_m)));
        };
        for (double r1 : c1.grid) try_split(r1);
        for (double r2 : c2.grid) try_split(rho - r2);
        try_split(rho - c2.log_m);
        try_split(rho);
        out.values.push_back(std::max(best, 0.0));
    }
    return out;
}

CapacityCurve product_with_clique(const CapacityCurve& curve, int m) {
    check_curve(curve);
    if (curve.kind != CurveKind::exact)
        throw std::invalid_argument("product_with_clique expects an exact curve");
    if (m < 1) throw std::invalid_argument("clique size must be positive");
    if (m == 1) return curve;
    const double shift = std::log2(static_cast<double>(m));
    CapacityCurve out;
    out.log_m = curve.log_m + shift;
    out.kind = CurveKind::exact;
    const double c0 = curve.values.front();
    // flat section on [0, log m), then the input curve shifted by log m;
    // the shifted section reuses the input grid so no value is interpolated
    const int flat = std::max(2, static_cast<int>(curve.grid.size() * shift /
                                                  std::max(out.log_m, kEps)));
    for (double rho : make_grid(shift, flat)) {
        if (rho >= shift - kEps) break;
        out.grid.push_back(rho);
        out.values.push_back(c0);
    }
    for (size_t i = 0; i < curve.grid.size(); ++i) {
        out.grid.push_back(shift + curve.grid[i]);
        out.values.push_back(curve.values[i]);
    }
    return out;
}

CapacityCurve double_union(const CapacityCurve& curve) {
    check_curve(curve);
    if (curve.kind != CurveKind::exact)
        throw std::invalid_argument("double_union expects an exact curve");
    CapacityCurve out;
    out.log_m = curve.log_m + 1.0;
    out.kind = CurveKind::exact;
    for (size_t i = 0; i < curve.grid.size(); ++i) {
        out.grid.push_back(curve.grid[i]);
        out.values.push_back(1.0 + curve.values[i]);
    }
    // tail 1 + log_m - rho on [log_m, 1 + log_m]
    const int tail = std::max(2, static_cast<int>(curve.grid.size() /
                                                  std::max(curve.log_m, 1.0)));
    auto tail_grid = make_grid(1.0, tail);
    for (size_t i = 1; i < tail_grid.size(); ++i) {
        out.grid.push_back(curve.log_m + tail_grid[i]);
        out.values.push_back(1.0 - tail_grid[i]);
    }
    return out;
}

namespace {

double union_delta(long long m1, long long m2) {
    const double l1 = std::log2(static_cast<double>(m1));
    const double l2 = std::log2(static_cast<double>(m2));
    return (m1 * l1 + m2 * l2) / static_cast<double>(m1 + m2);
}

}  // namespace

CapacityCurve union_lower_bound(const CapacityCurve& c1, long long m1,
                                const CapacityCurve& c2, long long m2,
                                int p_samples) {
    check_curve(c1);
    check_curve(c2);
    const double delta = union_delta(m1, m2);
    const double log_m = std::log2(static_cast<double>(m1 + m2));
    CapacityCurve out;
    out.log_m = log_m;
    out.kind = CurveKind::lower;
    const int samples = static_cast<int>(std::max(c1.grid.size(), c2.grid.size()));
    out.grid = make_grid(log_m, std::max(samples, kDefaultSamples), {delta});
    for (double rho : out.grid) {
        if (rho >= delta - kEps) {
            out.values.push_back(log_m - rho);
            continue;
        }
        double best = 0.0;
        for (int pi = 0; pi <= p_samples - 1; ++pi) {
            const double p = static_cast<double>(pi) / (p_samples - 1);
            if (p == 0.0) {
                if (rho <= c2.log_m + kEps)
                    best = std::max(best, evaluate(c2, std::min(rho, c2.log_m)));
                continue;
            }
            if (p == 1.0) {
                if (rho <= c1.log_m + kEps)
                    best = std::max(best, evaluate(c1, std::min(rho, c1.log_m)));
                continue;
            }
            for (double r1 : c1.grid) {
                const double r2 = (rho - p * r1) / (1 - p);
                if (r2 < -kEps || r2 > c2.log_m + kEps) continue;
                best = std::max(best, binary_entropy(p) + p * evaluate(c1, r1) +
                                          (1 - p) * evaluate(c2, std::clamp(r2, 0.0, c2.log_m)));
            }
        }
        out.values.push_back(best);
    }
    return out;
}

namespace {

// Best h(p) + p * C_{rho1}(G) over p with p*rho1 + (1-p)*log m2 >= rho.
// For fixed p the constraint pins rho1 to its smallest feasible value (the
// curve is non-increasing); the resulting objective is concave in p.
double union_clique_objective(const CapacityCurve& g_curve, double log_m2,
                              double rho, double p) {
    double rho1;
    if (p < 1e-15) {
        // subset choice carries everything; feasible iff log m2 >= rho
        return log_m2 >= rho - kEps ? 0.0 + binary_entropy(0.0) : -1.0;
    }
    rho1 = (rho - (1 - p) * log_m2) / p;
    if (rho1 > g_curve.log_m + kEps) return -1.0;  // infeasible
    rho1 = std::clamp(rho1, 0.0, g_curve.log_m);
    return binary_entropy(p) + p * evaluate(g_curve, rho1);
}

}  // namespace

CapacityCurve union_with_clique(const CapacityCurve& g_curve, long long m1,
                                long long m2, int p_samples) {
    check_curve(g_curve);
    if (g_curve.kind != CurveKind::exact)
        throw std::invalid_argument("union_with_clique expects an exact curve");
    const double log_m2 = std::log2(static_cast<double>(m2));
    const double delta = union_delta(m1, m2);
    const double log_m = std::log2(static_cast<double>(m1 + m2));
    CapacityCurve out;
    out.log_m = log_m;
    out.kind = CurveKind::exact;
    out.grid = make_grid(
        log_m,
        std::max(static_cast<int>(g_curve.grid.size()), kDefaultSamples), {delta});
    for (double rho : out.grid) {
        if (rho >= delta - kEps) {
            out.values.push_back(log_m - rho);
            continue;
        }
        double best = 0.0, best_p = 0.0;
        for (int pi = 0; pi < p_samples; ++pi) {
            const double p = static_cast<double>(pi) / (p_samples - 1);
            const double v = union_clique_objective(g_curve, log_m2, rho, p);
            if (v > best) {
                best = v;
                best_p = p;
            }
        }
        // golden-section polish around the grid optimum (objective is concave
        // on the feasible interval)
        const double cell = 1.0 / (p_samples - 1);
        double a = std::max(0.0, best_p - cell), b = std::min(1.0, best_p + cell);
        for (int it = 0; it < 80; ++it) {
            const double x1 = a + (b - a) / 3, x2 = b - (b - a) / 3;
            if (union_clique_objective(g_curve, log_m2, rho, x1) <
                union_clique_objective(g_curve, log_m2, rho, x2))
                a = x1;
            else
                b = x2;
        }
        best = std::max(best, union_clique_objective(g_curve, log_m2, rho,
                                                     0.5 * (a + b)));
        out.values.push_back(best);
    }
    return out;
}

double conjugate_numeric(const CapacityCurve& curve, double gamma) {
    check_curve(curve);
    if (gamma < -1 - kEps || gamma > kEps)
        throw std::domain_error("gamma outside [-1, 0]");
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < curve.grid.size(); ++i)
        best = std::min(best, gamma * curve.grid[i] - curve.values[i]);
    return best;
}

double packing_point_exact(const Graph& g) {
    const auto part = connected_components(g);
    const double m = g.vertex_count();
    std::vector<double> q;
    for (int s : part.sizes) q.push_back(s / m);
    double h = 0;
    for (double p : q)
        if (p > 0) h -= p * std::log2(p);
    return std::log2(m) - h;
}

double free_lunch_lower(const Graph& g, const VertexFamily& family, int t) {
    if (t < 1) throw std::invalid_argument("power t must be >= 1");
    const Graph power = t == 1 ? g : strong_power(g, t);
    auto check = check_independent_family(power, family.subsets);
    if (!check.ok)
        throw std::invalid_argument("family is not independent: " + check.reason);
    double sum = 0;
    for (const auto& subset : family.subsets)
        sum += std::log2(static_cast<double>(subset.size()));
    return sum / (t * static_cast<double>(family.subsets.size()));
}

bool uniform_clique_union_test(const Graph& g) {
    auto sizes = as_clique_union(g);
    return sizes && sizes->front() == sizes->back();
}

}  // namespace rhocap
