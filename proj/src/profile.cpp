#include "rhocap/profile.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "rhocap/clique_union.hpp"
#include "rhocap/independence.hpp"
#include "rhocap/spectral.hpp"

namespace rhocap {

namespace {

long long binomial_capped(int n, int k, long long cap) {
    long long b = 1;
    for (int i = 1; i <= k; ++i) {
        b = b * (n - k + i) / i;
        if (b > cap) return cap + 1;
    }
    return b;
}

// Resample a piecewise-linear curve on a superset grid (exact, no new error).
CapacityCurve resample(const CapacityCurve& c, const std::vector<double>& grid) {
    CapacityCurve out;
    out.log_m = c.log_m;
    out.kind = c.kind;
    out.grid = grid;
    out.values.reserve(grid.size());
    for (double rho : grid) out.values.push_back(evaluate(c, rho));
    return out;
}

std::vector<double> merged_grid(const std::vector<CapacityCurve>& curves,
                                double log_m, int samples) {
    std::vector<double> extra;
    for (const auto& c : curves)
        for (double x : c.grid) extra.push_back(x);
    return make_grid(log_m, samples, std::move(extra));
}

CapacityCurve pointwise_min(const std::vector<CapacityCurve>& curves, int samples) {
    CapacityCurve out;
    out.log_m = curves.front().log_m;
    out.kind = CurveKind::upper;
    out.grid = merged_grid(curves, out.log_m, samples);
    for (double rho : out.grid) {
        double v = std::numeric_limits<double>::infinity();
        for (const auto& c : curves) v = std::min(v, evaluate(c, rho));
        out.values.push_back(std::max(v, 0.0));
    }
    return out;
}

// Lower-bound curve on C_rho(G) from an independent family of G^t whose
// subset sizes are `sizes`: (1/t) capacity(CU(sizes), t*rho) where defined,
// zero beyond the family mass.
CapacityCurve family_curve(const std::vector<int>& sizes, int t, double log_m,
                           int samples) {
    CliqueUnion cu(sizes);
    CapacityCurve out;
    out.log_m = log_m;
    out.kind = CurveKind::lower;
    std::vector<double> extra{free_lunch_point(cu) / t, packing_point(cu) / t,
                              cu.log_m() / t};
    out.grid = make_grid(log_m, samples, std::move(extra));
    for (double rho : out.grid) {
        double v = 0.0;
        if (t * rho <= cu.log_m() + 1e-12)
            v = std::max(0.0, family_lower_bound(sizes, t, rho));
        out.values.push_back(v);
    }
    return out;
}

std::string size_summary(const std::vector<int>& sizes) {
    // compact "<count>x<size>" run-length form over the sorted multiset
    std::vector<int> sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < sorted.size()) {
        size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        if (!first) os << ",";
        first = false;
        if (j - i > 1) os << (j - i) << "x";
        os << sorted[i];
        i = j;
    }
    return os.str();
}

}  // namespace

BoundProfile aggregate(const Graph& g, const AggregateOptions& opts) {
    BoundProfile profile;
    profile.packing = packing_point_exact(g);

    if (auto sizes = as_clique_union(g)) {
        CliqueUnion cu(*sizes);
        CapacityCurve exact = exact_clique_union_curve(cu, opts.samples);
        profile.lower = exact;
        profile.upper = exact;
        profile.upper.kind = CurveKind::exact;
        profile.certificates.push_back(
            {"Thm2-exact", "clique union " + size_summary(*sizes), 1});
        profile.free_lunch_lower = free_lunch_point(cu);
        return profile;
    }

    const int n = g.vertex_count();
    const double log_m = std::log2(static_cast<double>(n));

    // --- lower-bound contributions -----------------------------------------
    std::vector<CapacityCurve> lower_curves;
    double best_c0 = 0.0;
    profile.free_lunch_lower = 0.0;

    struct Contribution {
        std::vector<int> sizes;
        int t;
    };
    std::vector<Contribution> contributions;

    for (int t = 1; t <= opts.power_cap; ++t) {
        long long vertices = 1;
        bool fits = true;
        for (int i = 0; i < t; ++i) {
            vertices *= n;
            if (vertices > opts.power_vertex_cap) {
                fits = false;
                break;
            }
        }
        if (!fits) break;
        const Graph gt = t == 1 ? g : strong_power(g, t, opts.power_vertex_cap);
        const int nt = gt.vertex_count();
        SolverOptions sopts{opts.solver_timeout_s};
        for (int k = 1; k <= std::min(nt, opts.family_k_cap); ++k) {
            if (binomial_capped(nt, k, opts.candidate_cap) > opts.candidate_cap)
                break;
            int count;
            bool exact_count = true;
            try {
                count = alpha_k(gt, k, sopts);
            } catch (const SolverTimeout& e) {
                count = e.best_lower;  // still a valid family size
                exact_count = false;
            }
            if (count < 1) continue;
            contributions.push_back({std::vector<int>(count, k), t});
            profile.certificates.push_back(
                {"Thm2-family",
                 std::string(exact_count ? "alpha_k" : "alpha_k lower bound (timeout)") +
                     "(G^" + std::to_string(t) + ", k=" + std::to_string(k) +
                     ") = " + std::to_string(count),
                 t});
        }
    }
    for (const auto& fam : opts.user_families) {
        const int t = fam.power;
        const Graph gt = t == 1 ? g : strong_power(g, t, opts.power_vertex_cap);
        auto check = check_independent_family(gt, fam.subsets);
        if (!check.ok)
            throw std::invalid_argument("user family rejected: " + check.reason);
        std::vector<int> sizes;
        for (const auto& s : fam.subsets) sizes.push_back(static_cast<int>(s.size()));
        contributions.push_back({sizes, t});
        profile.certificates.push_back(
            {"Thm2-family", "user family, sizes " + size_summary(sizes), t});
    }

    for (const auto& c : contributions) {
        lower_curves.push_back(family_curve(c.sizes, c.t, log_m, opts.samples));
        best_c0 = std::max(best_c0, std::log2(static_cast<double>(c.sizes.size())) /
                                        c.t);
    }
    // free-lunch lower bound from families attaining the best C_0 bound
    for (const auto& c : contributions) {
        const double c0 = std::log2(static_cast<double>(c.sizes.size())) / c.t;
        if (c0 < best_c0 - 1e-9) continue;
        double sum = 0;
        for (int sz : c.sizes) sum += std::log2(static_cast<double>(sz));
        profile.free_lunch_lower =
            std::max(profile.free_lunch_lower,
                     sum / (c.t * static_cast<double>(c.sizes.size())));
    }

    auto [trivial_lower, trivial_upper_unused] =
        trivial_bounds(n, best_c0, log_m, opts.samples);
    lower_curves.push_back(trivial_lower);
    profile.certificates.push_back(
        {"Prop5+alpha", "time sharing from C_0 >= " + std::to_string(best_c0), 1});

    profile.lower = concave_envelope(lower_curves, {{0.0, best_c0}}, log_m,
                                     opts.samples);

    // --- upper-bound contributions -----------------------------------------
    std::vector<CapacityCurve> upper_curves;
    double c0_upper = log_m;
    if (n <= opts.clique_cover_cap) {
        try {
            auto cover = clique_cover(g, opts.clique_cover_cap,
                                      SolverOptions{opts.solver_timeout_s});
            std::vector<int> sizes;
            for (const auto& cl : cover.cliques)
                sizes.push_back(static_cast<int>(cl.size()));
            CliqueUnion cu(sizes);
            CapacityCurve cover_curve;
            cover_curve.log_m = log_m;
            cover_curve.kind = CurveKind::upper;
            cover_curve.grid = make_grid(
                log_m, opts.samples, {free_lunch_point(cu), packing_point(cu)});
            for (double rho : cover_curve.grid)
                cover_curve.values.push_back(cover_upper_bound(sizes, rho));
            upper_curves.push_back(std::move(cover_curve));
            c0_upper = std::min(c0_upper,
                                std::log2(static_cast<double>(sizes.size())));
            profile.certificates.push_back(
                {"Thm2-cover", "clique cover " + size_summary(sizes), 1});
        } catch (const SolverTimeout&) {
            // an unfinished cover search certifies nothing
        }
    }
    if (regular_degree(g) && g.edge_count() >= 1) {
        upper_curves.push_back(regular_upper_curve(g, opts.samples));
        const SpectralData sd = spectral_data(g);
        c0_upper = std::min(c0_upper, lovasz_baseline(sd));
        std::ostringstream witness;
        witness << "r=" << sd.r << ", mu=" << sd.mu;
        profile.certificates.push_back({"Thm4-spectral", witness.str(), 1});
    }
    upper_curves.push_back(
        trivial_bounds(n, 0.0, std::max(c0_upper, 0.0), opts.samples).second);
    profile.certificates.push_back(
        {"Prop5-upper", "min(C_0 upper, log m - rho)", 1});

    profile.upper = tighten_upper(pointwise_min(upper_curves, opts.samples));

    // common grid so the profile serializes as one table
    auto grid = merged_grid({profile.lower, profile.upper}, log_m, opts.samples);
    profile.lower = resample(profile.lower, grid);
    profile.upper = resample(profile.upper, grid);
    return profile;
}

nlohmann::json profile_to_json(const BoundProfile& profile) {
    nlohmann::json j;
    j["log_m"] = profile.lower.log_m;
    j["grid"] = profile.lower.grid;
    j["lower"] = profile.lower.values;
    j["upper"] = profile.upper.values;
    j["kind"] = profile.lower.kind == CurveKind::exact &&
                        profile.upper.kind == CurveKind::exact
                    ? "exact"
                    : "bounds";
    j["free_lunch_lower"] = profile.free_lunch_lower;
    j["packing"] = profile.packing;
    auto certs = nlohmann::json::array();
    for (const auto& c : profile.certificates)
        certs.push_back({{"theorem", c.theorem}, {"witness", c.witness}, {"t", c.t}});
    j["certificates"] = certs;
    return j;
}

BoundProfile profile_from_json(const nlohmann::json& j) {
    BoundProfile p;
    const std::string kind = j.at("kind").get<std::string>();
    p.lower.log_m = p.upper.log_m = j.at("log_m").get<double>();
    p.lower.grid = p.upper.grid = j.at("grid").get<std::vector<double>>();
    p.lower.values = j.at("lower").get<std::vector<double>>();
    p.upper.values = j.at("upper").get<std::vector<double>>();
    if (kind == "bounds") {
        p.lower.kind = CurveKind::lower;
        p.upper.kind = CurveKind::upper;
    } else {
        // single-curve files carry one kind for both rows
        p.lower.kind = p.upper.kind = curve_kind_from_string(kind);
    }
    p.free_lunch_lower = j.value("free_lunch_lower", 0.0);
    p.packing = j.value("packing", 0.0);
    for (const auto& c : j.value("certificates", nlohmann::json::array()))
        p.certificates.push_back({c.at("theorem").get<std::string>(),
                                  c.at("witness").get<std::string>(),
                                  c.at("t").get<int>()});
    return p;
}

std::string profile_to_csv(const BoundProfile& profile) {
    std::ostringstream os;
    os << "rho,lower,upper\n";
    os.precision(12);
    for (size_t i = 0; i < profile.lower.grid.size(); ++i)
        os << profile.lower.grid[i] << ',' << profile.lower.values[i] << ','
           << profile.upper.values[i] << '\n';
    return os.str();
}

}  // namespace rhocap
