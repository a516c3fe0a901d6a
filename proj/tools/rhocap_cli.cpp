// Command-line front end: parse graphs, dispatch the library, emit JSON/CSV.
// Exit codes: 0 success, 2 input error, 3 cap or timeout, 4 rejection.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rhocap/clique_union.hpp"
#include "rhocap/curve.hpp"
#include "rhocap/graph_io.hpp"
#include "rhocap/independence.hpp"
#include "rhocap/oracle.hpp"
#include "rhocap/profile.hpp"
#include "rhocap/spectral.hpp"

namespace {

using nlohmann::json;
using namespace rhocap;

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitReject = 4;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file " + out_path);
    f << text;
}

json curve_to_json(const CapacityCurve& c,
                   const std::vector<BoundCertificate>& certs) {
    json j;
    j["log_m"] = c.log_m;
    j["grid"] = c.grid;
    j["lower"] = c.values;
    j["upper"] = c.values;
    j["kind"] = to_string(c.kind);
    auto arr = json::array();
    for (const auto& cert : certs)
        arr.push_back(
            {{"theorem", cert.theorem}, {"witness", cert.witness}, {"t", cert.t}});
    j["certificates"] = arr;
    return j;
}

std::string curve_to_csv(const CapacityCurve& c) {
    BoundProfile p;
    p.lower = c;
    p.upper = c;
    return profile_to_csv(p);
}

// Curve input for the algebra command: exact closed form for clique-union
// builtins, otherwise a previously emitted JSON curve file.
CapacityCurve load_curve(const std::string& source, int samples) {
    if (looks_like_builtin(source)) {
        const Graph g = load_graph(source);
        auto sizes = as_clique_union(g);
        if (!sizes)
            throw std::invalid_argument(
                source + " has no exact curve; pass a JSON curve file instead");
        return exact_clique_union_curve(CliqueUnion(*sizes), samples);
    }
    std::ifstream f(source);
    if (!f) throw std::invalid_argument("cannot open curve file " + source);
    json j = json::parse(f);
    return profile_from_json(j).lower;
}

long long vertex_count_of(const CapacityCurve& c) {
    return static_cast<long long>(std::llround(std::exp2(c.log_m)));
}

int cmd_alphak(const std::string& source, int k, int n, double timeout_s,
               long long max_power_vertices, const std::string& out_path) {
    const Graph base = load_graph(source);
    const Graph g = n == 1 ? base : strong_power(base, n, max_power_vertices);
    SolverOptions opts{timeout_s};
    try {
        VertexFamily fam = max_family(g, k, opts);
        std::ostringstream os;
        os << "graph " << source << " n=" << n << " k=" << k << "\n";
        os << "alpha_k = " << fam.subsets.size() << "\n";
        if (!fam.subsets.empty())
            os << "witness:\n"
               << format_family_text(fam.subsets, base.vertex_count(), n);
        write_output(out_path, os.str());
        return 0;
    } catch (const SolverTimeout& e) {
        std::cerr << e.what() << "; best lower bound = " << e.best_lower << "\n";
        return kExitCap;
    }
}

int cmd_curve(const std::string& source, int samples, double timeout_s,
              long long max_power_vertices, const std::string& format,
              const std::string& out_path) {
    const Graph g = load_graph(source);
    AggregateOptions opts;
    opts.samples = samples;
    opts.solver_timeout_s = timeout_s;
    opts.power_vertex_cap = std::min(opts.power_vertex_cap, max_power_vertices);
    const BoundProfile profile = aggregate(g, opts);
    if (format == "csv")
        write_output(out_path, profile_to_csv(profile));
    else
        write_output(out_path, profile_to_json(profile).dump(2) + "\n");
    return 0;
}

int cmd_points(const std::string& source, double timeout_s,
               const std::string& out_path) {
    const Graph g = load_graph(source);
    std::ostringstream os;
    if (auto sizes = as_clique_union(g)) {
        CliqueUnion cu(*sizes);
        os << "free_lunch = " << fmt(free_lunch_point(cu)) << " bits (exact)\n";
        os << "packing = " << fmt(packing_point(cu)) << " bits (exact)\n";
    } else {
        AggregateOptions opts;
        opts.solver_timeout_s = timeout_s;
        const BoundProfile profile = aggregate(g, opts);
        os << "free_lunch_lower = " << fmt(profile.free_lunch_lower)
           << " bits (certified)\n";
        os << "packing = " << fmt(profile.packing) << " bits (exact)\n";
    }
    os << "uniform_clique_union = "
       << (uniform_clique_union_test(g) ? "true" : "false") << "\n";
    write_output(out_path, os.str());
    return 0;
}

int cmd_verify(const std::string& source, const std::string& family_path, int n,
               long long max_power_vertices, const std::string& out_path) {
    const Graph base = load_graph(source);
    std::ifstream f(family_path);
    if (!f) throw std::invalid_argument("cannot open family file " + family_path);
    VertexFamily fam;
    fam.power = n;
    fam.subsets = parse_family_text(f, base.vertex_count(), n);
    const VerifyResult res = verify_broadcast_code(base, fam, max_power_vertices);
    if (!res.check.ok) {
        std::ostringstream os;
        os << "rejected: " << res.check.reason;
        if (res.check.first >= 0)
            os << " (subsets " << res.check.first + 1 << " and "
               << res.check.second + 1 << ")";
        os << "\n";
        write_output(out_path, os.str());
        return kExitReject;
    }
    std::ostringstream os;
    os << "accepted: n=" << res.n << " subsets=" << fam.subsets.size()
       << " rho=" << fmt(res.rho) << " bits rate=" << fmt(res.rate) << " bits\n";
    write_output(out_path, os.str());
    return 0;
}

int cmd_oracle(const std::string& source, int n, double rho,
               const std::string& out_path) {
    const Graph g = load_graph(source);
    auto sizes = as_clique_union(g);
    if (!sizes)
        throw std::invalid_argument("counting sums need a disjoint union of cliques");
    CliqueUnion cu(*sizes);
    if (rho < 0 || rho > cu.log_m())
        throw std::invalid_argument("rho must lie in [0, " + fmt(cu.log_m()) + "]");
    const MultinomialSums sums = multinomial_sums(*sizes, n, rho);
    json j;
    j["n"] = n;
    j["rho"] = rho;
    j["k"] = power_subset_size(rho, n);
    j["a_numerator"] = sums.a_numerator.str();
    j["b"] = sums.b.str();
    j["rate_a"] = sums.rate_a;
    j["rate_b"] = sums.rate_b;
    j["count_upper"] = count_upper_bound(sums, n, rho);
    const double exact = capacity(cu, rho);
    j["closed_form"] = exact;
    j["closed_form_gap_a"] = sums.rate_a - exact;
    j["closed_form_gap_b"] = exact - sums.rate_b;
    write_output(out_path, j.dump(2) + "\n");
    return 0;
}

int cmd_algebra(const std::string& op, const std::vector<std::string>& inputs,
                int m, int samples, int p_samples, const std::string& format,
                const std::string& out_path) {
    auto need = [&](size_t k) {
        if (inputs.size() != k)
            throw std::invalid_argument(op + " takes " + std::to_string(k) +
                                        " input curve(s)");
    };
    CapacityCurve result;
    std::vector<BoundCertificate> certs;
    if (op == "supconv") {
        need(2);
        const CapacityCurve a = load_curve(inputs[0], samples);
        const CapacityCurve b = load_curve(inputs[1], samples);
        result = sup_convolution(a, b);
        certs.push_back({"Thm5-supconv", inputs[0] + " x " + inputs[1], 1});
    } else if (op == "xclique") {
        need(1);
        if (m < 1) throw std::invalid_argument("xclique needs --m >= 1");
        result = product_with_clique(load_curve(inputs[0], samples), m);
        certs.push_back({"Thm6-xclique", inputs[0] + " x K" + std::to_string(m), 1});
    } else if (op == "doubleunion") {
        need(1);
        result = double_union(load_curve(inputs[0], samples));
        certs.push_back({"Thm7-doubleunion", inputs[0] + " + " + inputs[0], 1});
    } else if (op == "unionlower") {
        need(2);
        const CapacityCurve a = load_curve(inputs[0], samples);
        const CapacityCurve b = load_curve(inputs[1], samples);
        result = union_lower_bound(a, vertex_count_of(a), b, vertex_count_of(b),
                                   p_samples);
        certs.push_back({"Thm8-union", inputs[0] + " + " + inputs[1], 1});
    } else if (op == "unionclique") {
        need(1);
        if (m < 1) throw std::invalid_argument("unionclique needs --m >= 1");
        const CapacityCurve a = load_curve(inputs[0], samples);
        result = union_with_clique(a, vertex_count_of(a), m, p_samples);
        certs.push_back(
            {"Thm9-unionclique", inputs[0] + " + K" + std::to_string(m), 1});
    } else {
        throw std::invalid_argument(
            "unknown operation " + op +
            " (supconv, xclique, doubleunion, unionlower, unionclique)");
    }
    if (format == "csv")
        write_output(out_path, curve_to_csv(result));
    else
        write_output(out_path, curve_to_json(result, certs).dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rho-capacity curves, bounds, and exact verification"};
    app.require_subcommand(1);

    std::string source, out_path, format = "json", family_path, op;
    std::vector<std::string> inputs;
    int k = 1, n = 1, m = 0, samples = 1025, p_samples = 513;
    double rho = 0, timeout_s = 60;
    long long max_power_vertices = 1000000;

    auto* alphak = app.add_subcommand("alphak", "exact k-independence number");
    alphak->add_option("graph", source)->required();
    alphak->add_option("--k", k, "subset size");
    alphak->add_option("--n", n, "strong-power exponent");
    alphak->add_option("--timeout-s", timeout_s);
    alphak->add_option("--max-power-vertices", max_power_vertices);
    alphak->add_option("--out", out_path);

    auto* curve = app.add_subcommand("curve", "lower/upper capacity curves");
    curve->add_option("graph", source)->required();
    curve->add_option("--grid", samples, "grid samples");
    curve->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    curve->add_option("--timeout-s", timeout_s);
    curve->add_option("--max-power-vertices", max_power_vertices);
    curve->add_option("--out", out_path);

    auto* points = app.add_subcommand("points", "free-lunch and packing points");
    points->add_option("graph", source)->required();
    points->add_option("--timeout-s", timeout_s);
    points->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "check an independent family");
    verify->add_option("graph", source)->required();
    verify->add_option("family", family_path, "family text file")->required();
    verify->add_option("--n", n, "strong-power exponent");
    verify->add_option("--max-power-vertices", max_power_vertices);
    verify->add_option("--out", out_path);

    auto* oracle = app.add_subcommand("oracle", "exact counting sums for powers");
    oracle->add_option("graph", source)->required();
    oracle->add_option("--n", n, "block length")->required();
    oracle->add_option("--rho", rho, "rate in bits")->required();
    oracle->add_option("--out", out_path);

    auto* algebra = app.add_subcommand("algebra", "curve transforms");
    algebra->add_option("op", op)->required();
    algebra->add_option("inputs", inputs, "curves: builtin or JSON file");
    algebra->add_option("--m", m, "clique size");
    algebra->add_option("--grid", samples, "grid samples");
    algebra->add_option("--p-grid", p_samples, "time-sharing samples");
    algebra->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    algebra->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (alphak->parsed())
            return cmd_alphak(source, k, n, timeout_s, max_power_vertices, out_path);
        if (curve->parsed())
            return cmd_curve(source, samples, timeout_s, max_power_vertices, format,
                             out_path);
        if (points->parsed()) return cmd_points(source, timeout_s, out_path);
        if (verify->parsed())
            return cmd_verify(source, family_path, n, max_power_vertices, out_path);
        if (oracle->parsed()) return cmd_oracle(source, n, rho, out_path);
        if (algebra->parsed())
            return cmd_algebra(op, inputs, m, samples, p_samples, format, out_path);
    } catch (const SolverTimeout& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
