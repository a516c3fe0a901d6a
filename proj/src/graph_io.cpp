#include "rhocap/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rhocap {

namespace {

int parse_positive_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size() || v < 1) throw std::invalid_argument(what);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + what + ": '" + s + "'");
    }
}

}  // namespace

Graph parse_graph_text(std::istream& in) {
    std::string line;
    int n = -1;
    int lineno = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "p") {
            if (n >= 0)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": duplicate p line");
            if (!(ls >> n) || n < 1)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": bad vertex count");
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v))
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": bad edge line");
            edges.emplace_back(u, v);
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw std::invalid_argument("missing p line");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || u > n || v > n)
            throw std::invalid_argument("edge endpoint out of range");
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

std::vector<int> parse_union_sizes(const std::string& spec) {
    std::vector<int> sizes;
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto xpos = item.find('x');
        if (xpos == std::string::npos) {
            sizes.push_back(parse_positive_int(item, "clique size"));
        } else {
            int count = parse_positive_int(item.substr(0, xpos), "repetition count");
            int size = parse_positive_int(item.substr(xpos + 1), "clique size");
            for (int i = 0; i < count; ++i) sizes.push_back(size);
        }
    }
    if (sizes.empty()) throw std::invalid_argument("empty clique union spec");
    return sizes;
}

bool looks_like_builtin(const std::string& name) {
    if (name.rfind("U:", 0) == 0) return true;
    if (name.size() < 2) return false;
    if ((name[0] == 'C' || name[0] == 'K') && std::isdigit(name[1])) return true;
    return false;
}

Graph graph_from_name(const std::string& name) {
    if (name.rfind("U:", 0) == 0) {
        Graph g = clique_union_graph(parse_union_sizes(name.substr(2)));
        return g;
    }
    if (!name.empty() && name[0] == 'C')
        return cycle_graph(parse_positive_int(name.substr(1), "cycle size"));
    if (!name.empty() && name[0] == 'K') {
        auto dash = name.find("-K");
        if (dash == std::string::npos)
            return complete_graph(parse_positive_int(name.substr(1), "clique size"));
        int m = parse_positive_int(name.substr(1, dash - 1), "clique size");
        int d = parse_positive_int(name.substr(dash + 2), "removed clique size");
        return clique_minus_clique(m, d);
    }
    throw std::invalid_argument("unknown graph name '" + name + "'");
}

Graph load_graph(const std::string& source) {
    if (looks_like_builtin(source)) return graph_from_name(source);
    std::ifstream in(source);
    if (!in) throw std::invalid_argument("cannot open graph file '" + source + "'");
    return parse_graph_text(in);
}

namespace {

// "(a,b,...)" -> 0-indexed mixed-radix vertex; plain integer when power == 1.
int parse_vertex_token(const std::string& tok, int base_n, int power, int lineno) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + why +
                                    " in '" + tok + "'");
    };
    if (tok.front() == '(') {
        if (tok.back() != ')') fail("unterminated tuple");
        std::istringstream ts(tok.substr(1, tok.size() - 2));
        std::string coord;
        long long index = 0;
        int coords = 0;
        while (std::getline(ts, coord, ',')) {
            int a = parse_positive_int(coord, "vertex coordinate");
            if (a > base_n) fail("coordinate out of range");
            index = index * base_n + (a - 1);
            ++coords;
        }
        if (coords != power) fail("wrong tuple arity");
        return static_cast<int>(index);
    }
    if (power != 1) fail("expected a tuple for a power graph");
    int v = parse_positive_int(tok, "vertex");
    if (v > base_n) fail("vertex out of range");
    return v - 1;
}

}  // namespace

std::vector<std::vector<int>> parse_family_text(std::istream& in, int base_n,
                                                int power) {
    std::vector<std::vector<int>> subsets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        std::vector<int> subset;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            subset.push_back(parse_vertex_token(tok, base_n, power, lineno));
        }
        if (!subset.empty()) subsets.push_back(std::move(subset));
    }
    return subsets;
}

std::string format_family_text(const std::vector<std::vector<int>>& subsets,
                               int base_n, int power) {
    std::ostringstream out;
    for (const auto& subset : subsets) {
        bool first = true;
        for (int v : subset) {
            if (!first) out << ' ';
            first = false;
            if (power == 1) {
                out << v + 1;
            } else {
                std::vector<int> coords(power);
                int x = v;
                for (int i = power - 1; i >= 0; --i) {
                    coords[i] = x % base_n + 1;
                    x /= base_n;
                }
                out << '(';
                for (int i = 0; i < power; ++i) {
                    if (i) out << ',';
                    out << coords[i];
                }
                out << ')';
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace rhocap
