#include "rhocap/independence.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>

namespace rhocap {

namespace {

using Clock = std::chrono::steady_clock;

// Plain word-array bitset sized at runtime.
struct Mask {
    std::vector<std::uint64_t> w;
    explicit Mask(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool intersects(const Mask& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    void operator|=(const Mask& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
};

Mask closed_neighborhood(const Graph& g, const std::vector<int>& subset) {
    Mask m(g.vertex_count());
    for (int v : subset) {
        m.set(v);
        for (int u : g.neighbors(v)) m.set(u);
    }
    return m;
}

struct Candidate {
    std::vector<int> members;
    Mask vertices;
    Mask block;  // members plus their neighbors
};

// Exhaustive branch-and-bound over families of candidate subsets. Two
// candidates are compatible iff neither intersects the other's block mask,
// i.e. they are disjoint and non-adjacent.
class FamilySearch {
public:
    FamilySearch(std::vector<Candidate> candidates, int k, int n, double timeout_s)
        : cands_(std::move(candidates)),
          k_(k),
          n_(n),
          deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(timeout_s))) {}

    void run() {
        std::vector<int> all(cands_.size());
        std::iota(all.begin(), all.end(), 0);
        seed_greedy(all);
        chosen_.clear();
        extend(all);
    }

    int best_size() const { return static_cast<int>(best_.size()); }
    const std::vector<int>& best_family() const { return best_; }
    const Candidate& candidate(int i) const { return cands_[i]; }

private:
    void seed_greedy(const std::vector<int>& all) {
        std::vector<int> picked;
        // Disjoint + non-adjacent is equivalent to: picked blocks miss the new
        // subset's vertices (the relation is symmetric).
        Mask blocks(n_);
        for (int i : all) {
            if (blocks.intersects(cands_[i].vertices)) continue;
            picked.push_back(i);
            blocks |= cands_[i].block;
        }
        best_ = picked;
    }

    void extend(const std::vector<int>& allowed) {
        if (++nodes_ % 1024 == 0 && Clock::now() > deadline_)
            throw SolverTimeout("exact family search timed out",
                                static_cast<int>(best_.size()));
        if (chosen_.size() > best_.size()) best_ = chosen_;
        if (allowed.empty()) return;
        // Vertices still reachable through any allowed candidate.
        Mask avail(n_);
        for (int i : allowed) avail |= cands_[i].vertices;
        const size_t bound =
            chosen_.size() +
            std::min<size_t>(allowed.size(), static_cast<size_t>(avail.count() / k_));
        if (bound <= best_.size()) return;
        for (size_t pos = 0; pos < allowed.size(); ++pos) {
            const int c = allowed[pos];
            std::vector<int> next;
            next.reserve(allowed.size() - pos);
            for (size_t q = pos + 1; q < allowed.size(); ++q) {
                const int d = allowed[q];
                if (!cands_[c].block.intersects(cands_[d].vertices))
                    next.push_back(d);
            }
            chosen_.push_back(c);
            extend(next);
            chosen_.pop_back();
            if (chosen_.size() + (allowed.size() - pos - 1) <= best_.size()) break;
        }
    }

    std::vector<Candidate> cands_;
    int k_, n_;
    Clock::time_point deadline_;
    long long nodes_ = 0;
    std::vector<int> chosen_, best_;
};

// All k-subsets of the vertex set, vertices visited in degree-descending
// order so high-degree subsets are branched on early.
std::vector<Candidate> make_candidates(const Graph& g, int k) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<Candidate> cands;
    std::vector<int> pick(k);
    // lexicographic combinations over the reordered vertices
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Candidate c;
        for (int i = 0; i < k; ++i) c.members.push_back(order[idx[i]]);
        c.vertices = Mask(n);
        for (int v : c.members) c.vertices.set(v);
        c.block = closed_neighborhood(g, c.members);
        cands.push_back(std::move(c));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return cands;
}

}  // namespace

FamilyCheck check_independent_family(const Graph& g,
                                     const std::vector<std::vector<int>>& subsets) {
    FamilyCheck r;
    const int n = g.vertex_count();
    if (subsets.empty()) {
        r.ok = false;
        r.reason = "empty family";
        return r;
    }
    std::vector<int> owner(n, -1);
    for (size_t i = 0; i < subsets.size(); ++i) {
        if (subsets[i].empty()) {
            r.ok = false;
            r.first = static_cast<int>(i);
            r.reason = "subset " + std::to_string(i + 1) + " is empty";
            return r;
        }
        for (int v : subsets[i]) {
            if (v < 0 || v >= n) {
                r.ok = false;
                r.first = static_cast<int>(i);
                r.reason = "subset " + std::to_string(i + 1) +
                           " has out-of-range vertex " + std::to_string(v + 1);
                return r;
            }
            if (owner[v] == static_cast<int>(i)) {
                r.ok = false;
                r.first = static_cast<int>(i);
                r.reason = "subset " + std::to_string(i + 1) +
                           " lists vertex " + std::to_string(v + 1) + " twice";
                return r;
            }
            if (owner[v] >= 0) {
                r.ok = false;
                r.first = owner[v];
                r.second = static_cast<int>(i);
                r.reason = "subsets " + std::to_string(owner[v] + 1) + " and " +
                           std::to_string(i + 1) + " share vertex " +
                           std::to_string(v + 1);
                return r;
            }
            owner[v] = static_cast<int>(i);
        }
    }
    for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = i + 1; j < subsets.size(); ++j)
            for (int u : subsets[i])
                for (int v : subsets[j])
                    if (g.adjacent(u, v)) {
                        r.ok = false;
                        r.first = static_cast<int>(i);
                        r.second = static_cast<int>(j);
                        r.reason = "subsets " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1) + " are adjacent via " +
                                   std::to_string(u + 1) + "~" + std::to_string(v + 1);
                        return r;
                    }
    return r;
}

VertexFamily max_family(const Graph& g, int k, const SolverOptions& opts) {
    const int n = g.vertex_count();
    if (k < 1) throw std::invalid_argument("subset size must be at least 1");
    if (k > n) return {};  // no subset is large enough
    FamilySearch search(make_candidates(g, k), k, n, opts.timeout_s);
    search.run();
    VertexFamily fam;
    fam.power = 1;
    for (int c : search.best_family()) {
        auto members = search.candidate(c).members;
        std::sort(members.begin(), members.end());
        fam.subsets.push_back(std::move(members));
    }
    std::sort(fam.subsets.begin(), fam.subsets.end());
    return fam;
}

int alpha_k(const Graph& g, int k, const SolverOptions& opts) {
    return static_cast<int>(max_family(g, k, opts).subsets.size());
}

int alpha(const Graph& g, const SolverOptions& opts) { return alpha_k(g, 1, opts); }

namespace {

// Exact minimum proper coloring of the complement, i.e. minimum partition of
// V(G) into cliques. Sequential assignment with greedy seeding.
class CoverSearch {
public:
    CoverSearch(const Graph& g, double timeout_s)
        : g_(g),
          n_(g.vertex_count()),
          deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(timeout_s))) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        // complement-degree descending == degree ascending in G
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
        greedy_seed();
    }

    void run() {
        classes_.clear();
        assign(0);
    }

    std::vector<std::vector<int>> best() const { return best_; }

private:
    bool clique_compatible(const std::vector<int>& cls, int v) const {
        for (int u : cls)
            if (!g_.adjacent(u, v)) return false;
        return true;
    }

    void greedy_seed() {
        std::vector<std::vector<int>> classes;
        for (int v : order_) {
            bool placed = false;
            for (auto& cls : classes)
                if (clique_compatible(cls, v)) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            if (!placed) classes.push_back({v});
        }
        best_ = classes;
    }

    void assign(int pos) {
        if (++nodes_ % 4096 == 0 && Clock::now() > deadline_)
            throw SolverTimeout("clique cover search timed out",
                                static_cast<int>(best_.size()));
        if (classes_.size() >= best_.size()) return;
        if (pos == n_) {
            best_ = classes_;
            return;
        }
        const int v = order_[pos];
        for (auto& cls : classes_) {
            if (!clique_compatible(cls, v)) continue;
            cls.push_back(v);
            assign(pos + 1);
            cls.pop_back();
        }
        if (classes_.size() + 1 < best_.size()) {
            classes_.push_back({v});
            assign(pos + 1);
            classes_.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    Clock::time_point deadline_;
    long long nodes_ = 0;
    std::vector<int> order_;
    std::vector<std::vector<int>> classes_, best_;
};

}  // namespace

CliqueCover clique_cover(const Graph& g, int cap, const SolverOptions& opts) {
    if (g.vertex_count() > cap)
        throw SizeLimitError("clique cover cap of " + std::to_string(cap) +
                             " vertices exceeded");
    CoverSearch search(g, opts.timeout_s);
    search.run();
    CliqueCover cover;
    cover.cliques = search.best();
    for (auto& c : cover.cliques) std::sort(c.begin(), c.end());
    std::sort(cover.cliques.begin(), cover.cliques.end());
    return cover;
}

}  // namespace rhocap
