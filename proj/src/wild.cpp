#include <algorithm>
#include <numeric>

#include "pq/exact.hpp"
#include "pq/reconstruction.hpp"

namespace pq {

std::vector<std::vector<int>> UnfoldingTree::adjacency() const {
    std::vector<std::vector<int>> adj(label.size());
    for (int v = 1; v < size(); ++v) {
        adj[v].push_back(parent[v]);
        adj[parent[v]].push_back(v);
    }
    return adj;
}

bool tree_is_wild(const std::vector<std::vector<int>>& adj) {
    const int k = static_cast<int>(adj.size());
    std::vector<int> d(k);
    for (int v = 0; v < k; ++v) d[v] = static_cast<int>(adj[v].size());
    const int dmax = k ? *std::max_element(d.begin(), d.end()) : 0;
    if (dmax >= 5) return true;
    if (dmax == 4) return k > 5;  // the star with four arms of length one is extended D4
    std::vector<int> branch;
    for (int v = 0; v < k; ++v)
        if (d[v] == 3) branch.push_back(v);
    if (branch.empty()) return false;
    if (branch.size() >= 3) return true;
    if (branch.size() == 2) {
        // extended D_n: both branch points carry two leaves
        for (int b : branch) {
            int leaves = 0;
            for (int w : adj[b]) leaves += d[w] == 1;
            if (leaves < 2) return true;
        }
        return false;
    }
    const int c = branch.front();
    Rational s = 0;
    for (int w : adj[c]) {
        int len = 1, prev = c, cur = w;
        while (d[cur] == 2) {
            int nx = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nx;
            ++len;
        }
        s += Rational(1, len + 1);
    }
    return s < 1;
}

namespace {

struct Slot {
    int arrow;
    bool out;  // the arrow leaves the vertex owning the slot
    int other;
    int copy;
};

class WildSearch {
public:
    WildSearch(const Quiver& q, int cap) : q_(q), cap_(cap), slots_(q.n()) {
        const int n = q.n();
        int id = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int c = 0; c < q(i, j); ++c, ++id) {
                    slots_[i].push_back({id, true, j, c});
                    slots_[j].push_back({id, false, i, c});
                }
        biserial_ = is_biserial(q);
    }

    std::optional<UnfoldingTree> run() {
        for (int root = 0; root < q_.n(); ++root) {
            reset(root);
            if (rec(0, -1)) return witness();
        }
        return std::nullopt;
    }

private:
    // length-2 certificate; a nonregular middle vertex of a biserial quiver starts no relation either
    bool c2(int x, int y, int z) const {
        if (q_(z, x) == 0) return true;
        if (!biserial_) return false;
        return is_pq(q_, y, 1, 2) || is_pq(q_, y, 2, 1);
    }
    bool c3(int x, int, int, int w) const { return q_(w, x) == 0; }

    void reset(int root) {
        lab_ = {root};
        par_ = {-1};
        outward_ = {false};
        copy_ = {0};
        used_ = {{}};
        in_ = {{}};
        out_ = {{}};
        adj_ = {{}};
    }

    bool used(int node, int arrow, bool out) const {
        for (auto [a, o] : used_[node])
            if (a == arrow && o == out) return true;
        return false;
    }

    // every directed path through the new arrow a -> b of length 2 or 3 must be certified
    bool ok_new(int a, int b) const {
        auto L = [&](int v) { return lab_[v]; };
        for (int p : in_[a]) {
            if (!c2(L(p), L(a), L(b))) return false;
            for (int pp : in_[p]) {
                if (!c3(L(pp), L(p), L(a), L(b))) return false;
                if (!in_[pp].empty()) return false;
            }
        }
        for (int r : out_[b]) {
            if (!c2(L(a), L(b), L(r))) return false;
            for (int rr : out_[r]) {
                if (!c3(L(a), L(b), L(r), L(rr))) return false;
                if (!out_[rr].empty()) return false;
            }
        }
        for (int p : in_[a])
            for (int r : out_[b]) {
                if (!c3(L(p), L(a), L(b), L(r))) return false;
                if (!in_[p].empty() || !out_[r].empty()) return false;
            }
        return true;
    }

    bool rec(int lastp, int lasts) {
        const int size = static_cast<int>(lab_.size());
        if (size >= 4 && tree_is_wild(adj_)) return true;
        if (size == cap_) return false;
        for (int p = lastp; p < size; ++p) {
            const auto& sl = slots_[lab_[p]];
            for (int si = 0; si < static_cast<int>(sl.size()); ++si) {
                if (p == lastp && si <= lasts) continue;
                const Slot& s = sl[si];
                if (used(p, s.arrow, s.out)) continue;
                const int v = size;
                lab_.push_back(s.other);
                in_.emplace_back();
                out_.emplace_back();
                const bool ok = s.out ? ok_new(p, v) : ok_new(v, p);
                if (!ok) {
                    lab_.pop_back();
                    in_.pop_back();
                    out_.pop_back();
                    continue;
                }
                par_.push_back(p);
                outward_.push_back(s.out);
                copy_.push_back(s.copy);
                used_.push_back({{s.arrow, !s.out}});
                used_[p].push_back({s.arrow, s.out});
                adj_.push_back({p});
                adj_[p].push_back(v);
                if (s.out) {
                    out_[p].push_back(v);
                    in_[v].push_back(p);
                } else {
                    in_[p].push_back(v);
                    out_[v].push_back(p);
                }
                if (rec(p, si)) return true;
                if (s.out) out_[p].pop_back();
                else in_[p].pop_back();
                adj_[p].pop_back();
                adj_.pop_back();
                used_[p].pop_back();
                used_.pop_back();
                copy_.pop_back();
                outward_.pop_back();
                par_.pop_back();
                in_.pop_back();
                out_.pop_back();
                lab_.pop_back();
            }
        }
        return false;
    }

    UnfoldingTree witness() const {
        UnfoldingTree t{lab_, par_, outward_, copy_, {}};
        // record the directed paths of length 2 and 3 that were certified
        const int k = t.size();
        for (int a = 0; a < k; ++a)
            for (int b : out_[a])
                for (int c : out_[b]) {
                    t.certified.push_back({lab_[a], lab_[b], lab_[c]});
                    for (int d : out_[c]) t.certified.push_back({lab_[a], lab_[b], lab_[c], lab_[d]});
                }
        return t;
    }

    const Quiver& q_;
    int cap_;
    bool biserial_ = false;
    std::vector<std::vector<Slot>> slots_;
    std::vector<int> lab_, par_, copy_;
    std::vector<bool> outward_;
    std::vector<std::vector<std::pair<int, bool>>> used_;
    std::vector<std::vector<int>> in_, out_, adj_;
};

}  // namespace

std::optional<UnfoldingTree> wild_unfolding_filter(const Quiver& q, int cap) {
    if (cap < 1) return std::nullopt;
    return WildSearch(q, cap).run();
}

json tree_to_json(const UnfoldingTree& t) {
    json nodes = json::array(), edges = json::array(), cert = json::array();
    for (int v = 0; v < t.size(); ++v) nodes.push_back(t.label[v] + 1);
    for (int v = 1; v < t.size(); ++v) {
        int s = t.outward[v] ? t.parent[v] : v, d = t.outward[v] ? v : t.parent[v];
        edges.push_back({s + 1, d + 1});  // 1-based node positions
    }
    for (const auto& p : t.certified) {
        json a = json::array();
        for (int x : p) a.push_back(x + 1);
        cert.push_back(a);
    }
    return {{"nodes", nodes}, {"edges", edges}, {"certified_paths", cert}};
}

}  // namespace pq
