#include "locstat/stallings.hpp"

#include <numeric>

namespace locstat {

int StallingsGraph::trace(int state, const ReducedWord& w) const {
    int cur = state;
    for (Letter l : w.letters) {
        const int i = (l > 0 ? l : -l) - 1;
        cur = (l > 0 ? fwd[i][cur] : bwd[i][cur]);
        if (cur < 0) return -1;
    }
    return cur;
}

namespace {

struct Folder {
    int d;
    std::vector<int> parent;
    // adjacency as a flat edge list (u, gen, v) meaning u -a_gen-> v
    struct Edge {
        int u, gen, v;
    };
    std::vector<Edge> edges;

    explicit Folder(int d_) : d(d_) { parent.push_back(0); }

    int fresh() {
        parent.push_back(static_cast<int>(parent.size()));
        return static_cast<int>(parent.size()) - 1;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[y] = x;
    }

    void add_loop(const ReducedWord& w) {
        int cur = 0;
        for (std::size_t j = 0; j < w.letters.size(); ++j) {
            const Letter l = w.letters[j];
            const int next = (j + 1 == w.letters.size()) ? 0 : fresh();
            if (l > 0)
                edges.push_back({cur, l - 1, next});
            else
                edges.push_back({next, -l - 1, cur});
            cur = next;
        }
    }

    // Iterated identification of equal-label edges at a state until the
    // automaton is deterministic in both directions.
    void fold() {
        bool changed = true;
        while (changed) {
            changed = false;
            std::map<std::pair<int, int>, int> out, in;
            for (const Edge& e : edges) {
                const int u = find(e.u), v = find(e.v);
                auto [ito, inserted_o] = out.try_emplace({u, e.gen}, v);
                if (!inserted_o && find(ito->second) != v) {
                    unite(find(ito->second), v);
                    changed = true;
                    break;
                }
                ito->second = v;
                auto [iti, inserted_i] = in.try_emplace({v, e.gen}, u);
                if (!inserted_i && find(iti->second) != u) {
                    unite(find(iti->second), u);
                    changed = true;
                    break;
                }
                iti->second = u;
            }
        }
    }

    StallingsGraph build() {
        fold();
        // compact states
        std::map<int, int> id;
        auto get = [&](int s) {
            const int r = find(s);
            auto it = id.find(r);
            if (it != id.end()) return it->second;
            const int nid = static_cast<int>(id.size());
            id[r] = nid;
            return nid;
        };
        StallingsGraph g;
        g.d = d;
        g.base = get(0);
        // touch all states so ids are assigned
        for (const Edge& e : edges) {
            get(e.u);
            get(e.v);
        }
        const int n = static_cast<int>(id.size());
        g.fwd.assign(d, std::vector<int>(n, -1));
        g.bwd.assign(d, std::vector<int>(n, -1));
        for (const Edge& e : edges) {
            const int u = get(e.u), v = get(e.v);
            g.fwd[e.gen][u] = v;
            g.bwd[e.gen][v] = u;
        }
        return g;
    }
};

}  // namespace

StallingsGraph fold_subgroup(const std::vector<ReducedWord>& gens, int d) {
    if (d < 1) throw ValidationError("fold_subgroup: d must be >= 1");
    Folder f(d);
    for (const auto& g : gens) {
        for (Letter l : g.letters)
            if (l == 0 || l > d || l < -d)
                throw ValidationError("fold_subgroup: letter outside alphabet");
        if (!g.empty()) f.add_loop(g);
    }
    return f.build();
}

bool stallings_membership(const std::vector<ReducedWord>& gens, const ReducedWord& w, int d) {
    return fold_subgroup(gens, d).member(w);
}

}  // namespace locstat
