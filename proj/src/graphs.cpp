#include "locstat/graphs.hpp"

#include <algorithm>

namespace locstat {

BoundedDegreeGraph BoundedDegreeGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                                  int delta) {
    if (n < 0) throw ValidationError("graph: negative vertex count");
    BoundedDegreeGraph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw ValidationError("graph: edge endpoint out of range");
        if (u == v) throw ValidationError("graph: self-loop not allowed");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& row : g.adj) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw ValidationError("graph: parallel edge");
    }
    g.delta = delta >= 0 ? delta : g.max_degree();
    g.validate();
    return g;
}

void BoundedDegreeGraph::validate() const {
    if (static_cast<int>(adj.size()) != n) throw ValidationError("graph: adjacency size mismatch");
    for (int v = 0; v < n; ++v) {
        if (degree(v) > delta) throw ValidationError("graph: degree cap exceeded at vertex " + std::to_string(v));
        for (int u : adj[v]) {
            if (u < 0 || u >= n) throw ValidationError("graph: neighbor out of range");
            if (u == v) throw ValidationError("graph: self-loop");
            if (!std::binary_search(adj[u].begin(), adj[u].end(), v))
                throw ValidationError("graph: asymmetric adjacency");
        }
        if (!std::is_sorted(adj[v].begin(), adj[v].end())) throw ValidationError("graph: unsorted neighbor list");
    }
}

bool BoundedDegreeGraph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::pair<int, int>> BoundedDegreeGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int BoundedDegreeGraph::edge_count() const {
    int m = 0;
    for (const auto& row : adj) m += static_cast<int>(row.size());
    return m / 2;
}

int BoundedDegreeGraph::max_degree() const {
    int m = 0;
    for (const auto& row : adj) m = std::max(m, static_cast<int>(row.size()));
    return m;
}

SchreierGraph SchreierGraph::from_perms(int d, std::vector<std::vector<int>> perms) {
    SchreierGraph g;
    g.d = d;
    g.n = perms.empty() ? 0 : static_cast<int>(perms[0].size());
    g.perms = std::move(perms);
    g.finalize();
    return g;
}

void SchreierGraph::finalize() {
    if (d < 1) throw ValidationError("schreier: d must be >= 1");
    if (static_cast<int>(perms.size()) != d) throw ValidationError("schreier: expected d permutations");
    inv_perms.assign(d, std::vector<int>(n, -1));
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(perms[i].size()) != n) throw ValidationError("schreier: permutation size mismatch");
        for (int v = 0; v < n; ++v) {
            const int w = perms[i][v];
            if (w < 0 || w >= n) throw ValidationError("schreier: permutation value out of range");
            if (inv_perms[i][w] != -1)
                throw ValidationError("schreier: perms[" + std::to_string(i) + "] is not a bijection");
            inv_perms[i][w] = v;
        }
    }
}

SchreierValidation validate_schreier(int n, int d, const std::vector<std::vector<int>>& perms) {
    SchreierValidation res;
    if (static_cast<int>(perms.size()) != d) {
        res.ok = false;
        res.message = "expected " + std::to_string(d) + " permutations, got " + std::to_string(perms.size());
        return res;
    }
    // axiom 2: unique target per label = each map is a bijection
    std::vector<std::vector<int>> inv(d, std::vector<int>(n, -1));
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(perms[i].size()) != n) {
            res.ok = false;
            res.message = "perms[" + std::to_string(i) + "] has wrong length";
            return res;
        }
        for (int v = 0; v < n; ++v) {
            const int w = perms[i][v];
            if (w < 0 || w >= n || inv[i][w] != -1) {
                res.ok = false;
                res.message = "axiom (unique labeled target): perms[" + std::to_string(i) +
                              "] is not a bijection (witness vertex " + std::to_string(v) + ")";
                return res;
            }
            inv[i][w] = v;
        }
    }
    // axiom 1: a_i in c(x,y) iff a_i^-1 in c(y,x) for the derived labeling
    for (int i = 0; i < d; ++i) {
        for (int x = 0; x < n; ++x) {
            const int y = perms[i][x];
            if (inv[i][y] != x) {
                res.ok = false;
                res.message = "axiom (label symmetry): a_" + std::to_string(i + 1) + " on (" +
                              std::to_string(x) + "," + std::to_string(y) + ") has no inverse label back";
                return res;
            }
        }
    }
    return res;
}

SchreierValidation validate_schreier(const SchreierGraph& g) {
    return validate_schreier(g.n, g.d, g.perms);
}

}  // namespace locstat
