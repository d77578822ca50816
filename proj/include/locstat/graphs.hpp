#pragma once

#include "locstat/words.hpp"

#include <string>
#include <vector>

namespace locstat {

// Finite simple graph with a degree cap.
struct BoundedDegreeGraph {
    int n = 0;
    int delta = 0;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists

    static BoundedDegreeGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                         int delta = -1);  // delta < 0: use max degree
    void validate() const;  // simple, symmetric, degrees <= delta
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edge_list() const;  // u < v, sorted
    int edge_count() const;
    int max_degree() const;
};

// F_d action on {0..n-1} as d permutations; the Schreier edge labeling is
// derived on demand: a_i in c(x,y) iff perms[i][x] == y.
struct SchreierGraph {
    int n = 0;
    int d = 0;
    std::vector<std::vector<int>> perms;     // perms[i][v]
    std::vector<std::vector<int>> inv_perms;  // filled by finalize()

    static SchreierGraph from_perms(int d, std::vector<std::vector<int>> perms);
    void finalize();  // checks bijectivity, builds inverses

    int act_letter(Letter l, int v) const {
        const int i = (l > 0 ? l : -l) - 1;
        return l > 0 ? perms[i][v] : inv_perms[i][v];
    }
    // Right-to-left action: w = l_1 l_2 ... l_m sends v to l_1(...(l_m(v))).
    int act_word(const ReducedWord& w, int v) const {
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = act_letter(*it, v);
        return v;
    }
};

struct SchreierValidation {
    bool ok = true;
    std::string message;  // first violated axiom with witnesses
};

// Confirms both Schreier axioms for the labeling derived from the permutation
// data. The raw overload accepts arbitrary (possibly non-bijective) maps and
// reports the first violation with witnesses.
SchreierValidation validate_schreier(int n, int d, const std::vector<std::vector<int>>& perms);
SchreierValidation validate_schreier(const SchreierGraph& g);

}  // namespace locstat
