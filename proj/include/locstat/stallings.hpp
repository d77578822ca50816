#pragma once

#include "locstat/words.hpp"

#include <vector>

namespace locstat {

// Folded Stallings automaton of a finitely generated subgroup of F_d.
// Deterministic partial transitions per generator; membership = the word
// traces a loop at the base state.
struct StallingsGraph {
    int d = 0;
    int base = 0;
    // fwd[i][s] = target of a_{i+1} out of s, -1 if absent; bwd is the inverse.
    std::vector<std::vector<int>> fwd;
    std::vector<std::vector<int>> bwd;

    int num_states() const { return fwd.empty() ? 0 : static_cast<int>(fwd[0].size()); }
    // -1 when the trace dies.
    int trace(int state, const ReducedWord& w) const;
    bool member(const ReducedWord& w) const { return trace(base, w) == base; }
};

// Folds the wedge of generator loops.
StallingsGraph fold_subgroup(const std::vector<ReducedWord>& gens, int d);

// True iff w is in the subgroup generated by gens.
bool stallings_membership(const std::vector<ReducedWord>& gens, const ReducedWord& w, int d);

}  // namespace locstat
