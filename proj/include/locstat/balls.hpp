#pragma once

#include "locstat/graphs.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace locstat {

// Rooted ball, optionally edge-labeled by the standard generating set.
//
// Labels are stored as bit masks over ordered vertex pairs: mask(u,v) has bit
// letter_rank(l) set iff l labels the ordered pair (u,v). Label symmetry
// (a_i on (x,y) iff a_i^-1 on (y,x)) is an invariant. For unlabeled balls the
// mask is 1 for adjacency. Loops are allowed only in the labeled case.
//
// `radius` is the query radius the ball was extracted at (every vertex lies
// within that distance of the root and, for labeled balls, interior vertices
// carry full label information). The eccentricity may be smaller.
struct LabeledRootedBall {
    bool labeled = false;
    int d = 0;  // generator count when labeled
    int n = 0;
    int root = 0;
    int radius = 0;
    std::vector<std::uint32_t> mask;  // n*n, row-major: mask[u*n+v]

    std::uint32_t at(int u, int v) const { return mask[static_cast<std::size_t>(u) * n + v]; }
    void set(int u, int v, std::uint32_t m) { mask[static_cast<std::size_t>(u) * n + v] = m; }

    void validate() const;
    int eccentricity() const;  // max distance from root (labels/directions ignored)
    std::vector<int> distances_from_root() const;
};

// Byte string; equal codes iff root-and-label-preserving isomorphic.
using CanonicalCode = std::string;

// Lexicographically minimal rooted code over all distance-respecting vertex
// orderings (exhaustive backtracking with prefix pruning).
CanonicalCode canonical_code(const LabeledRootedBall& b);

// Inverse of canonical_code's serialization (any valid code, not only minimal ones).
LabeledRootedBall decode_ball(const CanonicalCode& code);

// Induced rooted ball of radius r around v; all edges between included
// vertices are kept.
LabeledRootedBall ball(const BoundedDegreeGraph& g, int v, int r);

// Rooted edge-labeled ball in a Schreier graph; loops and parallel labels
// preserved; distance ignores labels and directions.
LabeledRootedBall schreier_ball(const SchreierGraph& g, int v, int r);

std::string code_hex(const CanonicalCode& code);
CanonicalCode code_from_hex(const std::string& hex);

}  // namespace locstat
