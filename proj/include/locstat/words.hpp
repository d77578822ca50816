#pragma once

#include "locstat/util.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace locstat {

// A letter of F_d: +i encodes a_i, -i encodes a_i^-1 (1-based i).
using Letter = int;

inline Letter letter_inverse(Letter l) { return -l; }

// Fixed alphabet order a_1 < a_1^-1 < a_2 < a_2^-1 < ...; used for word
// ordering and for label bit positions in canonical codes.
inline int letter_rank(Letter l) {
    const int i = l > 0 ? l : -l;
    return (i - 1) * 2 + (l < 0 ? 1 : 0);
}

inline Letter letter_from_rank(int rank) {
    const int i = rank / 2 + 1;
    return (rank % 2) ? -i : i;
}

// Freely reduced word over {a_1..a_d}^{+-1}. Empty = identity.
struct ReducedWord {
    std::vector<Letter> letters;

    ReducedWord() = default;
    explicit ReducedWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

    // Free reduction of an arbitrary letter sequence.
    static ReducedWord reduce(const std::vector<Letter>& raw);

    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }

    ReducedWord inverse() const;
    // Reduced product this * other.
    ReducedWord concat(const ReducedWord& other) const;

    // Length-then-lex order by letter_rank.
    bool operator<(const ReducedWord& o) const;
    bool operator==(const ReducedWord& o) const { return letters == o.letters; }

    std::string str() const;  // e.g. "a1.A2.a1" (capital = inverse), "e" for identity
};

// The ball W_d(k): all reduced words of length <= k in length-then-lex order.
// Prefix property: the first |W_d(k-1)| entries equal W_d(k-1).
struct Window {
    int d = 0;
    int k = 0;
    std::vector<ReducedWord> words;
    std::map<std::vector<Letter>, int> index;

    int find(const ReducedWord& w) const {
        auto it = index.find(w.letters);
        return it == index.end() ? -1 : it->second;
    }
    std::size_t size() const { return words.size(); }
};

// |W_d(k)| = 1 + sum_{j=1..k} 2d (2d-1)^(j-1); throws CapExceeded past the cap.
std::shared_ptr<const Window> window(int d, int k, const Caps& caps = {});

// Small dynamic bitset over window indices; lexicographic-major word order.
struct WordSet {
    std::size_t nbits = 0;
    std::vector<std::uint64_t> limbs;

    WordSet() = default;
    explicit WordSet(std::size_t n) : nbits(n), limbs((n + 63) / 64, 0) {}

    bool test(std::size_t i) const { return (limbs[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { limbs[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { limbs[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    std::size_t count() const;

    // Restriction to the first n indices (window prefix).
    WordSet prefix(std::size_t n) const;

    bool operator==(const WordSet& o) const = default;
    bool operator<(const WordSet& o) const;  // arbitrary strict order for maps

    std::vector<int> indices() const;
};

}  // namespace locstat
