#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace locstat {

// Thrown when an enumeration or search exceeds its configured resource cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on violated preconditions / malformed inputs.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Resource caps for enumerations. Defaults are sized for desk-scale runs.
struct Caps {
    std::size_t max_window = 100000;            // words in a free-group ball
    std::size_t max_pseudo_subgroups = 500000;  // NextClosure output size
    std::size_t max_catalog = 500000;           // ball catalog entries
    unsigned long long max_graphs = 50000000;   // enumerated graphs / tuples
    std::size_t max_lp_branches = 4096;         // DNF branches in containment
    std::size_t max_net_iters = 10000;          // net construction rounds
};

// Deterministic RNG (splitmix64). Hand-rolled so corpora are identical
// across standard libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n >= 1.
    std::uint64_t uniform(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace locstat
