#include "locstat/words.hpp"

#include <algorithm>

namespace locstat {

ReducedWord ReducedWord::reduce(const std::vector<Letter>& raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) {
        if (l == 0) throw ValidationError("letter 0 is not a generator");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return ReducedWord(std::move(out));
}

ReducedWord ReducedWord::inverse() const {
    std::vector<Letter> out(letters.rbegin(), letters.rend());
    for (Letter& l : out) l = -l;
    return ReducedWord(std::move(out));
}

ReducedWord ReducedWord::concat(const ReducedWord& other) const {
    std::vector<Letter> raw = letters;
    raw.insert(raw.end(), other.letters.begin(), other.letters.end());
    return reduce(raw);
}

bool ReducedWord::operator<(const ReducedWord& o) const {
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const int a = letter_rank(letters[i]);
        const int b = letter_rank(o.letters[i]);
        if (a != b) return a < b;
    }
    return false;
}

std::string ReducedWord::str() const {
    if (letters.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) s += '.';
        const Letter l = letters[i];
        s += (l > 0 ? 'a' : 'A');
        s += std::to_string(l > 0 ? l : -l);
    }
    return s;
}

std::shared_ptr<const Window> window(int d, int k, const Caps& caps) {
    if (d < 1) throw ValidationError("window: d must be >= 1");
    if (k < 0) throw ValidationError("window: k must be >= 0");
    // size guard before generating
    unsigned long long size = 1, layer = 1;
    for (int j = 1; j <= k; ++j) {
        layer = (j == 1) ? 2ull * d : layer * (2ull * d - 1);
        size += layer;
        if (size > caps.max_window)
            throw CapExceeded("window: |W_" + std::to_string(d) + "(" + std::to_string(k) +
                              ")| exceeds cap " + std::to_string(caps.max_window));
    }
    auto win = std::make_shared<Window>();
    win->d = d;
    win->k = k;
    std::vector<ReducedWord> frontier{ReducedWord{}};
    win->words.push_back(ReducedWord{});
    for (int j = 1; j <= k; ++j) {
        std::vector<ReducedWord> next;
        next.reserve(frontier.size() * (2 * d));
        for (const auto& w : frontier) {
            for (int rank = 0; rank < 2 * d; ++rank) {
                const Letter l = letter_from_rank(rank);
                if (!w.letters.empty() && w.letters.back() == -l) continue;
                ReducedWord ext = w;
                ext.letters.push_back(l);
                next.push_back(std::move(ext));
            }
        }
        std::sort(next.begin(), next.end());
        win->words.insert(win->words.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    for (std::size_t i = 0; i < win->words.size(); ++i) win->index[win->words[i].letters] = static_cast<int>(i);
    return win;
}

std::size_t WordSet::count() const {
    std::size_t c = 0;
    for (auto limb : limbs) c += static_cast<std::size_t>(__builtin_popcountll(limb));
    return c;
}

WordSet WordSet::prefix(std::size_t n) const {
    WordSet out(n);
    for (std::size_t i = 0; i < out.limbs.size(); ++i) out.limbs[i] = limbs[i];
    const std::size_t tail = n & 63;
    if (tail) out.limbs.back() &= (std::uint64_t{1} << tail) - 1;
    return out;
}

bool WordSet::operator<(const WordSet& o) const {
    if (nbits != o.nbits) return nbits < o.nbits;
    return limbs < o.limbs;
}

std::vector<int> WordSet::indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nbits; ++i)
        if (test(i)) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace locstat
