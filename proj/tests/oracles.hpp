#pragma once

// Independent oracles used only by tests. These deliberately avoid the
// library's evaluation paths: reduction is done by repeated rescanning and
// tau is evaluated from the defining sums with local occurrence counting,
// rather than the single-pass contribution scan used by the library.

#include "fgord/oriented.hpp"
#include "fgord/weights.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

// Free reduction by repeated full passes until no cancellation remains.
inline std::vector<int> reduce_naive(std::vector<int> seq) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            if (seq[i] == -seq[i + 1]) {
                seq.erase(seq.begin() + i, seq.begin() + i + 2);
                changed = true;
                break;
            }
        }
    }
    return seq;
}

inline std::vector<int> signed_letters(const fgord::Word& g) {
    std::vector<int> out;
    for (fgord::Letter l : g.letters()) out.push_back(l.signed_index());
    return out;
}

// Overlapping occurrences of the two-letter factor (x, y) in g.
inline int count2(const std::vector<int>& g, int x, int y) {
    int n = 0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
        if (g[i] == x && g[i + 1] == y) ++n;
    return n;
}

// Position of a signed letter in u by linear scan.
inline int position(const fgord::OrientedWord& u, int x) {
    auto ls = u.letters();
    for (std::size_t i = 0; i < ls.size(); ++i)
        if (ls[i].signed_index() == x) return static_cast<int>(i);
    return -1;
}

// tau as alpha + beta + omega straight from the defining sums.
inline fgord::HalfInt tau_oracle(const fgord::OrientedWord& u, const fgord::Word& w) {
    const int k = u.rank().k();
    const auto g = signed_letters(w);
    std::int64_t doubled = 0;

    // alpha: unordered pairs of distinct generators
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            if (position(u, -i) < position(u, -j)) doubled += 2 * count2(g, i, -j);
            else doubled += 2 * count2(g, j, -i);
            if (position(u, i) < position(u, j)) doubled -= 2 * count2(g, -j, i);
            else doubled -= 2 * count2(g, -i, j);
        }
    }

    // beta: ordered generator pairs, equal indices allowed
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (position(u, -i) < position(u, j))
                doubled += 2 * (count2(g, i, j) - count2(g, -j, -i));

    // omega
    if (!g.empty()) doubled += g.back() > 0 ? 1 : -1;

    return fgord::HalfInt(doubled);
}

// 1 + sum_{n=1..r} 2k(2k-1)^{n-1}
inline std::uint64_t ball_size_formula(int k, int r) {
    std::uint64_t size = 1, sphere = 2ull * k;
    for (int n = 1; n <= r; ++n) {
        size += sphere;
        sphere *= 2 * k - 1;
    }
    return size;
}

} // namespace oracle
