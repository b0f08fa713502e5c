#pragma once

#include "fgord/weights.hpp"

namespace fgord {

enum class Ordering3 { Less, Equal, Greater };

// Membership in the positive cone P_u = { g : tau_u(g) > 0 }.
bool is_positive(const OrientedWord& u, const Word& g);

// Three-way comparison under the left order <=_u: Equal iff g = h as
// reduced words, Less iff tau_u(g^{-1}h) > 0.
Ordering3 compare(const OrientedWord& u, const Word& g, const Word& h);

// Stable sort under <=_u, smallest first.
std::vector<Word> sort_words(const OrientedWord& u, std::vector<Word> ws);

struct GeneratorOrder {
    std::vector<Letter> lower; // a_i sorted increasing under <=_u
    std::vector<Letter> upper; // A_i sorted increasing under <=_u
};

// The order among generators (and among inverse generators) coincides with
// their left-to-right position in u.
GeneratorOrder generator_order(const OrientedWord& u);

} // namespace fgord
