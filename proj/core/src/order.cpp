#include "fgord/order.hpp"

#include <algorithm>

namespace fgord {

bool is_positive(const OrientedWord& u, const Word& g) {
    return tau(u, g).is_positive();
}

Ordering3 compare(const OrientedWord& u, const Word& g, const Word& h) {
    if (!(g.rank() == h.rank()))
        throw std::invalid_argument("rank mismatch in compare");
    if (g == h) return Ordering3::Equal;
    return tau(u, concat(inverse(g), h)).is_positive() ? Ordering3::Less
                                                       : Ordering3::Greater;
}

std::vector<Word> sort_words(const OrientedWord& u, std::vector<Word> ws) {
    std::stable_sort(ws.begin(), ws.end(), [&](const Word& g, const Word& h) {
        return compare(u, g, h) == Ordering3::Less;
    });
    return ws;
}

GeneratorOrder generator_order(const OrientedWord& u) {
    GeneratorOrder result;
    for (int i = 1; i <= u.rank().k(); ++i) {
        result.lower.push_back(Letter(i));
        result.upper.push_back(Letter(-i));
    }
    auto by_order = [&](Letter x, Letter y) {
        Word gx(u.rank(), {x}), gy(u.rank(), {y});
        return compare(u, gx, gy) == Ordering3::Less;
    };
    std::sort(result.lower.begin(), result.lower.end(), by_order);
    std::sort(result.upper.begin(), result.upper.end(), by_order);
    return result;
}

} // namespace fgord
