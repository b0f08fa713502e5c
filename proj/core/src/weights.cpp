#include "fgord/weights.hpp"

namespace fgord {

namespace testing {
namespace {
bool g_flip = false;
}
void set_wtc_sign_flip(bool flipped) { g_flip = flipped; }
bool wtc_sign_flipped() { return g_flip; }
} // namespace testing

HalfInt omega(const Word& g) {
    if (g.is_identity()) return HalfInt(0);
    return g.letters().back().positive() ? HalfInt(1) : HalfInt(-1);
}

HalfInt wtc(const OrientedWord& u, Letter x, Letter y) {
    if (y == x.inverse())
        throw std::invalid_argument("wtc requires a reduced pair");
    HalfInt value(0);
    if (x.positive()) {
        if (precedes(u, x.inverse(), y)) value = HalfInt::whole(1);
    } else {
        if (precedes(u, y, x.inverse())) value = HalfInt::whole(-1);
    }
    return testing::g_flip ? -value : value;
}

HalfInt alpha(const OrientedWord& u, const Word& g) {
    const int k = u.rank().k();
    std::int64_t total = 0;
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            Letter ai(i), aj(j), Ai(-i), Aj(-j);
            // plus term #_{aB} named so that A..B in u
            if (precedes(u, Ai, Aj)) total += count_factor(g, ai, Aj);
            else total += count_factor(g, aj, Ai);
            // minus term #_{Ba} named so that a..b in u
            if (precedes(u, ai, aj)) total -= count_factor(g, Aj, ai);
            else total -= count_factor(g, Ai, aj);
        }
    }
    return HalfInt::whole(total);
}

HalfInt beta(const OrientedWord& u, const Word& g) {
    const int k = u.rank().k();
    std::int64_t total = 0;
    // ordered pairs, a = b allowed
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            if (precedes(u, Letter(-i), Letter(j))) {
                total += count_factor(g, Letter(i), Letter(j));
                total -= count_factor(g, Letter(-j), Letter(-i));
            }
        }
    }
    return HalfInt::whole(total);
}

HalfInt tau(const OrientedWord& u, const Word& g) {
    HalfInt total(0);
    auto ls = g.letters();
    for (std::size_t i = 0; i + 1 < ls.size(); ++i)
        total += wtc(u, ls[i], ls[i + 1]);
    return total + omega(g);
}

int brooks(const Word& w, const Word& g) {
    return count_factor(g, w) - count_factor(g, inverse(w));
}

int total_exponent(const Word& g) {
    int total = 0;
    for (Letter l : g.letters()) total += l.positive() ? 1 : -1;
    return total;
}

std::vector<Word> tau_difference_decomposition(const OrientedWord& u,
                                               const OrientedWord& u2) {
    if (!(u.rank() == u2.rank()))
        throw std::invalid_argument("rank mismatch in tau_difference_decomposition");
    const int n = 2 * u.rank().k();
    std::vector<Letter> alphabet;
    for (int i = 1; i <= u.rank().k(); ++i) {
        alphabet.push_back(Letter(i));
        alphabet.push_back(Letter(-i));
    }
    std::vector<Word> terms;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            Letter x = alphabet[a], y = alphabet[b];
            if (precedes(u, x, y) && precedes(u2, y, x))
                terms.push_back(Word(u.rank(), {x.inverse(), y}));
        }
    }
    return terms;
}

HalfInt defect(const OrientedWord& u, const Word& g, const Word& h) {
    return (tau(u, g) + tau(u, h) - tau(u, concat(g, h))).abs();
}

} // namespace fgord
