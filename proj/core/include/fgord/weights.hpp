#pragma once

#include "fgord/half_int.hpp"
#include "fgord/oriented.hpp"
#include "fgord/words.hpp"

namespace fgord {

// Last letter weight: +1/2 or -1/2 by the sign of the final letter, 0 for
// the identity.
HalfInt omega(const Word& g);

// Weight contribution of a reduced two-letter factor xy. Values are 0 or 1
// when x is a positive letter, 0 or -1 when x is negative:
//   x positive: 1 iff x^{-1}..y in u
//   x negative: -1 iff y..x^{-1} in u
HalfInt wtc(const OrientedWord& u, Letter x, Letter y);

// Case transition weight: over unordered pairs of distinct generators,
// +#_{aB}(g) when A..B in u and -#_{Ba}(g) when a..b in u.
HalfInt alpha(const OrientedWord& u, const Word& g);

// Letter transition weight: over ordered generator pairs (a, b), not
// necessarily distinct, with A..b in u, #_{ab}(g) - #_{BA}(g). A sum of
// Brooks quasi-characters; vanishes exactly for lex-form words.
HalfInt beta(const OrientedWord& u, const Word& g);

// The weight tau_u(g) = sum_i wtc_u(g_i g_{i+1}) + omega(g); equal to
// alpha + beta + omega.
HalfInt tau(const OrientedWord& u, const Word& g);

// Brooks counting quasi-character phi_w(g) = #_w(g) - #_{w^{-1}}(g).
int brooks(const Word& w, const Word& g);

// Number of positive letters minus number of negative letters; the unique
// homomorphism sending every generator to 1.
int total_exponent(const Word& g);

// The length-2 words x^{-1}y over all signed letter pairs with x..y in u
// and y..x in u2. The identity
//   tau_u(g) - tau_{u2}(g) = sum of brooks(term, g)
// holds for every reduced g. Empty iff u = u2.
std::vector<Word> tau_difference_decomposition(const OrientedWord& u,
                                               const OrientedWord& u2);

// |tau(g) + tau(h) - tau(gh)|: 0 when g, h, or gh is trivial, 1/2 otherwise.
HalfInt defect(const OrientedWord& u, const Word& g, const Word& h);

namespace testing {
// Negates every weight contribution. Exists only so the verification
// suites can demonstrate they are non-vacuous; never set outside tests.
void set_wtc_sign_flip(bool flipped);
bool wtc_sign_flipped();
} // namespace testing

} // namespace fgord
