#pragma once

#include "fgord/words.hpp"

#include <optional>
#include <utility>

namespace fgord {

// A word of length 2k containing every signed letter exactly once. The
// (2k)! oriented words of rank k parameterize the left orders built here.
// An oriented word need not be reduced as a group word (e.g. aAbB).
class OrientedWord {
public:
    OrientedWord(Rank rank, std::vector<Letter> letters);

    Rank rank() const { return rank_; }
    std::span<const Letter> letters() const { return letters_; }

    // Position of a letter in the word, 0 .. 2k-1.
    int position(Letter l) const { return pos_[l.order_key()]; }

    bool operator==(const OrientedWord& o) const {
        return rank_ == o.rank_ && letters_ == o.letters_;
    }

private:
    Rank rank_;
    std::vector<Letter> letters_;
    std::vector<int> pos_; // indexed by Letter::order_key
};

OrientedWord parse_oriented(const std::string& text, Rank rank);

// True iff x occurs to the left of y in u ("x..y in u"). Requires x != y.
bool precedes(const OrientedWord& u, Letter x, Letter y);

// All (2k)! oriented words, lexicographic under a1 < A1 < a2 < A2 < ...
std::vector<OrientedWord> enumerate_oriented(Rank rank);

OrientedWord oriented_inverse(const OrientedWord& u);
OrientedWord oriented_reverse(const OrientedWord& u);
OrientedWord oriented_case_switch(const OrientedWord& u);

// If u = a_{i1}..a_{ik} A_{j1}..A_{jk} (all lowercase first), the two
// 1-based index sequences (i, j); empty otherwise.
struct LexForm {
    std::vector<int> lower; // i_1..i_k
    std::vector<int> upper; // j_1..j_k
};
std::optional<LexForm> is_lex_form(const OrientedWord& u);

// Lex form with the lowercase block in standard order a_1 a_2 .. a_k.
bool is_standard_lex_form(const OrientedWord& u);

// True iff u equals its own inverse; exactly these words induce orders
// whose positive cone is closed under word reversal.
bool is_symmetric(const OrientedWord& u);

std::string to_string(const OrientedWord& u);

} // namespace fgord
