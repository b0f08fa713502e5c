#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fgord {

// Rank of the free group. Rank 1 is excluded throughout.
class Rank {
public:
    explicit Rank(int k) : k_(k) {
        if (k < 2) throw std::invalid_argument("rank must be at least 2");
    }
    int k() const { return k_; }
    bool operator==(const Rank&) const = default;

private:
    int k_;
};

// A signed generator: +i stands for the generator a_i, -i for its inverse A_i.
class Letter {
public:
    explicit Letter(int signed_index) : code_(signed_index) {
        if (signed_index == 0) throw std::invalid_argument("letter index must be nonzero");
    }

    int index() const { return code_ > 0 ? code_ : -code_; }
    bool positive() const { return code_ > 0; }
    int signed_index() const { return code_; }

    Letter inverse() const { return Letter(-code_); }
    Letter case_switch() const { return inverse(); }

    // Position in the fixed enumeration order a1 < A1 < a2 < A2 < ...
    int order_key() const { return 2 * (index() - 1) + (positive() ? 0 : 1); }

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter& o) const { return order_key() <=> o.order_key(); }

private:
    int code_;
};

// A freely reduced word over the rank-k alphabet; the empty word is the
// identity. Words are immutable and always stored reduced.
class Word {
public:
    explicit Word(Rank rank) : rank_(rank) {}

    // Reduces the given letter sequence.
    Word(Rank rank, std::vector<Letter> letters);

    Rank rank() const { return rank_; }
    std::span<const Letter> letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    bool operator==(const Word& o) const {
        return rank_ == o.rank_ && letters_ == o.letters_;
    }

private:
    Rank rank_;
    std::vector<Letter> letters_;
};

Word concat(const Word& g, const Word& h);
Word inverse(const Word& g);
Word reverse(const Word& g);
Word case_switch(const Word& g);

// Number of positions i with g[i] = x and g[i+1] = y; occurrences may
// overlap (only possible for x = y). The pair must be reduced.
int count_factor(const Word& g, Letter x, Letter y);

// General overlapping factor count, for arbitrary reduced factor w.
int count_factor(const Word& g, const Word& w);

// All reduced words of length <= radius, in shortlex order under
// a1 < A1 < a2 < A2 < ... Size is 1 + sum_{n=1..r} 2k(2k-1)^{n-1}.
std::vector<Word> enumerate_ball(Rank rank, int radius);

// Parses either letter format ("aBb", k <= 26; a..z are generators, A..Z
// inverses) or signed-index format ("1 -2 2"). Empty text is the identity.
// The result is freely reduced.
Word parse_word(const std::string& text, Rank rank);

// Parses without reducing (oriented words need not be reduced).
std::vector<Letter> parse_letters(const std::string& text, Rank rank);

// Letter-format rendering; the identity prints as `identity_marker`.
// Falls back to signed-index format when k > 26.
std::string to_string(const Word& g, const std::string& identity_marker = "1");
std::string letter_to_string(Letter l);

} // namespace fgord
