#include "fgord/oriented.hpp"

#include <algorithm>

namespace fgord {

OrientedWord::OrientedWord(Rank rank, std::vector<Letter> letters)
    : rank_(rank), letters_(std::move(letters)) {
    const int n = 2 * rank.k();
    if (static_cast<int>(letters_.size()) != n)
        throw std::invalid_argument("oriented word must have length 2k");
    pos_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        Letter l = letters_[i];
        if (l.index() > rank.k())
            throw std::invalid_argument("letter index exceeds rank");
        if (pos_[l.order_key()] != -1)
            throw std::invalid_argument("repeated letter " + letter_to_string(l) +
                                        " in oriented word");
        pos_[l.order_key()] = i;
    }
    // length 2k with no repeats implies every letter is present
}

OrientedWord parse_oriented(const std::string& text, Rank rank) {
    return OrientedWord(rank, parse_letters(text, rank));
}

bool precedes(const OrientedWord& u, Letter x, Letter y) {
    if (x == y) throw std::invalid_argument("precedes requires distinct letters");
    return u.position(x) < u.position(y);
}

std::vector<OrientedWord> enumerate_oriented(Rank rank) {
    std::vector<Letter> perm;
    for (int i = 1; i <= rank.k(); ++i) {
        perm.push_back(Letter(i));
        perm.push_back(Letter(-i));
    }
    std::vector<OrientedWord> out;
    do {
        out.push_back(OrientedWord(rank, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

OrientedWord oriented_inverse(const OrientedWord& u) {
    std::vector<Letter> seq;
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
        seq.push_back(it->inverse());
    return OrientedWord(u.rank(), std::move(seq));
}

OrientedWord oriented_reverse(const OrientedWord& u) {
    std::vector<Letter> seq(u.letters().rbegin(), u.letters().rend());
    return OrientedWord(u.rank(), std::move(seq));
}

OrientedWord oriented_case_switch(const OrientedWord& u) {
    std::vector<Letter> seq;
    for (Letter l : u.letters()) seq.push_back(l.case_switch());
    return OrientedWord(u.rank(), std::move(seq));
}

std::optional<LexForm> is_lex_form(const OrientedWord& u) {
    const int k = u.rank().k();
    LexForm form;
    for (int i = 0; i < k; ++i) {
        if (!u.letters()[i].positive()) return std::nullopt;
        form.lower.push_back(u.letters()[i].index());
    }
    for (int i = k; i < 2 * k; ++i) {
        if (u.letters()[i].positive()) return std::nullopt;
        form.upper.push_back(u.letters()[i].index());
    }
    return form;
}

bool is_standard_lex_form(const OrientedWord& u) {
    auto form = is_lex_form(u);
    if (!form) return false;
    for (std::size_t i = 0; i < form->lower.size(); ++i)
        if (form->lower[i] != static_cast<int>(i) + 1) return false;
    return true;
}

bool is_symmetric(const OrientedWord& u) {
    return oriented_inverse(u) == u;
}

std::string to_string(const OrientedWord& u) {
    std::string out;
    bool index_fmt = u.rank().k() > 26;
    for (Letter l : u.letters()) {
        if (index_fmt && !out.empty()) out += ' ';
        out += letter_to_string(l);
    }
    return out;
}

} // namespace fgord
