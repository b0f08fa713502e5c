#include "fgord/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fgord {

namespace {

std::vector<Letter> reduce_letters(std::span<const Letter> seq) {
    std::vector<Letter> out;
    out.reserve(seq.size());
    for (Letter l : seq) {
        if (!out.empty() && out.back() == l.inverse()) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

void check_rank(const Word& g, Letter l) {
    if (l.index() > g.rank().k())
        throw std::invalid_argument("letter index exceeds rank");
}

} // namespace

Word::Word(Rank rank, std::vector<Letter> letters) : rank_(rank) {
    for (Letter l : letters) {
        if (l.index() > rank.k())
            throw std::invalid_argument("letter index exceeds rank");
    }
    letters_ = reduce_letters(letters);
}

Word concat(const Word& g, const Word& h) {
    if (!(g.rank() == h.rank()))
        throw std::invalid_argument("rank mismatch in concat");
    std::vector<Letter> seq(g.letters().begin(), g.letters().end());
    seq.insert(seq.end(), h.letters().begin(), h.letters().end());
    return Word(g.rank(), std::move(seq));
}

Word inverse(const Word& g) {
    std::vector<Letter> seq;
    seq.reserve(g.length());
    for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it)
        seq.push_back(it->inverse());
    return Word(g.rank(), std::move(seq));
}

Word reverse(const Word& g) {
    std::vector<Letter> seq(g.letters().rbegin(), g.letters().rend());
    return Word(g.rank(), std::move(seq));
}

Word case_switch(const Word& g) {
    std::vector<Letter> seq;
    seq.reserve(g.length());
    for (Letter l : g.letters()) seq.push_back(l.case_switch());
    return Word(g.rank(), std::move(seq));
}

int count_factor(const Word& g, Letter x, Letter y) {
    if (y == x.inverse())
        throw std::invalid_argument("factor xy must be reduced");
    check_rank(g, x);
    check_rank(g, y);
    int count = 0;
    auto ls = g.letters();
    for (std::size_t i = 0; i + 1 < ls.size(); ++i)
        if (ls[i] == x && ls[i + 1] == y) ++count;
    return count;
}

int count_factor(const Word& g, const Word& w) {
    if (w.is_identity())
        throw std::invalid_argument("factor must be nontrivial");
    auto ls = g.letters();
    auto ws = w.letters();
    if (ws.size() > ls.size()) return 0;
    int count = 0;
    for (std::size_t i = 0; i + ws.size() <= ls.size(); ++i)
        if (std::equal(ws.begin(), ws.end(), ls.begin() + i)) ++count;
    return count;
}

std::vector<Word> enumerate_ball(Rank rank, int radius) {
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    std::vector<Letter> alphabet;
    for (int i = 1; i <= rank.k(); ++i) {
        alphabet.push_back(Letter(i));
        alphabet.push_back(Letter(-i));
    }
    std::vector<Word> out;
    out.push_back(Word(rank));
    // Sphere-by-sphere extension keeps shortlex order: each level is
    // visited in order and extended by letters in order.
    std::vector<std::vector<Letter>> level = {{}};
    for (int n = 1; n <= radius; ++n) {
        std::vector<std::vector<Letter>> next;
        next.reserve(level.size() * (2 * rank.k() - 1));
        for (const auto& w : level) {
            for (Letter l : alphabet) {
                if (!w.empty() && w.back() == l.inverse()) continue;
                auto ext = w;
                ext.push_back(l);
                next.push_back(std::move(ext));
            }
        }
        for (const auto& w : next) out.push_back(Word(rank, w));
        level = std::move(next);
    }
    return out;
}

std::vector<Letter> parse_letters(const std::string& text, Rank rank) {
    bool has_alpha = false, has_other = false;
    for (char c : text) {
        if (std::isalpha(static_cast<unsigned char>(c))) has_alpha = true;
        else if (!std::isspace(static_cast<unsigned char>(c))) has_other = true;
    }
    if (has_alpha && has_other)
        throw std::invalid_argument("mixed word formats: '" + text + "'");

    std::vector<Letter> seq;
    if (has_alpha) {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            int idx;
            bool pos;
            if (c >= 'a' && c <= 'z') { idx = c - 'a' + 1; pos = true; }
            else if (c >= 'A' && c <= 'Z') { idx = c - 'A' + 1; pos = false; }
            else throw std::invalid_argument(std::string("unknown symbol '") + c + "'");
            if (idx > rank.k())
                throw std::invalid_argument(std::string("letter '") + c + "' out of rank");
            seq.push_back(Letter(pos ? idx : -idx));
        }
    } else {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            int v;
            try {
                std::size_t used = 0;
                v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("unknown symbol '" + tok + "'");
            }
            if (v == 0) throw std::invalid_argument("letter index must be nonzero");
            if (std::abs(v) > rank.k())
                throw std::invalid_argument("index " + tok + " out of rank");
            seq.push_back(Letter(v));
        }
    }
    return seq;
}

Word parse_word(const std::string& text, Rank rank) {
    return Word(rank, parse_letters(text, rank));
}

std::string letter_to_string(Letter l) {
    if (l.index() <= 26) {
        char c = static_cast<char>((l.positive() ? 'a' : 'A') + l.index() - 1);
        return std::string(1, c);
    }
    return std::to_string(l.signed_index());
}

std::string to_string(const Word& g, const std::string& identity_marker) {
    if (g.is_identity()) return identity_marker;
    std::string out;
    bool index_fmt = g.rank().k() > 26;
    for (Letter l : g.letters()) {
        if (index_fmt && !out.empty()) out += ' ';
        out += letter_to_string(l);
    }
    return out;
}

} // namespace fgord
