#include "fgord/words.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace fgord;

namespace {
const Rank k2(2);
const Rank k3(3);

Word W(const std::string& text, Rank rank = k2) { return parse_word(text, rank); }

// all letter sequences of length exactly n over the rank-k alphabet
void for_each_sequence(Rank rank, int n, const std::function<void(const std::vector<Letter>&)>& f) {
    std::vector<Letter> alphabet;
    for (int i = 1; i <= rank.k(); ++i) {
        alphabet.push_back(Letter(i));
        alphabet.push_back(Letter(-i));
    }
    std::vector<Letter> seq;
    std::function<void()> rec = [&] {
        if (static_cast<int>(seq.size()) == n) {
            f(seq);
            return;
        }
        for (Letter l : alphabet) {
            seq.push_back(l);
            rec();
            seq.pop_back();
        }
    };
    rec();
}
} // namespace

TEST_CASE("parse_word reduces and validates") {
    CHECK(W("aAb") == W("b"));
    CHECK(W("").is_identity());
    CHECK(to_string(W("BAbA")) == "BAbA");
    CHECK(W("1 -1 2", k2) == W("b"));
    CHECK(W("-2 -1 2 -1", k2) == W("BAbA"));
    CHECK_THROWS_AS(W("a?b"), std::invalid_argument);
    CHECK_THROWS_AS(W("abc"), std::invalid_argument);         // index out of rank
    CHECK_THROWS_AS(W("3", k2), std::invalid_argument);
    CHECK_THROWS_AS(W("a 1"), std::invalid_argument);         // mixed formats
    CHECK_THROWS_AS(W("0", k2), std::invalid_argument);
}

TEST_CASE("reduction") {
    CHECK(W("abBA").is_identity());
    CHECK(W("aBba") == W("aa"));
    CHECK(to_string(W("ab")) == "ab");
}

TEST_CASE("reduction matches the naive oracle and is idempotent") {
    for (Rank rank : {k2, k3}) {
        int max_len = rank.k() == 2 ? 8 : 6;
        for (int n = 0; n <= max_len; ++n) {
            for_each_sequence(rank, n, [&](const std::vector<Letter>& seq) {
                Word w(rank, seq);
                std::vector<int> raw;
                for (Letter l : seq) raw.push_back(l.signed_index());
                CHECK(oracle::signed_letters(w) == oracle::reduce_naive(raw));
                // idempotent
                CHECK(Word(rank, {w.letters().begin(), w.letters().end()}) == w);
            });
        }
    }
}

TEST_CASE("concat") {
    CHECK(concat(W("ab"), W("BA")).is_identity());
    CHECK(concat(W("a"), W("b")) == W("ab"));
    CHECK(concat(W("ab"), W("Ba")) == W("aa"));
    CHECK_THROWS_AS(concat(W("a"), W("a", k3)), std::invalid_argument);
}

TEST_CASE("inverse, reverse, case_switch examples") {
    CHECK(inverse(W("ab")) == W("BA"));
    CHECK(inverse(W("")).is_identity());
    CHECK(reverse(W("ab")) == W("ba"));
    CHECK(reverse(W("BAbA")) == W("AbAB"));
    CHECK(case_switch(W("ab")) == W("AB"));
    CHECK(case_switch(W("bA")) == W("Ba"));
}

TEST_CASE("involution and composition laws on the radius-4 ball") {
    for (const Word& g : enumerate_ball(k2, 4)) {
        CHECK(inverse(inverse(g)) == g);
        CHECK(reverse(reverse(g)) == g);
        CHECK(case_switch(case_switch(g)) == g);
        CHECK(reverse(case_switch(g)) == inverse(g));
        CHECK(case_switch(inverse(g)) == reverse(g));
        CHECK(inverse(reverse(g)) == case_switch(g));
        CHECK(concat(g, inverse(g)).is_identity());
        CHECK(concat(inverse(g), g).is_identity());
    }
}

TEST_CASE("concat length bound and parity on radius-3 pairs") {
    auto ball = enumerate_ball(k2, 3);
    for (const Word& g : ball) {
        for (const Word& h : ball) {
            Word gh = concat(g, h);
            CHECK(gh.length() <= g.length() + h.length());
            CHECK((gh.length() % 2) == ((g.length() + h.length()) % 2));
        }
    }
}

TEST_CASE("count_factor") {
    Word g = W("BAbA");
    CHECK(count_factor(g, Letter(2), Letter(-1)) == 1);  // #_{bA}
    CHECK(count_factor(g, Letter(-2), Letter(1)) == 0);  // #_{Ba}
    CHECK(count_factor(W("aaa"), Letter(1), Letter(1)) == 2);
    CHECK_THROWS_AS(count_factor(g, Letter(1), Letter(-1)), std::invalid_argument);
}

TEST_CASE("enumerate_ball") {
    auto b1 = enumerate_ball(k2, 1);
    REQUIRE(b1.size() == 5);
    CHECK(to_string(b1[0]) == "1");
    CHECK(to_string(b1[1]) == "a");
    CHECK(to_string(b1[2]) == "A");
    CHECK(to_string(b1[3]) == "b");
    CHECK(to_string(b1[4]) == "B");

    CHECK(enumerate_ball(k2, 2).size() == 17);
    CHECK(enumerate_ball(k2, 4).size() == 161);

    for (Rank rank : {k2, k3}) {
        for (int r = 0; r <= 5; ++r) {
            auto ball = enumerate_ball(rank, r);
            CHECK(ball.size() == oracle::ball_size_formula(rank.k(), r));
            // each word reduced, unique, within radius
            std::set<std::vector<int>> seen;
            for (const Word& g : ball) {
                CHECK(g.length() <= static_cast<std::size_t>(r));
                CHECK(seen.insert(oracle::signed_letters(g)).second);
            }
        }
    }
}

TEST_CASE("enumerate_ball is shortlex ordered") {
    auto ball = enumerate_ball(k2, 4);
    auto shortlex_less = [](const Word& g, const Word& h) {
        if (g.length() != h.length()) return g.length() < h.length();
        auto a = g.letters(), b = h.letters();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].order_key() != b[i].order_key())
                return a[i].order_key() < b[i].order_key();
        return false;
    };
    for (std::size_t i = 0; i + 1 < ball.size(); ++i)
        CHECK(shortlex_less(ball[i], ball[i + 1]));
}
