#include "fgord/oriented.hpp"

#include <doctest.h>

using namespace fgord;

namespace {
const Rank k2(2);
const Rank k3(3);

OrientedWord U(const std::string& text, Rank rank = k2) {
    return parse_oriented(text, rank);
}
} // namespace

TEST_CASE("parse_oriented validates") {
    CHECK(to_string(U("abBA")) == "abBA");
    CHECK(to_string(U("abAB")) == "abAB");
    CHECK(to_string(U("aAbB")) == "aAbB"); // need not be reduced as a group word
    CHECK_THROWS_AS(U("abab"), std::invalid_argument); // repeated letter
    CHECK_THROWS_AS(U("abB"), std::invalid_argument);  // wrong length
    CHECK_THROWS_AS(U("abcABC", k2), std::invalid_argument);
}

TEST_CASE("precedes") {
    OrientedWord u = U("abBA");
    CHECK(precedes(u, Letter(1), Letter(2)));        // a..b
    CHECK_FALSE(precedes(u, Letter(-1), Letter(-2))); // B before A
    CHECK(precedes(u, Letter(2), Letter(-1)));       // b..A
    CHECK_THROWS_AS(precedes(u, Letter(1), Letter(1)), std::invalid_argument);
}

TEST_CASE("precedes trichotomy over all k=2 words") {
    for (const auto& u : enumerate_oriented(k2)) {
        for (int x = -2; x <= 2; ++x) {
            for (int y = -2; y <= 2; ++y) {
                if (x == 0 || y == 0 || x == y) continue;
                CHECK(precedes(u, Letter(x), Letter(y)) !=
                      precedes(u, Letter(y), Letter(x)));
            }
        }
    }
}

TEST_CASE("enumerate_oriented") {
    auto words2 = enumerate_oriented(k2);
    CHECK(words2.size() == 24);
    CHECK(to_string(words2.front()) == "aAbB");
    CHECK(enumerate_oriented(k3).size() == 720);
}

TEST_CASE("oriented involutions") {
    CHECK(oriented_inverse(U("abBA")) == U("abBA"));
    CHECK(oriented_inverse(U("abAB")) == U("baBA"));
    CHECK(oriented_reverse(U("abBA")) == U("ABba"));
    for (const auto& u : enumerate_oriented(k2)) {
        CHECK(oriented_inverse(oriented_inverse(u)) == u);
        CHECK(oriented_reverse(oriented_reverse(u)) == u);
        CHECK(oriented_case_switch(oriented_case_switch(u)) == u);
        CHECK(oriented_reverse(oriented_case_switch(u)) == oriented_inverse(u));
        CHECK(oriented_case_switch(oriented_inverse(u)) == oriented_reverse(u));
        // inverse flips both the letters and the precedence relation
        for (int x = -2; x <= 2; ++x) {
            for (int y = -2; y <= 2; ++y) {
                if (x == 0 || y == 0 || x == y) continue;
                CHECK(precedes(oriented_inverse(u), Letter(x), Letter(y)) ==
                      precedes(u, Letter(-y), Letter(-x)));
            }
        }
    }
}

TEST_CASE("lex form detection") {
    auto form = is_lex_form(U("abBA"));
    REQUIRE(form);
    CHECK(form->lower == std::vector<int>{1, 2});
    CHECK(form->upper == std::vector<int>{2, 1});
    CHECK(is_standard_lex_form(U("abBA")));

    form = is_lex_form(U("abAB"));
    REQUIRE(form);
    CHECK(form->upper == std::vector<int>{1, 2});

    CHECK_FALSE(is_lex_form(U("aBbA")));
    CHECK(is_lex_form(U("baBA")));
    CHECK_FALSE(is_standard_lex_form(U("baBA")));
}

TEST_CASE("symmetric and lex-form counts") {
    int sym2 = 0, lex2 = 0;
    for (const auto& u : enumerate_oriented(k2)) {
        if (is_symmetric(u)) ++sym2;
        if (is_standard_lex_form(u)) ++lex2;
    }
    CHECK(sym2 == 8);  // 2^k k!
    CHECK(lex2 == 2);  // k!

    int sym3 = 0, lex3 = 0;
    for (const auto& u : enumerate_oriented(k3)) {
        if (is_symmetric(u)) ++sym3;
        if (is_standard_lex_form(u)) ++lex3;
    }
    CHECK(sym3 == 48);
    CHECK(lex3 == 6);
}

TEST_CASE("symmetry examples") {
    CHECK(is_symmetric(U("abBA")));
    CHECK_FALSE(is_symmetric(U("abAB")));
}
