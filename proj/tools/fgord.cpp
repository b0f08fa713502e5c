// fgord: weights, orders, and verification suites for the (2k)! left
// orders on the free group F_k induced by oriented words.

#include "fgord/order.hpp"
#include "fgord/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <iostream>

namespace {

using namespace fgord;
using nlohmann::json;

constexpr std::uint64_t kBallCap = 2'000'000; // listing cap, words
constexpr int kOrientedRankCap = 5;           // (2k)! listing cap

std::uint64_t ball_size(int k, int radius) {
    std::uint64_t size = 1, sphere = 2 * static_cast<std::uint64_t>(k);
    for (int n = 1; n <= radius; ++n) {
        size += sphere;
        if (size > kBallCap) return size;
        sphere *= 2 * k - 1;
    }
    return size;
}

json half_to_json(HalfInt v) {
    if (v.is_whole()) return json(v.doubled() / 2);
    return json(v.str());
}

struct Options {
    int rank = 2;
    std::string oriented = "abBA";
    std::string format = "text";
    int radius = 2;
    int max_len = 4;
    std::string profile = "quick";
    std::string suite;
    bool json_out() const { return format == "json"; }
};

void add_common(CLI::App* cmd, Options& opt, bool with_oriented = true) {
    cmd->add_option("-k,--rank", opt.rank, "rank of the free group")->check(CLI::Range(2, 26));
    if (with_oriented)
        cmd->add_option("-u,--oriented", opt.oriented, "defining oriented word");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

int cmd_weight(const Options& opt, const std::string& word_text) {
    Rank rank(opt.rank);
    OrientedWord u = parse_oriented(opt.oriented, rank);
    Word g = parse_word(word_text, rank);
    HalfInt t = tau(u, g), a = alpha(u, g), b = beta(u, g), o = omega(g);
    if (opt.json_out()) {
        json j{{"word", to_string(g, "")},
               {"tau", half_to_json(t)},
               {"alpha", half_to_json(a)},
               {"beta", half_to_json(b)},
               {"omega", half_to_json(o)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "tau=" << t.str() << " (alpha=" << a.str() << " beta=" << b.str()
                  << " omega=" << o.str() << ")\n";
    }
    return 0;
}

int cmd_compare(const Options& opt, const std::string& gt, const std::string& ht) {
    Rank rank(opt.rank);
    OrientedWord u = parse_oriented(opt.oriented, rank);
    Ordering3 c = compare(u, parse_word(gt, rank), parse_word(ht, rank));
    const char* sym = c == Ordering3::Less ? "<" : c == Ordering3::Equal ? "=" : ">";
    if (opt.json_out()) std::cout << json{{"result", sym}}.dump() << "\n";
    else std::cout << sym << "\n";
    return 0;
}

int cmd_ball(const Options& opt) {
    Rank rank(opt.rank);
    if (ball_size(opt.rank, opt.radius) > kBallCap)
        throw std::invalid_argument("ball too large to list (cap " +
                                    std::to_string(kBallCap) + " words)");
    OrientedWord u = parse_oriented(opt.oriented, rank);
    auto sorted = sort_words(u, enumerate_ball(rank, opt.radius));
    // "e" is unambiguous while it is not itself a generator letter
    const std::string marker = opt.rank <= 4 ? "e" : "1";
    if (opt.json_out()) {
        json j = json::array();
        for (const auto& g : sorted) j.push_back(to_string(g, ""));
        std::cout << json{{"words", j}}.dump() << "\n";
    } else {
        for (const auto& g : sorted) std::cout << to_string(g, marker) << "\n";
    }
    return 0;
}

int cmd_oriented(const Options& opt, bool only_symmetric, bool only_lex) {
    if (opt.rank > kOrientedRankCap)
        throw std::invalid_argument("oriented listing capped at rank " +
                                    std::to_string(kOrientedRankCap));
    if (opt.rank > 3)
        std::cerr << "warning: (2k)! = many words at rank " << opt.rank << "\n";
    Rank rank(opt.rank);
    int n_symmetric = 0, n_lex = 0, n_shown = 0;
    json rows = json::array();
    auto words = enumerate_oriented(rank);
    for (const auto& u : words) {
        bool sym = is_symmetric(u);
        bool std_lex = is_standard_lex_form(u);
        auto form = is_lex_form(u);
        if (sym) ++n_symmetric;
        if (std_lex) ++n_lex;
        if (only_symmetric && !sym) continue;
        if (only_lex && !std_lex) continue;
        ++n_shown;
        if (opt.json_out()) {
            json row{{"word", to_string(u)}, {"symmetric", sym}, {"standard_lex", std_lex}};
            if (form) row["lex_form"] = json{{"lower", form->lower}, {"upper", form->upper}};
            rows.push_back(row);
        } else {
            std::cout << to_string(u);
            if (sym) std::cout << " symmetric";
            if (form) {
                std::cout << (std_lex ? " standard-lex(" : " lex(");
                for (std::size_t i = 0; i < form->upper.size(); ++i)
                    std::cout << (i ? "," : "") << form->upper[i];
                std::cout << ")";
            }
            std::cout << "\n";
        }
    }
    if (opt.json_out()) {
        std::cout << json{{"words", rows},
                          {"total", words.size()},
                          {"symmetric", n_symmetric},
                          {"standard_lex", n_lex}}
                         .dump()
                  << "\n";
    } else {
        std::cout << n_shown << " shown of " << words.size() << " words, " << n_symmetric
                  << " symmetric, " << n_lex << " standard-lex\n";
    }
    return 0;
}

int cmd_check(const Options& opt) {
    Rank rank(opt.rank);
    Profile profile = opt.profile == "full" ? Profile::Full : Profile::Quick;
    auto reports = run_all(rank, profile);
    if (!opt.suite.empty()) {
        std::erase_if(reports, [&](const CheckReport& r) { return r.name != opt.suite; });
        if (reports.empty())
            throw std::invalid_argument("unknown suite '" + opt.suite + "'");
    }
    bool all_passed = true;
    for (const auto& r : reports) all_passed &= r.passed;
    if (opt.json_out()) std::cout << to_json_string(reports) << "\n";
    else
        for (const auto& r : reports) std::cout << to_text_line(r) << "\n";
    return all_passed ? 0 : 1;
}

int print_report(const Options& opt, const CheckReport& report) {
    if (opt.json_out()) std::cout << to_json_string(report) << "\n";
    else std::cout << to_text_line(report) << "\n";
    return report.passed ? 0 : 1;
}

int cmd_witness(const Options& opt, const std::string& ut, const std::string& u2t) {
    Rank rank(opt.rank);
    OrientedWord u = parse_oriented(ut, rank);
    OrientedWord u2 = parse_oriented(u2t, rank);
    return print_report(opt, distinct_witness(u, u2, opt.max_len));
}

int cmd_nonbiorder(const Options& opt) {
    Rank rank(opt.rank);
    OrientedWord u = parse_oriented(opt.oriented, rank);
    return print_report(opt, find_non_biorder_witness(u, opt.max_len));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"left orders on free groups induced by oriented words"};
    app.require_subcommand(1);
    Options opt;

    std::string word_text, g_text, h_text, u_text, u2_text;
    bool only_symmetric = false, only_lex = false;

    auto* weight = app.add_subcommand("weight", "evaluate tau, alpha, beta, omega");
    add_common(weight, opt);
    weight->add_option("word", word_text, "word to evaluate");

    auto* cmp = app.add_subcommand("compare", "compare two words under <=_u");
    add_common(cmp, opt);
    cmp->add_option("lhs", g_text, "left word")->required();
    cmp->add_option("rhs", h_text, "right word")->required();

    auto* ball = app.add_subcommand("ball", "list the ball sorted under <=_u");
    add_common(ball, opt);
    ball->add_option("-r,--radius", opt.radius, "ball radius")->check(CLI::NonNegativeNumber);

    auto* oriented = app.add_subcommand("oriented", "list and classify oriented words");
    add_common(oriented, opt, false);
    oriented->add_flag("--symmetric", only_symmetric, "only words with u = u^-1");
    oriented->add_flag("--standard-lex", only_lex, "only standard lex-form words");

    auto* check = app.add_subcommand("check", "run theorem verification suites");
    add_common(check, opt, false);
    check->add_option("--profile", opt.profile, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    check->add_option("--suite", opt.suite, "run a single named suite");

    auto* witness = app.add_subcommand("witness", "separating word for two oriented words");
    add_common(witness, opt, false);
    witness->add_option("u", u_text, "first oriented word")->required();
    witness->add_option("u2", u2_text, "second oriented word")->required();
    witness->add_option("--max-len", opt.max_len, "witness length bound");

    auto* nonbi = app.add_subcommand("nonbiorder", "conjugation witness against bi-order");
    add_common(nonbi, opt);
    nonbi->add_option("--max-len", opt.max_len, "element length bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (weight->parsed()) return cmd_weight(opt, word_text);
        if (cmp->parsed()) return cmd_compare(opt, g_text, h_text);
        if (ball->parsed()) return cmd_ball(opt);
        if (oriented->parsed()) return cmd_oriented(opt, only_symmetric, only_lex);
        if (check->parsed()) return cmd_check(opt);
        if (witness->parsed()) return cmd_witness(opt, u_text, u2_text);
        if (nonbi->parsed()) return cmd_nonbiorder(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
