#include "fgord/verify.hpp"

#include <nlohmann/json.hpp>

#include <functional>

namespace fgord {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    std::chrono::microseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    }
};

// Positive monoid words of length <= max_len, shortlex under a1 < a2 < ...
std::vector<Word> monoid_words(Rank rank, int max_len) {
    std::vector<Word> out;
    out.push_back(Word(rank));
    std::vector<std::vector<Letter>> level = {{}};
    for (int n = 1; n <= max_len; ++n) {
        std::vector<std::vector<Letter>> next;
        for (const auto& w : level) {
            for (int i = 1; i <= rank.k(); ++i) {
                auto ext = w;
                ext.push_back(Letter(i));
                next.push_back(std::move(ext));
            }
        }
        for (const auto& w : next) out.push_back(Word(rank, w));
        level = std::move(next);
    }
    return out;
}

// Standard lexicographic comparison on monoid words, prefixes first.
int lex_compare(const Word& g, const Word& h) {
    auto a = g.letters(), b = h.letters();
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].index() != b[i].index())
            return a[i].index() < b[i].index() ? -1 : 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

Witness tau_witness(const OrientedWord& u, std::vector<std::pair<std::string, Word>> words,
                    std::string note = {}) {
    Witness w;
    for (auto& [label, word] : words)
        w.weights.emplace_back("tau(" + label + ")", tau(u, word));
    w.words = std::move(words);
    w.note = std::move(note);
    return w;
}

} // namespace

CheckReport check_defect(const OrientedWord& u, int radius) {
    Timer timer;
    CheckReport report{"defect"};
    auto ball = enumerate_ball(u.rank(), radius);
    for (const auto& g : ball) {
        for (const auto& h : ball) {
            ++report.cases_checked;
            Word gh = concat(g, h);
            bool trivial = g.is_identity() || h.is_identity() || gh.is_identity();
            HalfInt expected = trivial ? HalfInt(0) : HalfInt::half();
            if (defect(u, g, h) != expected) {
                report.passed = false;
                report.witness = tau_witness(u, {{"g", g}, {"h", h}, {"gh", gh}},
                                             "defect != " + expected.str());
                report.witness->weights.emplace_back("defect", defect(u, g, h));
                report.elapsed = timer.elapsed();
                return report;
            }
        }
    }
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_order_axioms(const OrientedWord& u, int radius, int pair_radius,
                               int triple_radius) {
    Timer timer;
    CheckReport report{"order-axioms"};
    if (pair_radius < 0) pair_radius = std::min(radius, 3);
    if (triple_radius < 0) triple_radius = std::min(radius, 3);

    auto fail = [&](Witness w) {
        report.passed = false;
        report.witness = std::move(w);
        report.elapsed = timer.elapsed();
        return report;
    };

    // trichotomy: exactly one of g, g^{-1} positive, for g != e
    for (const auto& g : enumerate_ball(u.rank(), radius)) {
        if (g.is_identity()) continue;
        ++report.cases_checked;
        Word gi = inverse(g);
        if (is_positive(u, g) == is_positive(u, gi))
            return fail(tau_witness(u, {{"g", g}, {"g^-1", gi}}, "trichotomy violated"));
    }

    auto pair_ball = enumerate_ball(u.rank(), pair_radius);

    // cone closure
    for (const auto& g : pair_ball) {
        if (!is_positive(u, g)) continue;
        for (const auto& h : pair_ball) {
            if (!is_positive(u, h)) continue;
            ++report.cases_checked;
            Word gh = concat(g, h);
            if (!is_positive(u, gh))
                return fail(tau_witness(u, {{"g", g}, {"h", h}, {"gh", gh}},
                                        "cone closure violated"));
        }
    }

    // left invariance, brute force
    auto triple_ball = enumerate_ball(u.rank(), triple_radius);
    for (const auto& f : triple_ball) {
        for (const auto& g : triple_ball) {
            for (const auto& h : triple_ball) {
                ++report.cases_checked;
                if (compare(u, g, h) != compare(u, concat(f, g), concat(f, h)))
                    return fail(tau_witness(u, {{"f", f}, {"g", g}, {"h", h}},
                                            "left invariance violated"));
            }
        }
    }

    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_small_relative_defect(const OrientedWord& u, int radius) {
    Timer timer;
    CheckReport report{"small-relative-defect"};
    ++report.cases_checked;
    if (!tau(u, Word(u.rank())).is_zero()) {
        report.passed = false;
        report.witness = tau_witness(u, {{"e", Word(u.rank())}}, "tau(e) != 0");
        report.elapsed = timer.elapsed();
        return report;
    }
    auto ball = enumerate_ball(u.rank(), radius);
    for (const auto& g : ball) {
        for (const auto& h : ball) {
            if (g.is_identity() && h.is_identity()) continue;
            ++report.cases_checked;
            HalfInt bound = tau(u, g).abs() + tau(u, h).abs();
            if (!(defect(u, g, h) < bound)) {
                report.passed = false;
                report.witness = tau_witness(u, {{"g", g}, {"h", h}},
                                             "relative defect not small");
                report.witness->weights.emplace_back("defect", defect(u, g, h));
                report.elapsed = timer.elapsed();
                return report;
            }
        }
    }
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_lex(const OrientedWord& u, int monoid_len) {
    Timer timer;
    CheckReport report{"lex"};
    const bool lex_form = is_standard_lex_form(u);
    auto ms = monoid_words(u.rank(), monoid_len);
    std::optional<Witness> violation;
    for (std::size_t j = 0; j < ms.size() && !violation; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            ++report.cases_checked;
            int lex = lex_compare(ms[i], ms[j]);
            bool order_less = compare(u, ms[i], ms[j]) == Ordering3::Less;
            if ((lex < 0) != order_less) {
                violation = tau_witness(
                    u, {{"g", ms[i]}, {"h", ms[j]}},
                    lex < 0 ? "g <lex h but not g <u h" : "h <lex g but not h <u g");
                break;
            }
        }
    }
    report.passed = (lex_form == !violation.has_value());
    if (violation) report.witness = std::move(violation);
    if (!report.passed && !report.witness)
        report.witness = Witness{{}, {}, "lex-violating monoid pair expected but not found"};
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_reversible(const OrientedWord& u, int radius) {
    Timer timer;
    CheckReport report{"reversible"};
    const bool symmetric = is_symmetric(u);
    std::optional<Witness> violation;
    for (const auto& g : enumerate_ball(u.rank(), radius)) {
        ++report.cases_checked;
        if (is_positive(u, g) && !is_positive(u, reverse(g))) {
            violation = tau_witness(u, {{"g", g}, {"g^rev", reverse(g)}},
                                    "positive cone not closed under reversal");
            break;
        }
    }
    report.passed = (symmetric == !violation.has_value());
    if (violation) report.witness = std::move(violation);
    if (!report.passed && !report.witness)
        report.witness = Witness{{}, {}, "reversal counterexample expected but not found"};
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_inverse_reverse(const OrientedWord& u, int radius) {
    Timer timer;
    CheckReport report{"inverse-reverse"};
    OrientedWord ui = oriented_inverse(u);
    for (const auto& g : enumerate_ball(u.rank(), radius)) {
        ++report.cases_checked;
        if (is_positive(ui, g) != is_positive(u, reverse(g))) {
            report.passed = false;
            Witness w = tau_witness(u, {{"g", g}, {"g^rev", reverse(g)}},
                                    "P_{u^-1} != (P_u)^rev");
            w.weights.emplace_back("tau_{u^-1}(g)", tau(ui, g));
            report.witness = std::move(w);
            break;
        }
    }
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport find_non_biorder_witness(const OrientedWord& u, int max_len, int conj_len) {
    Timer timer;
    CheckReport report{"non-biorder"};
    auto conjugators = enumerate_ball(u.rank(), conj_len);
    for (const auto& g : enumerate_ball(u.rank(), max_len)) {
        if (!is_positive(u, g)) continue;
        for (const auto& f : conjugators) {
            if (f.is_identity()) continue;
            ++report.cases_checked;
            Word conj = concat(concat(f, g), inverse(f));
            if (!is_positive(u, conj)) {
                Witness w = tau_witness(u, {{"g", g}, {"f", f}, {"fgf^-1", conj}},
                                        "conjugation does not preserve the cone");
                report.witness = std::move(w);
                report.elapsed = timer.elapsed();
                return report;
            }
        }
    }
    report.passed = false;
    report.witness = Witness{{}, {}, "no conjugation witness within bounds"};
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport distinct_witness(const OrientedWord& u, const OrientedWord& u2, int max_len) {
    if (u == u2) throw std::invalid_argument("distinct_witness requires distinct words");
    Timer timer;
    CheckReport report{"distinct"};
    for (const auto& g : enumerate_ball(u.rank(), max_len)) {
        if (g.is_identity()) continue;
        ++report.cases_checked;
        if (tau(u, g).sign() != tau(u2, g).sign()) {
            Witness w;
            w.words.emplace_back("g", g);
            w.weights.emplace_back("tau_u(g)", tau(u, g));
            w.weights.emplace_back("tau_u'(g)", tau(u2, g));
            w.note = "u=" + to_string(u) + " u'=" + to_string(u2);
            report.witness = std::move(w);
            report.elapsed = timer.elapsed();
            return report;
        }
    }
    report.passed = false;
    report.witness = Witness{{}, {}, "no separating word within bounds"};
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_brooks_decomposition(const OrientedWord& u, const OrientedWord& u2,
                                       int radius) {
    Timer timer;
    CheckReport report{"brooks-decomposition"};
    auto terms = tau_difference_decomposition(u, u2);
    for (const auto& g : enumerate_ball(u.rank(), radius)) {
        ++report.cases_checked;
        HalfInt lhs = tau(u, g) - tau(u2, g);
        std::int64_t rhs = 0;
        for (const auto& term : terms) rhs += brooks(term, g);
        if (lhs != HalfInt::whole(rhs)) {
            report.passed = false;
            Witness w;
            w.words.emplace_back("g", g);
            w.weights.emplace_back("tau_u(g) - tau_u'(g)", lhs);
            w.weights.emplace_back("sum of Brooks terms", HalfInt::whole(rhs));
            w.note = "u=" + to_string(u) + " u'=" + to_string(u2);
            report.witness = std::move(w);
            break;
        }
    }
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_involution_identities(const OrientedWord& u, int radius) {
    Timer timer;
    CheckReport report{"involution-identities"};
    OrientedWord urev = oriented_reverse(u);
    OrientedWord uinv = oriented_inverse(u);
    OrientedWord utog = oriented_case_switch(u);

    auto fail = [&](const Word& g, const char* which, HalfInt lhs, HalfInt rhs) {
        report.passed = false;
        Witness w;
        w.words.emplace_back("g", g);
        w.weights.emplace_back("lhs", lhs);
        w.weights.emplace_back("rhs", rhs);
        w.note = which;
        report.witness = std::move(w);
        report.elapsed = timer.elapsed();
        return report;
    };

    for (const auto& g : enumerate_ball(u.rank(), radius)) {
        report.cases_checked += 4;
        HalfInt t = tau(u, g);
        HalfInt exp = HalfInt::whole(total_exponent(g));
        if (!(t + tau(u, inverse(g))).is_zero())
            return fail(g, "tau_u(g) + tau_u(g^-1) != 0", t, -tau(u, inverse(g)));
        if (t + tau(urev, g) != exp)
            return fail(g, "tau_u + tau_{u^rev} != total exponent", t + tau(urev, g), exp);
        if (!(t + tau(uinv, case_switch(g))).is_zero())
            return fail(g, "tau_u(g) + tau_{u^-1}(g^tog) != 0", t,
                        -tau(uinv, case_switch(g)));
        if (t + tau(utog, reverse(g)) != exp)
            return fail(g, "tau_u(g) + tau_{u^tog}(g^rev) != total exponent",
                        t + tau(utog, reverse(g)), exp);
    }
    report.elapsed = timer.elapsed();
    return report;
}

namespace {

CheckReport aggregate(const std::string& name, std::uint64_t& total_elapsed_us,
                      const std::function<std::vector<CheckReport>()>& run) {
    Timer timer;
    CheckReport agg{name};
    for (CheckReport r : run()) {
        agg.cases_checked += r.cases_checked;
        if (!r.passed && agg.passed) {
            agg.passed = false;
            agg.witness = std::move(r.witness);
        }
    }
    agg.elapsed = timer.elapsed();
    total_elapsed_us += agg.elapsed.count();
    return agg;
}

} // namespace

std::vector<CheckReport> run_all(Rank rank, Profile profile) {
    const bool full = profile == Profile::Full;
    const bool small_rank = rank.k() == 2;

    // Radii scale down with rank to keep the suite at desk scale; the k=2
    // full profile is the reference configuration.
    const int defect_r = full && small_rank ? 3 : 2;
    const int trich_r = full ? (small_rank ? 5 : 4) : 3;
    const int pair_r = full && small_rank ? 3 : 2;
    const int triple_r = small_rank ? (full ? 3 : 2) : 2;
    const int spot_words = 6; // deep left-invariance scan on a few words only
    const int srd_r = full && small_rank ? 3 : 2;
    const int lex_len = full ? 5 : 4;
    const int rev_r = full ? (small_rank ? 4 : 3) : 3;
    const int invrev_r = full ? (small_rank ? 4 : 3) : 3;
    const int nonbi_len = 4;
    const int distinct_len = 4;
    const int brooks_r = full && small_rank ? 4 : (small_rank ? 3 : 2);
    const int invol_r = full ? (small_rank ? 4 : 3) : 3;

    auto words = enumerate_oriented(rank);
    std::uint64_t elapsed_us = 0;
    std::vector<CheckReport> reports;

    auto per_word = [&](const std::string& name,
                        const std::function<CheckReport(const OrientedWord&, std::size_t)>& f) {
        reports.push_back(aggregate(name, elapsed_us, [&] {
            std::vector<CheckReport> rs;
            rs.reserve(words.size());
            for (std::size_t i = 0; i < words.size(); ++i) {
                rs.push_back(f(words[i], i));
                if (rs.back().witness && !rs.back().passed)
                    rs.back().witness->note += " [u=" + to_string(words[i]) + "]";
            }
            return rs;
        }));
    };

    per_word("defect", [&](const OrientedWord& u, std::size_t) {
        return check_defect(u, defect_r);
    });
    per_word("order-axioms", [&](const OrientedWord& u, std::size_t i) {
        int tr = i < spot_words ? triple_r : std::min(triple_r, 2);
        return check_order_axioms(u, trich_r, pair_r, tr);
    });
    per_word("small-relative-defect", [&](const OrientedWord& u, std::size_t) {
        return check_small_relative_defect(u, srd_r);
    });
    per_word("lex", [&](const OrientedWord& u, std::size_t) {
        return check_lex(u, lex_len);
    });
    per_word("reversible", [&](const OrientedWord& u, std::size_t) {
        return check_reversible(u, rev_r);
    });
    per_word("inverse-reverse", [&](const OrientedWord& u, std::size_t) {
        return check_inverse_reverse(u, invrev_r);
    });
    per_word("non-biorder", [&](const OrientedWord& u, std::size_t) {
        return find_non_biorder_witness(u, nonbi_len);
    });

    if (small_rank) {
        // pairwise distinctness is quadratic in (2k)!; gated to k = 2
        reports.push_back(aggregate("distinct", elapsed_us, [&] {
            std::vector<CheckReport> rs;
            for (std::size_t i = 0; i < words.size(); ++i)
                for (std::size_t j = i + 1; j < words.size(); ++j)
                    rs.push_back(distinct_witness(words[i], words[j], distinct_len));
            return rs;
        }));
    }

    reports.push_back(aggregate("brooks-decomposition", elapsed_us, [&] {
        std::vector<CheckReport> rs;
        if (small_rank) {
            for (std::size_t i = 0; i < words.size(); ++i)
                for (std::size_t j = i + 1; j < words.size(); ++j)
                    rs.push_back(check_brooks_decomposition(words[i], words[j], brooks_r));
        } else {
            // deterministic sample of pairs at larger rank
            const std::size_t stride = 7;
            for (std::size_t i = 0, n = 0; n < 50 && i + stride < words.size();
                 i += stride, ++n)
                rs.push_back(check_brooks_decomposition(words[i], words[i + stride], brooks_r));
        }
        return rs;
    }));

    per_word("involution-identities", [&](const OrientedWord& u, std::size_t) {
        return check_involution_identities(u, invol_r);
    });

    return reports;
}

namespace {

nlohmann::json witness_to_json(const Witness& w) {
    nlohmann::json jw;
    jw["words"] = nlohmann::json::object();
    for (const auto& [label, word] : w.words)
        jw["words"][label] = to_string(word, "");
    jw["weights"] = nlohmann::json::object();
    for (const auto& [label, value] : w.weights) {
        if (value.is_whole()) jw["weights"][label] = value.doubled() / 2;
        else jw["weights"][label] = value.str();
    }
    if (!w.note.empty()) jw["note"] = w.note;
    return jw;
}

nlohmann::json report_to_json(const CheckReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["cases"] = r.cases_checked;
    j["elapsed_us"] = r.elapsed.count();
    if (r.witness) j["witness"] = witness_to_json(*r.witness);
    return j;
}

} // namespace

std::string to_text_line(const CheckReport& r) {
    std::string line = (r.passed ? "PASS " : "FAIL ") + r.name + " cases=" +
                       std::to_string(r.cases_checked);
    if (r.witness) {
        for (const auto& [label, word] : r.witness->words)
            line += " " + label + "=" + to_string(word);
        for (const auto& [label, value] : r.witness->weights)
            line += " " + label + "=" + value.str();
        if (!r.witness->note.empty()) line += " (" + r.witness->note + ")";
    }
    return line;
}

std::string to_json_string(const CheckReport& report) {
    return report_to_json(report).dump(2);
}

std::string to_json_string(const std::vector<CheckReport>& reports) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r));
    return j.dump(2);
}

} // namespace fgord
