#pragma once

#include "fgord/order.hpp"

#include <chrono>
#include <cstdint>
#include <optional>

namespace fgord {

// Counterexample (or witness) payload attached to a report. Every failed
// report carries one, and re-evaluating its words reproduces the violation.
struct Witness {
    std::vector<std::pair<std::string, Word>> words;
    std::vector<std::pair<std::string, HalfInt>> weights;
    std::string note;
};

struct CheckReport {
    std::string name;
    bool passed = true;
    std::uint64_t cases_checked = 0;
    std::optional<Witness> witness;
    std::chrono::microseconds elapsed{0};
};

// |tau(g)+tau(h)-tau(gh)| is 0 in the three trivial cases and exactly 1/2
// otherwise, over all ordered pairs in the ball.
CheckReport check_defect(const OrientedWord& u, int radius);

// Trichotomy on the ball, cone closure on ball pairs, left invariance on
// ball triples. Pair and triple radii default to min(radius, 3).
CheckReport check_order_axioms(const OrientedWord& u, int radius,
                               int pair_radius = -1, int triple_radius = -1);

// tau(e) = 0 and |tau(g)+tau(h)-tau(gh)| < |tau(g)|+|tau(h)| whenever
// g != e or h != e.
CheckReport check_small_relative_defect(const OrientedWord& u, int radius);

// <=_u restricted to positive monoid words of length <= monoid_len equals
// the standard lexicographic order exactly when u is standard lex form.
CheckReport check_lex(const OrientedWord& u, int monoid_len);

// The positive cone is closed under word reversal exactly when u = u^{-1}.
CheckReport check_reversible(const OrientedWord& u, int radius);

// is_positive(u^{-1}, g) <=> is_positive(u, g^rev) on the ball.
CheckReport check_inverse_reverse(const OrientedWord& u, int radius);

// Searches shortlex-first for positive g (|g| <= max_len) and conjugator f
// (|f| <= conj_len) with fgf^{-1} not positive; such a witness shows <=_u
// is not a bi-order.
CheckReport find_non_biorder_witness(const OrientedWord& u, int max_len,
                                     int conj_len = 2);

// Minimal shortlex word on which the signs of tau_u and tau_{u2} differ;
// length at most max_len always suffices for max_len >= 4.
CheckReport distinct_witness(const OrientedWord& u, const OrientedWord& u2,
                             int max_len);

// tau_u - tau_{u2} equals the sum of its Brooks decomposition on the ball.
CheckReport check_brooks_decomposition(const OrientedWord& u,
                                       const OrientedWord& u2, int radius);

// tau_u(g) + tau_u(g^{-1}) = 0, tau_u + tau_{u^rev} = total exponent,
// tau_u(g) + tau_{u^{-1}}(g^tog) = 0, tau_u(g) + tau_{u^tog}(g^rev) =
// total exponent, on the ball.
CheckReport check_involution_identities(const OrientedWord& u, int radius);

enum class Profile { Quick, Full };

// Runs every suite over all oriented words of the given rank, one
// aggregated report per suite, in a fixed order. Pairwise distinctness is
// gated to k = 2 (quadratic in (2k)!).
std::vector<CheckReport> run_all(Rank rank, Profile profile);

std::string to_text_line(const CheckReport& report);
std::string to_json_string(const CheckReport& report);
std::string to_json_string(const std::vector<CheckReport>& reports);

} // namespace fgord
