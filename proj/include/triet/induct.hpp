#ifndef TRIET_INDUCT_HPP
#define TRIET_INDUCT_HPP

#include <optional>
#include <set>
#include <vector>

#include "triet/iet.hpp"

namespace triet {

/// Default iteration bound for first-return searches.
inline constexpr std::size_t kDefaultCap = 1000000;

/**
 * First backward-orbit landings of alpha, beta, gamma, delta in the open
 * interval (gamma, delta):
 *
 *   a_hat = T^{-k_alpha}(alpha), minimal k >= 0, and likewise b_hat;
 *   c_hat = T^{-k_gamma}(gamma), minimal k >= 1, and likewise d_hat.
 */
struct KeanePoints {
    QuadraticNumber a_hat, b_hat, c_hat, d_hat;
    std::size_t k_alpha = 0, k_beta = 0, k_gamma = 0, k_delta = 0;
};

enum class CaseTag {
    I, II, III, IV, V, VI, VII, VIII, IX, X, XI, XII, // 5-itinerary orderings
    T3_I, T3_II, T3_III, T3_IV, T3_V, T3_VI,          // 3-itinerary coincidences
    FOUR,                                             // remaining coincidence patterns
};

std::string to_string(CaseTag tag);

enum class Pattern { P1, P2 };  // {r1,r1+1,r2,r1+r2,r1+r2+1} / {r1,r1+1,r2,r2+1,r1+r2+1}

struct Piece {
    Interval sub;
    TernaryWord word;

    std::size_t length() const { return word.size(); }
};

struct Homothety {
    QuadraticNumber lambda, mu, center;
};

struct InductionResult {
    std::vector<Piece> pieces;        // ordered partition of [gamma, delta)
    CaseTag case_tag = CaseTag::FOUR;
    std::size_t r1 = 0, r2 = 0;
    Pattern pattern = Pattern::P1;
    std::optional<Homothety> homothety;
    KeanePoints keane;
    TernaryWord ret1, ret2;           // R(d_hat - eps), R(c_hat + eps)

    std::set<std::size_t> length_set() const;
};

/// Exchange-of-intervals description of the induced map T_I.
struct InducedMap {
    struct Branch {
        Interval sub;                 // continuity piece of T_I
        QuadraticNumber shift;        // T_I(x) = x + shift on sub
        std::size_t return_time;      // constant |R| on the branch interior
    };
    std::vector<Branch> branches;     // 1, 2 or 3, left to right
    std::string permutation;          // "(1)", "(21)" or "(321)"
};

struct ReturnTimeSet {
    std::set<std::size_t> times;
    std::size_t r1 = 0, r2 = 0;
    Pattern pattern = Pattern::P1;
};

KeanePoints keane_points(const ThreeIet& T, const Interval& I,
                         std::size_t cap = kDefaultCap);

InductionResult itineraries(const ThreeIet& T, const Interval& I,
                            std::size_t cap = kDefaultCap);

InducedMap induced_map(const ThreeIet& T, const Interval& I,
                       std::size_t cap = kDefaultCap);

ReturnTimeSet return_time_set(const ThreeIet& T, const Interval& I,
                              std::size_t cap = kDefaultCap);

enum class OmegaRule { AC_to_B, CA_to_B, B_to_AC, B_to_CA };

/// All words obtained from w by one application of the rule; empty set when
/// the pattern does not occur.
std::set<TernaryWord> omega_rewrite(const TernaryWord& w, OmegaRule rule);

/// Checks every piece itinerary against the expression its case predicts
/// from R1 and R2.
bool verify_case_relations(const InductionResult& result);

/// It over the mirror interval equals the reversals with the exact piece
/// correspondence [1-delta'_j, 1-gamma'_j).
bool mirror_check(const ThreeIet& T, const Interval& I,
                  std::size_t cap = kDefaultCap);

} // namespace triet

#endif
