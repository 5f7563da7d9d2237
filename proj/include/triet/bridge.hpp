#ifndef TRIET_BRIDGE_HPP
#define TRIET_BRIDGE_HPP

#include <optional>
#include <utility>

#include "triet/induct.hpp"
#include "triet/morph.hpp"

namespace triet {

enum class SigmaVariant { S01, S10 };

/// Letterwise image under sigma01 (A,B,C -> 0,01,1) or sigma10 (0,10,1).
std::string sigma(const TernaryWord& w, SigmaVariant variant);

/// The unique ternary w with u = sigma01(w) and v = sigma10(w), if the pair
/// is amicable.
std::optional<TernaryWord> ternarize_words(const std::string& u, const std::string& v);

/// Ternarization of two amicable binary morphisms; nullopt when any of the
/// three amicability relations fails.
std::optional<Morphism> ternarize_morphisms(const Morphism& phi, const Morphism& psi);

/// Inverse of ternarization: recovers (phi, psi) with phi(0) = sigma01(eta(A))
/// etc.; present only when eta(B) is consistent with the B-relation.
std::optional<std::pair<Morphism, Morphism>> split_ternary(const Morphism& eta);

enum class EtaChoice { Xi, XiSquared };

/**
 * Parameters of the non-degenerate 3iet word fixed by a substitution,
 * recovered symbolically from the incidence matrix and the conjugation chain.
 */
struct RecoveredParameters {
    QuadraticNumber alpha, beta, rho, lambda;
    EtaChoice eta_choice = EtaChoice::Xi;
    std::size_t conjugacy_word_length = 0;
    Interval interval;          // [rho(1-lambda), rho(1-lambda) + lambda)
    Morphism eta;               // xi or xi^2, the substitution of the interval
    Morphism eta_left;          // leftmost conjugate of eta
    TernaryWord conjugacy_word; // w with eta(a) w = w eta_left(a)
};

RecoveredParameters recover_parameters(const Morphism& xi);

struct InvarianceReport {
    bool prefix_fixed = false;
    bool itineraries_match = false;

    bool ok() const { return prefix_fixed && itineraries_match; }
};

/// (a) xi applied to the coding prefix of rho reproduces it; (b) inducing on
/// the recovered interval yields exactly the eta images with the homothety
/// centered at rho.
InvarianceReport verify_invariance(const Morphism& xi, const RecoveredParameters& params,
                                   std::size_t n = 2000);

enum class StructuralRelation { ACtoB, BtoCA, None };

std::string to_string(StructuralRelation r);

/// Which of the two corollary relations eta(B) satisfies:
///   ACtoB: eta(B) in omega_{AC->B}(eta(AC)) and omega_{CA->B}(eta(CA));
///   BtoCA: eta(B) in omega_{B->CA}(eta(AC)) and omega_{B->AC}(eta(CA)).
StructuralRelation structural_relation(const Morphism& eta);

struct HksReport {
    bool xi_in_p_prime = false;
    bool xi2_in_p_prime = false;
    bool recover_succeeded = false;
    bool theorem_witness = false; // recover_succeeded implies (xi or xi^2 in P')
};

HksReport hks_check(const Morphism& xi);

} // namespace triet

#endif
