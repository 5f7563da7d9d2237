#ifndef TRIET_MORPH_HPP
#define TRIET_MORPH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "triet/errors.hpp"

namespace triet {

struct IncidenceMatrix {
    std::vector<char> domain, target;
    std::vector<std::vector<long long>> counts; // counts[i][j] = |phi(domain[i])|_{target[j]}

    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

/**
 * Non-erasing morphism between free monoids over explicit ordered alphabets.
 * Immutable; the letter order of the domain drives first/last-letter
 * comparisons elsewhere.
 */
class Morphism {
public:
    Morphism(std::vector<char> domain, std::vector<char> target,
             std::map<char, std::string> images);

    /// Endomorphism shorthand (target = domain).
    Morphism(std::vector<char> alphabet, std::map<char, std::string> images);

    /// Parses "A=ABA,B=C,C=BAC"; the domain order is the key order given.
    static Morphism parse(const std::string& text);

    const std::vector<char>& domain() const { return domain_; }
    const std::vector<char>& target() const { return target_; }
    const std::string& image(char letter) const;
    bool is_endomorphism() const;
    std::size_t total_image_length() const;

    std::string apply(const std::string& w) const;
    Morphism compose_after(const Morphism& inner) const; // this o inner
    Morphism squared() const;

    std::string str() const; // the parse format

    friend bool operator==(const Morphism& x, const Morphism& y) {
        return x.domain_ == y.domain_ && x.target_ == y.target_ && x.images_ == y.images_;
    }
    friend bool operator<(const Morphism& x, const Morphism& y) {
        return std::tie(x.domain_, x.target_, x.images_) < std::tie(y.domain_, y.target_, y.images_);
    }

private:
    std::vector<char> domain_, target_;
    std::map<char, std::string> images_;
};

IncidenceMatrix incidence(const Morphism& phi);

/// Positivity of M^e with the Wielandt exponent e = (k-1)^2 + 1.
bool primitive(const Morphism& phi);

enum class Side { Left, Right };

/**
 * One conjugation step. Left: all images share a first letter z; the result
 * maps a to z^{-1} phi(a) z. Right is the mirror-symmetric move. nullopt when
 * blocked.
 */
std::optional<Morphism> conjugate_step(const Morphism& phi, Side side);

/**
 * Conjugacy word between two morphisms on one conjugation chain.
 * side == Left:  word * conjugate(a) == original(a) * word for all a,
 * side == Right: word * original(a) == conjugate(a) * word for all a.
 */
struct ConjugacyCertificate {
    std::string word;
    Side side = Side::Left;
};

/// Repeats conjugate_step until blocked. Throws PeriodicCycle when the chain
/// revisits a morphism (the fixed point is then periodic).
std::pair<Morphism, ConjugacyCertificate> extreme_conjugate(const Morphism& phi, Side side);

/// Letterwise reversed images.
Morphism mirror(const Morphism& phi);

/// phi(a) = p * p_a with p and every p_a palindromes.
struct ClassPCertificate {
    std::string palindrome;
    std::map<char, std::string> parts;
};

std::optional<ClassPCertificate> class_p(const Morphism& phi);

/// Conjugacy of phi to mirror(phi), decided along the full conjugation chain.
std::optional<ConjugacyCertificate> class_p_prime(const Morphism& phi);

/// First n letters of lim phi^k(seed); requires phi(seed) = seed w, w nonempty.
std::string fixed_point_prefix(const Morphism& phi, char seed, std::size_t n);

/// Every morphism conjugate to phi, leftmost first.
std::vector<Morphism> conjugacy_chain(const Morphism& phi);

bool is_palindrome(const std::string& w);

} // namespace triet

#endif
