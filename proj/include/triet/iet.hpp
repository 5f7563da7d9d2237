#ifndef TRIET_IET_HPP
#define TRIET_IET_HPP

#include <optional>
#include <string>
#include <vector>

#include "triet/qfield.hpp"

namespace triet {

/// Word over {A, B, C}; plain string with validated alphabet.
using TernaryWord = std::string;

bool is_ternary_word(std::string_view w);
TernaryWord reversed(const TernaryWord& w);

/// Half-open interval [lo, hi).
struct Interval {
    QuadraticNumber lo, hi;

    QuadraticNumber length() const { return hi - lo; }
    bool contains(const QuadraticNumber& x) const { return lo <= x && x < hi; }
    bool empty() const { return (hi - lo).sign() <= 0; }
    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// [1-hi, 1-lo), the reflection through 1/2.
Interval mirrored(const Interval& I);

enum class Direction { Forward, Backward };

/**
 * Symmetric exchange of the three intervals
 *
 *   J_A = [0, alpha),  J_B = [alpha, beta),  J_C = [beta, 1)
 *
 * with permutation (321):
 *
 *   T(x) = x + 1 - alpha         on J_A
 *   T(x) = x + 1 - alpha - beta  on J_B
 *   T(x) = x - beta              on J_C
 *
 * Immutable after construction; minimality (Q-independence of 1-alpha and
 * beta) and non-degeneracy (minimal and 1 not in (1-alpha)Z + betaZ) are
 * decided exactly at construction time.
 */
class ThreeIet {
public:
    ThreeIet(QuadraticNumber alpha, QuadraticNumber beta);

    const QuadraticNumber& alpha() const { return alpha_; }
    const QuadraticNumber& beta() const { return beta_; }
    bool minimal() const { return minimal_; }
    bool nondegenerate() const { return nondegenerate_; }

    Interval domain_of(char letter) const;   // J_A, J_B, J_C
    Interval image_of(char letter) const;    // T(J_X)
    const QuadraticNumber& translation(char letter) const;

    /// Letter X with x in J_X; half-open boundaries decided exactly.
    char letter_at(const QuadraticNumber& x) const;

    QuadraticNumber step(const QuadraticNumber& x,
                         Direction dir = Direction::Forward) const;

    /// [x, T(x), ..., T^n(x)] (n+1 points), or inverse iterates.
    std::vector<QuadraticNumber> orbit(const QuadraticNumber& x, std::size_t n,
                                       Direction dir = Direction::Forward) const;

    /// First n letters of the coding of rho.
    TernaryWord code_prefix(const QuadraticNumber& rho, std::size_t n) const;

    /// Cylinder [w] = {rho : w is a prefix of the coding of rho}; nullopt
    /// iff w is not a factor of the language.
    std::optional<Interval> cylinder(const TernaryWord& w) const;

private:
    QuadraticNumber alpha_, beta_;
    QuadraticNumber trans_[3]; // c_A, c_B, c_C
    bool minimal_ = false, nondegenerate_ = false;

    void check_domain(const QuadraticNumber& x) const;
};

} // namespace triet

#endif
