#ifndef TRIET_QFIELD_HPP
#define TRIET_QFIELD_HPP

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "triet/errors.hpp"

namespace triet {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

/// Ambient real quadratic field Q(sqrt(d)), d square-free. d = 1 is Q itself.
struct FieldTag {
    explicit FieldTag(unsigned long long d);
    unsigned long long d;
};

bool is_square_free(unsigned long long n);

// n = s^2 * m with m square-free; returns (s, m).
std::pair<unsigned long long, unsigned long long>
extract_square_part(unsigned long long n);

/**
 * Exact element a + b*sqrt(d) of a fixed real quadratic field.
 *
 * Canonical form: rationals in lowest terms with positive denominator
 * (mpq invariant), and b == 0 implies d == 1, so pure rationals carry the
 * tag d = 1 and are compatible with every field. Mixing two distinct
 * irrational fields throws FieldMismatch.
 */
class QuadraticNumber {
public:
    QuadraticNumber() : a_(0), b_(0), d_(1) {}
    QuadraticNumber(long long n) : a_(n), b_(0), d_(1) {}
    QuadraticNumber(Rational a) : a_(std::move(a)), b_(0), d_(1) {}
    QuadraticNumber(Rational a, Rational b, FieldTag field);

    /// sqrt(n) with the square factor extracted, e.g. sqrt(8) = 2*sqrt(2).
    static QuadraticNumber square_root_of(unsigned long long n);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    unsigned long long d() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Exact sign in {-1, 0, +1}; rational arithmetic only (compares a^2
    /// against b^2 d when the two parts have opposite signs).
    int sign() const;

    /// a - b*sqrt(d).
    QuadraticNumber galois_conjugate() const;

    QuadraticNumber operator-() const;
    QuadraticNumber& operator+=(const QuadraticNumber& o);
    QuadraticNumber& operator-=(const QuadraticNumber& o);
    QuadraticNumber& operator*=(const QuadraticNumber& o);
    QuadraticNumber& operator/=(const QuadraticNumber& o);

    friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
    friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
    friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
    friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);
    friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }
    friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() > 0; }
    friend bool operator>=(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() >= 0; }

    /// Canonical rendering, e.g. "-1/5 + 1/5*sqrt(5)"; parse_exact inverts it.
    std::string str() const;

    /// double approximation (diagnostics only, never used in decisions).
    double approx() const;

private:
    Rational a_, b_;
    unsigned long long d_;

    void normalize();
    // Common field of the two operands, or FieldMismatch.
    static unsigned long long unify(const QuadraticNumber& x, const QuadraticNumber& y);
};

/**
 * Parser for the exact number-literal grammar:
 *
 *   expr     := term (("+"|"-") term)* ;
 *   term     := factor (("*"|"/") factor)* ;
 *   factor   := rational | "sqrt" "(" uint ")" | "(" expr ")" | "-" factor ;
 *   rational := int ("/" uint)? .
 *
 * All sqrt() radicands must reduce to one square-free d; otherwise
 * MixedFields. If `expected` is given, the result must be rational or live
 * in that field; otherwise FieldMismatch.
 */
QuadraticNumber parse_exact(std::string_view text,
                            std::optional<FieldTag> expected = std::nullopt);

/// Integer pair with m*u + n*v = t exactly.
struct LatticeWitness {
    Integer m, n;
};

/**
 * Decides t in uZ + vZ by splitting into rational and sqrt(d) components
 * (a 2x2 rational linear system in (m, n)). Returns the integer solution of
 * the regular system, searches the solution line for an integer point in the
 * singular case, and returns nullopt when none exists.
 */
std::optional<LatticeWitness> lattice_membership(const QuadraticNumber& u,
                                                 const QuadraticNumber& v,
                                                 const QuadraticNumber& t);

/// True iff no rational pair (p,q) != (0,0) has p*u + q*v = 0.
bool q_independent(const QuadraticNumber& u, const QuadraticNumber& v);

} // namespace triet

#endif
