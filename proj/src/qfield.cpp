#include "triet/qfield.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cctype>
#include <sstream>

namespace triet {

namespace {

constexpr unsigned long long kMaxRadicand = 1000000000000ull; // 10^12

} // namespace

bool is_square_free(unsigned long long n) {
    if (n == 0) return false;
    for (unsigned long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

std::pair<unsigned long long, unsigned long long>
extract_square_part(unsigned long long n) {
    unsigned long long s = 1, m = 1;
    for (unsigned long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (unsigned i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) m *= p;
    }
    m *= n; // leftover prime
    return {s, m};
}

FieldTag::FieldTag(unsigned long long d_) : d(d_) {
    if (d == 0 || !is_square_free(d))
        throw OrderViolation("FieldTag requires a positive square-free d, got " + std::to_string(d_));
}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, FieldTag field)
    : a_(std::move(a)), b_(std::move(b)), d_(field.d) {
    normalize();
}

QuadraticNumber QuadraticNumber::square_root_of(unsigned long long n) {
    if (n > kMaxRadicand)
        throw SyntaxError("radicand too large: " + std::to_string(n));
    auto [s, m] = extract_square_part(n);
    if (m == 1) return QuadraticNumber(Rational(s));
    return QuadraticNumber(Rational(0), Rational(s), FieldTag(m));
}

void QuadraticNumber::normalize() {
    if (d_ == 1) {
        a_ += b_;      // sqrt(1) folds into the rational part
        b_ = 0;
    }
    if (b_ == 0) d_ = 1;
}

unsigned long long QuadraticNumber::unify(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 1) return y.d_;
    if (y.d_ == 1) return x.d_;
    throw FieldMismatch("incompatible fields Q(sqrt(" + std::to_string(x.d_) +
                        ")) and Q(sqrt(" + std::to_string(y.d_) + "))");
}

int QuadraticNumber::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b| sqrt(d), i.e. a^2 vs b^2 d.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    int cmp = lhs.compare(rhs);
    if (cmp == 0) return 0; // impossible for square-free d > 1, but exact anyway
    return cmp > 0 ? sa : sb;
}

QuadraticNumber QuadraticNumber::galois_conjugate() const {
    QuadraticNumber r = *this;
    r.b_ = -r.b_;
    return r;
}

QuadraticNumber QuadraticNumber::operator-() const {
    QuadraticNumber r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
    d_ = unify(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
    d_ = unify(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
    unsigned long long d = unify(*this, o);
    Rational na = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    d_ = d;
    normalize();
    return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    unsigned long long d = unify(*this, o);
    // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d); the norm is nonzero
    // for o != 0 since sqrt(d) is irrational for square-free d > 1.
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
    Rational na = (a_ * o.a_ - b_ * o.b_ * Rational(d)) / norm;
    Rational nb = (b_ * o.a_ - a_ * o.b_) / norm;
    a_ = std::move(na);
    b_ = std::move(nb);
    d_ = d;
    normalize();
    return *this;
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.b_ == 0 && y.b_ == 0) return x.a_ == y.a_;
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace

std::string QuadraticNumber::str() const {
    if (b_ == 0) return rational_str(a_);
    std::string radical;
    Rational abs_b = b_ < 0 ? Rational(-b_) : b_;
    if (abs_b == 1)
        radical = "sqrt(" + std::to_string(d_) + ")";
    else
        radical = rational_str(abs_b) + "*sqrt(" + std::to_string(d_) + ")";
    if (a_ == 0) return (b_ < 0 ? "-" : "") + radical;
    return rational_str(a_) + (b_ < 0 ? " - " : " + ") + radical;
}

double QuadraticNumber::approx() const {
    using F = boost::multiprecision::cpp_bin_float_50;
    F va = F(numerator(a_).str()) / F(denominator(a_).str());
    F vb = F(numerator(b_).str()) / F(denominator(b_).str());
    return static_cast<double>(va + vb * sqrt(F(d_)));
}

// ---------------------------------------------------------------------------
// Literal parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    QuadraticNumber run() {
        QuadraticNumber v = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw SyntaxError("trailing input at position " + std::to_string(pos_));
        return v;
    }

private:
    std::string_view s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    QuadraticNumber combine(char op, QuadraticNumber lhs, const QuadraticNumber& rhs) {
        try {
            switch (op) {
                case '+': return lhs += rhs;
                case '-': return lhs -= rhs;
                case '*': return lhs *= rhs;
                default:  return lhs /= rhs;
            }
        } catch (const FieldMismatch& e) {
            throw MixedFields(e.what());
        }
    }

    QuadraticNumber expr() {
        QuadraticNumber v = term();
        for (;;) {
            if (eat('+')) v = combine('+', std::move(v), term());
            else if (eat('-')) v = combine('-', std::move(v), term());
            else return v;
        }
    }

    QuadraticNumber term() {
        QuadraticNumber v = factor();
        for (;;) {
            if (eat('*')) v = combine('*', std::move(v), factor());
            else if (eat('/')) v = combine('/', std::move(v), factor());
            else return v;
        }
    }

    QuadraticNumber factor() {
        skip_ws();
        if (eat('-')) return -factor();
        if (eat('(')) {
            QuadraticNumber v = expr();
            if (!eat(')')) throw SyntaxError("expected ')' at position " + std::to_string(pos_));
            return v;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (match_keyword("sqrt")) {
            if (!eat('(')) throw SyntaxError("expected '(' after sqrt");
            unsigned long long n = uint_();
            if (!eat(')')) throw SyntaxError("expected ')' after sqrt radicand");
            return QuadraticNumber::square_root_of(n);
        }
        throw SyntaxError("unexpected input at position " + std::to_string(pos_));
    }

    bool match_keyword(std::string_view kw) {
        skip_ws();
        if (s_.substr(pos_, kw.size()) == kw) {
            pos_ += kw.size();
            return true;
        }
        return false;
    }

    unsigned long long uint_() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw SyntaxError("expected digits at position " + std::to_string(pos_));
        unsigned long long v = 0;
        size_t digits = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (++digits > 18) throw SyntaxError("integer literal too long");
            v = v * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    QuadraticNumber rational() {
        Integer num = big_digits();
        if (eat('/')) {
            // rational := int "/" uint -- bind division of two plain integer
            // literals tighter than term-level "/", matching the grammar.
            Integer den = big_digits();
            if (den == 0) throw DivisionByZero("zero denominator in literal");
            return QuadraticNumber(Rational(num, den));
        }
        return QuadraticNumber(Rational(num));
    }

    Integer big_digits() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw SyntaxError("expected digits at position " + std::to_string(pos_));
        Integer v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }
};

} // namespace

QuadraticNumber parse_exact(std::string_view text, std::optional<FieldTag> expected) {
    QuadraticNumber v = Parser(text).run();
    if (expected && !v.is_rational() && v.d() != expected->d)
        throw FieldMismatch("literal lives in Q(sqrt(" + std::to_string(v.d()) +
                            ")), expected Q(sqrt(" + std::to_string(expected->d) + "))");
    return v;
}

// ---------------------------------------------------------------------------
// Lattice membership and rational independence
// ---------------------------------------------------------------------------

namespace {

bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Extended gcd returning (g, x, y) with a*x + b*y = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : Integer(-a);
    }
    Integer x1, y1;
    Integer g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Integer solutions of A*m + B*n = C with rational coefficients.
std::optional<LatticeWitness> solve_single_equation(const Rational& A, const Rational& B, const Rational& C) {
    if (A == 0 && B == 0) {
        if (C == 0) return LatticeWitness{0, 0};
        return std::nullopt;
    }
    Integer lcm = denominator(A);
    lcm = lcm / gcd(lcm, denominator(B)) * denominator(B);
    lcm = lcm / gcd(lcm, denominator(C)) * denominator(C);
    Rational sa = A * Rational(lcm), sb = B * Rational(lcm), sc = C * Rational(lcm);
    Integer a = numerator(sa);
    Integer b = numerator(sb);
    Integer c = numerator(sc);
    Integer x, y;
    Integer g = ext_gcd(a, b, x, y);
    if (g == 0) return std::nullopt; // a = b = 0 handled above
    if (c % g != 0) return std::nullopt;
    Integer k = c / g;
    return LatticeWitness{x * k, y * k};
}

} // namespace

std::optional<LatticeWitness> lattice_membership(const QuadraticNumber& u,
                                                 const QuadraticNumber& v,
                                                 const QuadraticNumber& t) {
    // Force a common field (throws FieldMismatch if incompatible).
    QuadraticNumber probe = (u - u) + (v - v) + (t - t);
    (void)probe;

    const Rational &ua = u.rational_part(), &ub = u.radical_part();
    const Rational &va = v.rational_part(), &vb = v.radical_part();
    const Rational &ta = t.rational_part(), &tb = t.radical_part();

    Rational det = ua * vb - ub * va;
    if (det != 0) {
        Rational m = (ta * vb - tb * va) / det;
        Rational n = (ua * tb - ub * ta) / det;
        if (is_integer(m) && is_integer(n))
            return LatticeWitness{numerator(m), numerator(n)};
        return std::nullopt;
    }

    // Singular: the two component equations are proportional. Consistency of
    // the right-hand sides, then one integer linear equation.
    bool row1_zero = (ua == 0 && va == 0);
    bool row2_zero = (ub == 0 && vb == 0);
    if (row1_zero && row2_zero) {
        if (ta == 0 && tb == 0) return LatticeWitness{0, 0};
        return std::nullopt;
    }
    if (row1_zero) {
        if (ta != 0) return std::nullopt;
        return solve_single_equation(ub, vb, tb);
    }
    if (row2_zero) {
        if (tb != 0) return std::nullopt;
        return solve_single_equation(ua, va, ta);
    }
    // Both rows nonzero and proportional: row2 = kappa * row1.
    Rational kappa = (ua != 0) ? ub / ua : vb / va;
    if (ta * kappa != tb) return std::nullopt;
    return solve_single_equation(ua, va, ta);
}

bool q_independent(const QuadraticNumber& u, const QuadraticNumber& v) {
    unsigned long long du = u.d(), dv = v.d();
    if (du != 1 && dv != 1 && du != dv)
        throw FieldMismatch("q_independent arguments in different fields");
    Rational det = u.rational_part() * v.radical_part() - u.radical_part() * v.rational_part();
    return det != 0;
}

} // namespace triet
