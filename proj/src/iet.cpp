#include "triet/iet.hpp"

namespace triet {

bool is_ternary_word(std::string_view w) {
    for (char c : w)
        if (c != 'A' && c != 'B' && c != 'C') return false;
    return true;
}

TernaryWord reversed(const TernaryWord& w) {
    return TernaryWord(w.rbegin(), w.rend());
}

Interval mirrored(const Interval& I) {
    return Interval{QuadraticNumber(1) - I.hi, QuadraticNumber(1) - I.lo};
}

ThreeIet::ThreeIet(QuadraticNumber alpha, QuadraticNumber beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    QuadraticNumber zero(0), one(1);
    if (!(zero < alpha_ && alpha_ < beta_ && beta_ < one))
        throw OrderViolation("3iet parameters must satisfy 0 < alpha < beta < 1; got alpha = " +
                             alpha_.str() + ", beta = " + beta_.str());
    trans_[0] = one - alpha_;
    trans_[1] = one - alpha_ - beta_;
    trans_[2] = -beta_;
    minimal_ = q_independent(one - alpha_, beta_);
    nondegenerate_ = minimal_ && !lattice_membership(one - alpha_, beta_, one).has_value();
}

Interval ThreeIet::domain_of(char letter) const {
    switch (letter) {
        case 'A': return {QuadraticNumber(0), alpha_};
        case 'B': return {alpha_, beta_};
        case 'C': return {beta_, QuadraticNumber(1)};
        default: throw UnknownLetter(std::string("not a ternary letter: ") + letter);
    }
}

Interval ThreeIet::image_of(char letter) const {
    Interval J = domain_of(letter);
    const QuadraticNumber& c = translation(letter);
    return {J.lo + c, J.hi + c};
}

const QuadraticNumber& ThreeIet::translation(char letter) const {
    switch (letter) {
        case 'A': return trans_[0];
        case 'B': return trans_[1];
        case 'C': return trans_[2];
        default: throw UnknownLetter(std::string("not a ternary letter: ") + letter);
    }
}

char ThreeIet::letter_at(const QuadraticNumber& x) const {
    check_domain(x);
    if (x < alpha_) return 'A';
    if (x < beta_) return 'B';
    return 'C';
}

void ThreeIet::check_domain(const QuadraticNumber& x) const {
    if (x.sign() < 0 || x >= QuadraticNumber(1))
        throw OutOfDomain("point outside [0,1): " + x.str());
}

QuadraticNumber ThreeIet::step(const QuadraticNumber& x, Direction dir) const {
    check_domain(x);
    if (dir == Direction::Forward)
        return x + translation(letter_at(x));
    // Backward branch selected through the image intervals T(J_X),
    // which partition [0,1) in the order T(J_C) < T(J_B) < T(J_A).
    QuadraticNumber one(1);
    if (x < one - beta_) return x - trans_[2];
    if (x < one - alpha_) return x - trans_[1];
    return x - trans_[0];
}

std::vector<QuadraticNumber> ThreeIet::orbit(const QuadraticNumber& x, std::size_t n,
                                             Direction dir) const {
    std::vector<QuadraticNumber> out;
    out.reserve(n + 1);
    out.push_back(x);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(step(out.back(), dir));
    return out;
}

TernaryWord ThreeIet::code_prefix(const QuadraticNumber& rho, std::size_t n) const {
    TernaryWord w;
    w.reserve(n);
    QuadraticNumber x = rho;
    for (std::size_t i = 0; i < n; ++i) {
        w.push_back(letter_at(x));
        x = step(x);
    }
    return w;
}

std::optional<Interval> ThreeIet::cylinder(const TernaryWord& w) const {
    if (!is_ternary_word(w))
        throw UnknownLetter("cylinder word must be over {A,B,C}: " + w);
    // [w] = J_{w_0} n T^{-1}(J_{w_1}) n ... computed back to front:
    // C_k = (C_{k+1} n T(J_{w_k})) - c_{w_k}.
    Interval cur{QuadraticNumber(0), QuadraticNumber(1)};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Interval img = image_of(*it);
        Interval cut{std::max(cur.lo, img.lo), std::min(cur.hi, img.hi)};
        if (cut.empty()) return std::nullopt;
        const QuadraticNumber& c = translation(*it);
        cur = {cut.lo - c, cut.hi - c};
    }
    return cur;
}

} // namespace triet
