#include "triet/wordstat.hpp"

#include <algorithm>

namespace triet {

namespace {

void require_minimal(const ThreeIet& T) {
    if (!T.minimal())
        throw NotMinimal("operation requires a minimal 3iet");
}

void require_nondegenerate(const ThreeIet& T) {
    if (!T.nondegenerate())
        throw Degenerate("operation requires a non-degenerate 3iet");
}

// Distinct cylinder cut points for length-n factors: backward orbit points
// of the discontinuities up to depth n-1, restricted to (0,1).
std::vector<QuadraticNumber> cut_points(const ThreeIet& T, std::size_t n) {
    std::vector<QuadraticNumber> pts;
    QuadraticNumber a = T.alpha(), b = T.beta();
    QuadraticNumber zero(0), one(1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            a = T.step(a, Direction::Backward);
            b = T.step(b, Direction::Backward);
        }
        for (const QuadraticNumber& p : {a, b}) {
            if (!(zero < p && p < one)) continue;
            bool seen = false;
            for (const QuadraticNumber& q : pts) seen = seen || q == p;
            if (!seen) pts.push_back(p);
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

} // namespace

std::size_t complexity(const ThreeIet& T, std::size_t n) {
    require_minimal(T);
    if (n == 0) return 1;
    return cut_points(T, n).size() + 1;
}

std::vector<QuadraticNumber> frequencies(const ThreeIet& T, std::size_t n) {
    require_minimal(T);
    if (n == 0) return {QuadraticNumber(1)};
    std::vector<QuadraticNumber> pts = cut_points(T, n);
    std::vector<QuadraticNumber> freqs;
    QuadraticNumber prev(0);
    for (const QuadraticNumber& p : pts) {
        freqs.push_back(p - prev);
        prev = p;
    }
    freqs.push_back(QuadraticNumber(1) - prev);
    std::sort(freqs.begin(), freqs.end());
    return freqs;
}

std::vector<Piece> ordered_pieces(const ThreeIet& T, const Interval& I, std::size_t cap) {
    QuadraticNumber one(1);
    if (I.hi != one || (I.lo == QuadraticNumber(0)))
        return itineraries(T, I, cap).pieces;
    // I = [gamma, 1): induce on the mirror interval and reflect the pieces
    // back through the correspondence [1-delta'_j, 1-gamma'_j).
    InductionResult mir = itineraries(T, mirrored(I), cap);
    std::vector<Piece> out;
    for (const Piece& q : mir.pieces) {
        QuadraticNumber shift(0);
        for (char ch : q.word) shift += T.translation(ch);
        out.push_back({Interval{one - (q.sub.hi + shift), one - (q.sub.lo + shift)},
                       reversed(q.word)});
    }
    std::sort(out.begin(), out.end(),
              [](const Piece& x, const Piece& y) { return x.sub.lo < y.sub.lo; });
    return out;
}

std::set<TernaryWord> return_words(const ThreeIet& T, const TernaryWord& w, std::size_t cap) {
    require_nondegenerate(T);
    std::optional<Interval> cyl = T.cylinder(w);
    if (!cyl) throw NotAFactor("not a factor of the language: " + w);
    std::set<TernaryWord> out;
    for (const Piece& p : ordered_pieces(T, *cyl, cap)) out.insert(p.word);
    return out;
}

std::string to_string(BispecialCase c) {
    switch (c) {
        case BispecialCase::P_I: return "P-i";
        case BispecialCase::P_II: return "P-ii";
        case BispecialCase::NP_III: return "NP-iii";
        case BispecialCase::NP_IV: return "NP-iv";
        case BispecialCase::NP_V: return "NP-v";
        case BispecialCase::NP_VI: return "NP-vi";
    }
    return "?";
}

namespace {

BispecialCase classify_bispecial(const std::vector<Piece>& pieces, const TernaryWord& w) {
    if (pieces.size() != 3)
        throw Error("InternalError", "bispecial factor without exactly three return words: " + w);
    const TernaryWord &L = pieces[0].word, &M = pieces[1].word, &R = pieces[2].word;
    using Rule = OmegaRule;
    auto mem = [](const TernaryWord& x, Rule rule, const TernaryWord& base) {
        return omega_rewrite(base, rule).count(x) > 0;
    };
    // Middle word rewritten from the outer two: palindromic cases.
    if (mem(M, Rule::B_to_CA, L + R) && mem(M, Rule::B_to_AC, R + L)) return BispecialCase::P_I;
    if (mem(M, Rule::AC_to_B, L + R) && mem(M, Rule::CA_to_B, R + L)) return BispecialCase::P_II;
    // One outer word rewritten from the middle: non-palindromic cases.
    if (mem(L, Rule::CA_to_B, M)) return BispecialCase::NP_III;
    if (mem(R, Rule::AC_to_B, M)) return BispecialCase::NP_IV;
    if (mem(R, Rule::B_to_CA, M)) return BispecialCase::NP_V;
    if (mem(L, Rule::B_to_AC, M)) return BispecialCase::NP_VI;
    throw Error("InternalError", "return words of " + w + " match no predicted case");
}

} // namespace

std::vector<Bispecial> bispecials(const ThreeIet& T, std::size_t max_len, std::size_t cap) {
    require_nondegenerate(T);
    std::vector<Bispecial> out;
    std::vector<TernaryWord> level = {""};
    const char letters[3] = {'A', 'B', 'C'};
    for (std::size_t n = 0; n <= max_len; ++n) {
        for (const TernaryWord& w : level) {
            int left = 0, right = 0;
            for (char a : letters) {
                if (T.cylinder(a + w)) ++left;
                if (T.cylinder(w + a)) ++right;
            }
            if (left >= 2 && right >= 2) {
                std::optional<Interval> cyl = T.cylinder(w);
                std::vector<Piece> pieces = w.empty()
                    ? itineraries(T, Interval{QuadraticNumber(0), QuadraticNumber(1)}, cap).pieces
                    : ordered_pieces(T, *cyl, cap);
                out.push_back({w, w == reversed(w), classify_bispecial(pieces, w)});
            }
        }
        if (n == max_len) break;
        std::vector<TernaryWord> next;
        for (const TernaryWord& w : level)
            for (char b : letters)
                if (T.cylinder(w + b)) next.push_back(w + b);
        level = std::move(next);
    }
    return out;
}

namespace {

GapReport gaps_to_report(std::vector<QuadraticNumber> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    GapReport rep;
    rep.values = std::move(values);
    if (rep.values.size() == 2) {
        rep.basis = std::make_pair(rep.values[0], rep.values[1]);
    } else if (rep.values.size() == 3 &&
               rep.values[0] + rep.values[1] == rep.values[2]) {
        rep.basis = std::make_pair(rep.values[0], rep.values[1]);
    }
    return rep;
}

// Circle gaps between consecutive sorted points, including the wrap-around.
GapReport circle_gaps(std::vector<QuadraticNumber> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<QuadraticNumber> gaps;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) gaps.push_back(pts[i + 1] - pts[i]);
    gaps.push_back(pts.front() + QuadraticNumber(1) - pts.back());
    return gaps_to_report(std::move(gaps));
}

} // namespace

GapReport three_distance(const ThreeIet& T, const QuadraticNumber& rho, std::size_t N) {
    require_minimal(T);
    if (N < 2) throw OutOfDomain("three_distance needs N >= 2");
    std::vector<QuadraticNumber> pts;
    QuadraticNumber x = rho;
    for (std::size_t k = 0; k < N; ++k) {
        pts.push_back(x);
        x = T.step(x);
    }
    return circle_gaps(std::move(pts));
}

namespace {

QuadraticNumber rotate(const QuadraticNumber& x, const QuadraticNumber& theta) {
    QuadraticNumber y = x + theta;
    if (y >= QuadraticNumber(1)) y -= QuadraticNumber(1);
    return y;
}

void require_rotation(const QuadraticNumber& theta, const QuadraticNumber& rho) {
    if (!(QuadraticNumber(0) < theta && theta < QuadraticNumber(1)))
        throw OutOfDomain("rotation angle must lie in (0,1): " + theta.str());
    if (theta.is_rational())
        throw NotMinimal("rotation by a rational angle is not minimal: " + theta.str());
    if (!(QuadraticNumber(0) <= rho && rho < QuadraticNumber(1)))
        throw OutOfDomain("rotation orbit point outside [0,1): " + rho.str());
}

} // namespace

GapReport rotation_gaps(const QuadraticNumber& theta, const QuadraticNumber& rho,
                        const Interval& I, std::size_t N) {
    require_rotation(theta, rho);
    std::vector<std::size_t> visits;
    QuadraticNumber x = rho;
    for (std::size_t n = 0; n < N; ++n) {
        if (I.contains(x)) visits.push_back(n);
        x = rotate(x, theta);
    }
    std::vector<QuadraticNumber> gaps;
    for (std::size_t i = 0; i + 1 < visits.size(); ++i)
        gaps.push_back(QuadraticNumber(static_cast<long long>(visits[i + 1] - visits[i])));
    GapReport rep = gaps_to_report(std::move(gaps));
    if (rep.values.size() > 3)
        throw Error("InternalError", "rotation return times exceed three gap values");
    return rep;
}

GapReport rotation_distances(const QuadraticNumber& theta, const QuadraticNumber& rho,
                             std::size_t N) {
    require_rotation(theta, rho);
    if (N < 2) throw OutOfDomain("rotation_distances needs N >= 2");
    std::vector<QuadraticNumber> pts;
    QuadraticNumber x = rho;
    for (std::size_t n = 0; n < N; ++n) {
        pts.push_back(x);
        x = rotate(x, theta);
    }
    GapReport rep = circle_gaps(std::move(pts));
    if (rep.values.size() > 3)
        throw Error("InternalError", "rotation orbit exceeds three distance values");
    return rep;
}

} // namespace triet
