#include "triet/bridge.hpp"

#include <algorithm>
#include <array>

namespace triet {

std::string sigma(const TernaryWord& w, SigmaVariant variant) {
    if (!is_ternary_word(w))
        throw UnknownLetter("sigma expects a word over {A,B,C}: " + w);
    std::string out;
    out.reserve(w.size() * 2);
    for (char c : w) {
        switch (c) {
            case 'A': out += '0'; break;
            case 'C': out += '1'; break;
            case 'B': out += (variant == SigmaVariant::S01) ? "01" : "10"; break;
        }
    }
    return out;
}

std::optional<TernaryWord> ternarize_words(const std::string& u, const std::string& v) {
    TernaryWord w;
    std::size_t i = 0, j = 0;
    while (i < u.size() && j < v.size()) {
        char cu = u[i], cv = v[j];
        if (cu == '0' && cv == '0') { w += 'A'; ++i; ++j; }
        else if (cu == '1' && cv == '1') { w += 'C'; ++i; ++j; }
        else if (cu == '0' && cv == '1') {
            // B contributes 01 to u and 10 to v
            if (i + 1 >= u.size() || j + 1 >= v.size() || u[i + 1] != '1' || v[j + 1] != '0')
                return std::nullopt;
            w += 'B'; i += 2; j += 2;
        }
        else return std::nullopt; // (1,0) cannot start any letter image
    }
    if (i != u.size() || j != v.size()) return std::nullopt;
    return w;
}

namespace {

void require_binary(const Morphism& m, const char* role) {
    std::vector<char> dom = m.domain();
    std::sort(dom.begin(), dom.end());
    if (dom != std::vector<char>{'0', '1'})
        throw UnknownLetter(std::string(role) + " must be a morphism over {0,1}");
}

void require_ternary(const Morphism& m, const char* role) {
    std::vector<char> dom = m.domain();
    std::sort(dom.begin(), dom.end());
    if (dom != std::vector<char>{'A', 'B', 'C'} || !m.is_endomorphism())
        throw UnknownLetter(std::string(role) + " must be an endomorphism of {A,B,C}*");
}

} // namespace

std::optional<Morphism> ternarize_morphisms(const Morphism& phi, const Morphism& psi) {
    require_binary(phi, "ternarize: phi");
    require_binary(psi, "ternarize: psi");
    auto a = ternarize_words(phi.image('0'), psi.image('0'));
    auto c = ternarize_words(phi.image('1'), psi.image('1'));
    auto b = ternarize_words(phi.image('0') + phi.image('1'),
                             psi.image('1') + psi.image('0'));
    if (!a || !b || !c) return std::nullopt;
    return Morphism({'A', 'B', 'C'}, {{'A', *a}, {'B', *b}, {'C', *c}});
}

std::optional<std::pair<Morphism, Morphism>> split_ternary(const Morphism& eta) {
    require_ternary(eta, "split_ternary: eta");
    std::string phi0 = sigma(eta.image('A'), SigmaVariant::S01);
    std::string psi0 = sigma(eta.image('A'), SigmaVariant::S10);
    std::string phi1 = sigma(eta.image('C'), SigmaVariant::S01);
    std::string psi1 = sigma(eta.image('C'), SigmaVariant::S10);
    auto b = ternarize_words(phi0 + phi1, psi1 + psi0);
    if (!b || *b != eta.image('B')) return std::nullopt;
    Morphism phi({'0', '1'}, {{'0', phi0}, {'1', phi1}});
    Morphism psi({'0', '1'}, {{'0', psi0}, {'1', psi1}});
    return std::make_pair(phi, psi);
}

// ---------------------------------------------------------------------------
// Parameter recovery
// ---------------------------------------------------------------------------

namespace {

std::array<Integer, 3> count_vector(const Morphism& m, char letter) {
    std::array<Integer, 3> v{0, 0, 0};
    for (char c : m.image(letter)) v[static_cast<std::size_t>(c - 'A')] += 1;
    return v;
}

struct CharPoly {
    // x^3 - tr x^2 + m2 x - det
    Integer tr, m2, det;
};

CharPoly char_poly(const std::array<std::array<Integer, 3>, 3>& M) {
    CharPoly p;
    p.tr = M[0][0] + M[1][1] + M[2][2];
    p.m2 = (M[1][1] * M[2][2] - M[1][2] * M[2][1]) +
           (M[0][0] * M[2][2] - M[0][2] * M[2][0]) +
           (M[0][0] * M[1][1] - M[0][1] * M[1][0]);
    p.det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
            M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
            M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    return p;
}

std::array<std::array<Integer, 3>, 3> matrix_of(const Morphism& m) {
    std::array<std::array<Integer, 3>, 3> M;
    for (int i = 0; i < 3; ++i) {
        auto v = count_vector(m, static_cast<char>('A' + i));
        for (int j = 0; j < 3; ++j) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)];
    }
    return M;
}

// sqrt part of a big integer: D = k^2 * d with d square-free.
std::pair<Integer, Integer> big_square_extract(Integer D) {
    Integer k = 1, d = 1;
    for (Integer p = 2; p * p <= D && p < 1000000; ++p) {
        if (D % p != 0) continue;
        int e = 0;
        while (D % p == 0) { D /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) k *= p;
        if (e % 2) d *= p;
    }
    if (D > 1) {
        Integer r = sqrt(D);
        if (r * r == D) k *= r;
        else if (D < Integer("1000000000000")) d *= D;
        else throw FieldEscape("eigenvalue discriminant too large to factor: " + D.str());
    }
    return {k, d};
}

struct QuadraticRoots {
    QuadraticNumber small, big; // sorted
    unsigned long long d;
};

// Roots of x^2 + b x + c after removing the (x - s) factor, everything exact.
QuadraticRoots solve_quadratic(const Integer& b, const Integer& c) {
    Integer disc = b * b - 4 * c;
    if (disc < 0) throw FieldEscape("complex eigenvalues; discriminant " + disc.str());
    auto [k, d] = big_square_extract(disc);
    unsigned long long d_small = d.convert_to<unsigned long long>();
    QuadraticNumber half(Rational(1, 2));
    QuadraticNumber base(Rational(-b));
    QuadraticNumber rad = (d_small == 1)
        ? QuadraticNumber(Rational(k))
        : QuadraticNumber(Rational(0), Rational(k), FieldTag(d_small));
    QuadraticNumber r1 = (base - rad) * half;
    QuadraticNumber r2 = (base + rad) * half;
    return {r1, r2, d_small};
}

struct MatrixAnalysis {
    int s = 1;                 // structural eigenvalue, +1 or -1
    QuadraticRoots roots;      // the quadratic factor's roots
};

MatrixAnalysis analyze(const Morphism& m) {
    auto M = matrix_of(m);
    std::array<Integer, 3> cv;
    for (int j = 0; j < 3; ++j)
        cv[static_cast<std::size_t>(j)] = M[0][static_cast<std::size_t>(j)] - M[1][static_cast<std::size_t>(j)] + M[2][static_cast<std::size_t>(j)];
    int s;
    if (cv == std::array<Integer, 3>{1, -1, 1}) s = 1;
    else if (cv == std::array<Integer, 3>{-1, 1, -1}) s = -1;
    else
        throw Degenerate("count vector |xi(A)|-|xi(B)|+|xi(C)| = (" + cv[0].str() + ", " +
                         cv[1].str() + ", " + cv[2].str() + ") is not +-(1, -1, 1); " +
                         "the fixed point is not a non-degenerate 3iet word");
    CharPoly p = char_poly(M);
    // x^3 - tr x^2 + m2 x - det = (x - s)(x^2 + b x + c)
    Integer b = s - p.tr;
    Integer c = p.m2 + s * b;
    if (s * c != p.det)
        throw Degenerate("(x - " + std::to_string(s) + ") does not divide the characteristic polynomial");
    return {s, solve_quadratic(b, c)};
}

bool in_open_unit(const QuadraticNumber& x) {
    return QuadraticNumber(0) < x && x < QuadraticNumber(1);
}

bool in_minus_one_zero(const QuadraticNumber& x) {
    return QuadraticNumber(-1) < x && x < QuadraticNumber(0);
}

// Nonzero kernel vector of A over the quadratic field, exact elimination.
std::array<QuadraticNumber, 3> kernel_vector(std::array<std::array<QuadraticNumber, 3>, 3> A) {
    std::array<int, 3> pivot_col_of_row{-1, -1, -1};
    std::size_t rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        std::size_t pivot = rank;
        while (pivot < 3 && A[pivot][static_cast<std::size_t>(col)].sign() == 0) ++pivot;
        if (pivot == 3) continue;
        std::swap(A[rank], A[pivot]);
        QuadraticNumber inv = QuadraticNumber(1) / A[rank][static_cast<std::size_t>(col)];
        for (int j = 0; j < 3; ++j) A[rank][static_cast<std::size_t>(j)] *= inv;
        for (std::size_t r = 0; r < 3; ++r) {
            if (r == rank) continue;
            QuadraticNumber f = A[r][static_cast<std::size_t>(col)];
            if (f.sign() == 0) continue;
            for (int j = 0; j < 3; ++j)
                A[r][static_cast<std::size_t>(j)] -= f * A[rank][static_cast<std::size_t>(j)];
        }
        pivot_col_of_row[rank] = col;
        ++rank;
    }
    if (rank == 3) throw Degenerate("dominant eigenvalue has trivial eigenspace");
    // Choose the first free column, set it to 1, read off pivots.
    std::array<bool, 3> is_pivot{false, false, false};
    for (std::size_t r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_col_of_row[r])] = true;
    int free_col = 0;
    while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;
    std::array<QuadraticNumber, 3> v{QuadraticNumber(0), QuadraticNumber(0), QuadraticNumber(0)};
    v[static_cast<std::size_t>(free_col)] = QuadraticNumber(1);
    for (std::size_t r = 0; r < rank; ++r)
        v[static_cast<std::size_t>(pivot_col_of_row[r])] = -A[r][static_cast<std::size_t>(free_col)];
    return v;
}

} // namespace

RecoveredParameters recover_parameters(const Morphism& xi) {
    require_ternary(xi, "recover_parameters: xi");
    if (!primitive(xi)) throw NotPrimitive("recover_parameters requires a primitive substitution");
    bool has_seed = false;
    for (char a : xi.domain()) {
        const std::string& img = xi.image(a);
        has_seed = has_seed || (img.size() >= 2 && img.front() == a);
    }
    if (!has_seed)
        throw NotASubstitutionSeed("xi has no fixed point: no image extends its own letter");

    MatrixAnalysis base = analyze(xi);
    bool use_square = in_minus_one_zero(base.roots.small) || in_minus_one_zero(base.roots.big);
    Morphism eta = use_square ? xi.squared() : xi;
    MatrixAnalysis chosen = use_square ? analyze(eta) : base;

    QuadraticNumber lambda =
        in_open_unit(chosen.roots.small) ? chosen.roots.small : chosen.roots.big;
    if (!in_open_unit(lambda))
        throw Degenerate("no eigenvalue of the incidence matrix lies in (0,1)");
    QuadraticNumber dominant =
        lambda == chosen.roots.small ? chosen.roots.big : chosen.roots.small;

    // Letter frequencies: kernel of (M^T - dominant), normalized to sum 1.
    auto M = matrix_of(eta);
    std::array<std::array<QuadraticNumber, 3>, 3> A;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            A[i][j] = QuadraticNumber(Rational(M[j][i])); // transpose
            if (i == j) A[i][j] -= dominant;
        }
    auto v = kernel_vector(A);
    QuadraticNumber total = v[0] + v[1] + v[2];
    if (total.sign() == 0) throw Degenerate("dominant eigenvector has zero coordinate sum");
    QuadraticNumber alpha = v[0] / total;
    QuadraticNumber beta = alpha + v[1] / total;
    if (!(QuadraticNumber(0) < alpha && alpha < beta && beta < QuadraticNumber(1)))
        throw Degenerate("recovered letter frequencies are not a valid parameter pair");
    ThreeIet T(alpha, beta);
    if (!T.nondegenerate())
        throw Degenerate("recovered transformation is degenerate (1 in (1-alpha)Z + betaZ)");

    auto [eta_left, cert] = extreme_conjugate(eta, Side::Left);
    char first = eta_left.image('A').front();
    QuadraticNumber rho_left;
    if (first == 'A') rho_left = alpha;
    else if (first == 'B') rho_left = beta;
    else throw Degenerate("leftmost conjugate starts images with C; not a 3iet-fixing shape");

    // (1-lambda) rho_L = T^{|w|}((1-lambda) rho) and the coding of
    // (1-lambda) rho starts with w, so rho = rho_L - (c . counts(w))/(1-lambda).
    QuadraticNumber shift(0);
    for (char ch : cert.word) shift += T.translation(ch);
    QuadraticNumber one(1);
    QuadraticNumber rho = rho_left - shift / (one - lambda);
    if (!(QuadraticNumber(0) <= rho && rho < one))
        throw Degenerate("recovered intercept lies outside [0,1): " + rho.str());

    RecoveredParameters out{alpha, beta, rho, lambda,
                            use_square ? EtaChoice::XiSquared : EtaChoice::Xi,
                            cert.word.size(), Interval{}, eta, eta_left, cert.word};
    QuadraticNumber gamma = rho * (one - lambda);
    out.interval = Interval{gamma, gamma + lambda};
    return out;
}

InvarianceReport verify_invariance(const Morphism& xi, const RecoveredParameters& params,
                                   std::size_t n) {
    InvarianceReport rep;
    ThreeIet T(params.alpha, params.beta);
    TernaryWord u = T.code_prefix(params.rho, n);
    std::string v = xi.apply(u);
    rep.prefix_fixed = v.compare(0, n, u) == 0;

    InductionResult res = itineraries(T, params.interval);
    bool match = res.pieces.size() == 3;
    if (match) {
        const char letters[3] = {'A', 'B', 'C'};
        for (int i = 0; i < 3; ++i)
            match = match && res.pieces[static_cast<std::size_t>(i)].word == params.eta.image(letters[i]);
    }
    match = match && res.homothety.has_value();
    if (match) {
        match = res.homothety->lambda == params.lambda &&
                res.homothety->mu == params.interval.lo &&
                res.homothety->center == params.rho;
    }
    rep.itineraries_match = match;
    return rep;
}

std::string to_string(StructuralRelation r) {
    switch (r) {
        case StructuralRelation::ACtoB: return "ACtoB";
        case StructuralRelation::BtoCA: return "BtoCA";
        case StructuralRelation::None: return "none";
    }
    return "?";
}

StructuralRelation structural_relation(const Morphism& eta) {
    require_ternary(eta, "structural_relation: eta");
    const std::string& b = eta.image('B');
    std::string ac = eta.image('A') + eta.image('C');
    std::string ca = eta.image('C') + eta.image('A');
    if (omega_rewrite(ac, OmegaRule::AC_to_B).count(b) &&
        omega_rewrite(ca, OmegaRule::CA_to_B).count(b))
        return StructuralRelation::ACtoB;
    if (omega_rewrite(ac, OmegaRule::B_to_CA).count(b) &&
        omega_rewrite(ca, OmegaRule::B_to_AC).count(b))
        return StructuralRelation::BtoCA;
    return StructuralRelation::None;
}

HksReport hks_check(const Morphism& xi) {
    require_ternary(xi, "hks_check: xi");
    HksReport rep;
    rep.xi_in_p_prime = class_p_prime(xi).has_value();
    rep.xi2_in_p_prime = class_p_prime(xi.squared()).has_value();
    try {
        RecoveredParameters params = recover_parameters(xi);
        (void)params;
        rep.recover_succeeded = true;
    } catch (const Degenerate&) {
        rep.recover_succeeded = false;
    } catch (const NotPrimitive&) {
        rep.recover_succeeded = false;
    } catch (const NotASubstitutionSeed&) {
        rep.recover_succeeded = false;
    } catch (const FieldEscape&) {
        rep.recover_succeeded = false;
    }
    rep.theorem_witness = !rep.recover_succeeded || rep.xi_in_p_prime || rep.xi2_in_p_prime;
    return rep;
}

} // namespace triet
