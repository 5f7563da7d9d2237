// Acceptance suite: runs every headline reproduction and property at its
// stated tolerance (exact equality except where noted) and prints one
// PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "support/float_sim.hpp"
#include "support/generators.hpp"
#include "triet/bridge.hpp"
#include "triet/wordstat.hpp"

using namespace triet;

namespace {

QuadraticNumber q(const char* text) { return parse_exact(text); }

ThreeIet example_iet() {
    return ThreeIet(q("-1/5 + 1/5*sqrt(5)"), q("1/3 + 1/6*sqrt(5)"));
}

struct Criterion {
    int id;
    const char* title;
    std::function<bool(std::string&)> run;
};

struct Row {
    const char *g, *d;
    CaseTag tag;
    std::vector<std::size_t> lens;
};

const std::vector<Row>& table_rows() {
    static const std::vector<Row> rows = {
        {"6/25", "99/100", CaseTag::I, {2, 1, 2, 3, 1}},
        {"29/100", "71/100", CaseTag::II, {1, 15, 14, 13, 14}},
        {"77/100", "4/5", CaseTag::III, {88, 89, 88, 109, 21}},
        {"7/25", "3/4", CaseTag::IV, {1, 13, 12, 13, 12}},
        {"1/100", "3/4", CaseTag::V, {2, 1, 2, 3, 1}},
        {"1/100", "29/100", CaseTag::VI, {2, 14, 13, 11, 12}},
        {"1/4", "99/100", CaseTag::VII, {1, 2, 3, 2, 1}},
        {"71/100", "99/100", CaseTag::VIII, {2, 13, 14, 12, 11}},
        {"1/25", "37/50", CaseTag::IX, {2, 1, 4, 2, 3}},
        {"29/100", "99/100", CaseTag::X, {1, 2, 4, 3, 2}},
        {"1/100", "99/100", CaseTag::XI, {1, 2, 1, 2, 1}},
        {"1/4", "3/4", CaseTag::XII, {1, 12, 13, 12, 11}},
    };
    return rows;
}

bool criterion_table1(std::string& note) {
    auto start = std::chrono::steady_clock::now();
    ThreeIet T = example_iet();
    int matched = 0;
    for (const Row& row : table_rows()) {
        InductionResult res = itineraries(T, {q(row.g), q(row.d)});
        std::vector<std::size_t> lens;
        for (const Piece& p : res.pieces) lens.push_back(p.length());
        if (res.case_tag == row.tag && lens == row.lens) ++matched;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << matched << "/12 rows exact, " << secs << " s";
    note = os.str();
    return matched == 12 && secs < 5.0;
}

bool criterion_detailed(std::string& note) {
    ThreeIet T = example_iet();
    InductionResult res = itineraries(T, {q("29/100"), q("99/100")});
    std::vector<TernaryWord> words;
    for (const Piece& p : res.pieces) words.push_back(p.word);
    bool ok = res.case_tag == CaseTag::X &&
              words == std::vector<TernaryWord>{"B", "CA", "CACB", "CAC", "CB"} &&
              res.ret1 == "CA" && res.ret2 == "CAC" &&
              res.keane.k_beta == 0 && res.keane.k_alpha == 1 &&
              res.keane.k_delta == 2 && res.keane.k_gamma == 3 &&
              res.keane.b_hat < res.keane.d_hat && res.keane.d_hat < res.keane.c_hat &&
              res.keane.c_hat < res.keane.a_hat;
    note = "case " + to_string(res.case_tag) + ", R1 = " + res.ret1 + ", R2 = " + res.ret2;
    return ok;
}

bool criterion_return_times(std::string& note) {
    auto start = std::chrono::steady_clock::now();
    testing::Gen gen(20260810);
    int done = 0, failures = 0;
    while (done < 200) {
        auto inst = gen.instance(100);
        if (!inst) continue;
        InductionResult res;
        try {
            res = itineraries(inst->T, inst->I, 500000);
        } catch (const CapExceeded&) {
            continue;
        }
        ++done;
        std::set<std::size_t> pat;
        if (res.pattern == Pattern::P1)
            pat = {res.r1, res.r1 + 1, res.r2, res.r1 + res.r2, res.r1 + res.r2 + 1};
        else
            pat = {res.r1, res.r1 + 1, res.r2, res.r2 + 1, res.r1 + res.r2 + 1};
        bool inside = res.pieces.size() <= 5 && res.r1 >= 1 && res.r2 >= 1;
        for (std::size_t len : res.length_set()) inside = inside && pat.count(len) == 1;
        if (!inside) ++failures;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << done << " instances, " << failures << " failures, " << secs << " s";
    note = os.str();
    return failures == 0 && secs < 60.0;
}

bool criterion_mirror(std::string& note) {
    testing::Gen gen(814);
    int done = 0, failures = 0;
    while (done < 100) {
        auto inst = gen.instance(60);
        if (!inst || inst->I.lo.is_zero()) continue;
        try {
            if (!mirror_check(inst->T, inst->I, 300000)) ++failures;
        } catch (const CapExceeded&) {
            continue;
        }
        ++done;
    }
    std::ostringstream os;
    os << done << " instances, " << failures << " failures";
    note = os.str();
    return failures == 0;
}

bool criterion_language(std::string& note) {
    ThreeIet T = example_iet();
    bool ok = true;
    for (std::size_t n = 1; n <= 40 && ok; ++n) ok = complexity(T, n) == 2 * n + 1;

    std::size_t factors = 0;
    std::vector<TernaryWord> level = {""};
    for (int n = 1; n <= 15 && ok; ++n) {
        std::vector<TernaryWord> next;
        for (const TernaryWord& w : level)
            for (char c : {'A', 'B', 'C'})
                if (T.cylinder(w + c)) next.push_back(w + c);
        level = std::move(next);
        for (const TernaryWord& w : level) {
            ++factors;
            ok = ok && return_words(T, w).size() == 3;
        }
    }

    std::size_t worst_distinct = 0;
    for (std::size_t n = 1; n <= 20 && ok; ++n) {
        auto f = frequencies(T, n);
        std::size_t distinct = 0;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (i == 0 || f[i] != f[i - 1]) ++distinct;
        worst_distinct = std::max(worst_distinct, distinct);
        ok = ok && distinct <= 5;
    }
    std::ostringstream os;
    os << "C(n) = 2n+1 up to 40; " << factors
       << " factors with 3 return words; <= " << worst_distinct << " frequency values";
    note = os.str();
    return ok;
}

bool criterion_ternarization(std::string& note) {
    Morphism phi = Morphism::parse("0=0110101,1=01101");
    Morphism psi = Morphism::parse("0=1010101,1=10101");
    auto eta = ternarize_morphisms(phi, psi);
    bool ok = eta.has_value() && eta->image('A') == "BCACAC" &&
              eta->image('B') == "BCACBBCAC" && eta->image('C') == "BCAC";
    if (ok) {
        auto back = split_ternary(*eta);
        ok = back.has_value() && back->first == phi && back->second == psi;
    }
    note = ok ? "ter(phi, psi) = " + eta->str() + "; split inverts" : "mismatch";
    return ok;
}

bool criterion_recovery(std::string& note) {
    Morphism eta = Morphism::parse("A=BCACAC,B=BCACBBCAC,C=BCAC");
    RecoveredParameters p = recover_parameters(eta);
    bool ok = p.lambda == q("3 - 2*sqrt(2)");
    ok = ok && p.eta_left.image('A') == "ACBCAC" &&
         p.eta_left.image('B') == "BBCACBCAC" && p.eta_left.image('C') == "BCAC";
    InvarianceReport rep = verify_invariance(eta, p, 2000);
    ok = ok && rep.prefix_fixed && rep.itineraries_match;
    note = "lambda = " + p.lambda.str() + ", prefixFixed = " +
           (rep.prefix_fixed ? "true" : "false") + ", itinerariesMatch = " +
           (rep.itineraries_match ? "true" : "false");
    return ok;
}

bool criterion_hks(std::string& note) {
    HksReport good = hks_check(Morphism::parse("A=BCACAC,B=BCACBBCAC,C=BCAC"));
    bool ok = good.recover_succeeded && (good.xi_in_p_prime || good.xi2_in_p_prime) &&
              good.theorem_witness;

    HksReport bad = hks_check(Morphism::parse("A=ABA,B=C,C=BAC"));
    ok = ok && !bad.xi_in_p_prime && !bad.xi2_in_p_prime && bad.theorem_witness;

    bool witness_seen = false;
    try {
        recover_parameters(Morphism::parse("A=ABA,B=C,C=BAC"));
    } catch (const Degenerate& e) {
        witness_seen = std::string(e.what()).find("(3, 2, 0)") != std::string::npos;
    }
    ok = ok && witness_seen;
    note = std::string("eta in P': ") + (good.xi_in_p_prime ? "true" : "false") +
           "; Labbe xi, xi^2 in P': false, false; Degenerate witness (3, 2, 0)";
    return ok;
}

bool criterion_float_oracle(std::string& note) {
    testing::Gen gen(90210);
    int done = 0, mismatches = 0;
    while (done < 50) {
        auto inst = gen.instance(60);
        if (!inst) continue;
        auto words = testing::float_itineraries(inst->T.alpha(), inst->T.beta(),
                                                inst->I.lo, inst->I.hi);
        if (!words) continue; // safety margin not certified; resample
        InductionResult res;
        try {
            res = itineraries(inst->T, inst->I, 200000);
        } catch (const CapExceeded&) {
            continue;
        }
        ++done;
        bool same = words->size() == res.pieces.size();
        for (std::size_t i = 0; same && i < words->size(); ++i)
            same = (*words)[i] == res.pieces[i].word;
        if (!same) ++mismatches;
    }
    std::ostringstream os;
    os << done << " instances with certified margins, " << mismatches << " discrepancies";
    note = os.str();
    return mismatches == 0;
}

bool criterion_gaps(std::string& note) {
    GapReport rot = rotation_gaps(q("(sqrt(5) - 1)/2"), QuadraticNumber(0),
                                  {QuadraticNumber(0), q("1/2")}, 200);
    bool ok = rot.values.size() <= 3 && !rot.values.empty();
    if (rot.values.size() == 3)
        ok = ok && rot.values[0] + rot.values[1] == rot.values[2] && rot.basis.has_value();

    ThreeIet T = example_iet();
    int three_seen = 0;
    for (std::size_t N : {10, 25, 50, 75, 100}) {
        GapReport rep = three_distance(T, q("1/10"), N);
        ok = ok && rep.values.size() <= 3;
        if (rep.values.size() == 3) {
            ++three_seen;
            ok = ok && rep.values[0] + rep.values[1] == rep.values[2];
        }
    }
    std::ostringstream os;
    os << "rotation gaps: " << rot.values.size() << " values; 3iet distances <= 3, sum law seen "
       << three_seen << " times";
    note = os.str();
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "Table-1 reproduction (12 rows, exact, < 5 s)", criterion_table1},
        {2, "Detailed example (29/100, 99/100)", criterion_detailed},
        {3, "Return-time theorem on 200 random instances (< 60 s)", criterion_return_times},
        {4, "Mirror symmetry on 100 random instances", criterion_mirror},
        {5, "Complexity 2n+1, three return words, <= 5 frequencies", criterion_language},
        {6, "Ternarization worked example and its inverse", criterion_ternarization},
        {7, "Parameter recovery: lambda = 3 - 2 sqrt(2), invariance at n = 2000", criterion_recovery},
        {8, "HKS theorem instance and the Labbe counterexample", criterion_hks},
        {9, "Oracle equivalence against 256-bit floating simulation (50 instances)", criterion_float_oracle},
        {10, "Gap and distance demonstrations", criterion_gaps},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::string note;
        bool ok = false;
        try {
            ok = c.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (!ok) ++failed;
        std::printf("criterion %2d [%s] %s — %s\n", c.id, ok ? "PASS" : "FAIL", c.title,
                    note.c_str());
        std::fflush(stdout);
    }
    if (failed == 0)
        std::printf("acceptance: all %zu criteria pass\n", criteria.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
