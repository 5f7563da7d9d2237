#include <doctest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "triet/wordstat.hpp"

using namespace triet;

namespace {

QuadraticNumber q(const char* text) { return parse_exact(text); }

ThreeIet example_iet() {
    return ThreeIet(q("-1/5 + 1/5*sqrt(5)"), q("1/3 + 1/6*sqrt(5)"));
}

ThreeIet labbe_iet() { return ThreeIet(q("1/2"), q("(3 - sqrt(2))/2")); }

} // namespace

TEST_CASE("complexity of non-degenerate words is 2n+1") {
    ThreeIet T = example_iet();
    CHECK(complexity(T, 0) == 1);
    CHECK(complexity(T, 1) == 3);
    CHECK(complexity(T, 5) == 11);
    for (std::size_t n = 1; n <= 40; ++n) CHECK(complexity(T, n) == 2 * n + 1);
}

TEST_CASE("complexity drops for the degenerate Labbe word") {
    ThreeIet T = labbe_iet();
    CHECK(T.minimal());
    CHECK(complexity(T, 1) == 3);
    for (std::size_t n = 2; n <= 12; ++n) {
        CHECK(complexity(T, n) < 2 * n + 1);
        CHECK(complexity(T, n) == n + 2); // frozen from the cut-point count
    }
    ThreeIet rational(q("1/3"), q("2/3"));
    CHECK_THROWS_AS(complexity(rational, 3), NotMinimal);
}

TEST_CASE("every short factor has exactly three return words") {
    ThreeIet T = example_iet();
    std::vector<TernaryWord> level = {""};
    for (int n = 1; n <= 9; ++n) {
        std::vector<TernaryWord> next;
        for (const TernaryWord& w : level)
            for (char c : {'A', 'B', 'C'})
                if (T.cylinder(w + c)) next.push_back(w + c);
        level = std::move(next);
        for (const TernaryWord& w : level) {
            CAPTURE(w);
            CHECK(return_words(T, w).size() == 3);
        }
    }
    CHECK_THROWS_AS(return_words(T, "AA"), NotAFactor);
    CHECK_THROWS_AS(return_words(labbe_iet(), "A"), Degenerate);
}

TEST_CASE("return words tile the coding") {
    ThreeIet T = example_iet();
    QuadraticNumber rho = q("1/10 + 1/11*sqrt(5)");
    TernaryWord u = T.code_prefix(rho, 400);
    TernaryWord w(1, u[0]);
    auto rws = return_words(T, w);
    // occurrences of w along u delimit return words
    std::vector<std::size_t> occ;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u.compare(i, w.size(), w) == 0) occ.push_back(i);
    REQUIRE(occ.size() >= 3);
    for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
        TernaryWord gap = u.substr(occ[i], occ[i + 1] - occ[i]);
        CHECK(rws.count(gap) == 1);
    }
}

TEST_CASE("return words of right-boundary cylinders go through the mirror") {
    ThreeIet T = example_iet();
    // [C^k] reaches the right endpoint 1, where direct induction is undefined.
    auto rws = return_words(T, "C");
    CHECK(rws.size() == 3);
    auto rws2 = return_words(T, "CC");
    CHECK(rws2.size() == 3);
    for (const TernaryWord& r : rws2) {
        // every return word of CC starts with C and brings CC back
        CHECK(r.front() == 'C');
    }
}

TEST_CASE("bispecial factors and their return-word cases") {
    ThreeIet T = example_iet();
    auto list = bispecials(T, 10);
    REQUIRE(!list.empty());
    CHECK(list.front().word == "");
    CHECK(list.front().palindromic);
    bool saw_palindromic = false, saw_plain = false;
    for (const Bispecial& b : list) {
        CAPTURE(b.word);
        CHECK(b.palindromic == (b.word == reversed(b.word)));
        if (b.palindromic) {
            saw_palindromic = true;
            CHECK((b.shape == BispecialCase::P_I || b.shape == BispecialCase::P_II));
        } else {
            saw_plain = true;
            CHECK((b.shape == BispecialCase::NP_III || b.shape == BispecialCase::NP_IV ||
                   b.shape == BispecialCase::NP_V || b.shape == BispecialCase::NP_VI));
        }
    }
    CHECK(saw_palindromic);
    CHECK(saw_plain);
}

TEST_CASE("frequencies are cylinder lengths") {
    ThreeIet T = example_iet();
    SUBCASE("letters") {
        auto f = frequencies(T, 1);
        REQUIRE(f.size() == 3);
        std::vector<QuadraticNumber> want = {T.alpha(), T.beta() - T.alpha(),
                                             QuadraticNumber(1) - T.beta()};
        std::sort(want.begin(), want.end());
        CHECK(f == want);
    }
    SUBCASE("at most five distinct values, positive, summing to one") {
        for (std::size_t n = 1; n <= 20; ++n) {
            auto f = frequencies(T, n);
            CHECK(f.size() == 2 * n + 1);
            QuadraticNumber total(0);
            std::size_t distinct = 0;
            for (std::size_t i = 0; i < f.size(); ++i) {
                CHECK(f[i].sign() > 0);
                total += f[i];
                if (i == 0 || f[i] != f[i - 1]) ++distinct;
            }
            CHECK(total == QuadraticNumber(1));
            CHECK(distinct <= 5);
        }
    }
}

TEST_CASE("three-distance reports for 3iet orbits") {
    ThreeIet T = example_iet();
    SUBCASE("two points make two circle gaps") {
        auto rep = three_distance(T, QuadraticNumber(0), 2);
        CHECK(rep.values.size() == 2);
        REQUIRE(rep.basis.has_value());
        CHECK(rep.basis->first + rep.basis->second == QuadraticNumber(1));
    }
    SUBCASE("fifty points") {
        auto rep = three_distance(T, QuadraticNumber(0), 50);
        CHECK(rep.values.size() <= 3);
        if (rep.values.size() == 3)
            CHECK(rep.values[0] + rep.values[1] == rep.values[2]);
    }
    SUBCASE("sweep N") {
        for (std::size_t N = 2; N <= 100; N += 7) {
            auto rep = three_distance(T, q("1/10"), N);
            CHECK(rep.values.size() <= 3);
            if (rep.values.size() == 3)
                CHECK(rep.values[0] + rep.values[1] == rep.values[2]);
        }
    }
}

TEST_CASE("rotation gaps: three gap theorem demo") {
    QuadraticNumber golden = q("(sqrt(5) - 1)/2");
    SUBCASE("whole interval is hit every step") {
        auto rep = rotation_gaps(golden, QuadraticNumber(0),
                                 Interval{QuadraticNumber(0), QuadraticNumber(1)}, 50);
        REQUIRE(rep.values.size() == 1);
        CHECK(rep.values[0] == QuadraticNumber(1));
    }
    SUBCASE("half interval") {
        auto rep = rotation_gaps(golden, QuadraticNumber(0),
                                 Interval{QuadraticNumber(0), q("1/2")}, 200);
        CHECK(rep.values.size() <= 3);
        if (rep.values.size() == 3) {
            CHECK(rep.values[0] + rep.values[1] == rep.values[2]);
            REQUIRE(rep.basis.has_value());
        }
    }
    SUBCASE("rational angle is rejected") {
        CHECK_THROWS_AS(rotation_gaps(q("1/3"), QuadraticNumber(0),
                                      Interval{QuadraticNumber(0), q("1/2")}, 10),
                        NotMinimal);
    }
}

TEST_CASE("rotation distances: classical three-distance demo") {
    QuadraticNumber golden = q("(sqrt(5) - 1)/2");
    for (std::size_t N : {2, 3, 5, 10, 35, 100}) {
        auto rep = rotation_distances(golden, q("1/7"), N);
        CHECK(rep.values.size() <= 3);
        if (rep.values.size() == 3)
            CHECK(rep.values[0] + rep.values[1] == rep.values[2]);
    }
    auto rep = rotation_distances(q("sqrt(2) - 1"), QuadraticNumber(0), 64);
    CHECK(rep.values.size() <= 3);
}

TEST_CASE("complexity steps by two on non-degenerate instances") {
    testing::Gen gen(11);
    int checked = 0;
    while (checked < 10) {
        auto inst = gen.instance(30);
        if (!inst || !inst->T.nondegenerate()) continue;
        ++checked;
        std::size_t prev = complexity(inst->T, 0);
        for (std::size_t n = 1; n <= 25; ++n) {
            std::size_t cur = complexity(inst->T, n);
            CHECK(cur - prev == 2);
            prev = cur;
        }
    }
}
