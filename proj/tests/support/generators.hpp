#ifndef TRIET_TESTS_GENERATORS_HPP
#define TRIET_TESTS_GENERATORS_HPP

#include <optional>
#include <random>

#include "triet/iet.hpp"

namespace triet::testing {

/// Deterministic random exact numbers and 3iet instances for property runs.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long long int_in(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng_);
    }

    Rational rational(long long height) {
        long long den = int_in(1, height);
        long long num = int_in(-height, height);
        return Rational(num, den);
    }

    unsigned long long field() {
        static const unsigned long long ds[] = {2, 3, 5};
        return ds[static_cast<std::size_t>(int_in(0, 2))];
    }

    QuadraticNumber number(long long height, unsigned long long d) {
        return QuadraticNumber(rational(height), rational(height), FieldTag(d));
    }

    QuadraticNumber number(long long height) { return number(height, field()); }

    /// Random a + b sqrt(d) in (0,1): a in (0,1), |b| small.
    std::optional<QuadraticNumber> number_in_unit(unsigned long long d, long long height = 100) {
        for (int tries = 0; tries < 64; ++tries) {
            long long den = int_in(2, height);
            Rational a(int_in(1, den - 1), den);
            Rational b(int_in(-4, 4), int_in(5, height));
            QuadraticNumber x(a, b, FieldTag(d));
            if (QuadraticNumber(0) < x && x < QuadraticNumber(1)) return x;
        }
        return std::nullopt;
    }

    struct Instance {
        ThreeIet T;
        Interval I;
    };

    /// Minimal 3iet with a random subinterval [gamma, delta), delta < 1.
    std::optional<Instance> instance(long long height = 100) {
        unsigned long long d = field();
        auto x = number_in_unit(d, height);
        auto y = number_in_unit(d, height);
        auto g = number_in_unit(d, height);
        auto h = number_in_unit(d, height);
        if (!x || !y || !g || !h) return std::nullopt;
        if (*y < *x) std::swap(*x, *y);
        if (*x == *y) return std::nullopt;
        if (*h < *g) std::swap(*g, *h);
        if (*g == *h) return std::nullopt;
        if (!q_independent(QuadraticNumber(1) - *x, *y)) return std::nullopt;
        return Instance{ThreeIet(*x, *y), Interval{*g, *h}};
    }

private:
    std::mt19937_64 rng_;
};

} // namespace triet::testing

#endif
