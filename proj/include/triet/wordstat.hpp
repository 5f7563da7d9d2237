#ifndef TRIET_WORDSTAT_HPP
#define TRIET_WORDSTAT_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "triet/induct.hpp"

namespace triet {

/// Distinct gap or distance values with the two-value basis when one exists.
struct GapReport {
    std::vector<QuadraticNumber> values;  // sorted ascending
    std::optional<std::pair<QuadraticNumber, QuadraticNumber>> basis;
};

/// Number of length-n factors, counted as nonempty length-n cylinders.
std::size_t complexity(const ThreeIet& T, std::size_t n);

/// The return words to a factor w are exactly the [w]-itineraries.
std::set<TernaryWord> return_words(const ThreeIet& T, const TernaryWord& w,
                                   std::size_t cap = kDefaultCap);

enum class BispecialCase { P_I, P_II, NP_III, NP_IV, NP_V, NP_VI };

std::string to_string(BispecialCase c);

struct Bispecial {
    TernaryWord word;
    bool palindromic = false;
    BispecialCase shape = BispecialCase::P_I;
};

/// All bispecial factors of length <= max_len, with the return-word case
/// each realizes.
std::vector<Bispecial> bispecials(const ThreeIet& T, std::size_t max_len,
                                  std::size_t cap = kDefaultCap);

/// Cylinder lengths of all length-n factors (multiset, sorted).
std::vector<QuadraticNumber> frequencies(const ThreeIet& T, std::size_t n);

/// Distances between circle-neighbours of the first N orbit points of rho.
GapReport three_distance(const ThreeIet& T, const QuadraticNumber& rho, std::size_t N);

/// Return-time gaps of the rotation x -> {x + theta} to the interval I,
/// over the first N steps of the orbit of rho.
GapReport rotation_gaps(const QuadraticNumber& theta, const QuadraticNumber& rho,
                        const Interval& I, std::size_t N);

/// Classical three-distance demonstration for the rotation by theta.
GapReport rotation_distances(const QuadraticNumber& theta, const QuadraticNumber& rho,
                             std::size_t N);

/// Ordered constant-itinerary pieces of I, with the mirror reduction applied
/// internally when I reaches the right endpoint 1 (where direct induction is
/// undefined).
std::vector<Piece> ordered_pieces(const ThreeIet& T, const Interval& I,
                                  std::size_t cap = kDefaultCap);

} // namespace triet

#endif
