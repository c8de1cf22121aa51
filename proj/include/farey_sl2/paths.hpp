#pragma once

#include "farey_sl2/farey_core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace farey {

struct IndexRange {
    long first = 0;
    long last = -1;  // inclusive
    long size() const { return last < first ? 0 : last - first + 1; }
    bool contains(long i) const { return first <= i && i <= last; }
    friend bool operator==(const IndexRange& x, const IndexRange& y) { return x.first == y.first && x.last == y.last; }
};

using Word = std::vector<Int>;

// A word together with the absolute index of its first letter.
struct IndexedWord {
    long first = 0;
    Word values;
    long last() const { return first + static_cast<long>(values.size()) - 1; }
    bool contains(long i) const { return first <= i && i <= last(); }
    const Int& at(long i) const;
};

enum class PathKind { finite, closed, biinfinite_window };

// Lifts with det(lift(i), lift(i + 1)) = +1 for every step.
// A closed path stores v_0 .. v_n with v_n = v_0 as vertices (the lifts may differ by sign).
class FareyPath {
public:
    FareyPath(PathKind kind, long first, std::vector<LiftVec> lifts);

    PathKind kind() const { return kind_; }
    long first() const { return first_; }
    long last() const { return first_ + static_cast<long>(lifts_.size()) - 1; }
    IndexRange range() const { return {first(), last()}; }
    std::size_t size() const { return lifts_.size(); }
    // Number of steps; for a closed path this is its length n.
    long length() const { return static_cast<long>(lifts_.size()) - 1; }

    const LiftVec& lift(long i) const;
    ExtRational vertex(long i) const { return lift(i).vertex(); }
    const std::vector<LiftVec>& lifts() const { return lifts_; }
    std::vector<ExtRational> vertices() const;

    FareyPath transformed(const Mat2Z& g) const;
    // v'_i = v_{i - p}
    FareyPath shifted(long p) const { return FareyPath(kind_, first_ + p, lifts_); }
    FareyPath negated() const;
    FareyPath with_kind(PathKind kind) const { return FareyPath(kind, first_, lifts_); }
    // Sub-window [from, to] as a biinfinite_window.
    FareyPath slice(long from, long to) const;

private:
    PathKind kind_;
    long first_;
    std::vector<LiftVec> lifts_;
};

// A finite word, or a word with periodic tails. Letter i is e_i:
//   core[i - start]                         for start <= i < start + |core|
//   right_period[(i - start - |core|) mod]  beyond the core
//   left_period[(i - start) mod]            before the core
// The seed gives v_0 and v_1 (default 0 and infinity).
struct ItinerarySpec {
    Word left_period;
    Word core;
    Word right_period;
    long start = 1;
    std::optional<std::pair<ExtRational, ExtRational>> seed;

    bool defined_at(long i) const;
    Int at(long i) const;  // throws RangeError
};

// Lifts v_0 with den > 0 (or (1, 0) for infinity) and fixes later signs by det = +1.
FareyPath lift_path(const std::vector<ExtRational>& vertices, long first = 0, PathKind kind = PathKind::finite);

// e_i = g_i(v_{i+1}) with g_i = edge_normalizer(v_{i-1}, v_i), for the interior vertices.
// A closed path of length n reports e_1 .. e_n, wrapping around.
IndexedWord itinerary_of(const FareyPath& path);

// The unique path through the seed at indices 0, 1 with the given itinerary, over the window.
FareyPath path_from_itinerary(const ItinerarySpec& spec, IndexRange window);

// Pairwise distinct and in clockwise cyclic order.
bool is_clockwise(const std::vector<ExtRational>& vertices);
bool is_clockwise(const FareyPath& path);
bool is_simple_closed(const FareyPath& path);
bool is_clockwise_simple_closed(const FareyPath& path);

// Product of the step matrices [[0, 1], [-1, e]] in path order (later steps on the left).
Mat2Z period_transform(const Word& word);

enum class TailDirection { forward, backward };

struct QuadraticIrrational {
    Int p, q, d, r;  // (p + q*sqrt(d)) / r, d squarefree > 1, r > 0, gcd(p, q, r) = 1
    friend bool operator==(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        return x.p == y.p && x.q == y.q && x.d == y.d && x.r == y.r;
    }
    double approx() const;
};

struct TailLimit {
    enum class Kind { rational, quadratic_irrational, none } kind = Kind::none;
    ExtRational rational;
    QuadraticIrrational irrational;
    Mat2Z transform;  // maps the tail one period forward (or backward)
};

// The limit of the eventually periodic tail whose period word is given.
// The window must contain one full period plus two vertices of that tail.
TailLimit classify_tail_limit(const FareyPath& path, const Word& period, TailDirection dir);

// The path with vertices v_0 .. v_{|w|+1} built from w is a clockwise simple closed path.
bool is_cycle_sequence(const Word& word);
// Some contiguous subword is a cycle sequence.
bool contains_cycle_sequence(const Word& word);

// The closed path v_0 .. v_n whose itinerary is e_1 .. e_n = word, seeded at 0, infinity.
// Throws DomainError if the word does not close up.
FareyPath closed_path_from_word(const Word& word);

std::string to_string(const QuadraticIrrational& x);
std::string to_string(const TailLimit& x);

}  // namespace farey
