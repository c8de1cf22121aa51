#pragma once

#include "farey_sl2/friezes.hpp"

#include <random>

namespace farey::rnd {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);

// Product of a few T^k and J factors.
Mat2Z sl2(Rng& rng, int factors = 5);

// Entries in [lo, hi]; tails of length 1..3, core of length 0..4, random seed edge.
ItinerarySpec eventually_periodic_spec(Rng& rng, long lo = -3, long hi = 3);

PathPair eventually_periodic_pair(Rng& rng, IndexRange i_range, IndexRange j_range);

// Diagonals of a triangulated n-gon, grown by picking a random apex on each base edge.
std::vector<std::pair<long, long>> triangulation(Rng& rng, long n);

}  // namespace farey::rnd
