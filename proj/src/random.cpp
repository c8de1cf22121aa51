#include "farey_sl2/random.hpp"

namespace farey::rnd {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Mat2Z sl2(Rng& rng, int factors) {
    Mat2Z g;
    for (int k = 0; k < factors; ++k) {
        if (uniform(rng, 0, 1) == 0)
            g = Mat2Z::J() * g;
        else
            g = Mat2Z(1, uniform(rng, -3, 3), 0, 1) * g;
    }
    return g;
}

namespace {

Word word(Rng& rng, long len, long lo, long hi) {
    Word w;
    for (long k = 0; k < len; ++k) w.push_back(uniform(rng, lo, hi));
    return w;
}

}  // namespace

ItinerarySpec eventually_periodic_spec(Rng& rng, long lo, long hi) {
    ItinerarySpec s;
    s.left_period = word(rng, uniform(rng, 1, 3), lo, hi);
    s.core = word(rng, uniform(rng, 0, 4), lo, hi);
    s.right_period = word(rng, uniform(rng, 1, 3), lo, hi);
    s.start = uniform(rng, -2, 2);
    Mat2Z g = sl2(rng);
    s.seed = std::make_pair(mobius(g, ExtRational(0)), mobius(g, ExtRational::infinity()));
    return s;
}

PathPair eventually_periodic_pair(Rng& rng, IndexRange i_range, IndexRange j_range) {
    ItinerarySpec a = eventually_periodic_spec(rng);
    ItinerarySpec b = eventually_periodic_spec(rng);
    return {path_from_itinerary(a, i_range), path_from_itinerary(b, j_range)};
}

namespace {

void split(Rng& rng, long lo, long hi, std::vector<std::pair<long, long>>& out) {
    if (hi - lo < 2) return;
    long apex = uniform(rng, lo + 1, hi - 1);
    if (apex - lo >= 2) out.emplace_back(lo, apex);
    if (hi - apex >= 2) out.emplace_back(apex, hi);
    split(rng, lo, apex, out);
    split(rng, apex, hi, out);
}

}  // namespace

std::vector<std::pair<long, long>> triangulation(Rng& rng, long n) {
    std::vector<std::pair<long, long>> out;
    split(rng, 0, n - 1, out);
    return out;
}

}  // namespace farey::rnd
