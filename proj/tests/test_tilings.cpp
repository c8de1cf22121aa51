#include "farey_sl2/errors.hpp"
#include "farey_sl2/random.hpp"
#include "farey_sl2/tilings.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace farey;

namespace {

long sgn_pow(long i) { return (i % 2 == 0) ? 1 : -1; }

// a_i = (-1)^i i, b_i = (-1)^i ; c_j = -j, d_j = |j| + 1
PathPair alternating_pair(long lo, long hi) {
    return {oracle::formula_path(lo, hi, [](long i) { return LiftVec{sgn_pow(i) * i, sgn_pow(i)}; }),
            oracle::formula_path(lo, hi, [](long j) { return LiftVec{-j, std::labs(j) + 1}; })};
}

// a_i = |i| + 1, b_i = i ; c_j = -j, d_j = |j| + 1
PathPair unit_pair(long lo, long hi) {
    return {oracle::formula_path(lo, hi, [](long i) { return LiftVec{std::labs(i) + 1, i}; }),
            oracle::formula_path(lo, hi, [](long j) { return LiftVec{-j, std::labs(j) + 1}; })};
}

}  // namespace

TEST_CASE("phi matches closed forms") {
    PathPair p = alternating_pair(-5, 5);
    TilingWindow m = phi(p, {-5, 5}, {-5, 5});
    for (long i = -5; i <= 5; ++i)
        for (long j = -5; j <= 5; ++j) CHECK(m.at(i, j) == sgn_pow(i) * (i * (std::labs(j) + 1) + j));

    TilingWindow u = phi(unit_pair(-5, 5), {-5, 5}, {-5, 5});
    for (long i = -5; i <= 5; ++i)
        for (long j = -5; j <= 5; ++j) CHECK(u.at(i, j) == (std::labs(i) + 1) * (std::labs(j) + 1) + i * j);
}

TEST_CASE("phi of random pairs is tame SL2 and SL2-invariant") {
    rnd::Rng rng(100);
    for (int t = 0; t < 60; ++t) {
        IndexRange win{-4, 5};
        PathPair p = rnd::eventually_periodic_pair(rng, win, win);
        TilingWindow m = phi(p, win, win, SignMode::raw);
        CHECK(is_sl2(m));
        CHECK(is_tame(m));
        Mat2Z g = rnd::sl2(rng);
        PathPair gp{p.gamma.transformed(g), p.delta.transformed(g)};
        CHECK(phi(gp, win, win, SignMode::raw) == m);
        // Entries are the Farey distances between the paths.
        for (long i = win.first; i <= win.last; ++i)
            for (long j = win.first; j <= win.last; ++j) CHECK(abs_int(m.at(i, j)) == delta(p.gamma.vertex(i), p.delta.vertex(j)));
    }
}

TEST_CASE("is_sl2 and is_tame detect a corrupted entry") {
    TilingWindow m = phi(unit_pair(-3, 3), {-3, 3}, {-3, 3});
    CHECK(is_sl2(m));
    CHECK(is_tame(m));
    CHECK(is_sl2(m.negated()));
    TilingWindow bad = m;
    bad.at(0, 0) += 1;
    CHECK_FALSE(is_sl2(bad));
    CHECK_FALSE(is_tame(bad));
    CHECK_THROWS_AS(is_tame(m.sub({0, 1}, {0, 5 - 3})), DomainError);
}

TEST_CASE("psi inverts phi") {
    rnd::Rng rng(7);
    for (int t = 0; t < 60; ++t) {
        IndexRange win{-4, 6};
        PathPair p = rnd::eventually_periodic_pair(rng, win, win);
        TilingWindow m = phi(p, win, win, SignMode::raw);
        PathPair back = psi(m);
        CHECK(phi(back, win, win, SignMode::raw) == m);
        CHECK(same_orbit(p, back).has_value());
        TilingWindow c = canonical_sign(m);
        CHECK(phi(psi(c), win, win, SignMode::raw) == c);
        CHECK(same_orbit(p, psi(c)).has_value());
    }
}

TEST_CASE("psi rejects windows that are not tame SL2") {
    TilingWindow m = phi(unit_pair(-2, 2), {-2, 2}, {-2, 2});
    TilingWindow bad = m;
    bad.at(-2, -2) += 5;
    CHECK_THROWS_AS(psi(bad), DomainError);
    CHECK_THROWS_AS(psi(m.sub({-2, -1}, {-2, 2})), RangeError);
}

TEST_CASE("same_orbit rejects unrelated pairs") {
    PathPair a = unit_pair(-3, 3);
    PathPair b = alternating_pair(-3, 3);
    CHECK_FALSE(same_orbit(a, b).has_value());
    CHECK(same_orbit(a, a).value().is_identity());
}

TEST_CASE("recurrence coefficients and extension") {
    TilingWindow m = phi(unit_pair(-3, 3), {-3, 3}, {-3, 3});
    RecurrenceCoeffs c = recurrence_coeffs(m);
    CHECK(c.u.at(0) == 4);
    CHECK(c.u.first == -2);
    CHECK(c.v.last() == 2);

    rnd::Rng rng(3);
    for (int t = 0; t < 40; ++t) {
        ItinerarySpec gs = rnd::eventually_periodic_spec(rng), ds = rnd::eventually_periodic_spec(rng);
        IndexRange big{-8, 8}, small{-3, 3};
        PathPair p{path_from_itinerary(gs, big), path_from_itinerary(ds, big)};
        TilingWindow full = phi(p, big, big, SignMode::raw);
        TilingWindow w = full.sub(small, small);
        // Coefficients of a tiling are the itineraries of its paths.
        RecurrenceCoeffs rc = recurrence_coeffs(w);
        for (long i = rc.u.first; i <= rc.u.last(); ++i) CHECK(rc.u.at(i) == gs.at(i));
        for (long j = rc.v.first; j <= rc.v.last(); ++j) CHECK(rc.v.at(j) == ds.at(j));

        RecurrenceCoeffs known;
        known.u.first = big.first;
        known.v.first = big.first;
        for (long i = big.first; i <= big.last; ++i) {
            known.u.values.push_back(gs.at(i));
            known.v.values.push_back(ds.at(i));
        }
        TilingWindow grown = extend(w, known, ExtendDirection::down, 5);
        grown = extend(grown, known, ExtendDirection::up, 5);
        grown = extend(grown, known, ExtendDirection::right, 5);
        grown = extend(grown, known, ExtendDirection::left, 5);
        CHECK(grown == full);
    }
    CHECK_THROWS_AS(extend(m, c, ExtendDirection::down, 1), RangeError);
}

TEST_CASE("periodic extension of coefficients") {
    ItinerarySpec s;
    s.left_period = {1, 2, 3};
    s.right_period = {1, 2, 3};
    s.start = 0;
    ItinerarySpec d;
    d.left_period = {2};
    d.right_period = {2};
    d.seed = std::make_pair(ExtRational(-3), ExtRational(-2));
    IndexRange big{-6, 12};
    PathPair p{path_from_itinerary(s, big), path_from_itinerary(d, big)};
    TilingWindow full = phi(p, big, big, SignMode::raw);
    TilingWindow w = full.sub({-6, 0}, {-6, 12});
    RecurrenceCoeffs c = recurrence_coeffs(w);
    CHECK(extend(w, c, ExtendDirection::down, 12, 3) == full);
}

TEST_CASE("shift equivariance") {
    rnd::Rng rng(12);
    for (int t = 0; t < 30; ++t) {
        IndexRange win{-4, 4};
        PathPair p = rnd::eventually_periodic_pair(rng, win, win);
        long a = rnd::uniform(rng, -3, 3), b = rnd::uniform(rng, -3, 3);
        PathPair s{p.gamma.shifted(a), p.delta.shifted(b)};
        TilingWindow lhs = phi(s, {win.first + a, win.last + a}, {win.first + b, win.last + b}, SignMode::raw);
        CHECK(lhs == shift(phi(p, win, win, SignMode::raw), a, b));
    }
}

TEST_CASE("canonical sign") {
    TilingWindow m({0, 1}, {0, 1}, {0, -1, 1, 3});
    TilingWindow c = canonical_sign(m);
    CHECK(c.at(0, 1) == 1);
    CHECK(canonical_sign(c) == c);
}

TEST_CASE("unique_min and ones") {
    TilingWindow u = phi(unit_pair(-4, 4), {-4, 4}, {-4, 4});
    MinReport r = unique_min(u);
    CHECK(r.value == 1);
    REQUIRE(r.positions.size() == 1);
    CHECK(r.positions[0] == Position{0, 0});
    OnesReport o = ones_structure(u);
    CHECK(o.positions.size() == 1);
    CHECK_FALSE(o.violation.has_value());
    CHECK_THROWS_AS(unique_min(phi(alternating_pair(-2, 2), {-2, 2}, {-2, 2})), DomainError);

    TilingWindow bad({0, 1}, {0, 1}, {1, 2, 2, 1});
    OnesReport v = ones_structure(bad);
    REQUIRE(v.violation.has_value());
    CHECK(v.violation->first == Position{0, 0});
    CHECK(v.violation->second == Position{1, 1});
    TilingWindow anti({0, 1}, {0, 1}, {2, 1, 1, 2});
    CHECK_FALSE(ones_structure(anti).violation.has_value());
}

TEST_CASE("window access") {
    TilingWindow m({2, 3}, {-1, 0}, {1, 2, 3, 4});
    CHECK(m.at(3, -1) == 3);
    CHECK_THROWS_AS(m.at(1, 0), RangeError);
    CHECK_THROWS_AS(TilingWindow({0, 1}, {0, 1}, {1, 2, 3}), ValidationError);
}
