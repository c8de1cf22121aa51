#include "farey_sl2/errors.hpp"
#include "farey_sl2/farey_core.hpp"
#include "farey_sl2/random.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace farey;

namespace {
ExtRational q(const char* s) { return parse_vertex(s); }
}  // namespace

TEST_CASE("normalize puts fractions in lowest terms with a positive denominator") {
    CHECK(ExtRational::normalize(-2, -3) == q("2/3"));
    CHECK(ExtRational::normalize(5, 0) == ExtRational::infinity());
    CHECK(ExtRational::normalize(-5, 0) == ExtRational::infinity());
    CHECK(ExtRational::normalize(4, -6) == q("-2/3"));
    CHECK(ExtRational::normalize(0, -7) == ExtRational(0));
    CHECK_THROWS_AS(ExtRational::normalize(0, 0), InvalidVertex);
}

TEST_CASE("vertex text round-trips") {
    for (const char* s : {"inf", "0", "-3", "7/5", "-22/7", "123456789012345678901234567890/11"}) {
        CHECK(to_string(parse_vertex(s)) == s);
    }
    CHECK(parse_vertex("6/4") == q("3/2"));
    CHECK(parse_vertex("3/0") == ExtRational::infinity());
    CHECK_THROWS_AS(parse_vertex("0/0"), InvalidVertex);
    CHECK_THROWS_AS(parse_vertex("x"), ParseError);
    CHECK_THROWS_AS(parse_vertex("1/"), ParseError);
    CHECK_THROWS_AS(parse_vertex(""), ParseError);
}

TEST_CASE("delta and adjacency") {
    CHECK(delta(1, -1) == 2);
    CHECK(delta(0, ExtRational::infinity()) == 1);
    CHECK(delta(q("1/2"), q("2/3")) == 1);
    CHECK(delta(q("1/3"), q("2/3")) == 3);
    CHECK(is_adjacent(5, ExtRational::infinity()));
    CHECK_FALSE(is_adjacent(q("1/2"), ExtRational::infinity()));
}

TEST_CASE("mediant") {
    CHECK(mediant(0, 1) == q("1/2"));
    CHECK(mediant(q("1/2"), 1) == q("2/3"));
    CHECK(mediant(0, ExtRational::infinity()) == 1);
    CHECK_THROWS_AS(mediant(0, 2), DomainError);
}

TEST_CASE("mobius and edge_normalizer") {
    Mat2Z g = edge_normalizer(0, ExtRational::infinity());
    CHECK(g.is_identity());
    CHECK(edge_normalizer(ExtRational::infinity(), 0) == Mat2Z::J());
    CHECK(edge_normalizer(1, ExtRational::infinity()) == Mat2Z(1, -1, 0, 1));
    CHECK(mobius(Mat2Z::J(), 2) == q("-1/2"));
    CHECK(mobius(Mat2Z::J(), 0) == ExtRational::infinity());
    CHECK_THROWS_AS(edge_normalizer(0, 2), DomainError);
    CHECK_THROWS_AS(Mat2Z(1, 1, 1, 1), DomainError);
}

TEST_CASE("edge_normalizer sends an edge to (0, inf) for random edges") {
    rnd::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Mat2Z h = rnd::sl2(rng, 8);
        ExtRational u = mobius(h, 0), v = mobius(h, ExtRational::infinity());
        Mat2Z g = edge_normalizer(u, v);
        CHECK(mobius(g, u) == 0);
        CHECK(mobius(g, v) == ExtRational::infinity());
        CHECK(g == g.canonical());
    }
}

TEST_CASE("clockwise3 examples") {
    auto inf = ExtRational::infinity();
    CHECK(clockwise3(inf, 1, 0));
    CHECK_FALSE(clockwise3(0, 1, inf));
    CHECK(clockwise3(2, q("1/2"), q("-1/2")));
    CHECK_FALSE(clockwise3(1, 1, 0));
}

TEST_CASE("clockwise3 agrees with exact disc orientation and is cyclic") {
    rnd::Rng rng(5);
    std::vector<ExtRational> pool{ExtRational::infinity()};
    for (long a = -6; a <= 6; ++a)
        for (long b = 1; b <= 5; ++b) pool.push_back(ExtRational::normalize(a, b));
    for (int t = 0; t < 3000; ++t) {
        const auto& x = pool[rnd::uniform(rng, 0, static_cast<long>(pool.size()) - 1)];
        const auto& y = pool[rnd::uniform(rng, 0, static_cast<long>(pool.size()) - 1)];
        const auto& z = pool[rnd::uniform(rng, 0, static_cast<long>(pool.size()) - 1)];
        bool c = clockwise3(x, y, z);
        CHECK(c == oracle::clockwise_on_disc(x, y, z));
        CHECK(c == clockwise3(y, z, x));
        if (x != y && y != z && z != x) CHECK(c != clockwise3(x, z, y));
    }
}

TEST_CASE("clockwise3 is invariant under SL2") {
    rnd::Rng rng(8);
    for (int t = 0; t < 300; ++t) {
        ExtRational x = ExtRational::normalize(rnd::uniform(rng, -20, 20), rnd::uniform(rng, 1, 9));
        ExtRational y = ExtRational::normalize(rnd::uniform(rng, -20, 20), rnd::uniform(rng, 0, 9));
        ExtRational z = ExtRational::normalize(rnd::uniform(rng, -20, 20), rnd::uniform(rng, 1, 9));
        Mat2Z g = rnd::sl2(rng);
        CHECK(clockwise3(x, y, z) == clockwise3(mobius(g, x), mobius(g, y), mobius(g, z)));
    }
}

TEST_CASE("farey_parents examples") {
    CHECK(farey_parents(q("2/3")) == std::make_pair(q("1/2"), ExtRational(1)));
    CHECK(farey_parents(q("1/2")) == std::make_pair(ExtRational(0), ExtRational(1)));
    CHECK(farey_parents(q("3/5")) == std::make_pair(q("1/2"), q("2/3")));
    CHECK_THROWS_AS(farey_parents(3), DomainError);
    CHECK_THROWS_AS(farey_parents(ExtRational::infinity()), DomainError);
}

TEST_CASE("farey_parents matches exhaustive search and the mediant") {
    for (long b = 2; b <= 30; ++b)
        for (long a = -2 * b; a <= 2 * b; ++a) {
            if (gcd_int(a, b) != 1) continue;
            ExtRational v = ExtRational::normalize(a, b);
            auto [x, y] = farey_parents(v);
            auto brute = oracle::small_neighbours(v);
            REQUIRE(brute.size() == 2);
            CHECK(x == brute[0]);
            CHECK(y == brute[1]);
            CHECK(mediant(x, y) == v);
        }
}

TEST_CASE("matrices") {
    Mat2Z a(2, 1, 1, 1), b(1, 3, 0, 1);
    CHECK((a * a.inverse()).is_identity());
    CHECK((a * b) * b.inverse() == a);
    CHECK(a.trace() == 3);
    CHECK(Mat2Z(-1, 0, 0, -1).canonical().is_identity());
    CHECK(Mat2Z(0, -1, 1, 0).canonical() == Mat2Z::J());
    LiftVec v{3, 2};
    CHECK(a * v == LiftVec{8, 5});
}

TEST_CASE("big integers stay exact") {
    Int big("1000000000000000000000000000000");
    ExtRational x = ExtRational::normalize(big + 1, big);
    CHECK(is_adjacent(x, 1));
    CHECK(to_string(mediant(x, 1)) == Int(big + 2).str() + "/" + Int(big + 1).str());
}
