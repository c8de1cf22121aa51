#include "farey_sl2/errors.hpp"
#include "farey_sl2/io.hpp"
#include "farey_sl2/random.hpp"
#include "farey_sl2/render.hpp"

#include <doctest.h>

using namespace farey;

namespace {
Word w(std::initializer_list<long> xs) { return Word(xs.begin(), xs.end()); }
}  // namespace

TEST_CASE("words and ranges") {
    CHECK(io::parse_word("1, 2,-3") == w({1, 2, -3}));
    CHECK(io::parse_word("").empty());
    CHECK(io::format_word(w({4, -1})) == "4,-1");
    CHECK_THROWS_AS(io::parse_word("1,,2"), ParseError);
    CHECK_THROWS_AS(io::parse_word("1,a"), ParseError);
    CHECK(io::parse_range("-3:4") == IndexRange{-3, 4});
    CHECK_THROWS_AS(io::parse_range("4:-3"), ParseError);
    CHECK_THROWS_AS(io::parse_range("4"), ParseError);
    auto [r, c] = io::parse_window("0:2,-1:1");
    CHECK(r == IndexRange{0, 2});
    CHECK(c == IndexRange{-1, 1});
    CHECK_THROWS_AS(io::parse_window("0:2"), ParseError);
}

TEST_CASE("json round trips") {
    rnd::Rng rng(6);
    for (int t = 0; t < 20; ++t) {
        ItinerarySpec s = rnd::eventually_periodic_spec(rng);
        ItinerarySpec back = io::itinerary_spec_from_json(io::json::parse(io::to_json(s).dump()));
        for (long i = -10; i <= 10; ++i) CHECK(back.at(i) == s.at(i));
        CHECK(back.seed == s.seed);

        FareyPath p = path_from_itinerary(s, {-3, 4});
        FareyPath pb = io::path_from_json(io::to_json(p));
        CHECK(pb.vertices() == p.vertices());
        CHECK(pb.first() == -3);

        TilingWindow m = phi(rnd::eventually_periodic_pair(rng, {-2, 2}, {0, 3}), {-2, 2}, {0, 3});
        CHECK(io::window_from_json(io::to_json(m)) == m);
    }
    TriangulatedPolygon poly = polygon_from_diagonals(6, {{0, 2}, {0, 3}, {3, 5}});
    TriangulatedPolygon pb = io::polygon_from_json(io::to_json(poly));
    CHECK(diagonals_of(pb) == diagonals_of(poly));
}

TEST_CASE("json inputs accept integers and report bad shapes") {
    TilingWindow m = io::window_from_json(io::json::parse(R"({"i0":1,"j0":-1,"rows":[[1,"2"],[3,"40000000000000000000000"]]})"));
    CHECK(m.at(2, 0) == Int("40000000000000000000000"));
    CHECK(m.at(1, -1) == 1);
    CHECK_THROWS_AS(io::window_from_json(io::json::parse(R"({"rows":[[1,2],[3]]})")), ParseError);
    CHECK_THROWS_AS(io::window_from_json(io::json::parse(R"({"rows":[]})")), ParseError);
    CHECK_THROWS_AS(io::path_from_json(io::json::parse(R"({"vertices":[0.5]})")), ParseError);
    CHECK_THROWS_AS(io::load_json("{not json"), ParseError);
    CHECK_THROWS_AS(io::load_json("/nonexistent/file.json"), ParseError);
    FareyPath p = io::path_from_json(io::load_json(R"({"vertices":["inf","1","0","inf"],"closed":true})"));
    CHECK(p.kind() == PathKind::closed);
    CHECK_THROWS_AS(io::path_from_json(io::json::parse(R"({"vertices":["0","2"]})")), PathError);
}

TEST_CASE("standard form of the heptagon frieze") {
    FareyPath c = closed_path_from_word(w({1, 2, 2, 3, 1, 2, 4}));
    IndexRange span = render::standard_form_span(7);
    auto rows = render::standard_form_rows(frieze_from_closed_path(c, 7, span, span));
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == w({0, 0, 0, 0, 0, 0, 0}));
    CHECK(rows[1] == w({1, 1, 1, 1, 1, 1, 1}));
    CHECK(rows[2] == w({1, 2, 2, 3, 1, 2, 4}));
    CHECK(rows[3] == w({1, 3, 5, 2, 1, 7, 3}));
    CHECK(rows[4] == w({2, 1, 7, 3, 1, 3, 5}));
    CHECK(rows[5] == w({1, 2, 4, 1, 2, 2, 3}));
    CHECK(rows[6] == w({1, 1, 1, 1, 1, 1, 1}));
    CHECK(rows[7] == w({0, 0, 0, 0, 0, 0, 0}));
    std::string text = render::standard_form(frieze_from_closed_path(c, 7, span, span));
    CHECK(text.rfind(" 0 0 0 0 0 0 0\n  1 1 1 1 1 1 1\n 1 2 2 3 1 2 4\n", 0) == 0);
}

TEST_CASE("tsv and disc points") {
    TilingWindow m({0, 1}, {0, 1}, {1, -2, 3, 4});
    CHECK(render::tsv(m) == "1\t-2\n3\t4\n");
    for (const char* s : {"0", "1", "-1", "inf", "3/7", "-5/2"}) {
        auto d = render::disc_point(parse_vertex(s));
        CHECK(d.x * d.x + d.y * d.y == d.scale * d.scale);
    }
    auto z = render::disc_point(0);
    CHECK(z.x == 0);
    CHECK(z.y == -z.scale);
}

TEST_CASE("svg output") {
    std::vector<ExtRational> v{ExtRational::infinity(), 1, 0};
    std::string s = render::svg(v, {{v[0], v[1]}, {v[1], v[2]}, {v[2], v[0]}});
    CHECK(s.rfind("<svg", 0) == 0);
    CHECK(s.find("</svg>") != std::string::npos);
    CHECK(s.find("inf") != std::string::npos);
}
