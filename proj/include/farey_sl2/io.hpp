#pragma once

#include "farey_sl2/friezes.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace farey::io {

using json = nlohmann::json;

// "1,2,-1" (spaces allowed). An empty string is the empty word.
Word parse_word(std::string_view text);
std::string format_word(const Word& word);

// "a:b" -> [a, b]
IndexRange parse_range(std::string_view text);
// "i0:i1,j0:j1"
std::pair<IndexRange, IndexRange> parse_window(std::string_view text);

// Inline JSON when the text starts with '{' or '[', otherwise a file to read.
json load_json(const std::string& text_or_path);

// {"left_period":[..],"core":[..],"right_period":[..],"start":1,"seed":["0","inf"]}
ItinerarySpec itinerary_spec_from_json(const json& j);
json to_json(const ItinerarySpec& spec);

// {"vertices":["inf","2","1"],"closed":true,"start":0}
FareyPath path_from_json(const json& j);
json to_json(const FareyPath& path);

// {"i0":..,"j0":..,"rows":[[..],..]}; entries are written as decimal strings and read
// from strings or JSON integers.
TilingWindow window_from_json(const json& j);
json to_json(const TilingWindow& window);

// {"n":7,"diagonals":[[0,2],..]}
TriangulatedPolygon polygon_from_json(const json& j);
json to_json(const TriangulatedPolygon& poly);

Int int_from_json(const json& j);

}  // namespace farey::io
