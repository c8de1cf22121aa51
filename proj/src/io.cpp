#include "farey_sl2/io.hpp"

#include "farey_sl2/errors.hpp"

#include <fstream>
#include <sstream>

namespace farey::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
}

long parse_long(std::string_view text) {
    Int v = parse_int(trim(text));
    if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
        throw ParseError("index out of range: " + std::string(text));
    return v.convert_to<long>();
}

Word word_from_json(const json& j, const char* key) {
    Word out;
    if (!j.contains(key)) return out;
    if (!j.at(key).is_array()) throw ParseError(std::string("'") + key + "' must be an array");
    for (const auto& e : j.at(key)) out.push_back(int_from_json(e));
    return out;
}

json word_to_json(const Word& w) {
    json out = json::array();
    for (const Int& e : w) {
        if (e >= std::numeric_limits<long long>::min() && e <= std::numeric_limits<long long>::max())
            out.push_back(e.convert_to<long long>());
        else
            out.push_back(e.str());
    }
    return out;
}

ExtRational vertex_from_json(const json& j) {
    if (j.is_string()) return parse_vertex(j.get<std::string>());
    if (j.is_number_integer()) return ExtRational::from_int(int_from_json(j));
    throw ParseError("vertex must be a string such as \"a/b\" or \"inf\"");
}

}  // namespace

Int int_from_json(const json& j) {
    if (j.is_string()) return parse_int(j.get<std::string>());
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
        return Int(j.get<long long>());
    }
    throw ParseError("expected an integer");
}

Word parse_word(std::string_view text) {
    Word out;
    text = trim(text);
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view piece = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        out.push_back(parse_int(piece));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_word(const Word& word) {
    std::string out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) out += ',';
        out += word[k].str();
    }
    return out;
}

IndexRange parse_range(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("range must look like a:b, got '" + std::string(text) + "'");
    IndexRange r{parse_long(text.substr(0, colon)), parse_long(text.substr(colon + 1))};
    if (r.last < r.first) throw ParseError("range end precedes its start: '" + std::string(text) + "'");
    return r;
}

std::pair<IndexRange, IndexRange> parse_window(std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos) throw ParseError("window must look like i0:i1,j0:j1");
    return {parse_range(text.substr(0, comma)), parse_range(text.substr(comma + 1))};
}

json load_json(const std::string& text_or_path) {
    std::string_view t = trim(text_or_path);
    try {
        if (!t.empty() && (t.front() == '{' || t.front() == '[')) return json::parse(t);
        std::ifstream in(text_or_path);
        if (!in) throw ParseError("cannot open '" + text_or_path + "'");
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

ItinerarySpec itinerary_spec_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("itinerary spec must be a JSON object");
    ItinerarySpec spec;
    spec.left_period = word_from_json(j, "left_period");
    spec.core = word_from_json(j, "core");
    spec.right_period = word_from_json(j, "right_period");
    if (j.contains("start")) spec.start = j.at("start").get<long>();
    if (j.contains("seed")) {
        const json& s = j.at("seed");
        if (!s.is_array() || s.size() != 2) throw ParseError("'seed' must hold two vertices");
        spec.seed = std::make_pair(vertex_from_json(s[0]), vertex_from_json(s[1]));
    }
    return spec;
}

json to_json(const ItinerarySpec& spec) {
    json out{{"left_period", word_to_json(spec.left_period)},
             {"core", word_to_json(spec.core)},
             {"right_period", word_to_json(spec.right_period)},
             {"start", spec.start}};
    if (spec.seed) out["seed"] = json::array({to_string(spec.seed->first), to_string(spec.seed->second)});
    return out;
}

FareyPath path_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array())
        throw ParseError("path must be a JSON object with a 'vertices' array");
    std::vector<ExtRational> v;
    for (const auto& e : j.at("vertices")) v.push_back(vertex_from_json(e));
    bool closed = j.value("closed", false);
    long start = j.value("start", 0L);
    return lift_path(v, start, closed ? PathKind::closed : PathKind::finite);
}

json to_json(const FareyPath& path) {
    json v = json::array();
    for (const auto& x : path.vertices()) v.push_back(to_string(x));
    return {{"vertices", v}, {"closed", path.kind() == PathKind::closed}, {"start", path.first()}};
}

TilingWindow window_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array() || j.at("rows").empty())
        throw ParseError("window must be a JSON object with a non-empty 'rows' array");
    long i0 = j.value("i0", 0L);
    long j0 = j.value("j0", 0L);
    const json& rows = j.at("rows");
    std::size_t width = rows[0].size();
    if (width == 0) throw ParseError("window rows must be non-empty");
    std::vector<Int> entries;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != width) throw ParseError("window rows must all have the same length");
        for (const auto& e : row) entries.push_back(int_from_json(e));
    }
    long h = static_cast<long>(rows.size());
    long w = static_cast<long>(width);
    return TilingWindow({i0, i0 + h - 1}, {j0, j0 + w - 1}, std::move(entries));
}

json to_json(const TilingWindow& w) {
    json rows = json::array();
    for (long i = w.rows().first; i <= w.rows().last; ++i) {
        json row = json::array();
        for (long j = w.cols().first; j <= w.cols().last; ++j) row.push_back(w.at(i, j).str());
        rows.push_back(row);
    }
    return {{"i0", w.rows().first}, {"j0", w.cols().first}, {"rows", rows}};
}

TriangulatedPolygon polygon_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n")) throw ParseError("polygon must be a JSON object with 'n'");
    long n = j.at("n").get<long>();
    std::vector<std::pair<long, long>> diags;
    if (j.contains("diagonals")) {
        for (const auto& d : j.at("diagonals")) {
            if (!d.is_array() || d.size() != 2) throw ParseError("each diagonal must be a pair of vertex indices");
            diags.emplace_back(d[0].get<long>(), d[1].get<long>());
        }
    }
    return polygon_from_diagonals(n, diags);
}

json to_json(const TriangulatedPolygon& poly) {
    json d = json::array();
    for (const auto& [a, b] : diagonals_of(poly)) d.push_back(json::array({a, b}));
    json out{{"n", poly.n}, {"diagonals", d}};
    if (!poly.vertices.empty()) {
        json v = json::array();
        for (const auto& x : poly.vertices) v.push_back(to_string(x));
        out["vertices"] = v;
    }
    return out;
}

}  // namespace farey::io
