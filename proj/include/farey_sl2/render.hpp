#pragma once

#include "farey_sl2/friezes.hpp"

#include <string>
#include <utility>
#include <vector>

namespace farey::render {

// Row k (0 <= k <= n) of the frieze drawn as a band: m_{j+k,j} for n consecutive j
// starting at base + 1 - floor(k/2), so that alternate rows sit half a cell apart.
std::vector<Word> standard_form_rows(const FriezeOrderN& frieze, long base = 0);
// The index window a frieze needs for standard_form_rows(.., base).
IndexRange standard_form_span(long n, long base = 0);
std::string standard_form(const FriezeOrderN& frieze, long base = 0);

std::string tsv(const TilingWindow& window);

// Farey-graph picture in the disc model. Coordinates are floating point and
// used only for drawing.
std::string svg(const std::vector<ExtRational>& vertices, const std::vector<std::pair<ExtRational, ExtRational>>& edges);

// Image of x under z -> (iz + 1)/(z + i), as exact (x, y, scale) with point (x/scale, y/scale).
struct DiscPoint {
    Int x, y, scale;
};
DiscPoint disc_point(const ExtRational& v);

}  // namespace farey::render
