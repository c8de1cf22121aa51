#include "farey_sl2/render.hpp"

#include "farey_sl2/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace farey::render {

IndexRange standard_form_span(long n, long base) { return {base - n, base + 2 * n}; }

std::vector<Word> standard_form_rows(const FriezeOrderN& f, long base) {
    long n = f.order;
    std::vector<Word> rows;
    for (long k = 0; k <= n; ++k) {
        Word row;
        long j0 = base + 1 - k / 2;
        for (long j = j0; j < j0 + n; ++j) row.push_back(f.window.at(j + k, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string standard_form(const FriezeOrderN& f, long base) {
    auto rows = standard_form_rows(f, base);
    std::size_t width = 1;
    for (const auto& row : rows)
        for (const auto& e : row) width = std::max(width, e.str().size());
    std::size_t cell = width + 1 + (width + 1) % 2;  // even, so half a cell is whole characters
    std::ostringstream out;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::string line(k % 2 ? cell / 2 : 0, ' ');
        for (const auto& e : rows[k]) {
            std::string s = e.str();
            line += std::string(cell - s.size(), ' ') + s;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

std::string tsv(const TilingWindow& w) {
    std::ostringstream out;
    for (long i = w.rows().first; i <= w.rows().last; ++i) {
        for (long j = w.cols().first; j <= w.cols().last; ++j) {
            if (j > w.cols().first) out << '\t';
            out << w.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

DiscPoint disc_point(const ExtRational& v) {
    if (v.is_infinity()) return {0, 1, 1};
    const Int& p = v.num();
    const Int& q = v.den();
    return {2 * p * q, p * p - q * q, p * p + q * q};
}

namespace {

constexpr double kCentre = 250.0;
constexpr double kRadius = 200.0;

struct Screen {
    double x, y;
};

Screen to_screen(const ExtRational& v) {
    DiscPoint d = disc_point(v);
    double s = d.scale.convert_to<double>();
    return {kCentre + kRadius * d.x.convert_to<double>() / s, kCentre - kRadius * d.y.convert_to<double>() / s};
}

std::string num(double x) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(2) << x;
    return o.str();
}

}  // namespace

std::string svg(const std::vector<ExtRational>& vertices, const std::vector<std::pair<ExtRational, ExtRational>>& edges) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n";
    out << "  <circle cx=\"" << num(kCentre) << "\" cy=\"" << num(kCentre) << "\" r=\"" << num(kRadius)
        << "\" fill=\"none\" stroke=\"#888\"/>\n";
    for (const auto& [u, v] : edges) {
        Screen a = to_screen(u);
        Screen b = to_screen(v);
        double ux = (a.x - kCentre) / kRadius, uy = (a.y - kCentre) / kRadius;
        double vx = (b.x - kCentre) / kRadius, vy = (b.y - kCentre) / kRadius;
        double c = ux * vx + uy * vy;
        out << "  <path d=\"M " << num(a.x) << ' ' << num(a.y) << ' ';
        if (c < -1.0 + 1e-9) {
            out << "L " << num(b.x) << ' ' << num(b.y);
        } else {
            // Geodesic: arc of the circle through a and b meeting the boundary at right angles.
            double phi = std::acos(std::clamp(c, -1.0, 1.0));
            double r = kRadius * std::tan(phi / 2.0);
            double cx = kCentre + kRadius * (ux + vx) / (1.0 + c);
            double cy = kCentre + kRadius * (uy + vy) / (1.0 + c);
            double cross = (a.x - cx) * (b.y - cy) - (a.y - cy) * (b.x - cx);
            out << "A " << num(r) << ' ' << num(r) << " 0 0 " << (cross > 0 ? 1 : 0) << ' ' << num(b.x) << ' ' << num(b.y);
        }
        out << "\" fill=\"none\" stroke=\"#1f4e99\"/>\n";
    }
    for (const auto& v : vertices) {
        Screen p = to_screen(v);
        double lx = kCentre + (p.x - kCentre) * 1.1;
        double ly = kCentre + (p.y - kCentre) * 1.1;
        out << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"3\"/>\n";
        out << "  <text x=\"" << num(lx) << "\" y=\"" << num(ly)
            << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << to_string(v) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace farey::render
