#include "farey_sl2/friezes.hpp"

#include "farey_sl2/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace farey {

FareyPath periodic_extension(const FareyPath& closed, IndexRange window) {
    if (closed.kind() != PathKind::closed) throw DomainError("periodic extension needs a closed path");
    IndexedWord e = itinerary_of(closed);
    long len = closed.length();
    long k = closed.first();
    long lo = std::min(window.first, k);
    long hi = std::max(window.last, k + 1);
    std::vector<LiftVec> lifts(static_cast<std::size_t>(hi - lo + 1));
    auto slot = [&](long i) -> LiftVec& { return lifts[static_cast<std::size_t>(i - lo)]; };
    auto letter = [&](long i) -> const Int& { return e.values[static_cast<std::size_t>(pos_mod(i - e.first, len))]; };
    slot(k) = closed.lift(k);
    slot(k + 1) = closed.lift(k + 1);
    for (long i = k + 1; i < hi; ++i) {
        const Int& x = letter(i);
        slot(i + 1) = {x * slot(i).a - slot(i - 1).a, x * slot(i).b - slot(i - 1).b};
    }
    for (long i = k; i > lo; --i) {
        const Int& x = letter(i);
        slot(i - 1) = {x * slot(i).a - slot(i + 1).a, x * slot(i).b - slot(i + 1).b};
    }
    return FareyPath(PathKind::biinfinite_window, lo, std::move(lifts)).slice(window.first, window.last);
}

FriezeOrderN frieze_from_closed_path(const FareyPath& closed, long n, IndexRange i_range, IndexRange j_range) {
    if (closed.kind() != PathKind::closed) throw DomainError("frieze needs a closed path");
    long len = closed.length();
    if (n <= 0 || n % len != 0) throw DomainError("frieze order must be a multiple of the path length");
    IndexRange span{std::min(i_range.first, j_range.first), std::max(i_range.last, j_range.last)};
    FareyPath ext = periodic_extension(closed, span);
    TilingWindow w = frieze_phi(ext, i_range, j_range);

    Mat2Z t = period_transform(itinerary_of(closed).values);
    if (!t.is_identity() && !t.is_minus_identity()) throw ValidationError("closed path has a non-scalar period transform");
    bool anti = t.is_minus_identity() && ((n / len) % 2 == 1);

    for (long i = i_range.first; i <= i_range.last; ++i) {
        if (w.contains(i, i) && w.at(i, i) != 0) throw ValidationError("frieze diagonal is not zero");
        if (w.contains(i + n, i) && w.at(i + n, i) != 0) throw ValidationError("frieze order diagonal is not zero");
    }
    return {n, closed, std::move(w), anti};
}

IndexedWord quiddity(const TilingWindow& w) {
    std::optional<int> sign;
    for (long i = w.rows().first; i <= w.rows().last; ++i) {
        if (!w.contains(i, i - 1)) continue;
        const Int& e = w.at(i, i - 1);
        int s = e == 1 ? 1 : (e == -1 ? -1 : 0);
        if (s == 0 || (sign && *sign != s)) throw DomainError("second diagonal is not constant 1 or -1");
        sign = s;
    }
    if (!sign) throw RangeError("window does not meet the second diagonal");
    long lo = std::max(w.rows().first - 1, w.cols().first + 1);
    long hi = std::min(w.rows().last - 1, w.cols().last + 1);
    if (hi < lo) throw RangeError("window does not meet the quiddity diagonal");
    IndexedWord out;
    out.first = lo;
    for (long i = lo; i <= hi; ++i) out.values.push_back(*sign * w.at(i + 1, i - 1));
    return out;
}

bool is_positive_frieze(const TilingWindow& w, long order) {
    for (long i = w.rows().first; i <= w.rows().last; ++i)
        for (long j = w.cols().first; j <= w.cols().last; ++j)
            if (i - j > 0 && i - j < order && w.at(i, j) <= 0) return false;
    return true;
}

bool is_positive_frieze(const FriezeOrderN& f) { return is_positive_frieze(f.window, f.order); }

namespace {

bool crosses(std::pair<long, long> x, std::pair<long, long> y) {
    auto [a, b] = std::minmax(x.first, x.second);
    auto [c, d] = std::minmax(y.first, y.second);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::vector<std::array<long, 3>> triangles_from_edges(long n, const std::set<std::pair<long, long>>& edges) {
    auto has = [&](long a, long b) { return edges.count(std::minmax(a, b)) > 0; };
    std::vector<std::array<long, 3>> out;
    for (long a = 0; a < n; ++a)
        for (long b = a + 1; b < n; ++b)
            if (has(a, b))
                for (long c = b + 1; c < n; ++c)
                    if (has(a, c) && has(b, c)) out.push_back({a, b, c});
    return out;
}

}  // namespace

TriangulatedPolygon polygon_from_diagonals(long n, const std::vector<std::pair<long, long>>& diagonals) {
    if (n < 3) throw DomainError("a polygon needs at least three vertices");
    if (static_cast<long>(diagonals.size()) != n - 3)
        throw DomainError("a triangulation of an n-gon has n - 3 diagonals");
    std::set<std::pair<long, long>> edges;
    for (long k = 0; k < n; ++k) edges.insert(std::minmax(k, (k + 1) % n));
    for (const auto& d : diagonals) {
        if (d.first < 0 || d.first >= n || d.second < 0 || d.second >= n) throw DomainError("diagonal endpoint out of range");
        long gap = pos_mod(d.first - d.second, n);
        if (gap <= 1 || gap >= n - 1) throw DomainError("diagonal joins neighbouring vertices");
        if (!edges.insert(std::minmax(d.first, d.second)).second) throw DomainError("repeated diagonal");
    }
    for (std::size_t x = 0; x < diagonals.size(); ++x)
        for (std::size_t y = x + 1; y < diagonals.size(); ++y)
            if (crosses(diagonals[x], diagonals[y])) throw DomainError("diagonals cross");
    TriangulatedPolygon out;
    out.n = n;
    out.triangles = triangles_from_edges(n, edges);
    if (static_cast<long>(out.triangles.size()) != n - 2) throw ValidationError("triangulation does not have n - 2 triangles");
    return out;
}

std::vector<std::pair<long, long>> diagonals_of(const TriangulatedPolygon& poly) {
    std::set<std::pair<long, long>> seen;
    for (const auto& t : poly.triangles)
        for (int k = 0; k < 3; ++k) {
            auto e = std::minmax(t[k], t[(k + 1) % 3]);
            long gap = e.second - e.first;
            if (gap != 1 && gap != poly.n - 1) seen.insert(e);
        }
    return {seen.begin(), seen.end()};
}

Word triangle_counts(const TriangulatedPolygon& poly) {
    Word out(static_cast<std::size_t>(poly.n), Int(0));
    for (const auto& t : poly.triangles)
        for (long v : t) out[static_cast<std::size_t>(v)] += 1;
    return out;
}

FriezeOrderN positive_frieze_from_triangulation(const TriangulatedPolygon& poly) {
    return positive_frieze_from_triangulation(poly, {0, 2 * poly.n}, {0, 2 * poly.n});
}

namespace {

// e_1 .. e_n with e_i = t_{i mod n}.
Word closing_word(const Word& counts) {
    Word w(counts.begin() + 1, counts.end());
    w.push_back(counts.front());
    return w;
}

}  // namespace

FriezeOrderN positive_frieze_from_triangulation(const TriangulatedPolygon& poly, IndexRange i_range, IndexRange j_range) {
    Word counts = triangle_counts(poly);
    FareyPath closed = closed_path_from_word(closing_word(counts));
    FriezeOrderN f = frieze_from_closed_path(closed, poly.n, i_range, j_range);
    if (!is_positive_frieze(f)) throw ValidationError("triangulation produced a non-positive frieze");
    return f;
}

TriangulatedPolygon realize(const TriangulatedPolygon& poly) {
    FareyPath closed = closed_path_from_word(closing_word(triangle_counts(poly)));
    TriangulatedPolygon out = poly;
    out.vertices = closed.vertices();
    out.vertices.pop_back();
    return out;
}

TriangulatedPolygon polygon_from_path(const FareyPath& closed) {
    if (!is_clockwise_simple_closed(closed)) throw DomainError("polygon needs a clockwise simple closed path");
    auto v = closed.vertices();
    v.pop_back();
    long n = static_cast<long>(v.size());
    TriangulatedPolygon out;
    out.n = n;
    out.vertices = v;
    for (long a = 0; a < n; ++a)
        for (long b = a + 1; b < n; ++b)
            if (is_adjacent(v[a], v[b]))
                for (long c = b + 1; c < n; ++c)
                    if (is_adjacent(v[a], v[c]) && is_adjacent(v[b], v[c])) out.triangles.push_back({a, b, c});
    if (static_cast<long>(out.triangles.size()) != n - 2) throw ValidationError("Farey polygon does not have n - 2 triangles");
    return out;
}

namespace {

std::vector<std::optional<Int>> propagate(const TriangulatedPolygon& poly, long u, bool reverse) {
    std::vector<std::optional<Int>> k(static_cast<std::size_t>(poly.n));
    k[static_cast<std::size_t>(u)] = Int(0);
    for (long x = 0; x < poly.n; ++x) {
        if (x == u) continue;
        long gap = pos_mod(x - u, poly.n);
        if (gap == 1 || gap == poly.n - 1) k[static_cast<std::size_t>(x)] = Int(1);
    }
    std::vector<std::array<long, 3>> order = poly.triangles;
    if (reverse) std::reverse(order.begin(), order.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : order) {
            int unknown = 0;
            long slot = -1;
            for (long v : t)
                if (!k[static_cast<std::size_t>(v)]) {
                    ++unknown;
                    slot = v;
                }
            if (unknown != 1) continue;
            Int sum = 0;
            for (long v : t)
                if (v != slot) sum += *k[static_cast<std::size_t>(v)];
            k[static_cast<std::size_t>(slot)] = sum;
            changed = true;
        }
    }
    return k;
}

}  // namespace

std::vector<Int> cc_count(const TriangulatedPolygon& poly, long u) {
    if (u < 0 || u >= poly.n) throw RangeError("start vertex outside the polygon");
    auto fwd = propagate(poly, u, false);
    auto bwd = propagate(poly, u, true);
    std::vector<Int> out;
    for (std::size_t x = 0; x < fwd.size(); ++x) {
        if (!fwd[x] || !bwd[x]) throw DomainError("triangulation does not reach every vertex");
        if (*fwd[x] != *bwd[x]) throw ValidationError("counting depends on propagation order");
        out.push_back(*fwd[x]);
    }
    return out;
}

bool quiddity_realizable(const Word& word) {
    for (const Int& e : word)
        if (e <= 0) throw DomainError("quiddity window must be positive");
    return !contains_cycle_sequence(word);
}

namespace {

std::vector<std::pair<ExtRational, ExtRational>> edges_of(const std::vector<ExtRational>& v) {
    std::vector<std::pair<ExtRational, ExtRational>> out;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) out.emplace_back(v[k], v[k + 1]);
    return out;
}

// All of `others` lies strictly on one side of the chord x-y.
bool one_side(const ExtRational& x, const ExtRational& y, const std::vector<ExtRational>& others) {
    std::optional<bool> side;
    for (const auto& w : others) {
        bool s = clockwise3(x, w, y);
        if (side && *side != s) return false;
        side = s;
    }
    return true;
}

bool separated_by_some_edge(const std::vector<ExtRational>& path, const std::vector<ExtRational>& others) {
    for (const auto& [x, y] : edges_of(path))
        if (one_side(x, y, others)) return true;
    return false;
}

std::vector<ExtRational> ring(const FareyPath& closed) {
    auto v = closed.vertices();
    v.pop_back();
    return v;
}

}  // namespace

AntiperiodicTiling antiperiodic_tiling(const FareyPath& gamma, const FareyPath& delta, IndexRange i_range,
                                       IndexRange j_range) {
    if (!is_clockwise_simple_closed(gamma) || !is_clockwise_simple_closed(delta))
        throw DomainError("both paths must be clockwise simple closed paths");
    auto gv = ring(gamma);
    auto dv = ring(delta);
    std::set<ExtRational> gs(gv.begin(), gv.end());
    for (const auto& w : dv)
        if (gs.count(w)) throw DomainError("paths share the vertex " + to_string(w));
    auto ge = edges_of(gamma.vertices());
    auto de = edges_of(delta.vertices());
    for (const auto& [x, y] : ge)
        for (const auto& [w, z] : de)
            if (clockwise3(x, w, y) != clockwise3(x, z, y)) throw DomainError("paths cross");
    if (!separated_by_some_edge(gamma.vertices(), dv) || !separated_by_some_edge(delta.vertices(), gv))
        throw DomainError("paths are not separable");

    PathPair pair{periodic_extension(gamma, i_range), periodic_extension(delta, j_range)};
    TilingWindow m = phi(pair, i_range, j_range, SignMode::raw);

    long r = gamma.length();
    long s = delta.length();
    for (long i = i_range.first; i <= i_range.last; ++i)
        for (long j = j_range.first; j <= j_range.last; ++j) {
            if (m.contains(i + r, j) && m.at(i + r, j) != -m.at(i, j)) throw ValidationError("row antiperiodicity fails");
            if (m.contains(i, j + s) && m.at(i, j + s) != -m.at(i, j)) throw ValidationError("column antiperiodicity fails");
        }

    auto find_block = [&](const TilingWindow& w) -> std::optional<Position> {
        for (long i = i_range.first; i + r - 1 <= i_range.last; ++i)
            for (long j = j_range.first; j + s - 1 <= j_range.last; ++j) {
                bool ok = true;
                for (long x = i; x < i + r && ok; ++x)
                    for (long y = j; y < j + s && ok; ++y) ok = w.at(x, y) > 0;
                if (ok) return Position{i, j};
            }
        return std::nullopt;
    };
    if (auto p = find_block(m)) return {m, *p};
    TilingWindow neg = m.negated();
    if (auto p = find_block(neg)) return {neg, *p};
    throw RangeError("window holds no complete positive block; enlarge it");
}

bool is_Cn0(const FareyPath& closed) {
    if (closed.kind() != PathKind::closed) throw DomainError("Cn0 test needs a closed path");
    auto v = closed.vertices();
    std::size_t n = v.size() - 1;
    if (n < 2) return false;
    for (std::size_t k = 1; k <= n; ++k) {
        const ExtRational& next = (k == n) ? v[1] : v[k + 1];
        if (!clockwise3(v[k - 1], v[k], next)) return false;
    }
    return true;
}

DualPath dual_path(const FareyPath& gamma) {
    auto v = gamma.vertices();
    if (v.size() < 3) throw DomainError("dual path needs at least three vertices");
    if (!is_clockwise(v)) throw DomainError("dual path needs a clockwise window");
    std::set<ExtRational> on_gamma(v.begin(), v.end());
    std::set<ExtRational> found;
    for (std::size_t k = 1; k + 1 < v.size(); ++k) {
        // g sends v_{k-1}, v_k, v_{k+1} to 0, inf, e; the neighbours of v_k
        // off the arc through v_k are g^-1 of the integers 0 .. e.
        Mat2Z g = edge_normalizer(v[k - 1], v[k]);
        ExtRational e = mobius(g, v[k + 1]);
        Mat2Z back = g.inverse();
        for (Int x = 1; x < e.num(); ++x) {
            ExtRational w = mobius(back, ExtRational::from_int(x));
            if (!on_gamma.count(w)) found.insert(w);
        }
    }
    DualPath out;
    out.vertices.assign(found.begin(), found.end());
    const ExtRational& ref = v.back();
    std::sort(out.vertices.begin(), out.vertices.end(),
              [&](const ExtRational& a, const ExtRational& b) { return clockwise3(ref, a, b); });
    out.connected = true;
    for (std::size_t k = 0; k + 1 < out.vertices.size(); ++k)
        if (!is_adjacent(out.vertices[k], out.vertices[k + 1])) out.connected = false;
    return out;
}

}  // namespace farey
