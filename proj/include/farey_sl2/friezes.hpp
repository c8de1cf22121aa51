#pragma once

#include "farey_sl2/tilings.hpp"

#include <array>
#include <utility>
#include <vector>

namespace farey {

struct FriezeOrderN {
    long order;
    FareyPath path;        // the closed path v_0 .. v_L, L dividing the order
    TilingWindow window;   // m_{i,j} = a_j b_i - b_j a_i
    bool antiperiodic;     // m_{i+n,j} = -m_{i,j} rather than m_{i,j}
};

// Periodic continuation of a closed path's lifts over the given window.
FareyPath periodic_extension(const FareyPath& closed, IndexRange window);

// The frieze of a closed path, declared at order n (a multiple of the path length).
FriezeOrderN frieze_from_closed_path(const FareyPath& closed, long n, IndexRange i_range, IndexRange j_range);

// q_i = m_{i+1,i-1}, for a window whose second diagonal is all 1 (or all -1, then negated).
IndexedWord quiddity(const TilingWindow& window);

// All entries strictly between the zero diagonals are positive.
bool is_positive_frieze(const FriezeOrderN& frieze);
bool is_positive_frieze(const TilingWindow& window, long order);

// A triangulated polygon on vertices 0 .. n-1 in clockwise order. The rational
// vertex positions are filled in once the polygon has been realised in the Farey graph.
struct TriangulatedPolygon {
    long n = 0;
    std::vector<std::array<long, 3>> triangles;
    std::vector<ExtRational> vertices;
};

TriangulatedPolygon polygon_from_diagonals(long n, const std::vector<std::pair<long, long>>& diagonals);
std::vector<std::pair<long, long>> diagonals_of(const TriangulatedPolygon& poly);

// Number of triangles at each vertex.
Word triangle_counts(const TriangulatedPolygon& poly);

// The frieze whose quiddity is the triangle-count cycle, with vertex i of the polygon at path index i.
// Default window is [0, 2n] in both directions.
FriezeOrderN positive_frieze_from_triangulation(const TriangulatedPolygon& poly);
FriezeOrderN positive_frieze_from_triangulation(const TriangulatedPolygon& poly, IndexRange i_range, IndexRange j_range);

// The same combinatorial polygon with vertices placed on the Farey graph.
TriangulatedPolygon realize(const TriangulatedPolygon& poly);

// The Farey polygon cut out by a clockwise simple closed path.
TriangulatedPolygon polygon_from_path(const FareyPath& closed);

// Conway-Coxeter counting from vertex u: 0 at u, 1 at its neighbours, then b + d
// across each triangle. Needs a triangulated polygon with vertex positions only
// for reporting; the counting itself is combinatorial.
std::vector<Int> cc_count(const TriangulatedPolygon& poly, long u);

// A positive word is the quiddity window of some positive frieze iff it contains no cycle sequence.
bool quiddity_realizable(const Word& word);

struct AntiperiodicTiling {
    TilingWindow window;
    Position block;  // top-left corner of an all-positive r x s block
};

// Tiling of two disjoint clockwise simple closed paths of lengths r and s.
AntiperiodicTiling antiperiodic_tiling(const FareyPath& gamma, const FareyPath& delta, IndexRange i_range,
                                       IndexRange j_range);

// Each cyclically consecutive triple of the closed path is clockwise.
bool is_Cn0(const FareyPath& closed);

struct DualPath {
    std::vector<ExtRational> vertices;  // clockwise order
    bool connected = false;             // consecutive vertices are Farey neighbours
};

// Neighbours of interior window vertices lying outside the arc through their two
// path neighbours, minus the window's own vertices. Both ends are left open.
DualPath dual_path(const FareyPath& gamma);

}  // namespace farey
