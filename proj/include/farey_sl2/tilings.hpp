#pragma once

#include "farey_sl2/paths.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace farey {

struct Position {
    long i = 0;
    long j = 0;
    friend bool operator==(const Position& x, const Position& y) { return x.i == y.i && x.j == y.j; }
    friend bool operator<(const Position& x, const Position& y) { return x.i != y.i ? x.i < y.i : x.j < y.j; }
};

// A finite rectangular window [i0, i1] x [j0, j1] of an integer tiling.
class TilingWindow {
public:
    TilingWindow(IndexRange rows, IndexRange cols);
    TilingWindow(IndexRange rows, IndexRange cols, std::vector<Int> entries);

    const IndexRange& rows() const { return rows_; }
    const IndexRange& cols() const { return cols_; }
    bool contains(long i, long j) const { return rows_.contains(i) && cols_.contains(j); }

    const Int& at(long i, long j) const;
    Int& at(long i, long j);
    const std::vector<Int>& entries() const { return entries_; }

    TilingWindow negated() const;
    TilingWindow sub(IndexRange rows, IndexRange cols) const;

    friend bool operator==(const TilingWindow& x, const TilingWindow& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.entries_ == y.entries_;
    }
    friend bool operator!=(const TilingWindow& x, const TilingWindow& y) { return !(x == y); }

private:
    std::size_t offset(long i, long j) const;
    IndexRange rows_;
    IndexRange cols_;
    std::vector<Int> entries_;
};

struct PathPair {
    FareyPath gamma;
    FareyPath delta;
};

enum class SignMode { canonical, raw };

// m_{i,j} = a_i d_j - b_i c_j.
TilingWindow phi(const PathPair& pair, IndexRange i_range, IndexRange j_range, SignMode mode = SignMode::canonical);

// m_{i,j} = a_j b_i - b_j a_i, the frieze of a single path.
TilingWindow frieze_phi(const FareyPath& gamma, IndexRange i_range, IndexRange j_range);

// Reconstructs lifts from rows 0, 1 and columns 0, 1 of a tame SL2 window.
PathPair psi(const TilingWindow& window);

bool is_sl2(const TilingWindow& window);
bool is_tame(const TilingWindow& window);

// u_i for interior rows and v_j for interior columns with
// m_{i-1,j} + m_{i+1,j} = u_i m_{i,j} and m_{i,j-1} + m_{i,j+1} = v_j m_{i,j}.
struct RecurrenceCoeffs {
    IndexedWord u;
    IndexedWord v;
};
RecurrenceCoeffs recurrence_coeffs(const TilingWindow& window);

enum class ExtendDirection { up, down, left, right };

// Grows the window by k rows or columns. Coefficients outside the known range are
// read periodically when a period is given, otherwise RangeError.
TilingWindow extend(const TilingWindow& window, const RecurrenceCoeffs& coeffs, ExtendDirection dir, long k,
                    std::optional<long> period = std::nullopt);

// Global sign chosen so the first nonzero entry (row-major) is positive.
TilingWindow canonical_sign(const TilingWindow& window);

// m'_{i,j} = m_{i-p, j-q}
TilingWindow shift(const TilingWindow& window, long p, long q);

struct MinReport {
    Int value;
    std::vector<Position> positions;
};
// Requires all entries positive (DomainError otherwise).
MinReport unique_min(const TilingWindow& window);

struct OnesReport {
    std::vector<Position> positions;
    std::optional<std::pair<Position, Position>> violation;  // a pair with one strictly south-east of the other
};
OnesReport ones_structure(const TilingWindow& window);

// The A in SL2(Z) with A * (lifts of a) = lifts of b on every shared index, if any.
// A and -A act identically, so the match may be up to that sign.
std::optional<Mat2Z> same_orbit(const PathPair& a, const PathPair& b);

}  // namespace farey
