#include "farey_sl2/tilings.hpp"

#include "farey_sl2/errors.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

namespace farey {

TilingWindow::TilingWindow(IndexRange rows, IndexRange cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows.size() * cols.size())) {
    if (rows.size() < 1 || cols.size() < 1) throw RangeError("empty tiling window");
}

TilingWindow::TilingWindow(IndexRange rows, IndexRange cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows.size() < 1 || cols.size() < 1) throw RangeError("empty tiling window");
    if (entries_.size() != static_cast<std::size_t>(rows.size() * cols.size()))
        throw ValidationError("entry count does not match the window shape");
}

std::size_t TilingWindow::offset(long i, long j) const {
    if (!contains(i, j)) throw RangeError("index (" + std::to_string(i) + ", " + std::to_string(j) + ") outside window");
    return static_cast<std::size_t>((i - rows_.first) * cols_.size() + (j - cols_.first));
}

const Int& TilingWindow::at(long i, long j) const { return entries_[offset(i, j)]; }
Int& TilingWindow::at(long i, long j) { return entries_[offset(i, j)]; }

TilingWindow TilingWindow::negated() const {
    TilingWindow out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

TilingWindow TilingWindow::sub(IndexRange rows, IndexRange cols) const {
    TilingWindow out(rows, cols);
    for (long i = rows.first; i <= rows.last; ++i)
        for (long j = cols.first; j <= cols.last; ++j) out.at(i, j) = at(i, j);
    return out;
}

TilingWindow phi(const PathPair& pair, IndexRange i_range, IndexRange j_range, SignMode mode) {
    TilingWindow out(i_range, j_range);
    for (long i = i_range.first; i <= i_range.last; ++i) {
        const LiftVec& g = pair.gamma.lift(i);
        for (long j = j_range.first; j <= j_range.last; ++j) {
            const LiftVec& d = pair.delta.lift(j);
            out.at(i, j) = g.a * d.b - g.b * d.a;
        }
    }
    return mode == SignMode::canonical ? canonical_sign(out) : out;
}

TilingWindow frieze_phi(const FareyPath& gamma, IndexRange i_range, IndexRange j_range) {
    TilingWindow out(i_range, j_range);
    for (long i = i_range.first; i <= i_range.last; ++i) {
        const LiftVec& x = gamma.lift(i);
        for (long j = j_range.first; j <= j_range.last; ++j) {
            const LiftVec& y = gamma.lift(j);
            out.at(i, j) = y.a * x.b - y.b * x.a;
        }
    }
    return out;
}

namespace {

Int minor2(const TilingWindow& w, long i, long j) {
    return w.at(i, j) * w.at(i + 1, j + 1) - w.at(i, j + 1) * w.at(i + 1, j);
}

Int minor3(const TilingWindow& w, long i, long j) {
    auto m = [&](long r, long c) -> const Int& { return w.at(i + r, j + c); };
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

bool is_sl2(const TilingWindow& w) {
    // Negating a window leaves every 2x2 minor unchanged, so a globally negated
    // SL2 window passes this test as well.
    if (w.rows().size() < 2 || w.cols().size() < 2) throw DomainError("SL2 test needs at least a 2x2 window");
    for (long i = w.rows().first; i < w.rows().last; ++i)
        for (long j = w.cols().first; j < w.cols().last; ++j)
            if (minor2(w, i, j) != 1) return false;
    return true;
}

bool is_tame(const TilingWindow& w) {
    if (w.rows().size() < 3 || w.cols().size() < 3) throw DomainError("tameness test needs at least a 3x3 window");
    if (!is_sl2(w)) return false;
    for (long i = w.rows().first; i + 2 <= w.rows().last; ++i)
        for (long j = w.cols().first; j + 2 <= w.cols().last; ++j)
            if (minor3(w, i, j) != 0) return false;
    return true;
}

PathPair psi(const TilingWindow& w) {
    if (!w.contains(0, 0) || !w.contains(1, 1)) throw RangeError("psi needs rows 0, 1 and columns 0, 1 in the window");
    if (!is_sl2(w)) throw DomainError("psi needs an SL2 window");
    if (w.rows().size() >= 3 && w.cols().size() >= 3 && !is_tame(w)) throw DomainError("psi needs a tame window");

    std::vector<LiftVec> gl;
    for (long i = w.rows().first; i <= w.rows().last; ++i) gl.push_back({w.at(i, 0), w.at(i, 1)});

    // (c_j, d_j) = M^T J^-1 (m_{0,j}, m_{1,j}) with M = [[a0, b0], [a1, b1]], J^-1 = [[0, -1], [1, 0]].
    const Int &a0 = w.at(0, 0), &b0 = w.at(0, 1), &a1 = w.at(1, 0), &b1 = w.at(1, 1);
    std::vector<LiftVec> dl;
    for (long j = w.cols().first; j <= w.cols().last; ++j) {
        Int x = -w.at(1, j);
        Int y = w.at(0, j);
        dl.push_back({a0 * x + a1 * y, b0 * x + b1 * y});
    }
    return {FareyPath(PathKind::biinfinite_window, w.rows().first, std::move(gl)),
            FareyPath(PathKind::biinfinite_window, w.cols().first, std::move(dl))};
}

namespace {

IndexedWord coefficients_along(long lo, long hi, long other_lo, long other_hi,
                               const std::function<const Int&(long, long)>& m, const char* what) {
    IndexedWord out;
    out.first = lo + 1;
    for (long i = lo + 1; i < hi; ++i) {
        std::optional<Int> u;
        for (long j = other_lo; j <= other_hi && !u; ++j) {
            const Int& mid = m(i, j);
            if (mid == 0) continue;
            Int sum = m(i - 1, j) + m(i + 1, j);
            if (sum % mid != 0) throw DomainError(std::string("non-integral recurrence coefficient along ") + what);
            u = sum / mid;
        }
        if (!u) throw DomainError(std::string("zero line, recurrence coefficient undetermined along ") + what);
        for (long j = other_lo; j <= other_hi; ++j) {
            if (m(i - 1, j) + m(i + 1, j) != *u * m(i, j))
                throw DomainError(std::string("inconsistent recurrence coefficient along ") + what + " " + std::to_string(i));
        }
        out.values.push_back(*u);
    }
    return out;
}

Int coefficient(const IndexedWord& w, long i, std::optional<long> period) {
    if (w.contains(i)) return w.at(i);
    if (!period || *period <= 0 || w.values.empty())
        throw RangeError("no recurrence coefficient at index " + std::to_string(i));
    long shifted = w.first + pos_mod(i - w.first, *period);
    return w.at(shifted);
}

}  // namespace

RecurrenceCoeffs recurrence_coeffs(const TilingWindow& w) {
    const auto& r = w.rows();
    const auto& c = w.cols();
    RecurrenceCoeffs out;
    out.u = coefficients_along(r.first, r.last, c.first, c.last, [&](long i, long j) -> const Int& { return w.at(i, j); }, "row");
    out.v = coefficients_along(c.first, c.last, r.first, r.last, [&](long j, long i) -> const Int& { return w.at(i, j); }, "column");
    return out;
}

TilingWindow extend(const TilingWindow& w, const RecurrenceCoeffs& coeffs, ExtendDirection dir, long k,
                    std::optional<long> period) {
    if (k < 0) throw DomainError("negative extension");
    IndexRange rows = w.rows();
    IndexRange cols = w.cols();
    bool vertical = dir == ExtendDirection::up || dir == ExtendDirection::down;
    if ((vertical ? rows.size() : cols.size()) < 2) throw DomainError("extension needs two existing lines");
    switch (dir) {
        case ExtendDirection::up: rows.first -= k; break;
        case ExtendDirection::down: rows.last += k; break;
        case ExtendDirection::left: cols.first -= k; break;
        case ExtendDirection::right: cols.last += k; break;
    }
    TilingWindow out(rows, cols);
    for (long i = w.rows().first; i <= w.rows().last; ++i)
        for (long j = w.cols().first; j <= w.cols().last; ++j) out.at(i, j) = w.at(i, j);

    for (long step = 1; step <= k; ++step) {
        switch (dir) {
            case ExtendDirection::down: {
                long i = w.rows().last + step;
                Int u = coefficient(coeffs.u, i - 1, period);
                for (long j = cols.first; j <= cols.last; ++j) out.at(i, j) = u * out.at(i - 1, j) - out.at(i - 2, j);
                break;
            }
            case ExtendDirection::up: {
                long i = w.rows().first - step;
                Int u = coefficient(coeffs.u, i + 1, period);
                for (long j = cols.first; j <= cols.last; ++j) out.at(i, j) = u * out.at(i + 1, j) - out.at(i + 2, j);
                break;
            }
            case ExtendDirection::right: {
                long j = w.cols().last + step;
                Int v = coefficient(coeffs.v, j - 1, period);
                for (long i = rows.first; i <= rows.last; ++i) out.at(i, j) = v * out.at(i, j - 1) - out.at(i, j - 2);
                break;
            }
            case ExtendDirection::left: {
                long j = w.cols().first - step;
                Int v = coefficient(coeffs.v, j + 1, period);
                for (long i = rows.first; i <= rows.last; ++i) out.at(i, j) = v * out.at(i, j + 1) - out.at(i, j + 2);
                break;
            }
        }
    }
    return out;
}

TilingWindow canonical_sign(const TilingWindow& w) {
    for (const Int& e : w.entries()) {
        if (e != 0) return e > 0 ? w : w.negated();
    }
    return w;
}

TilingWindow shift(const TilingWindow& w, long p, long q) {
    return TilingWindow({w.rows().first + p, w.rows().last + p}, {w.cols().first + q, w.cols().last + q}, w.entries());
}

MinReport unique_min(const TilingWindow& w) {
    MinReport out;
    bool first = true;
    for (long i = w.rows().first; i <= w.rows().last; ++i) {
        for (long j = w.cols().first; j <= w.cols().last; ++j) {
            const Int& e = w.at(i, j);
            if (e <= 0) throw DomainError("unique_min needs a positive window");
            if (first || e < out.value) {
                out.value = e;
                out.positions.clear();
                first = false;
            }
            if (e == out.value) out.positions.push_back({i, j});
        }
    }
    return out;
}

OnesReport ones_structure(const TilingWindow& w) {
    OnesReport out;
    for (long i = w.rows().first; i <= w.rows().last; ++i)
        for (long j = w.cols().first; j <= w.cols().last; ++j)
            if (w.at(i, j) == 1) out.positions.push_back({i, j});
    for (std::size_t x = 0; x < out.positions.size() && !out.violation; ++x) {
        for (std::size_t y = x + 1; y < out.positions.size(); ++y) {
            const Position& p = out.positions[x];
            const Position& q = out.positions[y];
            if ((q.i > p.i && q.j > p.j) || (q.i < p.i && q.j < p.j)) {
                out.violation = std::make_pair(p, q);
                break;
            }
        }
    }
    return out;
}

namespace {

bool maps_all(const Mat2Z& g, const FareyPath& from, const FareyPath& to) {
    long lo = std::max(from.first(), to.first());
    long hi = std::min(from.last(), to.last());
    for (long i = lo; i <= hi; ++i)
        if (g * from.lift(i) != to.lift(i)) return false;
    return true;
}

}  // namespace

std::optional<Mat2Z> same_orbit(const PathPair& x, const PathPair& y) {
    long lo = std::max(x.gamma.first(), y.gamma.first());
    long hi = std::min(x.gamma.last(), y.gamma.last());
    if (hi - lo < 1) throw RangeError("paths share fewer than two indices");
    const LiftVec &p0 = x.gamma.lift(lo), &p1 = x.gamma.lift(lo + 1);
    const LiftVec &q0 = y.gamma.lift(lo), &q1 = y.gamma.lift(lo + 1);
    Mat2Z g = Mat2Z(q0.a, q1.a, q0.b, q1.b) * Mat2Z(p0.a, p1.a, p0.b, p1.b).inverse();
    if (!maps_all(g, x.gamma, y.gamma)) return std::nullopt;
    // A global sign change of the tiling negates one path relative to the other.
    if (maps_all(g, x.delta, y.delta) || maps_all(g.negated(), x.delta, y.delta)) return g;
    return std::nullopt;
}

}  // namespace farey
