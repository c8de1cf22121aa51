#include "farey_sl2/paths.hpp"

#include "farey_sl2/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace farey {

const Int& IndexedWord::at(long i) const {
    if (!contains(i)) throw RangeError("no letter at index " + std::to_string(i));
    return values[static_cast<std::size_t>(i - first)];
}

FareyPath::FareyPath(PathKind kind, long first, std::vector<LiftVec> lifts)
    : kind_(kind), first_(first), lifts_(std::move(lifts)) {
    if (lifts_.empty()) throw DomainError("a path needs at least one vertex");
    for (std::size_t k = 0; k + 1 < lifts_.size(); ++k) {
        if (det(lifts_[k], lifts_[k + 1]) != 1) {
            long i = first_ + static_cast<long>(k);
            throw PathError("step " + std::to_string(i) + " -> " + std::to_string(i + 1) + " does not have determinant +1", i);
        }
    }
    if (kind_ == PathKind::closed) {
        if (lifts_.size() < 2 || lifts_.front().vertex() != lifts_.back().vertex())
            throw DomainError("closed path must end where it starts");
    }
}

const LiftVec& FareyPath::lift(long i) const {
    if (i < first() || i > last()) throw RangeError("path has no vertex at index " + std::to_string(i));
    return lifts_[static_cast<std::size_t>(i - first_)];
}

std::vector<ExtRational> FareyPath::vertices() const {
    std::vector<ExtRational> out;
    out.reserve(lifts_.size());
    for (const auto& l : lifts_) out.push_back(l.vertex());
    return out;
}

FareyPath FareyPath::transformed(const Mat2Z& g) const {
    std::vector<LiftVec> out;
    out.reserve(lifts_.size());
    for (const auto& l : lifts_) out.push_back(g * l);
    return FareyPath(kind_, first_, std::move(out));
}

FareyPath FareyPath::negated() const {
    std::vector<LiftVec> out;
    out.reserve(lifts_.size());
    for (const auto& l : lifts_) out.push_back(-l);
    return FareyPath(kind_, first_, std::move(out));
}

FareyPath FareyPath::slice(long from, long to) const {
    if (from < first() || to > last() || from > to) throw RangeError("slice outside the path window");
    std::vector<LiftVec> out(lifts_.begin() + (from - first_), lifts_.begin() + (to - first_ + 1));
    return FareyPath(PathKind::biinfinite_window, from, std::move(out));
}

bool ItinerarySpec::defined_at(long i) const {
    long n = static_cast<long>(core.size());
    if (i >= start && i < start + n) return true;
    if (i >= start + n) return !right_period.empty();
    return !left_period.empty();
}

Int ItinerarySpec::at(long i) const {
    long n = static_cast<long>(core.size());
    if (i >= start && i < start + n) return core[static_cast<std::size_t>(i - start)];
    if (i >= start + n) {
        if (right_period.empty()) throw RangeError("itinerary undefined at index " + std::to_string(i));
        long p = static_cast<long>(right_period.size());
        return right_period[static_cast<std::size_t>(pos_mod(i - start - n, p))];
    }
    if (left_period.empty()) throw RangeError("itinerary undefined at index " + std::to_string(i));
    long q = static_cast<long>(left_period.size());
    return left_period[static_cast<std::size_t>(pos_mod(i - start, q))];
}

FareyPath lift_path(const std::vector<ExtRational>& vertices, long first, PathKind kind) {
    if (vertices.empty()) throw DomainError("empty vertex list");
    std::vector<LiftVec> lifts;
    lifts.reserve(vertices.size());
    lifts.push_back(canonical_lift(vertices[0]));
    for (std::size_t k = 1; k < vertices.size(); ++k) {
        LiftVec next = canonical_lift(vertices[k]);
        Int d = det(lifts.back(), next);
        if (d == -1) {
            next = -next;
        } else if (d != 1) {
            long i = first + static_cast<long>(k) - 1;
            throw PathError(to_string(vertices[k - 1]) + " and " + to_string(vertices[k]) + " are not Farey neighbours", i);
        }
        lifts.push_back(std::move(next));
    }
    return FareyPath(kind, first, std::move(lifts));
}

namespace {

Int itinerary_letter(const ExtRational& prev, const ExtRational& here, const ExtRational& next) {
    ExtRational e = mobius(edge_normalizer(prev, here), next);
    if (!e.is_integer()) throw ValidationError("itinerary letter is not an integer");
    return e.num();
}

}  // namespace

IndexedWord itinerary_of(const FareyPath& path) {
    auto v = path.vertices();
    IndexedWord out;
    out.first = path.first() + 1;
    if (path.kind() == PathKind::closed) {
        std::size_t n = v.size() - 1;
        if (n < 2) throw DomainError("closed path too short for an itinerary");
        for (std::size_t k = 1; k <= n; ++k) {
            const ExtRational& next = (k == n) ? v[1] : v[k + 1];
            out.values.push_back(itinerary_letter(v[k - 1], v[k], next));
        }
        return out;
    }
    for (std::size_t k = 1; k + 1 < v.size(); ++k) out.values.push_back(itinerary_letter(v[k - 1], v[k], v[k + 1]));
    return out;
}

FareyPath path_from_itinerary(const ItinerarySpec& spec, IndexRange window) {
    if (window.size() < 1) throw RangeError("empty window");
    ExtRational s0 = spec.seed ? spec.seed->first : ExtRational(0);
    ExtRational s1 = spec.seed ? spec.seed->second : ExtRational::infinity();
    if (!is_adjacent(s0, s1)) throw DomainError("seed vertices are not Farey neighbours");
    LiftVec l0 = canonical_lift(s0);
    LiftVec l1 = canonical_lift(s1);
    if (det(l0, l1) != 1) l1 = -l1;

    long lo = std::min(window.first, 0L);
    long hi = std::max(window.last, 1L);
    std::vector<LiftVec> lifts(static_cast<std::size_t>(hi - lo + 1));
    auto slot = [&](long i) -> LiftVec& { return lifts[static_cast<std::size_t>(i - lo)]; };
    slot(0) = l0;
    slot(1) = l1;
    for (long i = 1; i < hi; ++i) {
        Int e = spec.at(i);
        slot(i + 1) = {e * slot(i).a - slot(i - 1).a, e * slot(i).b - slot(i - 1).b};
    }
    for (long i = 0; i > lo; --i) {
        Int e = spec.at(i);
        slot(i - 1) = {e * slot(i).a - slot(i + 1).a, e * slot(i).b - slot(i + 1).b};
    }
    FareyPath full(PathKind::biinfinite_window, lo, std::move(lifts));
    return full.slice(window.first, window.last);
}

bool is_clockwise(const std::vector<ExtRational>& v) {
    // Clockwise order from v[0] is strictly increasing exactly when each
    // consecutive pair after v[0] is clockwise relative to it.
    if (v.size() == 2) return v[0] != v[1];
    for (std::size_t k = 1; k + 1 < v.size(); ++k) {
        if (!clockwise3(v[0], v[k], v[k + 1])) return false;
    }
    return true;
}

bool is_clockwise(const FareyPath& path) { return is_clockwise(path.vertices()); }

bool is_simple_closed(const FareyPath& path) {
    auto v = path.vertices();
    if (v.size() < 4 || v.front() != v.back()) return false;
    std::set<ExtRational> seen(v.begin(), v.end() - 1);
    return seen.size() == v.size() - 1;
}

bool is_clockwise_simple_closed(const FareyPath& path) {
    if (!is_simple_closed(path)) return false;
    auto v = path.vertices();
    v.pop_back();
    return is_clockwise(v);
}

Mat2Z period_transform(const Word& word) {
    Mat2Z acc;
    for (const Int& e : word) acc = Mat2Z(0, 1, -1, e) * acc;
    return acc;
}

double QuadraticIrrational::approx() const {
    return (p.convert_to<double>() + q.convert_to<double>() * std::sqrt(d.convert_to<double>())) / r.convert_to<double>();
}

namespace {

// Writes n = f^2 * m with m squarefree.
void split_square(const Int& n, Int& f, Int& m) {
    f = 1;
    m = 1;
    Int c = n;
    for (Int k = 2; k * k * k <= c; ++k) {
        bool odd = false;
        while (c % k == 0) {
            c /= k;
            odd = !odd;
            if (!odd) f *= k;
        }
        if (odd) m *= k;
    }
    // c has no prime factor up to its cube root, so it is 1, p, p^2 or p*q.
    Int root = boost::multiprecision::sqrt(c);
    if (root * root == c) {
        f *= root;
    } else {
        m *= c;
    }
}

Mat2Z lift_frame(const FareyPath& path, long k) {
    const LiftVec& x = path.lift(k);
    const LiftVec& y = path.lift(k + 1);
    return Mat2Z(x.a, y.a, x.b, y.b);
}

bool is_rotation_of(const Word& window, const Word& period) {
    if (window.size() != period.size()) return false;
    std::size_t n = period.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) ok = window[k] == period[(k + shift) % n];
        if (ok) return true;
    }
    return false;
}

}  // namespace

TailLimit classify_tail_limit(const FareyPath& path, const Word& period, TailDirection dir) {
    long n = static_cast<long>(period.size());
    if (n == 0) throw DomainError("empty period word");
    if (path.length() < n + 1) throw RangeError("window too short for one period of the tail");
    long k = dir == TailDirection::forward ? path.last() - n - 1 : path.first();

    Word seen;
    for (long i = k + 1; i <= k + n; ++i) {
        seen.push_back(itinerary_letter(path.vertex(i - 1), path.vertex(i), path.vertex(i + 1)));
    }
    if (!is_rotation_of(seen, period)) throw DomainError("the window's tail does not follow the given period");

    Mat2Z near = lift_frame(path, k);
    Mat2Z far = lift_frame(path, k + n);
    Mat2Z a = dir == TailDirection::forward ? far * near.inverse() : near * far.inverse();

    TailLimit out;
    out.transform = a;
    Int t = a.trace();
    Int at = abs_int(t);
    if (at < 2 || (at == 2 && (a.is_identity() || a.is_minus_identity()))) {
        out.kind = TailLimit::Kind::none;
        return out;
    }
    if (at == 2) {
        out.kind = TailLimit::Kind::rational;
        out.rational = a.r() == 0 ? ExtRational::infinity() : ExtRational::normalize(a.p() - a.s(), 2 * a.r());
        return out;
    }
    // Fixed points of z -> (pz + q)/(rz + s) solve r z^2 + (s - p) z - q = 0 with
    // discriminant t^2 - 4. The attracting one has |rz + s| > 1, i.e. sign(t) on the root.
    Int f, m;
    split_square(t * t - 4, f, m);
    QuadraticIrrational z{a.p() - a.s(), t > 0 ? f : Int(-f), m, 2 * a.r()};
    if (z.r < 0) {
        z.p = -z.p;
        z.q = -z.q;
        z.r = -z.r;
    }
    Int g = gcd_int(gcd_int(z.p, z.q), z.r);
    z.p /= g;
    z.q /= g;
    z.r /= g;
    out.kind = TailLimit::Kind::quadratic_irrational;
    out.irrational = z;
    return out;
}

FareyPath closed_path_from_word(const Word& word) {
    long n = static_cast<long>(word.size());
    if (n < 2) throw DomainError("closing word needs at least two letters");
    ItinerarySpec spec;
    spec.core = word;
    spec.right_period = word;
    FareyPath ext = path_from_itinerary(spec, {0, n + 1});
    if (ext.vertex(n) != ext.vertex(0) || ext.vertex(n + 1) != ext.vertex(1))
        throw DomainError("word does not close up into a closed path");
    return ext.slice(0, n).with_kind(PathKind::closed);
}

bool is_cycle_sequence(const Word& word) {
    if (word.empty()) return false;
    ItinerarySpec spec;
    spec.core = word;
    long n = static_cast<long>(word.size()) + 1;
    FareyPath p = path_from_itinerary(spec, {0, n});
    if (p.vertex(n) != p.vertex(0)) return false;
    return is_clockwise_simple_closed(p.with_kind(PathKind::closed));
}

bool contains_cycle_sequence(const Word& word) {
    // For each start, grow the path and stop once the prefix leaves clockwise order,
    // since no extension can then be a clockwise simple closed path.
    for (std::size_t s = 0; s < word.size(); ++s) {
        LiftVec prev{0, 1};
        LiftVec cur{-1, 0};
        const ExtRational v0(0);
        ExtRational last = ExtRational::infinity();
        for (std::size_t k = s; k < word.size(); ++k) {
            const Int& e = word[k];
            LiftVec next{e * cur.a - prev.a, e * cur.b - prev.b};
            ExtRational nv = next.vertex();
            long steps = static_cast<long>(k - s) + 2;  // index of nv
            if (nv == v0) {
                if (steps >= 3) return true;
                break;
            }
            if (!clockwise3(v0, last, nv)) break;
            prev = cur;
            cur = next;
            last = nv;
        }
    }
    return false;
}

std::string to_string(const QuadraticIrrational& x) {
    return "(" + x.p.str() + (x.q < 0 ? " - " : " + ") + abs_int(x.q).str() + "*sqrt(" + x.d.str() + "))/" + x.r.str();
}

std::string to_string(const TailLimit& x) {
    switch (x.kind) {
        case TailLimit::Kind::rational:
            return to_string(x.rational);
        case TailLimit::Kind::quadratic_irrational:
            return to_string(x.irrational);
        case TailLimit::Kind::none:
            break;
    }
    return "none";
}

}  // namespace farey
