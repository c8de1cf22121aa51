#pragma once

#include "farey_sl2/bigint.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace farey {

// A point of the extended rationals in lowest terms with den >= 0.
// Infinity is stored as 1/0.
class ExtRational {
public:
    ExtRational() : num_(0), den_(1) {}
    ExtRational(long long n) : num_(n), den_(1) {}  // NOLINT(implicit)

    static ExtRational normalize(Int num, Int den);
    static ExtRational from_int(Int n) { return ExtRational(std::move(n), Int(1), raw_tag{}); }
    static ExtRational infinity() { return ExtRational(Int(1), Int(0), raw_tag{}); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_infinity() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }

private:
    struct raw_tag {};
    ExtRational(Int n, Int d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
    Int num_;
    Int den_;
};

// Linear order on the extended line with infinity above every finite value.
// This is not the circular order; use clockwise3 for that.
int compare_linear(const ExtRational& x, const ExtRational& y);
inline bool operator<(const ExtRational& a, const ExtRational& b) { return compare_linear(a, b) < 0; }

struct LiftVec {
    Int a;
    Int b;
    ExtRational vertex() const { return ExtRational::normalize(a, b); }
    LiftVec operator-() const { return {-a, -b}; }
    friend bool operator==(const LiftVec& x, const LiftVec& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const LiftVec& x, const LiftVec& y) { return !(x == y); }
};

// det(x, y) = x.a * y.b - x.b * y.a
inline Int det(const LiftVec& x, const LiftVec& y) { return x.a * y.b - x.b * y.a; }

// The lift with den > 0, or (1, 0) for infinity.
inline LiftVec canonical_lift(const ExtRational& x) { return {x.num(), x.den()}; }

// [[p, q], [r, s]] with ps - qr = 1.
class Mat2Z {
public:
    Mat2Z() : p_(1), q_(0), r_(0), s_(1) {}
    Mat2Z(Int p, Int q, Int r, Int s);  // throws DomainError unless det = 1

    static Mat2Z identity() { return {}; }
    static Mat2Z J() { return Mat2Z(0, 1, -1, 0); }  // z -> -1/z

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    const Int& s() const { return s_; }

    Int trace() const { return p_ + s_; }
    Mat2Z inverse() const { return Mat2Z(s_, -q_, -r_, p_); }
    Mat2Z negated() const { return Mat2Z(-p_, -q_, -r_, -s_); }
    Mat2Z transpose() const { return Mat2Z(p_, r_, q_, s_); }
    // Representative of {A, -A} whose first nonzero entry is positive.
    Mat2Z canonical() const;
    bool is_identity() const { return p_ == 1 && q_ == 0 && r_ == 0 && s_ == 1; }
    bool is_minus_identity() const { return p_ == -1 && q_ == 0 && r_ == 0 && s_ == -1; }

    LiftVec operator*(const LiftVec& v) const { return {p_ * v.a + q_ * v.b, r_ * v.a + s_ * v.b}; }
    friend Mat2Z operator*(const Mat2Z& x, const Mat2Z& y);
    friend bool operator==(const Mat2Z& x, const Mat2Z& y) {
        return x.p_ == y.p_ && x.q_ == y.q_ && x.r_ == y.r_ && x.s_ == y.s_;
    }
    friend bool operator!=(const Mat2Z& x, const Mat2Z& y) { return !(x == y); }

private:
    Int p_, q_, r_, s_;
};

// |ad - bc| for x = a/b, y = c/d in lowest terms.
Int delta(const ExtRational& x, const ExtRational& y);
inline bool is_adjacent(const ExtRational& x, const ExtRational& y) { return delta(x, y) == 1; }

// (a + c)/(b + d) using the canonical lifts. Throws DomainError unless adjacent.
ExtRational mediant(const ExtRational& x, const ExtRational& y);

ExtRational mobius(const Mat2Z& g, const ExtRational& x);

// The g in SL2(Z), canonical up to sign, with g(u) = 0 and g(v) = infinity.
Mat2Z edge_normalizer(const ExtRational& u, const ExtRational& v);

// True iff x, y, z are pairwise distinct and occur clockwise on the circle,
// i.e. cyclically decreasing with infinity on top.
bool clockwise3(const ExtRational& x, const ExtRational& y, const ExtRational& z);

// The two neighbours of a/b (b >= 2) with smaller denominator, ordered x < y.
std::pair<ExtRational, ExtRational> farey_parents(const ExtRational& v);

// "a/b", "inf", or an integer. Throws ParseError / InvalidVertex.
ExtRational parse_vertex(std::string_view text);
std::string to_string(const ExtRational& x);

}  // namespace farey
