#include "farey_sl2/farey_core.hpp"

#include "farey_sl2/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace farey {

Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int parse_int(std::string_view text) {
    std::size_t pos = 0;
    if (!text.empty() && text[0] == '-') pos = 1;
    if (pos == text.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
    return Int(std::string(text));
}

ExtRational ExtRational::normalize(Int num, Int den) {
    if (num == 0 && den == 0) throw InvalidVertex("0/0 is not a vertex");
    if (den == 0) return infinity();
    Int g = gcd_int(num, den);
    num /= g;
    den /= g;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return ExtRational(std::move(num), std::move(den), raw_tag{});
}

int compare_linear(const ExtRational& x, const ExtRational& y) {
    if (x.is_infinity() || y.is_infinity()) return int(x.is_infinity()) - int(y.is_infinity());
    Int lhs = x.num() * y.den();
    Int rhs = y.num() * x.den();
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

Mat2Z::Mat2Z(Int p, Int q, Int r, Int s) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
    if (p_ * s_ - q_ * r_ != 1) throw DomainError("matrix determinant is not 1");
}

Mat2Z Mat2Z::canonical() const {
    for (const Int* e : {&p_, &q_, &r_, &s_}) {
        if (*e != 0) return *e > 0 ? *this : negated();
    }
    return *this;
}

Mat2Z operator*(const Mat2Z& x, const Mat2Z& y) {
    return Mat2Z(x.p_ * y.p_ + x.q_ * y.r_, x.p_ * y.q_ + x.q_ * y.s_, x.r_ * y.p_ + x.s_ * y.r_,
                 x.r_ * y.q_ + x.s_ * y.s_);
}

Int delta(const ExtRational& x, const ExtRational& y) { return abs_int(x.num() * y.den() - x.den() * y.num()); }

ExtRational mediant(const ExtRational& x, const ExtRational& y) {
    if (!is_adjacent(x, y)) throw DomainError("mediant needs Farey neighbours: " + to_string(x) + ", " + to_string(y));
    return ExtRational::normalize(x.num() + y.num(), x.den() + y.den());
}

ExtRational mobius(const Mat2Z& g, const ExtRational& x) {
    LiftVec w = g * canonical_lift(x);
    return ExtRational::normalize(w.a, w.b);
}

Mat2Z edge_normalizer(const ExtRational& u, const ExtRational& v) {
    if (!is_adjacent(u, v)) throw DomainError("edge_normalizer needs Farey neighbours: " + to_string(u) + ", " + to_string(v));
    // M has columns (lift of v, lift of u) so M(inf) = v, M(0) = u; g = M^-1.
    LiftVec lu = canonical_lift(u);
    LiftVec lv = canonical_lift(v);
    if (det(lv, lu) != 1) lv = -lv;
    Mat2Z m(lv.a, lu.a, lv.b, lu.b);
    return m.inverse().canonical();
}

bool clockwise3(const ExtRational& x, const ExtRational& y, const ExtRational& z) {
    int xy = compare_linear(x, y);
    int yz = compare_linear(y, z);
    int zx = compare_linear(z, x);
    if (xy == 0 || yz == 0 || zx == 0) return false;
    return (xy > 0 && yz > 0) || (yz > 0 && zx > 0) || (zx > 0 && xy > 0);
}

namespace {

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    g = r0;
    s = s0;
    t = t0;
}

}  // namespace

std::pair<ExtRational, ExtRational> farey_parents(const ExtRational& v) {
    if (v.is_infinity() || v.den() < 2) throw DomainError("farey_parents needs a denominator of at least 2: " + to_string(v));
    const Int& a = v.num();
    const Int& b = v.den();
    // Solve a*d - b*c = 1 with 0 < d < b; then c/d < a/b.
    Int g, s, t;
    ext_gcd(a, b, g, s, t);  // s*a + t*b = 1
    Int d = s % b;
    if (d < 0) d += b;
    Int c = (a * d - 1) / b;
    return {ExtRational::normalize(c, d), ExtRational::normalize(a - c, b - d)};
}

ExtRational parse_vertex(std::string_view text) {
    if (text == "inf") return ExtRational::infinity();
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExtRational::from_int(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0 && num != 0) return ExtRational::infinity();
    return ExtRational::normalize(num, den);
}

std::string to_string(const ExtRational& x) {
    if (x.is_infinity()) return "inf";
    if (x.is_integer()) return x.num().str();
    return x.num().str() + "/" + x.den().str();
}

}  // namespace farey
