#pragma once

// Exact geometric predicates.
//
// Fast path: evaluate in double with a Shewchuk-style semi-static error
// bound. If the magnitude clears the bound the sign is certain; otherwise
// fall back to exact rational arithmetic (doubles are dyadic rationals, so
// the conversion is lossless and the fallback sign is exact).

#include "fpplab/vec2.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

namespace fpplab {

using BigRat = boost::multiprecision::cpp_rational;

namespace detail {
constexpr double kEps = 1.1102230246251565e-16; // 2^-53
constexpr double kOrientErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIncircleErrBound = (10.0 + 96.0 * kEps) * kEps;
constexpr double kCloserErrBound = 16.0 * kEps;

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

template <typename T>
inline int big_sign(const T& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}
} // namespace detail

/// Sign of the area of triangle (a,b,c): +1 counterclockwise, -1 clockwise,
/// 0 exactly collinear.
inline int orient2d(Vec2 a, Vec2 b, Vec2 c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;
    const double detsum = std::fabs(detleft) + std::fabs(detright);
    if (std::fabs(det) > detail::kOrientErrBound * detsum) {
        return detail::sign_of(det);
    }
    const BigRat ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    const BigRat exact = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
    return detail::big_sign(exact);
}

/// Sign of |d - circumcenter(a,b,c)| vs the circumradius: +1 strictly inside
/// the circumcircle, -1 strictly outside, 0 exactly on it. Requires (a,b,c)
/// counterclockwise for the stated sign convention.
inline int incircle(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);
    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    if (std::fabs(det) > detail::kIncircleErrBound * permanent) {
        return detail::sign_of(det);
    }
    const BigRat radx = BigRat(a.x) - BigRat(d.x), rady = BigRat(a.y) - BigRat(d.y);
    const BigRat rbdx = BigRat(b.x) - BigRat(d.x), rbdy = BigRat(b.y) - BigRat(d.y);
    const BigRat rcdx = BigRat(c.x) - BigRat(d.x), rcdy = BigRat(c.y) - BigRat(d.y);
    const BigRat exact = (radx * radx + rady * rady) * (rbdx * rcdy - rcdx * rbdy) +
                         (rbdx * rbdx + rbdy * rbdy) * (rcdx * rady - radx * rcdy) +
                         (rcdx * rcdx + rcdy * rcdy) * (radx * rbdy - rbdx * rady);
    return detail::big_sign(exact);
}

/// incircle with cocircular ties resolved by symbolic perturbation of the
/// paraboloid lift: point i is lifted by an extra infinitesimal that
/// decreases rapidly with index, so ties resolve by the smallest index with
/// a nonzero orientation cofactor. Never returns 0 for four distinct points
/// with (a,b,c) a nondegenerate triangle.
inline int incircle_perturbed(Vec2 a, int ia, Vec2 b, int ib, Vec2 c, int ic,
                              Vec2 d, int id) {
    const int s = incircle(a, b, c, d);
    if (s != 0) return s;
    // 4x4 lifted determinant is zero; the perturbed sign is the cofactor of
    // the smallest-index vertex. Row order (a,b,c,d), lift column cofactors:
    //   a: +orient(b,c,d)  b: -orient(a,c,d)  c: +orient(a,b,d)  d: -orient(a,b,c)
    struct Term {
        int index;
        int sign;
    };
    Term terms[4] = {
        {ia, orient2d(b, c, d)},
        {ib, -orient2d(a, c, d)},
        {ic, orient2d(a, b, d)},
        {id, -orient2d(a, b, c)},
    };
    int best = -1;
    for (int i = 0; i < 4; ++i) {
        if (terms[i].sign == 0) continue;
        if (best < 0 || terms[i].index < terms[best].index) best = i;
    }
    return best < 0 ? 0 : terms[best].sign;
}

/// Sign of |a-x|^2 - |b-x|^2: -1 when a is strictly closer to x, +1 when b
/// is, 0 on the exact bisector.
inline int closer(Vec2 x, Vec2 a, Vec2 b) {
    const double axd = a.x - x.x, ayd = a.y - x.y;
    const double bxd = b.x - x.x, byd = b.y - x.y;
    const double t0 = axd * axd, t1 = ayd * ayd, t2 = bxd * bxd, t3 = byd * byd;
    const double det = (t0 + t1) - (t2 + t3);
    const double permanent = t0 + t1 + t2 + t3;
    if (std::fabs(det) > detail::kCloserErrBound * permanent) {
        return detail::sign_of(det);
    }
    const BigRat rax = BigRat(a.x) - BigRat(x.x), ray = BigRat(a.y) - BigRat(x.y);
    const BigRat rbx = BigRat(b.x) - BigRat(x.x), rby = BigRat(b.y) - BigRat(x.y);
    const BigRat exact = rax * rax + ray * ray - rbx * rbx - rby * rby;
    return detail::big_sign(exact);
}

/// Sign of dot(p-a, b-a). Used for exact on-segment tests of collinear
/// triples.
inline int side_along(Vec2 a, Vec2 b, Vec2 p) {
    const double t0 = (p.x - a.x) * (b.x - a.x);
    const double t1 = (p.y - a.y) * (b.y - a.y);
    const double det = t0 + t1;
    const double permanent = std::fabs(t0) + std::fabs(t1);
    if (std::fabs(det) > detail::kCloserErrBound * permanent) {
        return detail::sign_of(det);
    }
    const BigRat exact = (BigRat(p.x) - BigRat(a.x)) * (BigRat(b.x) - BigRat(a.x)) +
                         (BigRat(p.y) - BigRat(a.y)) * (BigRat(b.y) - BigRat(a.y));
    return detail::big_sign(exact);
}

/// True when p lies strictly inside the open segment (a,b). Caller must
/// already know a, b, p are collinear.
inline bool strictly_inside_segment(Vec2 a, Vec2 b, Vec2 p) {
    return side_along(a, b, p) > 0 && side_along(b, a, p) > 0;
}

} // namespace fpplab
