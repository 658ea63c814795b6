#include "hhs/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "hhs/errors.hpp"

namespace hhs {

bool lexLess(const Point& a, const Point& b) {
    int cx = cmp(a.x, b.x);
    if (cx != 0) return cx < 0;
    return cmp(a.y, b.y) < 0;
}

Direction::Direction(BigInt dxIn, BigInt dyIn) : dx(std::move(dxIn)), dy(std::move(dyIn)) {
    if (dx == 0 && dy == 0) {
        throw std::invalid_argument("zero direction");
    }
    BigInt g = gcd(abs(dx), abs(dy));
    dx /= g;
    dy /= g;
}

Direction Direction::fromRationals(const Rational& dxq, const Rational& dyq) {
    // Clear denominators; both are positive, so signs are preserved.
    return Direction(dxq.get_num() * dyq.get_den(), dyq.get_num() * dxq.get_den());
}

int orient(const Point& a, const Point& b, const Point& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(cross);
}

int crossSign(const Direction& u, const Direction& v) {
    BigInt cross = u.dx * v.dy - u.dy * v.dx;
    return sgn(cross);
}

std::strong_ordering compareCcwFromWest(const Direction& u, const Direction& v) {
    if (u.dy == 0 || v.dy == 0) throw HorizontalDirectionError();
    bool uLower = u.dy < 0;
    bool vLower = v.dy < 0;
    // The cut sits at west, so the lower semicircle comes first.
    if (uLower != vLower) {
        return uLower ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    // Within one open semicircle the angular gap is < pi, so the cross sign decides.
    int c = crossSign(u, v);
    if (c > 0) return std::strong_ordering::less;
    if (c < 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::vector<Point> convexHull(std::span<const Point> points) {
    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lexLess);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;

    std::vector<Point> hull;
    hull.reserve(2 * n);
    // Lower chain, then upper chain; collinear vertices are dropped.
    for (int pass = 0; pass < 2; ++pass) {
        const std::size_t base = hull.size();
        for (int k = 0; k < n; ++k) {
            const Point& p = pass == 0 ? pts[k] : pts[n - 1 - k];
            while (hull.size() >= base + 2 &&
                   orient(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0) {
                hull.pop_back();
            }
            hull.push_back(p);
        }
        hull.pop_back();  // chain endpoint reappears as the next chain's start
    }
    return hull;
}

namespace {

Rational dotWith(const Point& p, const Direction& d) { return p.x * d.dx + p.y * d.dy; }

// Index of the lexicographic maximum. The hull starts at the lexicographic
// minimum, so the cyclic lex sequence strictly increases then strictly
// decreases.
int lexMaxIndex(std::span<const Point> hull) {
    int lo = 0, hi = static_cast<int>(hull.size()) - 1;
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (lexLess(hull[mid], hull[mid + 1])) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace

int extremePointIndex(std::span<const Point> hull, const Direction& d) {
    const int h = static_cast<int>(hull.size());
    if (h == 0) throw BadIndexError("extremePoint on empty hull");
    if (h == 1) return 0;
    if (h == 2) return cmp(dotWith(hull[0], d), dotWith(hull[1], d)) >= 0 ? 0 : 1;

    const int split = lexMaxIndex(hull);
    if (d.dy == 0) {
        return d.dx > 0 ? split : 0;
    }
    // The maximizer lies on the upper chain for dy > 0 and on the lower chain
    // for dy < 0; along either chain the dot sequence is concave, so a
    // discrete ternary search applies. Indices past h-1 wrap around to 0.
    int lo, hi;
    if (d.dy > 0) {
        lo = split;
        hi = h;  // hull[h % h] == hull[0]
    } else {
        lo = 0;
        hi = split;
    }
    auto f = [&](int i) { return dotWith(hull[i % h], d); };
    while (hi - lo > 2) {
        int m1 = lo + (hi - lo) / 3;
        int m2 = hi - (hi - lo) / 3;
        int c = cmp(f(m1), f(m2));
        if (c < 0) {
            lo = m1 + 1;
        } else if (c > 0) {
            hi = m2 - 1;
        } else {
            lo = m1;
            hi = m2;
        }
    }
    int best = lo;
    for (int i = lo + 1; i <= hi; ++i) {
        if (cmp(f(i), f(best)) > 0) best = i;
    }
    return best % h;
}

}  // namespace hhs
