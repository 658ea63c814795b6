#include "hhs/envelope.hpp"

#include <algorithm>
#include <numeric>

#include "hhs/errors.hpp"

namespace hhs {

namespace detail {

Rational lineIntersectionX(const Line& a, const Line& b) {
    return (a.intercept - b.intercept) / (b.slope - a.slope);
}

EnvelopeShape buildUpperEnvelopeShape(std::span<const Line> lines, std::span<const int> order) {
    EnvelopeShape shape;
    shape.lineIds.reserve(order.size());
    for (int id : order) {
        const Line& next = lines[id];
        while (!shape.lineIds.empty()) {
            const Line& top = lines[shape.lineIds.back()];
            Rational xNew = lineIntersectionX(top, next);
            // Zero-width spans are dropped: such a line only touches the
            // envelope at one point.
            if (shape.lineIds.size() >= 2 && cmp(xNew, shape.breakpoints.back()) <= 0) {
                shape.lineIds.pop_back();
                shape.breakpoints.pop_back();
                continue;
            }
            shape.breakpoints.push_back(std::move(xNew));
            break;
        }
        shape.lineIds.push_back(id);
    }
    return shape;
}

}  // namespace detail

int UpperEnvelope::edgeIndexAt(const Rational& x) const {
    // First breakpoint >= x; its left edge contains x.
    auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), x,
                               [](const Rational& bp, const Rational& v) { return cmp(bp, v) < 0; });
    return static_cast<int>(it - breakpoints.begin());
}

std::optional<int> UpperEnvelope::edgeWithSlope(const Rational& slope) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), slope,
                               [](const EnvelopeEdge& e, const Rational& s) { return cmp(e.line.slope, s) < 0; });
    if (it != edges.end() && it->line.slope == slope) {
        return static_cast<int>(it - edges.begin());
    }
    return std::nullopt;
}

std::pair<std::optional<Rational>, std::optional<Rational>> UpperEnvelope::spanOf(int k) const {
    std::optional<Rational> lo, hi;
    if (k > 0) lo = breakpoints[k - 1];
    if (k + 1 < edgeCount()) hi = breakpoints[k];
    return {lo, hi};
}

UpperEnvelope upperEnvelopeOfLines(std::span<const Line> lines) {
    if (lines.empty()) {
        throw InternalInvariantError("upper envelope of an empty line set");
    }
    std::vector<int> order(lines.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int cs = cmp(lines[a].slope, lines[b].slope);
        if (cs != 0) return cs < 0;
        int ci = cmp(lines[a].intercept, lines[b].intercept);
        if (ci != 0) return ci > 0;  // higher parallel line first
        return a < b;                // duplicates keep the lowest id
    });
    // Per slope only the first (highest) survivor can appear on the envelope.
    std::vector<int> filtered;
    filtered.reserve(order.size());
    for (int id : order) {
        if (!filtered.empty() && lines[filtered.back()].slope == lines[id].slope) continue;
        filtered.push_back(id);
    }
    detail::EnvelopeShape shape = detail::buildUpperEnvelopeShape(lines, filtered);
    UpperEnvelope env;
    env.edges.reserve(shape.lineIds.size());
    for (int id : shape.lineIds) {
        env.edges.push_back(EnvelopeEdge{id, lines[id]});
    }
    env.breakpoints = std::move(shape.breakpoints);
    return env;
}

}  // namespace hhs
