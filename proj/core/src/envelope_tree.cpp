#include "hhs/envelope_tree.hpp"

#include <algorithm>
#include <numeric>

#include "hhs/errors.hpp"

namespace hhs {

namespace {

struct ScratchQ {
    mpq_t v;
    ScratchQ() { mpq_init(v); }
    ~ScratchQ() { mpq_clear(v); }
    ScratchQ(const ScratchQ&) = delete;
    ScratchQ& operator=(const ScratchQ&) = delete;
};

// line(x) <= qy without allocating temporaries per call.
inline bool lineValueLeq(const Line& l, const Rational& x, const Rational& qy) {
    static thread_local ScratchQ tls;
    mpq_mul(tls.v, l.slope.get_mpq_t(), x.get_mpq_t());
    mpq_add(tls.v, tls.v, l.intercept.get_mpq_t());
    return mpq_cmp(tls.v, qy.get_mpq_t()) <= 0;
}

}  // namespace

EnvelopeTree::EnvelopeTree(std::vector<Line> lines, int posLo, EnvelopeSense sense, int leafSize)
    : lines_(std::move(lines)), posLo_(posLo), leafSize_(std::max(1, leafSize)), sense_(sense) {
    if (lines_.empty()) throw InternalInvariantError("envelope tree over an empty group");
    for (std::size_t k = 0; k + 1 < lines_.size(); ++k) {
        if (cmp(lines_[k].slope, lines_[k + 1].slope) >= 0) {
            throw InternalInvariantError("envelope tree lines must have strictly increasing slopes");
        }
    }
    if (sense_ == EnvelopeSense::Lower) {
        for (Line& l : lines_) {
            l.slope = -l.slope;
            l.intercept = -l.intercept;
        }
    }
    nodes_.reserve(2 * (lines_.size() / leafSize_ + 2));
    root_ = build(0, static_cast<int>(lines_.size()));
}

int EnvelopeTree::build(int lo, int hi) {
    const int idx = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{lo, hi});
    if (hi - lo <= leafSize_) return idx;
    const int mid = (lo + hi) / 2;
    int l = build(lo, mid);
    int r = build(mid, hi);
    nodes_[idx].left = l;
    nodes_[idx].right = r;
    // Member slopes are strictly monotone in index order, so the stack
    // construction runs over them in ascending transformed-slope order.
    std::vector<int> order(hi - lo);
    if (sense_ == EnvelopeSense::Upper) {
        std::iota(order.begin(), order.end(), lo);
    } else {
        for (int k = 0; k < hi - lo; ++k) order[k] = hi - 1 - k;
    }
    detail::EnvelopeShape shape = detail::buildUpperEnvelopeShape(lines_, order);
    nodes_[idx].edgeLine = std::move(shape.lineIds);
    nodes_[idx].edgeFrom = std::move(shape.breakpoints);
    return idx;
}

bool EnvelopeTree::memberHit(int k, const Rational& x, const Rational& qy) const {
    return lineValueLeq(lines_[k], x, qy);
}

bool EnvelopeTree::nodeAllHit(const Node& node, const Rational& x, const Rational& qy) const {
    if (node.left < 0) {
        for (int k = node.lo; k < node.hi; ++k) {
            if (!memberHit(k, x, qy)) return false;
        }
        return true;
    }
    auto it = std::lower_bound(node.edgeFrom.begin(), node.edgeFrom.end(), x,
                               [](const Rational& bp, const Rational& v) { return cmp(bp, v) < 0; });
    const int edge = static_cast<int>(it - node.edgeFrom.begin());
    return lineValueLeq(lines_[node.edgeLine[edge]], x, qy);
}

int EnvelopeTree::firstViolation(int nodeIdx, int lo, int hi, const Rational& x, const Rational& qy) const {
    const Node& nd = nodes_[nodeIdx];
    if (hi <= nd.lo || nd.hi <= lo) return -1;
    if (lo <= nd.lo && nd.hi <= hi && nodeAllHit(nd, x, qy)) return -1;
    if (nd.left < 0) {
        const int a = std::max(lo, nd.lo), b = std::min(hi, nd.hi);
        for (int k = a; k < b; ++k) {
            if (!memberHit(k, x, qy)) return k;
        }
        return -1;
    }
    int l = firstViolation(nd.left, lo, hi, x, qy);
    if (l >= 0) return l;
    return firstViolation(nd.right, lo, hi, x, qy);
}

int EnvelopeTree::lastViolation(int nodeIdx, int lo, int hi, const Rational& x, const Rational& qy) const {
    const Node& nd = nodes_[nodeIdx];
    if (hi <= nd.lo || nd.hi <= lo) return -1;
    if (lo <= nd.lo && nd.hi <= hi && nodeAllHit(nd, x, qy)) return -1;
    if (nd.left < 0) {
        const int a = std::max(lo, nd.lo), b = std::min(hi, nd.hi);
        for (int k = b - 1; k >= a; --k) {
            if (!memberHit(k, x, qy)) return k;
        }
        return -1;
    }
    int r = lastViolation(nd.right, lo, hi, x, qy);
    if (r >= 0) return r;
    return lastViolation(nd.left, lo, hi, x, qy);
}

std::optional<int> EnvelopeTree::firstUnhitInRange(int lo, int hi, const Point& p) const {
    lo = std::max(lo, posLo());
    hi = std::min(hi, posHi());
    if (lo > hi) return std::nullopt;
    const Rational qy = sense_ == EnvelopeSense::Lower ? Rational(-p.y) : p.y;
    int k = firstViolation(root_, lo - posLo_, hi - posLo_ + 1, p.x, qy);
    if (k < 0) return std::nullopt;
    return posLo_ + k;
}

std::optional<int> EnvelopeTree::lastUnhitInRange(int lo, int hi, const Point& p) const {
    lo = std::max(lo, posLo());
    hi = std::min(hi, posHi());
    if (lo > hi) return std::nullopt;
    const Rational qy = sense_ == EnvelopeSense::Lower ? Rational(-p.y) : p.y;
    int k = lastViolation(root_, lo - posLo_, hi - posLo_ + 1, p.x, qy);
    if (k < 0) return std::nullopt;
    return posLo_ + k;
}

bool EnvelopeTree::hitsPosition(int pos, const Point& p) const {
    const Rational qy = sense_ == EnvelopeSense::Lower ? Rational(-p.y) : p.y;
    return memberHit(pos - posLo_, p.x, qy);
}

int EnvelopeTree::findNode(int lo, int hi) const {
    int idx = root_;
    while (idx >= 0) {
        const Node& nd = nodes_[idx];
        if (nd.lo == lo && nd.hi == hi) return idx;
        if (nd.left < 0) return -1;
        idx = hi <= nodes_[nd.left].hi ? nd.left : nd.right;
    }
    return -1;
}

std::optional<Rational> EnvelopeTree::nodeEnvelopeValueAt(int lo, int hi, const Rational& x) const {
    int idx = findNode(lo - posLo_, hi - posLo_ + 1);
    if (idx < 0) return std::nullopt;
    const Node& nd = nodes_[idx];
    Rational best;
    if (nd.left < 0) {
        best = lines_[nd.lo].valueAt(x);
        for (int k = nd.lo + 1; k < nd.hi; ++k) {
            Rational v = lines_[k].valueAt(x);
            if (cmp(v, best) > 0) best = std::move(v);
        }
    } else {
        auto it = std::lower_bound(nd.edgeFrom.begin(), nd.edgeFrom.end(), x,
                                   [](const Rational& bp, const Rational& v) { return cmp(bp, v) < 0; });
        best = lines_[nd.edgeLine[it - nd.edgeFrom.begin()]].valueAt(x);
    }
    return sense_ == EnvelopeSense::Lower ? Rational(-best) : best;
}

std::optional<std::vector<Rational>> EnvelopeTree::nodeBreakpoints(int lo, int hi) const {
    int idx = findNode(lo - posLo_, hi - posLo_ + 1);
    if (idx < 0 || nodes_[idx].left < 0) return std::nullopt;
    return nodes_[idx].edgeFrom;
}

}  // namespace hhs
