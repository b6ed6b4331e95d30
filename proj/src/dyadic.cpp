#include "parex/dyadic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace parex {
namespace dyadic {

std::string DyadicSquare::address() const {
    return std::to_string(level) + ":" + std::to_string(ix) + ":" +
           std::to_string(iy);
}

DyadicSquare DyadicSquare::from_address(const std::string& s) {
    DyadicSquare q;
    const char* p = s.data();
    const char* end = s.data() + s.size();
    auto r1 = std::from_chars(p, end, q.level);
    if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != ':')
        throw std::invalid_argument("bad square address: " + s);
    auto r2 = std::from_chars(r1.ptr + 1, end, q.ix);
    if (r2.ec != std::errc{} || r2.ptr == end || *r2.ptr != ':')
        throw std::invalid_argument("bad square address: " + s);
    auto r3 = std::from_chars(r2.ptr + 1, end, q.iy);
    if (r3.ec != std::errc{} || r3.ptr != end)
        throw std::invalid_argument("bad square address: " + s);
    return q;
}

std::array<DyadicSquare, 4> children(const DyadicSquare& q) {
    if (q.level >= kMaxLevel)
        throw std::runtime_error("children: depth overflow at level " +
                                 std::to_string(q.level));
    const int s = q.level + 1;
    const std::int64_t x = 2 * q.ix, y = 2 * q.iy;
    return {DyadicSquare{s, x, y}, DyadicSquare{s, x + 1, y},
            DyadicSquare{s, x, y + 1}, DyadicSquare{s, x + 1, y + 1}};
}

namespace {
std::int64_t floor_div2(std::int64_t v) { return v >= 0 ? v / 2 : (v - 1) / 2; }
}  // namespace

DyadicSquare parent(const DyadicSquare& q) {
    return {q.level - 1, floor_div2(q.ix), floor_div2(q.iy)};
}

DyadicSquare ancestor_at(const DyadicSquare& q, int level) {
    if (level > q.level)
        throw std::invalid_argument("ancestor_at: level below the square");
    DyadicSquare a = q;
    while (a.level > level) a = parent(a);
    return a;
}

bool is_ancestor_of(const DyadicSquare& a, const DyadicSquare& q) {
    return a.level <= q.level && ancestor_at(q, a.level) == a;
}

int dtree(const DyadicSquare& a, const DyadicSquare& b) {
    DyadicSquare p = a, q = b;
    int d = 0;
    while (p.level > q.level) {
        p = parent(p);
        ++d;
    }
    while (q.level > p.level) {
        q = parent(q);
        ++d;
    }
    while (p != q) {
        p = parent(p);
        q = parent(q);
        d += 2;
    }
    return d;
}

std::vector<DyadicSquare> descendants_at(const DyadicSquare& root, int level) {
    if (level < root.level)
        throw std::invalid_argument("descendants_at: level above the root");
    const int d = level - root.level;
    const std::int64_t n = std::int64_t{1} << d;
    std::vector<DyadicSquare> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (std::int64_t j = 0; j < n; ++j)
        for (std::int64_t i = 0; i < n; ++i)
            out.push_back({level, root.ix * n + i, root.iy * n + j});
    return out;
}

int dtree_to_slice(const DyadicSquare& q, const GridSlice& slice) {
    if (slice.squares.empty())
        throw std::invalid_argument("dtree_to_slice: empty slice");
    int best = dtree(q, slice.squares.front());
    for (std::size_t i = 1; i < slice.squares.size(); ++i)
        best = std::min(best, dtree(q, slice.squares[i]));
    return best;
}

bool HaloRegion::contains(Vec2 p) const {
    for (const Rect& r : rects)
        if (r.contains(p)) return true;
    return false;
}

double HaloRegion::area() const {
    // Rectangles of the four frames may overlap across children only along
    // shared boundary segments (measure zero), so areas add.
    double a = 0.0;
    for (const Rect& r : rects) a += r.area();
    return a;
}

bool HaloRegion::intersects(const HaloRegion& other) const {
    for (const Rect& r : rects)
        for (const Rect& s : other.rects)
            if (r.intersects(s)) return true;
    return false;
}

HaloRegion halo(const DyadicSquare& q, double eta) {
    if (!(eta > 0.0 && eta < 1.0))
        throw std::invalid_argument("halo: eta must lie in (0,1)");
    HaloRegion h;
    h.rects.reserve(16);
    for (const DyadicSquare& k : children(q)) {
        const Rect outer = k.rect().scaled(1.0 + eta);
        const Rect inner = k.rect().scaled(1.0 - eta);
        h.rects.push_back({outer.x0, inner.x0, outer.y0, outer.y1});  // left
        h.rects.push_back({inner.x1, outer.x1, outer.y0, outer.y1});  // right
        h.rects.push_back({inner.x0, inner.x1, outer.y0, inner.y0});  // bottom
        h.rects.push_back({inner.x0, inner.x1, inner.y1, outer.y1});  // top
    }
    return h;
}

bool halos_intersect(const DyadicSquare& a, const DyadicSquare& b, double eta) {
    // Cheap support gate first.
    const double pad_a = eta * a.side(), pad_b = eta * b.side();
    if (a.rect().padded(pad_a).gap(b.rect().padded(pad_b)) > 0.0) return false;
    return halo(a, eta).intersects(halo(b, eta));
}

GridSlice separated_slice(int level, int parity_x, int parity_y) {
    if (level < 1) throw std::invalid_argument("separated_slice: level >= 1");
    GridSlice slice;
    slice.level = level;
    slice.separation = std::ldexp(1.0, -level);
    const std::int64_t n = std::int64_t{1} << level;
    for (std::int64_t j = parity_y & 1; j < n; j += 2)
        for (std::int64_t i = parity_x & 1; i < n; i += 2)
            slice.squares.push_back({level, i, j});
    return slice;
}

GridSlice full_slice(int level) {
    GridSlice slice;
    slice.level = level;
    slice.squares = descendants_at(kUnitSquare, level);
    return slice;
}

bool nu_disjoint_triple(const DyadicSquare& u1, const DyadicSquare& u2,
                        const DyadicSquare& u3, double nu) {
    if (!(nu > 0.0 && nu < 1.0))
        throw std::invalid_argument("nu_disjoint_triple: nu in (0,1)");
    const DyadicSquare* qs[3] = {&u1, &u2, &u3};
    for (const DyadicSquare* q : qs) {
        const double l = q->side();
        if (!(l >= nu && l <= 2.0 * nu)) return false;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (qs[i]->rect().dist(qs[j]->rect()) < nu) return false;
    return true;
}

}  // namespace dyadic
}  // namespace parex
