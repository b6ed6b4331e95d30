#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parex/geometry.hpp"

namespace parex {
namespace dyadic {

// Deepest level the quadtree may reach; children() past this throws.
inline constexpr int kMaxLevel = 24;
// Coarsest super-root level (squares strictly larger than U), used when a
// scan has to walk the tower above the base square.
inline constexpr int kTopLevel = -3;

// One node of the quadtree over the base square U = [0,1]^2 (unit
// coordinates).  Side length is 2^{-level}; the lower-left corner is
// (ix*2^{-level}, iy*2^{-level}).  Negative levels describe the chain of
// ancestors of U itself.
struct DyadicSquare {
    int level = 0;
    std::int64_t ix = 0;
    std::int64_t iy = 0;

    bool operator==(const DyadicSquare&) const = default;
    auto operator<=>(const DyadicSquare&) const = default;

    double side() const { return std::ldexp(1.0, -level); }
    Vec2 corner() const { return {ix * side(), iy * side()}; }
    Vec2 center() const {
        const double h = side();
        return {(ix + 0.5) * h, (iy + 0.5) * h};
    }
    Rect rect() const {
        const double h = side();
        return {ix * h, (ix + 1) * h, iy * h, (iy + 1) * h};
    }

    // Address string used by every CSV output.
    std::string address() const;
    static DyadicSquare from_address(const std::string& s);
};

inline const DyadicSquare kUnitSquare{0, 0, 0};

// The 4 children in fixed order: lower-left, lower-right, upper-left,
// upper-right.  The deterministic order is what makes coefficient maps
// serialize reproducibly.
std::array<DyadicSquare, 4> children(const DyadicSquare& q);

DyadicSquare parent(const DyadicSquare& q);

// Nearest ancestor of q at the given coarser level.
DyadicSquare ancestor_at(const DyadicSquare& q, int level);

bool is_ancestor_of(const DyadicSquare& a, const DyadicSquare& q);

// Length of the unique tree path between two squares.
int dtree(const DyadicSquare& a, const DyadicSquare& b);

// All level-`level` squares contained in `root` (level >= root.level).
std::vector<DyadicSquare> descendants_at(const DyadicSquare& root, int level);

struct GridSlice {
    int level = 0;
    std::vector<DyadicSquare> squares;
    std::optional<double> separation;  // pairwise gaps >= separation when set
};

// min over the slice of dtree(q, .); throws on an empty slice.
int dtree_to_slice(const DyadicSquare& q, const GridSlice& slice);

// The eta-halo of the skeleton of q's children: union over children K of
// (1+eta)K \ (1-eta)K, stored as disjoint-interior rectangles.
struct HaloRegion {
    std::vector<Rect> rects;

    bool contains(Vec2 p) const;
    double area() const;
    bool intersects(const HaloRegion& other) const;
};

HaloRegion halo(const DyadicSquare& q, double eta);

bool halos_intersect(const DyadicSquare& a, const DyadicSquare& b, double eta);

// 2^{-s}-separated subcollection of G_s[U]: the squares whose (ix,iy) match
// the given parities.  The 4 parity classes partition G_s[U].
GridSlice separated_slice(int level, int parity_x = 0, int parity_y = 0);

// All level-s squares in U (the union of the 4 parity classes).
GridSlice full_slice(int level);

// true iff nu <= side(U_k) <= 2 nu for all k and pairwise Euclidean
// distances are >= nu.
bool nu_disjoint_triple(const DyadicSquare& u1, const DyadicSquare& u2,
                        const DyadicSquare& u3, double nu);

}  // namespace dyadic
}  // namespace parex
