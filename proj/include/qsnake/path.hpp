#pragma once

#include <optional>
#include <vector>

#include "qsnake/monomial.hpp"

namespace qsnake {

// Vertical coordinate with a symbolic epsilon flag, used in the spinor column
// of type B. Order is lexicographic on (base, eps) with minus < none < plus,
// which matches the numeric order of base + eps*x for any 0 < x < 1/2.
struct YCoord {
    int base = 0;
    int eps = 0; // -1, 0, +1
    auto operator<=>(const YCoord&) const = default;
};

struct PathPoint {
    int x = 0;
    YCoord y;
    auto operator<=>(const PathPoint&) const = default;
};

// A lattice path attached to a point (i,k). Points are stored in traversal
// order; in type B with odd-branch shifts the traversal runs right to left.
struct Path {
    Lp origin;
    std::vector<PathPoint> points;
    auto operator<=>(const Path&) const = default;
};

struct CornerSet {
    std::vector<Lp> upper; // sorted by (i,k)
    std::vector<Lp> lower;
};

// Complete, duplicate-free, canonically ordered path set for (i,k).
std::vector<Path> enumerate_paths(const Algebra& alg, int i, int k);
inline std::vector<Path> enumerate_paths(const Algebra& alg, Lp p) {
    return enumerate_paths(alg, p.i, p.k);
}

bool path_valid(const Algebra& alg, const Path& p);

CornerSet corners(const Algebra& alg, const Path& p);
// Corners with their traversal index (spinor-flag corners use the index of the
// flagged point). Orientation is normalized to increasing plane column.
std::vector<std::pair<Lp, int>> upper_corners_indexed(const Algebra& alg, const Path& p);
std::vector<std::pair<Lp, int>> lower_corners_indexed(const Algebra& alg, const Path& p);

YMonomial path_monomial(const Algebra& alg, const Path& p);

Path highest_path(const Algebra& alg, int i, int k);
Path lowest_path(const Algebra& alg, int i, int k);

// The unique path in P_{i,k} with a single lower corner, at (i',k').
// Requires (i',k') in prime snake position with respect to (i,k).
Path snake_lowered_path(const Algebra& alg, Lp from, Lp to);

bool can_lower(const Algebra& alg, const Path& p, int j, int l);
bool can_raise(const Algebra& alg, const Path& p, int j, int l);
Path lower(const Algebra& alg, const Path& p, int j, int l);
Path raise(const Algebra& alg, const Path& p, int j, int l);

// p strictly above q: every point of p is strictly above every point of q in
// each shared column.
bool strictly_above(const Path& p, const Path& q);

// Pointwise maximum of two paths in the same P_{i,k}.
Path bott(const Algebra& alg, const Path& p, const Path& q);

// p weakly above q (same shape): no point of p below the corresponding point of q.
bool weakly_above(const Path& p, const Path& q);

// Rebuilds the unique path with the given corner content, if one exists.
std::optional<Path> path_from_corners(const Algebra& alg, Lp origin,
                                      const std::vector<Lp>& upper, const std::vector<Lp>& lower);

} // namespace qsnake
