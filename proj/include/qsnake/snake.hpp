#pragma once

#include <utility>
#include <vector>

#include "qsnake/path.hpp"

namespace qsnake {

enum class PositionKind { None, Snake, MinimalSnake };

struct Position {
    PositionKind kind = PositionKind::None;
    bool prime = false;

    bool is_snake() const { return kind != PositionKind::None; }
    bool is_minimal() const { return kind == PositionKind::MinimalSnake; }
};

// A validated snake: successive points in snake position, flags cached.
struct Snake {
    std::vector<Lp> points;
    bool minimal = true;
    bool prime = true;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    YMonomial highest_monomial() const;
    auto operator<=>(const Snake&) const = default;
};

struct NeighbourPair {
    Snake x;
    Snake y;
};

// Classifies (q relative to p). Both points must lie in the lattice.
Position position_kind(const Algebra& alg, Lp p, Lp q);

// Validates a point list as a snake; throws NotASnake naming the offending index.
Snake validate_snake(const Algebra& alg, const std::vector<Lp>& pts);

// The two groups of upper corners of the snake-lowered path from p to q,
// split at its unique lower corner along the traversal (normalized to
// increasing plane column); each group sorted by shift.
std::pair<std::vector<Lp>, std::vector<Lp>> neighbouring_points(const Algebra& alg, Lp p, Lp q);

// The printed case tables for the neighbouring points, with the spinor-row
// entry for i=N, i'<N repaired to land in the lattice. Used as a cross-check
// against the corner-derived values.
std::pair<std::vector<Lp>, std::vector<Lp>> closed_form_neighbour_points(const Algebra& alg,
                                                                         Lp p, Lp q);

// Concatenates per-pair neighbour groups into the two neighbouring snakes.
// The group-to-chain assignment is resolved by searching orientations for one
// where both chains validate and are disjoint (lexicographically least).
NeighbourPair neighbour_snakes(const Algebra& alg, const Snake& s);

bool is_minimal_affinization(const Snake& s);
bool is_wrapping(const Algebra& alg, const Snake& s);

// Splits at every adjacent pair not in prime position.
std::vector<Snake> prime_decomposition(const Algebra& alg, const Snake& s);

std::string to_string(const Snake& s);

} // namespace qsnake
