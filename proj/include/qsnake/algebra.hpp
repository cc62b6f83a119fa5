#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qsnake/error.hpp"

namespace qsnake {

enum class AlgebraKind { TypeA, TypeB };

// Simple Lie algebra data for types A_N and B_N.
//
// Node indices are 1-based. In type B the short (spinor) node is N.
// Spectral parameters are integer exponents k of a fixed base point, so a
// variable index is a pair (i,k).
class Algebra {
public:
    Algebra(AlgebraKind kind, int rank);

    AlgebraKind kind() const { return kind_; }
    int rank() const { return rank_; }
    bool is_type_a() const { return kind_ == AlgebraKind::TypeA; }
    bool is_type_b() const { return kind_ == AlgebraKind::TypeB; }

    // r_i: 1 everywhere in type A; in type B, 2 for i<N and 1 for i=N.
    int r(int i) const;

    // Cartan entry C_{ij} = 2<a_i,a_j>/<a_i,a_i>.
    int cartan(int i, int j) const;

    std::string name() const; // "A2", "B3", ...

    bool operator==(const Algebra& o) const { return kind_ == o.kind_ && rank_ == o.rank_; }

private:
    AlgebraKind kind_;
    int rank_;
};

// A lattice point (i,k): the index of Y_{i,aq^k}.
struct Lp {
    int i = 0;
    int k = 0;
    auto operator<=>(const Lp&) const = default;
};

// Image of a lattice point in the drawing plane.
struct PlanePoint {
    int x = 0;
    int y = 0;
    auto operator<=>(const PlanePoint&) const = default;
};

// Membership in the parity lattice (shifted=false) or its A-index shift
// (shifted=true). Throws OutOfRange if i is not a node.
bool in_lattice(const Algebra& alg, int i, int k, bool shifted = false);
inline bool in_lattice(const Algebra& alg, Lp p, bool shifted = false) {
    return in_lattice(alg, p.i, p.k, shifted);
}

void require_lattice(const Algebra& alg, Lp p, bool shifted = false);

// The planar embedding: identity in type A; the three-case fold in type B.
PlanePoint iota(const Algebra& alg, Lp p);

// Inverse of iota on plane points with x in the interior column range.
// Throws InvalidLatticePoint if (x,y) is not an iota image.
Lp iota_inverse(const Algebra& alg, int x, int y);

std::string to_string(Lp p);

} // namespace qsnake
