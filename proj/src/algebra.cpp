#include "qsnake/algebra.hpp"

#include <cstdlib>

namespace qsnake {

namespace {
int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}
} // namespace

Algebra::Algebra(AlgebraKind kind, int rank) : kind_(kind), rank_(rank) {
    if (kind == AlgebraKind::TypeA && rank < 1)
        fail(errc::bad_params, "type A requires rank >= 1");
    if (kind == AlgebraKind::TypeB && rank < 2)
        fail(errc::bad_params, "type B requires rank >= 2");
}

int Algebra::r(int i) const {
    if (i < 1 || i > rank_) fail(errc::out_of_range, "node index " + std::to_string(i));
    if (kind_ == AlgebraKind::TypeA) return 1;
    return i < rank_ ? 2 : 1;
}

int Algebra::cartan(int i, int j) const {
    if (i < 1 || i > rank_ || j < 1 || j > rank_) fail(errc::out_of_range, "node index");
    if (i == j) return 2;
    if (std::abs(i - j) != 1) return 0;
    if (kind_ == AlgebraKind::TypeA) return -1;
    // Type B: the row of the short node N carries the -2.
    if (i == rank_ && j == rank_ - 1) return -2;
    return -1;
}

std::string Algebra::name() const {
    return (kind_ == AlgebraKind::TypeA ? "A" : "B") + std::to_string(rank_);
}

bool in_lattice(const Algebra& alg, int i, int k, bool shifted) {
    const int n = alg.rank();
    if (i < 1 || i > n) fail(errc::out_of_range, "node index " + std::to_string(i));
    if (shifted) return in_lattice(alg, i, k - alg.r(i), false);
    if (alg.is_type_a()) return mod(i - k, 2) == 1;
    if (i == n) return mod(k, 2) == 1;
    return mod(k, 2) == 0;
}

void require_lattice(const Algebra& alg, Lp p, bool shifted) {
    if (!in_lattice(alg, p.i, p.k, shifted))
        fail(errc::invalid_lattice_point,
             to_string(p) + " not in the " + std::string(shifted ? "shifted " : "") +
                 "lattice of " + alg.name());
}

PlanePoint iota(const Algebra& alg, Lp p) {
    require_lattice(alg, p);
    if (alg.is_type_a()) return {p.i, p.k};
    const int n = alg.rank();
    if (p.i == n) return {2 * n - 1, p.k};
    if (mod(2 * n + p.k - 2 * p.i, 4) == 2) return {2 * p.i, p.k};
    return {4 * n - 2 - 2 * p.i, p.k};
}

Lp iota_inverse(const Algebra& alg, int x, int y) {
    if (alg.is_type_a()) {
        Lp p{x, y};
        require_lattice(alg, p);
        return p;
    }
    const int n = alg.rank();
    Lp p;
    if (x == 2 * n - 1) {
        p = {n, y};
    } else if (x > 0 && x < 2 * n - 1 && x % 2 == 0) {
        p = {x / 2, y};
        if (mod(2 * n + y - 2 * p.i, 4) != 2)
            fail(errc::invalid_lattice_point, "plane point not an iota image");
    } else if (x > 2 * n - 1 && x < 4 * n - 2 && x % 2 == 0) {
        p = {(4 * n - 2 - x) / 2, y};
        if (mod(2 * n + y - 2 * p.i, 4) != 0)
            fail(errc::invalid_lattice_point, "plane point not an iota image");
    } else {
        fail(errc::invalid_lattice_point, "plane column out of range");
    }
    require_lattice(alg, p);
    return p;
}

std::string to_string(Lp p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.k) + ")";
}

} // namespace qsnake
