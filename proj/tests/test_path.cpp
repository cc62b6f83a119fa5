#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "qsnake/path.hpp"
#include "qsnake/snake.hpp"

using namespace qsnake;

namespace {
const Algebra A1(AlgebraKind::TypeA, 1);
const Algebra A2(AlgebraKind::TypeA, 2);
const Algebra B2(AlgebraKind::TypeB, 2);
const Algebra B3(AlgebraKind::TypeB, 3);

Path path_a(const Algebra& alg, Lp origin, std::initializer_list<int> ys) {
    Path p{origin, {}};
    int x = 0;
    for (int y : ys) p.points.push_back({x++, {y, 0}});
    return p;
}

Path find_by_monomial(const Algebra& alg, Lp origin, const YMonomial& m) {
    for (const auto& p : enumerate_paths(alg, origin))
        if (path_monomial(alg, p) == m) return p;
    FAIL("no path with monomial " << m.str());
    return {};
}
} // namespace

TEST_CASE("path counts") {
    CHECK(enumerate_paths(A2, 1, 0).size() == 3);
    CHECK(enumerate_paths(B2, 2, 1).size() == 4);
    CHECK(enumerate_paths(A1, 1, 0).size() == 2);
}

TEST_CASE("corners in type A") {
    const auto up_down = corners(A2, path_a(A2, {1, 0}, {1, 0, 1, 2}));
    CHECK(up_down.upper == std::vector<Lp>{{1, 0}});
    CHECK(up_down.lower.empty());

    const auto mixed = corners(A2, path_a(A2, {1, 0}, {1, 2, 1, 2}));
    CHECK(mixed.upper == std::vector<Lp>{{2, 1}});
    CHECK(mixed.lower == std::vector<Lp>{{1, 2}});
}

TEST_CASE("corners in the spinor column") {
    Path p{{2, 1}, {{6, {4, 0}}, {4, {2, 0}}, {3, {1, -1}}}};
    REQUIRE(path_valid(B2, p));
    const auto cs = corners(B2, p);
    CHECK(cs.upper == std::vector<Lp>{{2, 1}});
    CHECK(cs.lower.empty());
}

TEST_CASE("path monomials") {
    CHECK(path_monomial(A2, path_a(A2, {1, 0}, {1, 0, 1, 2})) == parse_ym("Y[1,0]"));
    CHECK(path_monomial(A2, path_a(A2, {1, 0}, {1, 2, 1, 2})) == parse_ym("Y[2,1]*Y[1,2]^-1"));
    CHECK(path_monomial(B2, lowest_path(B2, 2, 1)) == parse_ym("Y[2,7]^-1"));
}

TEST_CASE("highest and lowest paths") {
    CHECK(path_monomial(A2, highest_path(A2, 1, 0)) == parse_ym("Y[1,0]"));

    const Path hi = highest_path(B2, 2, 1);
    CHECK(std::find(hi.points.begin(), hi.points.end(), PathPoint{3, {1, -1}}) != hi.points.end());
    const Path lo = lowest_path(B2, 2, 1);
    CHECK(std::find(lo.points.begin(), lo.points.end(), PathPoint{3, {7, 1}}) != lo.points.end());

    // anchor through the embedded point for a non-spinor node
    const Path hi1 = highest_path(B2, 1, 0);
    const auto anchor = iota(B2, {1, 0});
    CHECK(std::find(hi1.points.begin(), hi1.points.end(),
                    PathPoint{anchor.x, {anchor.y, 0}}) != hi1.points.end());
}

TEST_CASE("snake-lowered paths") {
    const Path pa = snake_lowered_path(A2, {1, 0}, {1, 2});
    CHECK(pa == path_a(A2, {1, 0}, {1, 2, 1, 2}));
    CHECK(corners(A2, pa).upper == std::vector<Lp>{{2, 1}});

    const Path pb = snake_lowered_path(B2, {2, 5}, {1, 10});
    CHECK(pb.points == std::vector<PathPoint>{{6, {8, 0}}, {4, {10, 0}}, {3, {9, -1}}});
    CHECK(corners(B2, pb).upper == std::vector<Lp>{{2, 9}});

    CHECK(corners(B2, snake_lowered_path(B2, {1, 0}, {2, 5})).upper == std::vector<Lp>{{2, 1}});
}

TEST_CASE("moves") {
    const Path hi = highest_path(A2, 1, 0);
    CHECK(can_lower(A2, hi, 1, 1));
    CHECK(path_monomial(A2, lower(A2, hi, 1, 1)) == parse_ym("Y[1,2]^-1*Y[2,1]"));
    CHECK_THROWS_AS(raise(A2, hi, 1, 1), Error);

    const Path bhi = highest_path(B2, 2, 1);
    CHECK(path_monomial(B2, lower(B2, bhi, 2, 2)) == parse_ym("Y[1,2]*Y[2,3]^-1"));

    // a second spinor upper corner blocks the move
    const Path blocked = find_by_monomial(B2, {1, 0}, parse_ym("Y[2,1]*Y[2,3]*Y[1,4]^-1"));
    CHECK_FALSE(can_lower(B2, blocked, 2, 2));
    CHECK(can_lower(B2, blocked, 2, 4));
}

TEST_CASE("moves match the A-factorization") {
    for (const Algebra& alg : {A2, B2}) {
        for (const auto& origin : std::vector<Lp>{{1, 0}, {2, alg.is_type_b() ? 1 : 3}}) {
            if (!in_lattice(alg, origin)) continue;
            for (const auto& p : enumerate_paths(alg, origin)) {
                for (int j = 1; j <= alg.rank(); ++j)
                    for (int l = -4; l <= 14; ++l) {
                        if (!in_lattice(alg, j, l, true) || !can_lower(alg, p, j, l)) continue;
                        const Path q = lower(alg, p, j, l);
                        const auto f =
                            a_factorize(path_monomial(alg, q), path_monomial(alg, p), alg);
                        CHECK(f.factors == std::map<Lp, int>{{{j, l}, -1}});
                        CHECK(raise(alg, q, j, l) == p);
                    }
            }
        }
    }
}

TEST_CASE("monomial map is injective on each path set") {
    for (const Algebra& alg : {A2, B2, B3}) {
        for (int i = 1; i <= alg.rank(); ++i) {
            const int k = in_lattice(alg, i, 0) ? 0 : 1;
            std::set<YMonomial> seen;
            for (const auto& p : enumerate_paths(alg, i, k))
                CHECK(seen.insert(path_monomial(alg, p)).second);
        }
    }
}

TEST_CASE("raising reaches the highest path, lowering the lowest") {
    for (const Algebra& alg : {A2, B2}) {
        const Lp origin = alg.is_type_b() ? Lp{1, 0} : Lp{2, 1};
        const Path hi = highest_path(alg, origin.i, origin.k);
        const Path lo = lowest_path(alg, origin.i, origin.k);
        for (const auto& start : enumerate_paths(alg, origin)) {
            Path p = start;
            for (int guard = 0; guard < 64; ++guard) {
                const auto cs = corners(alg, p);
                if (cs.lower.empty()) break;
                bool moved = false;
                for (const auto& c : cs.lower) {
                    if (can_raise(alg, p, c.i, c.k - alg.r(c.i))) {
                        p = raise(alg, p, c.i, c.k - alg.r(c.i));
                        moved = true;
                        break;
                    }
                }
                REQUIRE(moved);
            }
            CHECK(p == hi);

            p = start;
            for (int guard = 0; guard < 64; ++guard) {
                const auto cs = corners(alg, p);
                if (cs.upper.empty()) break;
                bool moved = false;
                for (const auto& c : cs.upper) {
                    if (can_lower(alg, p, c.i, c.k + alg.r(c.i))) {
                        p = lower(alg, p, c.i, c.k + alg.r(c.i));
                        moved = true;
                        break;
                    }
                }
                REQUIRE(moved);
            }
            CHECK(p == lo);
        }
    }
}

TEST_CASE("ordering and pointwise maxima") {
    CHECK(strictly_above(highest_path(A2, 1, 0), highest_path(A2, 1, 4)));
    CHECK_FALSE(strictly_above(highest_path(A2, 1, 4), highest_path(A2, 1, 0)));

    const auto ps = enumerate_paths(B2, 2, 1);
    for (const auto& p : ps) CHECK(bott(B2, p, p) == p);
    const Path hi = highest_path(B2, 2, 1);
    const Path lo = lowest_path(B2, 2, 1);
    CHECK(bott(B2, hi, lo) == lo);
    CHECK_THROWS_AS(bott(B2, hi, highest_path(B2, 2, 5)), Error);
}

TEST_CASE("pointwise maxima stay in the path set") {
    for (const Algebra& alg : {A2, B2}) {
        const Lp origin{1, 0};
        const auto ps = enumerate_paths(alg, origin);
        for (const auto& p : ps)
            for (const auto& q : ps) CHECK(path_valid(alg, bott(alg, p, q)));
    }
}

TEST_CASE("bottoming classification") {
    // with at most one permitted lower corner, only the expected pairs survive
    for (const Algebra& alg : {A2, B2}) {
        const Lp origin{1, 0};
        const auto ps = enumerate_paths(alg, origin);
        const Path hi = highest_path(alg, origin.i, origin.k);
        for (int i2 = 1; i2 <= alg.rank(); ++i2)
            for (int k2 = 0; k2 <= 8; ++k2) {
                if (!in_lattice(alg, i2, k2)) continue;
                if (!position_kind(alg, origin, {i2, k2}).prime) continue;
                const Path snake_low = snake_lowered_path(alg, origin, {i2, k2});
                for (const auto& p : ps)
                    for (const auto& q : ps) {
                        const auto cs = corners(alg, bott(alg, p, q));
                        const bool small = cs.lower.empty() ||
                                           (cs.lower.size() == 1 && cs.lower[0] == Lp{i2, k2});
                        if (!small || p == snake_low) continue;
                        CHECK(p == hi);
                        CHECK((q == hi || q == snake_low));
                    }
            }
    }
}

TEST_CASE("fundamental sums have one dominant and one antidominant term") {
    for (const Algebra& alg : {A2, B2, B3}) {
        for (int i = 1; i <= alg.rank(); ++i) {
            const int k = in_lattice(alg, i, 0) ? 0 : 1;
            int dom = 0, antidom = 0;
            for (const auto& p : enumerate_paths(alg, i, k)) {
                const auto m = path_monomial(alg, p);
                dom += m.dominant();
                antidom += m.antidominant();
            }
            CHECK(dom == 1);
            CHECK(antidom == 1);
        }
    }
}
