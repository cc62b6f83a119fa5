#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "qsnake/monomial.hpp"

using namespace qsnake;

namespace {
const Algebra A1(AlgebraKind::TypeA, 1);
const Algebra A2(AlgebraKind::TypeA, 2);
const Algebra A3(AlgebraKind::TypeA, 3);
const Algebra A4(AlgebraKind::TypeA, 4);
const Algebra B2(AlgebraKind::TypeB, 2);
const Algebra B3(AlgebraKind::TypeB, 3);
} // namespace

TEST_CASE("lattice membership") {
    CHECK(in_lattice(A3, 1, 0));
    CHECK_FALSE(in_lattice(B2, 2, 4));
    CHECK(in_lattice(B3, 1, 2));
    CHECK_FALSE(in_lattice(A3, 1, 1));
    CHECK(in_lattice(B2, 2, 1));
    CHECK_THROWS_AS(in_lattice(A3, 4, 0), Error);

    // shifted lattice
    CHECK(in_lattice(A2, 1, 1, true));
    CHECK(in_lattice(B2, 1, 2, true));
    CHECK(in_lattice(B2, 2, 2, true));
    CHECK_FALSE(in_lattice(B2, 2, 1, true));
}

TEST_CASE("marks and rows of the Cartan matrix") {
    CHECK(A2.r(1) == 1);
    CHECK(B3.r(1) == 2);
    CHECK(B3.r(3) == 1);
    CHECK(B2.cartan(2, 1) == -2);
    CHECK(B2.cartan(1, 2) == -1);
    CHECK(A3.cartan(1, 2) == -1);
    CHECK(A3.cartan(1, 3) == 0);
}

TEST_CASE("planar embedding") {
    CHECK(iota(B3, {3, 1}) == PlanePoint{5, 1});
    CHECK(iota(B3, {1, 0}) == PlanePoint{8, 0});
    CHECK(iota(A4, {2, 1}) == PlanePoint{2, 1});
    CHECK_THROWS_AS(iota(B3, {1, 1}), Error);
}

TEST_CASE("embedding is injective on a window") {
    for (const Algebra& alg : {A2, A3, A4, B2, B3, Algebra(AlgebraKind::TypeB, 5)}) {
        std::set<PlanePoint> seen;
        int count = 0;
        for (int i = 1; i <= alg.rank(); ++i)
            for (int k = -40; k <= 40; ++k) {
                if (!in_lattice(alg, i, k)) continue;
                CHECK(seen.insert(iota(alg, {i, k})).second);
                ++count;
            }
        CHECK(count > 0);
    }
}

TEST_CASE("embedding inverts") {
    for (const Algebra& alg : {A3, B2, B3})
        for (int i = 1; i <= alg.rank(); ++i)
            for (int k = -12; k <= 12; ++k) {
                if (!in_lattice(alg, i, k)) continue;
                const auto pp = iota(alg, {i, k});
                CHECK(iota_inverse(alg, pp.x, pp.y) == Lp{i, k});
            }
}

TEST_CASE("root monomials") {
    CHECK(a_monomial(A2, 1, 1) == parse_ym("Y[1,0]*Y[1,2]*Y[2,1]^-1"));
    CHECK(a_monomial(B2, 1, 2) == parse_ym("Y[1,0]*Y[1,4]*Y[2,1]^-1*Y[2,3]^-1"));
    CHECK(a_monomial(B2, 2, 2) == parse_ym("Y[2,1]*Y[2,3]*Y[1,2]^-1"));
    CHECK_THROWS_AS(a_monomial(B2, 2, 1), Error);
}

TEST_CASE("root monomial indices stay in the lattice") {
    for (const Algebra& alg : {A2, A3, B2, B3})
        for (int i = 1; i <= alg.rank(); ++i)
            for (int k = -10; k <= 10; ++k) {
                if (!in_lattice(alg, i, k, true)) continue;
                const YMonomial m = a_monomial(alg, i, k);
                for (const auto& [p, e] : m.factors()) CHECK(in_lattice(alg, p));
            }
}

TEST_CASE("weights of root monomials match Cartan columns") {
    for (const Algebra& alg : {A2, A3, B2, B3})
        for (int i = 1; i <= alg.rank(); ++i)
            for (int k : {-4, 0, 2, 6}) {
                if (!in_lattice(alg, i, k, true)) continue;
                const Weight w = weight(a_monomial(alg, i, k), alg);
                for (int j = 1; j <= alg.rank(); ++j)
                    CHECK(w[static_cast<std::size_t>(j - 1)] == alg.cartan(j, i));
            }
}
