#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qsnake/monomial.hpp"

using namespace qsnake;

namespace {
const Algebra A1(AlgebraKind::TypeA, 1);
const Algebra A2(AlgebraKind::TypeA, 2);
const Algebra A3(AlgebraKind::TypeA, 3);
const Algebra B2(AlgebraKind::TypeB, 2);
const Algebra B3(AlgebraKind::TypeB, 3);

Character chr(std::initializer_list<std::pair<const char*, long long>> terms) {
    Character c;
    for (const auto& [s, x] : terms) c.add(parse_ym(s), x);
    return c;
}
} // namespace

TEST_CASE("monomial ring basics") {
    CHECK((parse_ym("Y[1,0]") * parse_ym("Y[1,0]^-1")).is_one());
    const Character lhs = chr({{"Y[1,0]", 1}, {"Y[1,2]^-1", 1}});
    const Character rhs = chr({{"Y[1,2]", 1}, {"Y[1,4]^-1", 1}});
    const Character want = chr({{"Y[1,0]*Y[1,2]", 1},
                                {"Y[1,0]*Y[1,4]^-1", 1},
                                {"1", 1},
                                {"Y[1,2]^-1*Y[1,4]^-1", 1}});
    CHECK(lhs * rhs == want);
    CHECK((Character() * lhs).is_zero());
}

TEST_CASE("dominance") {
    CHECK(parse_ym("Y[1,0]*Y[2,3]").dominant());
    const auto mixed = parse_ym("Y[1,2]^-1*Y[2,1]");
    CHECK_FALSE(mixed.dominant());
    CHECK_FALSE(mixed.antidominant());
    CHECK(YMonomial::one().dominant());
    CHECK(YMonomial::one().antidominant());
}

TEST_CASE("exponent lookup") {
    const auto m = parse_ym("Y[1,0]^2*Y[2,3]^-1");
    CHECK(u_exponent(m, 1, 0) == 2);
    CHECK(u_exponent(m, 2, 3) == -1);
    CHECK(u_exponent(parse_ym("Y[1,0]"), 2, 0) == 0);
}

TEST_CASE("weight and height") {
    const Weight w = weight(parse_ym("Y[1,0]*Y[1,4]"), A3);
    CHECK(w == Weight{2, 0, 0});
    CHECK(height(parse_ym("Y[1,0]*Y[2,3]"), B2) == 3);
    CHECK(height(YMonomial::one(), B2) == 0);

    // homomorphism property on random pairs
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> node(1, 2), shift(-6, 6), expo(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        YMonomial x, y;
        for (int f = 0; f < 4; ++f) {
            int i = node(rng);
            int k = shift(rng);
            if (!in_lattice(B2, i, k)) k += 1;
            x.mul_y({i, k}, expo(rng));
            i = node(rng);
            k = shift(rng);
            if (!in_lattice(B2, i, k)) k += 1;
            y.mul_y({i, k}, expo(rng));
        }
        CHECK(height(x * y, B2) == height(x, B2) + height(y, B2));
        const Weight wx = weight(x, B2), wy = weight(y, B2), wxy = weight(x * y, B2);
        for (std::size_t j = 0; j < wx.size(); ++j) CHECK(wxy[j] == wx[j] + wy[j]);
    }
}

TEST_CASE("A-factorization examples") {
    const auto f = a_factorize(parse_ym("Y[1,2]^-1*Y[2,1]"), parse_ym("Y[1,0]"), A2);
    CHECK(f.factors == std::map<Lp, int>{{{1, 1}, -1}});
    CHECK(a_factorize(parse_ym("Y[1,0]"), parse_ym("Y[1,0]"), A2).factors.empty());
    CHECK_THROWS_AS(a_factorize(parse_ym("Y[2,1]"), parse_ym("Y[1,0]"), A2), Error);
    CHECK_THROWS_AS(a_factorize(parse_ym("Y[1,0]"), parse_ym("Y[1,2]"), A1), Error);
}

TEST_CASE("A-factorization round trips") {
    for (const Algebra& alg : {A2, A3, B2, B3}) {
        for (int i = 1; i <= alg.rank(); ++i)
            for (int k = -6; k <= 6; ++k) {
                if (!in_lattice(alg, i, k, true)) continue;
                YMonomial m = parse_ym("Y[1,0]");
                if (!in_lattice(alg, 1, 0)) m = YMonomial::y({1, 1});
                const auto f = a_factorize(m * a_monomial(alg, i, k), m, alg);
                CHECK(f.factors == std::map<Lp, int>{{{i, k}, 1}});
            }
    }
}

TEST_CASE("A-factorization reconstructs random root-lattice shifts") {
    std::mt19937 rng(11);
    for (const Algebra& alg : {A2, B2, B3}) {
        std::vector<Lp> shifted;
        for (int i = 1; i <= alg.rank(); ++i)
            for (int k = -8; k <= 8; ++k)
                if (in_lattice(alg, i, k, true)) shifted.push_back({i, k});
        std::uniform_int_distribution<std::size_t> pick(0, shifted.size() - 1);
        std::uniform_int_distribution<int> expo(-2, 2);
        for (int trial = 0; trial < 40; ++trial) {
            std::map<Lp, int> f;
            YMonomial prod;
            for (int t = 0; t < 3; ++t) {
                const Lp p = shifted[pick(rng)];
                const int e = expo(rng);
                if (e == 0) continue;
                f[p] += e;
                if (f[p] == 0) f.erase(p);
                prod *= a_monomial(alg, p).pow(e);
            }
            const auto got = a_factorize(prod, YMonomial::one(), alg);
            CHECK(got.factors == f);
        }
    }
}

TEST_CASE("node projection") {
    CHECK(beta_project(parse_ym("Y[1,0]*Y[2,3]^-1"), 1) == parse_ym("Y[1,0]"));
    CHECK(beta_project(parse_ym("Y[1,0]"), 2).is_one());
    CHECK(beta_project(parse_ym("Y[2,1]*Y[2,5]"), 2) == parse_ym("Y[2,1]*Y[2,5]"));
}

TEST_CASE("truncation") {
    // the four-term spinor character
    const Character spinor = chr({{"Y[2,1]", 1},
                                  {"Y[1,2]*Y[2,3]^-1", 1},
                                  {"Y[2,5]*Y[1,6]^-1", 1},
                                  {"Y[2,7]^-1", 1}});
    const auto head = parse_ym("Y[2,1]");
    CHECK(truncate_character(spinor, head, {{2, 2}}, B2) ==
          chr({{"Y[2,1]", 1}, {"Y[1,2]*Y[2,3]^-1", 1}}));
    CHECK(truncate_character(spinor, head, {}, B2) == chr({{"Y[2,1]", 1}}));

    std::set<Lp> everything;
    for (int i = 1; i <= 2; ++i)
        for (int k = -2; k <= 10; ++k)
            if (in_lattice(B2, i, k, true)) everything.insert({i, k});
    CHECK(truncate_character(spinor, head, everything, B2) == spinor);

    // retained terms keep their coefficients, and the set only shrinks
    const auto t = truncate_character(spinor, head, {{2, 2}, {1, 4}}, B2);
    for (const auto& [m, c] : t.terms()) CHECK(spinor.coeff(m) == c);
}

TEST_CASE("overflow detection") {
    CHECK_THROWS_AS(checked_mul(1'000'000'000'000LL, 1'000'000'000'000LL), Error);
    Character big;
    big.add(YMonomial::one(), 4'000'000'000'000'000'000LL);
    Character two;
    two.add(YMonomial::one(), 2);
    CHECK_THROWS_AS(big * two, Error);
}
