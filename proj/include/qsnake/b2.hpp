#pragma once

#include <map>

#include "qsnake/tsystem.hpp"

namespace qsnake {

// Weight of the rank-2 orthogonal finite-type algebra in the
// fundamental-weight basis; omega_2 is the spinor weight.
struct GWeight {
    int a = 0;
    int b = 0;
    auto operator<=>(const GWeight&) const = default;
    bool dominant() const { return a >= 0 && b >= 0; }
};

class GCharacter {
public:
    GCharacter() = default;
    explicit GCharacter(GWeight w) { add(w, 1); }

    void add(GWeight w, long long c);
    long long coeff(GWeight w) const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<GWeight, long long>& terms() const { return terms_; }
    long long dim() const;

    GCharacter& operator+=(const GCharacter& o);
    GCharacter& operator-=(const GCharacter& o);
    friend GCharacter operator+(GCharacter x, const GCharacter& y) { x += y; return x; }
    friend GCharacter operator-(GCharacter x, const GCharacter& y) { x -= y; return x; }
    friend GCharacter operator*(const GCharacter& x, const GCharacter& y);
    friend bool operator==(const GCharacter& x, const GCharacter& y) {
        return x.terms_ == y.terms_;
    }

private:
    std::map<GWeight, long long> terms_;
};

// Simple reflections acting in the fundamental-weight basis.
GWeight reflect1(GWeight w);
GWeight reflect2(GWeight w);

// The alternating Weyl-group numerator: eight signed terms.
GCharacter weyl_numerator(GWeight lam);

// Exact character of the simple module of highest weight lam, computed by
// exact division of numerators.
GCharacter weyl_character(GWeight lam);

long long b2_weyl_dim(GWeight lam);

// Multiplicities of simples by iterated highest-weight stripping.
std::map<GWeight, long long> decompose(const GCharacter& c);

// Restriction of a q-character of the rank-2 type-B algebra.
GCharacter restrict_to_b2(const Character& c, const Algebra& alg);

// The snake underlying the three-block module (m node-1 points, mid spinor
// points, n node-1 points).
Snake wq_snake(const Algebra& alg, int m, int mid, int n);

GCharacter wq_character(const Algebra& alg, int m, int mid, int n, const QCharOptions& opts = {});

std::map<GWeight, long long> wq_decompose(int m, int mid, int n, const QCharOptions& opts = {});

// Expected decomposition per the closed forms (odd and even middle).
std::map<GWeight, long long> wq_expected(int m, int mid, int n);

struct QSystemReport {
    struct Item {
        std::string name;
        bool holds = false;
    };
    std::vector<Item> items;
    bool all_hold() const;
};

// Verifies the four recurrences as exact character identities over the index box.
QSystemReport verify_b2_qsystem(int max_index, const QCharOptions& opts = {});

} // namespace qsnake
