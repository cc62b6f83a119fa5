#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsnake/algebra.hpp"

namespace qsnake {

// Exact sparse Laurent monomial in the variables Y_{i,k}.
// Canonical: no zero exponents; iteration ordered by (i,k).
class YMonomial {
public:
    YMonomial() = default;

    static YMonomial one() { return YMonomial(); }
    static YMonomial y(Lp p, int e = 1);

    int exponent(Lp p) const;
    bool is_one() const { return exps_.empty(); }
    const std::map<Lp, int>& factors() const { return exps_; }

    void mul_y(Lp p, int e); // multiply by Y_p^e in place
    YMonomial& operator*=(const YMonomial& o);
    friend YMonomial operator*(YMonomial a, const YMonomial& b) { a *= b; return a; }
    YMonomial inverse() const;
    YMonomial pow(int e) const;

    bool dominant() const;     // all exponents >= 0
    bool antidominant() const; // all exponents <= 0
    bool node_dominant(int j) const;

    // Total ordering used for canonical term order and map keys.
    friend bool operator==(const YMonomial& a, const YMonomial& b) { return a.exps_ == b.exps_; }
    friend bool operator<(const YMonomial& a, const YMonomial& b);

    std::string str() const; // e.g. "Y[1,0]*Y[2,3]^-1", "1"

private:
    std::map<Lp, int> exps_;
};

// Integer-linear combination of monomials. Canonical: no zero coefficients.
class Character {
public:
    Character() = default;
    explicit Character(const YMonomial& m) { add(m, 1); }

    static Character one() { return Character(YMonomial::one()); }

    void add(const YMonomial& m, long long c);
    long long coeff(const YMonomial& m) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<YMonomial, long long>& terms() const { return terms_; }

    Character& operator+=(const Character& o);
    Character& operator-=(const Character& o);
    friend Character operator+(Character a, const Character& b) { a += b; return a; }
    friend Character operator-(Character a, const Character& b) { a -= b; return a; }
    friend Character operator*(const Character& a, const Character& b);
    Character& operator*=(const Character& o) { *this = *this * o; return *this; }

    friend bool operator==(const Character& a, const Character& b) { return a.terms_ == b.terms_; }

    long long dim() const; // sum of coefficients

    std::string str() const;

private:
    std::map<YMonomial, long long> terms_;
};

// Weight in the fundamental-weight basis, one coordinate per node.
using Weight = std::vector<int>;

// Exponent map of an A-variable factorization; indices lie in the shifted lattice.
struct AFactorization {
    std::map<Lp, int> factors;

    bool all_nonpositive() const;
    // v-degree: minus the exponent sum (meaningful when all exponents <= 0).
    int degree() const;
};

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

// Expansion of the root monomial A_{i,k}; requires (i,k) in the shifted lattice.
YMonomial a_monomial(const Algebra& alg, int i, int k);
inline YMonomial a_monomial(const Algebra& alg, Lp p) { return a_monomial(alg, p.i, p.k); }

int u_exponent(const YMonomial& m, int i, int k);
Weight weight(const YMonomial& m, const Algebra& alg);
int height(const YMonomial& m, const Algebra& alg);
YMonomial beta_project(const YMonomial& m, int j);

// Unique exponents f with num/den = prod A_{i,k}^{f(i,k)}.
// Throws NotInRootLattice when no solution exists.
AFactorization a_factorize(const YMonomial& num, const YMonomial& den, const Algebra& alg);

// Keeps the terms m of c with m = m_plus * prod_{(i,k) in U} A_{i,k}^{-n_{i,k}},
// n >= 0. Terms with no A-factorization against m_plus are dropped.
Character truncate_character(const Character& c, const YMonomial& m_plus,
                             const std::set<Lp>& region, const Algebra& alg);

bool is_dominant(const YMonomial& m);
bool is_antidominant(const YMonomial& m);

} // namespace qsnake
