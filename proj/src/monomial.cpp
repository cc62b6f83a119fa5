#include "qsnake/monomial.hpp"

#include <algorithm>
#include <limits>

namespace qsnake {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in add");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in mul");
    return r;
}

YMonomial YMonomial::y(Lp p, int e) {
    YMonomial m;
    m.mul_y(p, e);
    return m;
}

int YMonomial::exponent(Lp p) const {
    auto it = exps_.find(p);
    return it == exps_.end() ? 0 : it->second;
}

void YMonomial::mul_y(Lp p, int e) {
    if (e == 0) return;
    auto [it, inserted] = exps_.emplace(p, 0);
    it->second = static_cast<int>(checked_add(it->second, e));
    if (it->second == 0) exps_.erase(it);
}

YMonomial& YMonomial::operator*=(const YMonomial& o) {
    for (const auto& [p, e] : o.exps_) mul_y(p, e);
    return *this;
}

YMonomial YMonomial::inverse() const {
    YMonomial m;
    for (const auto& [p, e] : exps_) m.exps_.emplace(p, -e);
    return m;
}

YMonomial YMonomial::pow(int e) const {
    YMonomial m;
    if (e == 0) return m;
    for (const auto& [p, x] : exps_) m.exps_.emplace(p, static_cast<int>(checked_mul(x, e)));
    return m;
}

bool YMonomial::dominant() const {
    return std::all_of(exps_.begin(), exps_.end(), [](const auto& t) { return t.second > 0; });
}

bool YMonomial::antidominant() const {
    return std::all_of(exps_.begin(), exps_.end(), [](const auto& t) { return t.second < 0; });
}

bool YMonomial::node_dominant(int j) const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [j](const auto& t) { return t.first.i != j || t.second > 0; });
}

bool operator<(const YMonomial& a, const YMonomial& b) {
    return std::lexicographical_compare(
        a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end(),
        [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

std::string YMonomial::str() const {
    if (exps_.empty()) return "1";
    std::string s;
    bool first = true;
    for (const auto& [p, e] : exps_) {
        if (!first) s += "*";
        first = false;
        s += "Y[" + std::to_string(p.i) + "," + std::to_string(p.k) + "]";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

void Character::add(const YMonomial& m, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, 0);
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

long long Character::coeff(const YMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

Character& Character::operator+=(const Character& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Character& Character::operator-=(const Character& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Character operator*(const Character& a, const Character& b) {
    Character r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add(ma * mb, checked_mul(ca, cb));
    return r;
}

long long Character::dim() const {
    long long d = 0;
    for (const auto& [m, c] : terms_) d = checked_add(d, c);
    return d;
}

std::string Character::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        if (c != 1) s += std::to_string(c) + "*";
        s += m.str();
    }
    return s;
}

bool AFactorization::all_nonpositive() const {
    return std::all_of(factors.begin(), factors.end(), [](const auto& t) { return t.second <= 0; });
}

int AFactorization::degree() const {
    int d = 0;
    for (const auto& [p, e] : factors) d -= e;
    return d;
}

YMonomial a_monomial(const Algebra& alg, int i, int k) {
    require_lattice(alg, {i, k}, true);
    const int n = alg.rank();
    const int ri = alg.r(i);
    YMonomial m;
    m.mul_y({i, k - ri}, 1);
    m.mul_y({i, k + ri}, 1);
    for (int j : {i - 1, i + 1}) {
        if (j < 1 || j > n) continue;
        switch (alg.cartan(j, i)) {
            case -1: m.mul_y({j, k}, -1); break;
            case -2:
                m.mul_y({j, k - 1}, -1);
                m.mul_y({j, k + 1}, -1);
                break;
            default: fail(errc::internal, "unexpected Cartan entry");
        }
    }
    return m;
}

int u_exponent(const YMonomial& m, int i, int k) { return m.exponent({i, k}); }

Weight weight(const YMonomial& m, const Algebra& alg) {
    Weight w(static_cast<std::size_t>(alg.rank()), 0);
    for (const auto& [p, e] : m.factors()) w[static_cast<std::size_t>(p.i - 1)] += e;
    return w;
}

int height(const YMonomial& m, const Algebra& alg) {
    int h = 0;
    for (const auto& [p, e] : m.factors()) h += e * alg.r(p.i);
    return h;
}

YMonomial beta_project(const YMonomial& m, int j) {
    YMonomial r;
    for (const auto& [p, e] : m.factors())
        if (p.i == j) r.mul_y(p, e);
    return r;
}

// Solves num/den = prod A^f greedily from the top: the Y-factor with the
// largest shift can only be the upper factor of a single A-variable, so each
// step is forced. The result is certified by re-expansion.
AFactorization a_factorize(const YMonomial& num, const YMonomial& den, const Algebra& alg) {
    YMonomial m = num * den.inverse();
    AFactorization f;
    if (m.is_one()) return f;

    int lo = std::numeric_limits<int>::max();
    for (const auto& [p, e] : m.factors()) lo = std::min(lo, p.k);

    while (!m.is_one()) {
        // Top entry: maximal shift, then maximal node.
        Lp top{0, 0};
        int e = 0;
        bool found = false;
        for (const auto& [p, x] : m.factors()) {
            if (!found || p.k > top.k || (p.k == top.k && p.i > top.i)) {
                top = p;
                e = x;
                found = true;
            }
        }
        const Lp a{top.i, top.k - alg.r(top.i)};
        if (a.k < lo || !in_lattice(alg, a, true))
            fail(errc::not_in_root_lattice, "no A-factorization of " + (num * den.inverse()).str());
        f.factors[a] = e;
        m *= a_monomial(alg, a).pow(-e);
    }

    YMonomial check;
    for (const auto& [p, e] : f.factors) check *= a_monomial(alg, p).pow(e);
    if (!(check == num * den.inverse())) fail(errc::internal, "a_factorize certification failed");
    return f;
}

Character truncate_character(const Character& c, const YMonomial& m_plus,
                             const std::set<Lp>& region, const Algebra& alg) {
    Character out;
    for (const auto& [m, coeff] : c.terms()) {
        AFactorization f;
        try {
            f = a_factorize(m, m_plus, alg);
        } catch (const Error& e) {
            if (e.code() == errc::not_in_root_lattice) continue;
            throw;
        }
        if (!f.all_nonpositive()) continue;
        bool inside = true;
        for (const auto& [p, e] : f.factors)
            if (!region.count(p)) { inside = false; break; }
        if (inside) out.add(m, coeff);
    }
    return out;
}

bool is_dominant(const YMonomial& m) { return m.dominant(); }
bool is_antidominant(const YMonomial& m) { return m.antidominant(); }

} // namespace qsnake
