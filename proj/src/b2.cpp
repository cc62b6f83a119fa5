#include "qsnake/b2.hpp"

#include <algorithm>

namespace qsnake {

void GCharacter::add(GWeight w, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, 0);
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

long long GCharacter::coeff(GWeight w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

long long GCharacter::dim() const {
    long long d = 0;
    for (const auto& [w, c] : terms_) d = checked_add(d, c);
    return d;
}

GCharacter& GCharacter::operator+=(const GCharacter& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

GCharacter& GCharacter::operator-=(const GCharacter& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

GCharacter operator*(const GCharacter& x, const GCharacter& y) {
    GCharacter r;
    for (const auto& [w1, c1] : x.terms_)
        for (const auto& [w2, c2] : y.terms_)
            r.add({w1.a + w2.a, w1.b + w2.b}, checked_mul(c1, c2));
    return r;
}

GWeight reflect1(GWeight w) { return {-w.a, w.b + 2 * w.a}; }
GWeight reflect2(GWeight w) { return {w.a + w.b, -w.b}; }

GCharacter weyl_numerator(GWeight lam) {
    if (!lam.dominant()) fail(errc::not_dominant, "numerator needs a dominant weight");
    const int l1 = lam.a, l2 = lam.b;
    GCharacter n;
    n.add({l1 + 1, l2 + 1}, 1);
    n.add({-l1 - 1, l2 + 2 * l1 + 3}, -1);
    n.add({l2 + l1 + 2, -l2 - 1}, -1);
    n.add({-l2 - l1 - 2, l2 + 2 * l1 + 3}, 1);
    n.add({l2 + l1 + 2, -l2 - 2 * l1 - 3}, 1);
    n.add({-l2 - l1 - 2, l2 + 1}, -1);
    n.add({l1 + 1, -l2 - 2 * l1 - 3}, -1);
    n.add({-l1 - 1, -l2 - 1}, 1);
    return n;
}

long long b2_weyl_dim(GWeight lam) {
    if (!lam.dominant()) fail(errc::not_dominant, "dimension needs a dominant weight");
    const long long a = lam.a, b = lam.b;
    return (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) / 6;
}

namespace {

GWeight leading(const GCharacter& c) {
    // lexicographic leading weight; terms() is sorted so the last entry leads
    return c.terms().rbegin()->first;
}

} // namespace

GCharacter weyl_character(GWeight lam) {
    const GCharacter num = weyl_numerator(lam);
    const GCharacter den = weyl_numerator({0, 0});
    GCharacter rem = num, quo;
    const long long guard = 4 * b2_weyl_dim(lam) + 64;
    long long steps = 0;
    while (!rem.is_zero()) {
        if (++steps > guard) fail(errc::division_not_exact, "numerator division diverged");
        const GWeight lr = leading(rem);
        const GWeight ld = leading(den);
        const long long cr = rem.coeff(lr);
        const long long cd = den.coeff(ld);
        if (cr % cd != 0) fail(errc::division_not_exact, "leading coefficient not divisible");
        const GWeight t{lr.a - ld.a, lr.b - ld.b};
        const long long ct = cr / cd;
        quo.add(t, ct);
        GCharacter sub;
        for (const auto& [w, c] : den.terms()) sub.add({w.a + t.a, w.b + t.b}, checked_mul(c, ct));
        rem -= sub;
    }
    return quo;
}

std::map<GWeight, long long> decompose(const GCharacter& c) {
    std::map<GWeight, long long> mult;
    GCharacter rem = c;
    while (!rem.is_zero()) {
        // maximal by (a+b, a) among nonzero weights; a linear extension of dominance
        GWeight best{};
        long long coeff = 0;
        bool have = false;
        for (const auto& [w, x] : rem.terms()) {
            if (!have || std::pair(w.a + w.b, w.a) > std::pair(best.a + best.b, best.a)) {
                best = w;
                coeff = x;
                have = true;
            }
        }
        if (!best.dominant())
            fail(errc::not_a_character, "maximal weight not dominant");
        if (coeff < 0) fail(errc::not_a_character, "negative multiplicity");
        rem -= [&] {
            GCharacter t = weyl_character(best);
            GCharacter scaled;
            for (const auto& [w, x] : t.terms()) scaled.add(w, checked_mul(x, coeff));
            return scaled;
        }();
        mult[best] += coeff;
    }
    return mult;
}

GCharacter restrict_to_b2(const Character& c, const Algebra& alg) {
    if (!alg.is_type_b() || alg.rank() != 2) fail(errc::bad_params, "needs the rank-2 type B algebra");
    GCharacter g;
    for (const auto& [w, x] : restrict_weights(c, alg)) g.add({w[0], w[1]}, x);
    return g;
}

Snake wq_snake(const Algebra& alg, int m, int mid, int n) {
    if (!alg.is_type_b() || alg.rank() != 2) fail(errc::bad_params, "needs the rank-2 type B algebra");
    if (m < 0 || mid < 0 || n < 0) fail(errc::bad_params, "negative block length");
    std::vector<Lp> pts;
    for (int t = 0; t < m; ++t) pts.push_back({1, 4 * t});
    for (int t = 0; t < mid; ++t) pts.push_back({2, 4 * m + 1 + 2 * t});
    for (int t = 1; t <= n; ++t) pts.push_back({1, 4 * m + 2 * mid + 4 * t});
    return validate_snake(alg, pts);
}

GCharacter wq_character(const Algebra& alg, int m, int mid, int n, const QCharOptions& opts) {
    return restrict_to_b2(qchar_snake(alg, wq_snake(alg, m, mid, n), opts).character, alg);
}

std::map<GWeight, long long> wq_decompose(int m, int mid, int n, const QCharOptions& opts) {
    const Algebra alg(AlgebraKind::TypeB, 2);
    return decompose(wq_character(alg, m, mid, n, opts));
}

std::map<GWeight, long long> wq_expected(int m, int mid, int n) {
    std::map<GWeight, long long> out;
    if (mid % 2 == 1) {
        const int k = (mid - 1) / 2;
        for (int i = 0; i <= std::min(m, n); ++i)
            for (int j = 0; j <= k; ++j) out[{m + n - 2 * i, 2 * i + 2 * k - 2 * j + 1}] += 1;
    } else {
        const int k = mid / 2;
        for (int i = 0; i <= std::min(m, n); ++i)
            for (int j = 0; j <= i + k; ++j) out[{m + n - 2 * i, 2 * i + 2 * k - 2 * j}] += 1;
    }
    return out;
}

bool QSystemReport::all_hold() const {
    return std::all_of(items.begin(), items.end(), [](const Item& it) { return it.holds; });
}

QSystemReport verify_b2_qsystem(int max_index, const QCharOptions& opts) {
    const Algebra alg(AlgebraKind::TypeB, 2);
    std::map<std::tuple<int, int, int>, GCharacter> memo;
    auto wq = [&](int m, int mid, int n) -> const GCharacter& {
        auto key = std::tuple(m, mid, n);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, wq_character(alg, m, mid, n, opts)).first;
        return it->second;
    };

    QSystemReport rep;
    auto record = [&](const std::string& name, bool holds) {
        rep.items.push_back({name, holds});
    };

    for (int m = 0; m <= max_index; ++m)
        for (int k = 0; k <= max_index; ++k)
            for (int n = 0; n <= max_index; ++n) {
                const bool holds =
                    wq(m, 2 * k + 1, n + 1) * wq(m + 1, 2 * k + 1, n) ==
                    wq(m + 1, 2 * k + 1, n + 1) * wq(m, 2 * k + 1, n) +
                        wq(k, 2 * n + 1, 0) * wq(k, 2 * m + 1, 0);
                record("three-block m=" + std::to_string(m) + " k=" + std::to_string(k) +
                           " n=" + std::to_string(n),
                       holds);
            }

    for (int m = 0; m <= max_index; ++m)
        for (int k = 0; k <= max_index; ++k) {
            const bool holds = wq(m + 1, 2 * k, 0) * wq(m, 2 * k + 1, 0) ==
                               wq(m + 1, 2 * k + 1, 0) * wq(m, 2 * k, 0) +
                                   wq(k, 0, 0) * wq(k, 2 * m + 1, 0);
            record("mixed m=" + std::to_string(m) + " k=" + std::to_string(k), holds);
        }

    for (int m = 0; m <= max_index; ++m) {
        const bool holds = wq(m + 1, 0, 0) * wq(m + 1, 0, 0) ==
                           wq(m + 2, 0, 0) * wq(m, 0, 0) + wq(0, 2 * m + 2, 0);
        record("node1 m=" + std::to_string(m), holds);
    }

    for (int k = 0; k <= max_index; ++k) {
        const bool holds = wq(0, k + 1, 0) * wq(0, k + 1, 0) ==
                           wq(0, k + 2, 0) * wq(0, k, 0) +
                               wq((k + 1) / 2, 0, 0) * wq((k + 2) / 2, 0, 0);
        record("node2 k=" + std::to_string(k), holds);
    }

    return rep;
}

} // namespace qsnake
