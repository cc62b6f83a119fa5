#include "qsnake/snake.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace qsnake {

namespace {
int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}
} // namespace

YMonomial Snake::highest_monomial() const {
    YMonomial m;
    for (const auto& p : points) m.mul_y(p, 1);
    return m;
}

Position position_kind(const Algebra& alg, Lp p, Lp q) {
    require_lattice(alg, p);
    require_lattice(alg, q);
    const int d = q.k - p.k;
    const int gap = std::abs(q.i - p.i);
    Position pos;

    if (alg.is_type_a()) {
        const int lb = gap + 2;
        if (d < lb) return pos;
        pos.kind = d == lb ? PositionKind::MinimalSnake : PositionKind::Snake;
        pos.prime = d <= p.i + q.i;
        return pos;
    }

    const int n = alg.rank();
    int lb, residue, ub;
    if (p.i == n && q.i == n) {
        lb = 2;
        residue = 2;
        ub = 4 * n - 2;
    } else if (p.i == n || q.i == n) {
        lb = 2 * gap + 3;
        residue = mod(2 * gap - 1, 4);
        ub = 2 * p.i + 2 * q.i - 1;
    } else {
        lb = 2 * gap + 4;
        residue = mod(2 * gap, 4);
        ub = 2 * p.i + 2 * q.i;
    }
    if (d < lb || mod(d, 4) != residue) return pos;
    pos.kind = d == lb ? PositionKind::MinimalSnake : PositionKind::Snake;
    pos.prime = d <= ub;
    return pos;
}

Snake validate_snake(const Algebra& alg, const std::vector<Lp>& pts) {
    Snake s;
    s.points = pts;
    for (std::size_t t = 0; t < pts.size(); ++t) {
        if (!in_lattice(alg, pts[t]))
            fail(errc::not_a_snake,
                 "point " + std::to_string(t) + " = " + to_string(pts[t]) + " not in the lattice");
        if (t == 0) continue;
        const Position pos = position_kind(alg, pts[t - 1], pts[t]);
        if (!pos.is_snake())
            fail(errc::not_a_snake, "points " + std::to_string(t - 1) + "," + std::to_string(t) +
                                        " not in snake position");
        s.minimal = s.minimal && pos.is_minimal();
        s.prime = s.prime && pos.prime;
    }
    return s;
}

std::pair<std::vector<Lp>, std::vector<Lp>> neighbouring_points(const Algebra& alg, Lp p, Lp q) {
    if (!position_kind(alg, p, q).prime)
        fail(errc::not_prime_position,
             to_string(q) + " not in prime snake position to " + to_string(p));
    const Path ps = snake_lowered_path(alg, p, q);
    const auto uppers = upper_corners_indexed(alg, ps);
    const auto lowers = lower_corners_indexed(alg, ps);
    if (lowers.size() != 1) fail(errc::internal, "snake-lowered path with stray lower corners");
    const int pivot = lowers[0].second;

    std::vector<Lp> before, after;
    for (const auto& [pt, idx] : uppers) (idx < pivot ? before : after).push_back(pt);
    auto by_shift = [](Lp a, Lp b) { return a.k != b.k ? a.k < b.k : a.i < b.i; };
    std::sort(before.begin(), before.end(), by_shift);
    std::sort(after.begin(), after.end(), by_shift);
    return {before, after};
}

std::pair<std::vector<Lp>, std::vector<Lp>> closed_form_neighbour_points(const Algebra& alg,
                                                                         Lp p, Lp q) {
    if (!position_kind(alg, p, q).prime)
        fail(errc::not_prime_position, "pair not in prime snake position");
    const auto [i, k] = p;
    const auto [i2, k2] = q;
    const int n = alg.rank();
    auto single = [&](int node, int shift) -> std::vector<Lp> {
        if (node < 1 || node > n) return {};
        return {Lp{node, shift}};
    };

    if (alg.is_type_a()) {
        std::vector<Lp> first, second;
        if (k + i > k2 - i2) first = single((i + k + i2 - k2) / 2, (i + k - i2 + k2) / 2);
        if (k + n + 1 - i > k2 - (n + 1 - i2))
            second = single((i2 + k2 + i - k) / 2, (i2 + k2 - i + k) / 2);
        return {first, second};
    }

    const int d = k2 - k;
    std::vector<Lp> b, f;
    if (i < n && i2 < n) {
        if (d < 2 * i + 2 * i2) b = single((2 * i + k + 2 * i2 - k2) / 4, (2 * i + k - 2 * i2 + k2) / 2);
        if (d <= 4 * n - 4 - 2 * i - 2 * i2) {
            f = single((2 * i2 + k2 + 2 * i - k) / 4, (2 * i2 + k2 - 2 * i + k) / 2);
        } else {
            f = {Lp{n, k + 2 * n - 1 - 2 * i}, Lp{n, k2 - 2 * n + 1 + 2 * i2}};
        }
    } else if (i < n && i2 == n) {
        if (d < 2 * i + 2 * n - 1)
            b = single((2 * i + k + 2 * n - 1 - k2) / 4, (2 * i + k - 2 * n + 1 + k2) / 2);
        f = single(n, k + 2 * n - 1 - 2 * i);
    } else if (i == n && i2 < n) {
        // printed entry has the wrong parity; the in-lattice form uses k2
        b = single(n, k2 - 2 * n + 1 + 2 * i2);
        // the printed f-cases require d <= 2N-1-2i2, unreachable in prime position
    } else {
        f = single((4 * n - 2 + k - k2) / 4, (k + k2) / 2);
    }

    const bool b_first = (i < n && mod(2 * n - 2 * i - k, 4) == 2) || (i == n && mod(k, 4) == 1);
    if (b_first) return {b, f};
    return {f, b};
}

namespace {

bool appendable(const Algebra& alg, const std::vector<Lp>& chain, const std::vector<Lp>& group) {
    Lp last{};
    bool has_last = !chain.empty();
    if (has_last) last = chain.back();
    for (const auto& pt : group) {
        if (has_last && !position_kind(alg, last, pt).is_snake()) return false;
        last = pt;
        has_last = true;
    }
    return true;
}

} // namespace

NeighbourPair neighbour_snakes(const Algebra& alg, const Snake& s) {
    if (s.size() < 2) fail(errc::snake_too_short, "need length >= 2");
    if (!s.prime) fail(errc::not_prime, "snake is not prime");

    std::vector<std::pair<std::vector<Lp>, std::vector<Lp>>> groups;
    for (std::size_t t = 0; t + 1 < s.size(); ++t)
        groups.push_back(neighbouring_points(alg, s.points[t], s.points[t + 1]));

    std::vector<Lp> cx, cy;
    auto rec = [&](auto&& self, std::size_t t) -> bool {
        if (t == groups.size()) {
            std::set<Lp> seen(cx.begin(), cx.end());
            for (const auto& pt : cy)
                if (seen.count(pt)) return false;
            return true;
        }
        for (int orient = 0; orient < 2; ++orient) {
            const auto& gx = orient == 0 ? groups[t].first : groups[t].second;
            const auto& gy = orient == 0 ? groups[t].second : groups[t].first;
            if (!appendable(alg, cx, gx) || !appendable(alg, cy, gy)) continue;
            const auto nx = cx.size(), ny = cy.size();
            cx.insert(cx.end(), gx.begin(), gx.end());
            cy.insert(cy.end(), gy.begin(), gy.end());
            if (self(self, t + 1)) return true;
            cx.resize(nx);
            cy.resize(ny);
            if (groups[t].first == groups[t].second) break; // swap is identical
        }
        return false;
    };
    if (!rec(rec, 0)) {
        std::string diag = "no valid chain assignment for " + to_string(s) + "; groups:";
        for (const auto& [g1, g2] : groups) {
            diag += " [";
            for (auto pt : g1) diag += to_string(pt);
            diag += "|";
            for (auto pt : g2) diag += to_string(pt);
            diag += "]";
        }
        fail(errc::assignment_failed, diag);
    }
    return {validate_snake(alg, cx), validate_snake(alg, cy)};
}

namespace {

bool monotonic(const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end()) || std::is_sorted(v.rbegin(), v.rend());
}

} // namespace

bool is_minimal_affinization(const Snake& s) {
    if (!s.minimal) return false;
    std::vector<int> nodes;
    for (const auto& p : s.points) nodes.push_back(p.i);
    return monotonic(nodes);
}

bool is_wrapping(const Algebra& alg, const Snake& s) {
    if (!s.minimal) return false;
    std::vector<int> xs;
    for (const auto& p : s.points) xs.push_back(iota(alg, p).x);
    return monotonic(xs);
}

std::vector<Snake> prime_decomposition(const Algebra& alg, const Snake& s) {
    std::vector<Snake> out;
    std::vector<Lp> cur;
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (!cur.empty() && !position_kind(alg, cur.back(), s.points[t]).prime) {
            out.push_back(validate_snake(alg, cur));
            cur.clear();
        }
        cur.push_back(s.points[t]);
    }
    if (!cur.empty()) out.push_back(validate_snake(alg, cur));
    return out;
}

std::string to_string(const Snake& s) {
    std::string r;
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (t) r += ",";
        r += to_string(s.points[t]);
    }
    return r.empty() ? "(empty)" : r;
}

} // namespace qsnake
