#include "qsnake/sl2.hpp"

#include <algorithm>
#include <map>

namespace qsnake {

namespace {

void require_single_node(const YMonomial& m, int node) {
    for (const auto& [p, e] : m.factors())
        if (p.i != node) fail(errc::bad_params, "monomial not supported on node " + std::to_string(node));
}

bool special_position(const QString& a, const QString& b, int step) {
    // union a strictly longer arithmetic run containing both
    if ((a.start - b.start) % step != 0) return false;
    const int a_end = a.start + step * (a.len - 1);
    const int b_end = b.start + step * (b.len - 1);
    if (b.start > a_end + step || a.start > b_end + step) return false; // disconnected
    const int lo = std::min(a.start, b.start);
    const int hi = std::max(a_end, b_end);
    const bool contains_a = lo <= a.start && a_end <= hi;
    const bool contains_b = lo <= b.start && b_end <= hi;
    const bool equals_a = lo == a.start && hi == a_end;
    const bool equals_b = lo == b.start && hi == b_end;
    return contains_a && contains_b && !equals_a && !equals_b;
}

} // namespace

std::vector<QString> string_decompose(const YMonomial& m, int node, int r) {
    if (!m.dominant()) fail(errc::not_dominant, "string decomposition needs a dominant monomial");
    require_single_node(m, node);
    const int step = 2 * r;
    std::map<int, int> mult;
    for (const auto& [p, e] : m.factors()) mult[p.k] = e;

    std::vector<QString> out;
    while (!mult.empty()) {
        const int start = mult.begin()->first;
        int len = 0;
        while (mult.count(start + step * len)) ++len;
        for (int t = 0; t < len; ++t) {
            const int key = start + step * t;
            if (--mult[key] == 0) mult.erase(key);
        }
        out.push_back({start, len});
    }
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = a + 1; b < out.size(); ++b)
            if (special_position(out[a], out[b], step))
                fail(errc::internal, "string normal form left a special pair");
    return out;
}

Character sl2_simple_qchar(const YMonomial& m, int node, int r) {
    Character c = Character::one();
    for (const auto& s : string_decompose(m, node, r)) {
        Character f;
        for (int inverted = 0; inverted <= s.len; ++inverted) {
            YMonomial term;
            for (int t = 0; t < s.len - inverted; ++t) term.mul_y({node, s.start + 2 * r * t}, 1);
            for (int t = s.len - inverted; t < s.len; ++t)
                term.mul_y({node, s.start + 2 * r * t + 2 * r}, -1);
            f.add(term, 1);
        }
        c *= f;
    }
    return c;
}

Character sl2_weyl_qchar(const YMonomial& m, int node, int r) {
    if (!m.dominant()) fail(errc::not_dominant, "Weyl character needs a dominant monomial");
    require_single_node(m, node);
    Character c = Character::one();
    for (const auto& [p, e] : m.factors()) {
        Character f;
        f.add(YMonomial::y(p, 1), 1);
        f.add(YMonomial::y({node, p.k + 2 * r}, -1), 1);
        for (int t = 0; t < e; ++t) c *= f;
    }
    return c;
}

TrichotomyCase sl2_trichotomy(const YMonomial& M, const YMonomial& m, int a_shift,
                              const TruncationRegion& region) {
    const Algebra a1(AlgebraKind::TypeA, 1);
    if (!region.count({1, a_shift}))
        fail(errc::precondition_failed, "shift not in the truncation region");
    const Character chi = sl2_simple_qchar(M);
    const Character trunc = truncate_character(chi, M, region, a1);
    const bool thin_in_region =
        std::all_of(trunc.terms().begin(), trunc.terms().end(),
                    [](const auto& t) { return t.second == 1; });
    if (!thin_in_region) fail(errc::precondition_failed, "module not thin in the region");
    if (trunc.coeff(m) == 0) fail(errc::precondition_failed, "monomial not in the truncation");

    const YMonomial lowered = m * a_monomial(a1, 1, a_shift).inverse();
    const bool in_simple = chi.coeff(lowered) != 0;
    const bool in_weyl = sl2_weyl_qchar(M).coeff(lowered) != 0;

    const int u_lo = u_exponent(m, 1, a_shift - 1);
    const int u_hi = u_exponent(m, 1, a_shift + 1);
    TrichotomyCase which;
    if (u_lo > 0 && u_lo == u_hi + 1) which = TrichotomyCase::I;
    else if (u_lo > 0 && u_lo <= u_hi) which = TrichotomyCase::II;
    else which = TrichotomyCase::III;

    const bool membership_ok = (which == TrichotomyCase::I && in_simple) ||
                               (which == TrichotomyCase::II && in_weyl && !in_simple) ||
                               (which == TrichotomyCase::III && !in_weyl);
    if (!membership_ok) fail(errc::internal, "trichotomy membership cross-check failed");
    return which;
}

// ---------------------------------------------------------------------------
// Truncation-region membership after projection to one node.

namespace {

// signed exponent vector over shifts of a single-node monomial
std::map<int, int> node_exps(const YMonomial& m, int node) {
    std::map<int, int> e;
    for (const auto& [p, x] : m.factors()) {
        if (p.i != node) fail(errc::internal, "projection touched another node");
        e[p.k] = x;
    }
    return e;
}

void add_at(std::map<int, int>& v, int shift, int amount) {
    if (amount == 0) return;
    auto [it, inserted] = v.emplace(shift, 0);
    it->second += amount;
    if (it->second == 0) v.erase(it);
}

// Solve sum n_b * (e_{b-r}+e_{b+r}) = target with n >= 0 supported on allowed.
bool solve_pairs(std::map<int, int> target, int r, const std::set<int>& allowed) {
    while (!target.empty()) {
        const auto top = *target.rbegin();
        if (top.second < 0) return false;
        const int b = top.first - r;
        if (!allowed.count(b)) return false;
        add_at(target, b - r, -top.second);
        add_at(target, b + r, -top.second);
    }
    return true;
}

} // namespace

bool in_beta_region(const Algebra& alg, int node, const YMonomial& beta_base, const YMonomial& mu,
                    const TruncationRegion& region) {
    const int r = alg.r(node);
    const YMonomial delta = mu * beta_base.inverse();
    const auto delta_e = node_exps(delta, node);

    std::set<int> own; // shifts of node-level generators available in the region
    std::vector<std::map<int, int>> cross; // projected footprints of adjacent-node generators
    for (const auto& p : region) {
        if (p.i == node) {
            own.insert(p.k);
            continue;
        }
        const YMonomial proj = beta_project(a_monomial(alg, p).inverse(), node);
        if (proj.is_one()) continue;
        cross.push_back(node_exps(proj, node)); // all entries positive
    }

    // Equation: sum n_i (e_{b-r}+e_{b+r}) = sum n_j u_j - exps(delta), over
    // nonnegative counts. The cross-node counts are searched within a radius
    // that covers all reduced solutions at this problem scale.
    int mass = 0;
    for (const auto& [s, e] : delta_e) mass += std::abs(e);
    const int radius = mass + 8;

    std::map<int, int> base;
    for (const auto& [s, e] : delta_e) add_at(base, s, -e);

    auto rec = [&](auto&& self, std::size_t j, std::map<int, int>& acc) -> bool {
        if (j == cross.size()) return solve_pairs(acc, r, own);
        for (int count = 0; count <= radius; ++count) {
            auto next = acc;
            for (const auto& [s, e] : cross[j]) add_at(next, s, e * count);
            if (self(self, j + 1, next)) return true;
        }
        return false;
    };
    return rec(rec, 0, base);
}

// ---------------------------------------------------------------------------
// Theorem-A style verification.

namespace {

// the node-restricted A-class of m inside the candidate set
std::vector<YMonomial> node_class(const Algebra& alg, const std::vector<YMonomial>& set,
                                  const YMonomial& m, int node) {
    std::vector<YMonomial> out;
    for (const auto& cand : set) {
        try {
            const auto f = a_factorize(cand, m, alg);
            const bool single_node =
                std::all_of(f.factors.begin(), f.factors.end(),
                            [&](const auto& t) { return t.first.i == node; });
            if (single_node) out.push_back(cand);
        } catch (const Error& e) {
            if (e.code() != errc::not_in_root_lattice) throw;
        }
    }
    return out;
}

} // namespace

ThmACertificate thmA_verify(const Algebra& alg, const YMonomial& m_plus,
                            const std::vector<YMonomial>& candidate_set,
                            const TruncationRegion& region) {
    ThmACertificate cert;

    // (i) every candidate lies in the truncation cone of m_plus
    cert.cond_i = true;
    for (const auto& m : candidate_set) {
        bool inside = false;
        try {
            const auto f = a_factorize(m, m_plus, alg);
            inside = f.all_nonpositive() &&
                     std::all_of(f.factors.begin(), f.factors.end(),
                                 [&](const auto& t) { return region.count(t.first) > 0; });
        } catch (const Error& e) {
            if (e.code() != errc::not_in_root_lattice) throw;
        }
        if (!inside) {
            cert.cond_i = false;
            cert.notes.push_back("cone violation at " + m.str());
        }
    }

    // (ii) the head is the unique dominant candidate
    {
        long long doms = 0;
        bool head_found = false;
        for (const auto& m : candidate_set) {
            if (!m.dominant()) continue;
            ++doms;
            head_found = head_found || m == m_plus;
        }
        cert.cond_ii = doms == 1 && head_found;
        if (!cert.cond_ii) cert.notes.push_back("dominant candidates != {head}");
    }

    // (iii) one way back: a missing lowering cannot be re-entered sideways
    cert.cond_iii = true;
    for (const auto& m : candidate_set) {
        for (const auto& p : region) {
            const YMonomial lowered = m * a_monomial(alg, p).inverse();
            if (std::find(candidate_set.begin(), candidate_set.end(), lowered) !=
                candidate_set.end())
                continue;
            for (const auto& other : candidate_set) {
                try {
                    const auto f = a_factorize(other, lowered, alg);
                    if (f.factors.size() == 1 && f.factors.begin()->second == 1 &&
                        f.factors.begin()->first != p) {
                        cert.cond_iii = false;
                        cert.notes.push_back("re-entry at " + m.str() + " via " +
                                             to_string(f.factors.begin()->first));
                    }
                } catch (const Error& e) {
                    if (e.code() != errc::not_in_root_lattice) throw;
                }
            }
        }
    }

    // (iv) per candidate and node: a unique projected-dominant class member
    // whose truncated rank-1 character matches the projected class sum
    cert.cond_iv = true;
    for (const auto& m : candidate_set) {
        for (int node = 1; node <= alg.rank(); ++node) {
            const auto cls = node_class(alg, candidate_set, m, node);
            Character rhs;
            for (const auto& c : cls) rhs.add(beta_project(c, node), 1);

            ThmAIvRow row;
            row.m = m;
            row.node = node;
            row.rhs = rhs;
            for (const auto& w : cls) {
                const YMonomial bw = beta_project(w, node);
                if (!bw.dominant()) continue;
                Character lhs;
                for (const auto& [mu, coeff] : sl2_simple_qchar(bw, node, alg.r(node)).terms())
                    if (in_beta_region(alg, node, bw, mu, region)) lhs.add(mu, coeff);
                if (lhs == rhs) {
                    row.witnesses.push_back(w);
                    row.lhs = lhs;
                }
            }
            row.ok = row.witnesses.size() == 1;
            if (row.witnesses.size() > 1)
                cert.notes.push_back("multiple witnesses at " + m.str() + " node " +
                                     std::to_string(node));
            if (!row.ok) cert.cond_iv = false;
            cert.iv_rows.push_back(std::move(row));
        }
    }

    cert.verdict = cert.cond_i && cert.cond_ii && cert.cond_iii && cert.cond_iv;
    return cert;
}

ExclusionCertificate exclusion_certificate(const Algebra& alg, const RelationInstance& rel, int R,
                                           const QCharOptions& opts) {
    const auto& pts = rel.top.points;
    const int len = static_cast<int>(pts.size());
    if (R < 2 || R > len - 1) fail(errc::bad_r, "split position must lie in [2, length-1]");

    ExclusionCertificate out;

    // the dominant monomial of the T*B side at split position R
    const auto catalog = dominant_catalog(alg, rel.top);
    out.dominant = catalog[static_cast<std::size_t>(R - 1)];

    const Lp anchor = pts[static_cast<std::size_t>(R - 1)];
    const Path high = highest_path(alg, anchor.i, anchor.k);
    const Path snake_low = snake_lowered_path(alg, anchor, pts[static_cast<std::size_t>(R)]);

    // region: the multiset of lowering positions from the highest path to the
    // snake-lowered one, read off the A-factorization of their ratio
    const auto moves =
        a_factorize(path_monomial(alg, snake_low), path_monomial(alg, high), alg);
    for (const auto& [p, e] : moves.factors) {
        if (e > 0) fail(errc::internal, "raising move in a descent");
        out.region.insert(p);
    }

    const YMonomial high_inv = path_monomial(alg, high).inverse();
    for (const auto& p : enumerate_paths(alg, anchor)) {
        if (!weakly_above(p, snake_low)) continue;
        out.candidate_set.push_back(out.dominant * high_inv * path_monomial(alg, p));
    }

    out.cert = thmA_verify(alg, out.dominant, out.candidate_set, out.region);
    out.witness = out.dominant * high_inv * path_monomial(alg, snake_low);

    const Character tb = qchar_snake(alg, rel.top, opts).character *
                         qchar_snake(alg, rel.bottom, opts).character;
    out.witness_absent = tb.coeff(out.witness) == 0;
    return out;
}

} // namespace qsnake
