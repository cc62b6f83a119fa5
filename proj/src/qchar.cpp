#include "qsnake/qchar.hpp"

#include <algorithm>

namespace qsnake {

namespace {

// Per-column extent of a path, prepared once for fast overlap tests.
struct PathProfile {
    YMonomial mon;
    std::vector<std::pair<int, std::pair<YCoord, YCoord>>> cols; // x -> (min,max), sorted
};

PathProfile make_profile(const Algebra& alg, const Path& p) {
    PathProfile pr;
    pr.mon = path_monomial(alg, p);
    for (const auto& pt : p.points) {
        auto it = std::find_if(pr.cols.begin(), pr.cols.end(),
                               [&](const auto& c) { return c.first == pt.x; });
        if (it == pr.cols.end()) pr.cols.push_back({pt.x, {pt.y, pt.y}});
        else {
            it->second.first = std::min(it->second.first, pt.y);
            it->second.second = std::max(it->second.second, pt.y);
        }
    }
    std::sort(pr.cols.begin(), pr.cols.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return pr;
}

bool profile_above(const PathProfile& a, const PathProfile& b) {
    std::size_t i = 0, j = 0;
    while (i < a.cols.size() && j < b.cols.size()) {
        if (a.cols[i].first < b.cols[j].first) { ++i; continue; }
        if (a.cols[i].first > b.cols[j].first) { ++j; continue; }
        if (!(a.cols[i].second.second < b.cols[j].second.first)) return false;
        ++i;
        ++j;
    }
    return true;
}

} // namespace

QCharReport qchar_snake(const Algebra& alg, const Snake& s, const QCharOptions& opts) {
    QCharReport rep;
    if (s.empty()) {
        rep.character = Character::one();
        rep.thin = rep.special = rep.antispecial = true;
        rep.dim = 1;
        rep.dominant = {{YMonomial::one(), 1}};
        return rep;
    }

    std::vector<std::vector<PathProfile>> levels;
    for (const auto& pt : s.points) {
        std::vector<PathProfile> lv;
        for (const auto& p : enumerate_paths(alg, pt)) lv.push_back(make_profile(alg, p));
        levels.push_back(std::move(lv));
    }

    Character chi;
    std::vector<const PathProfile*> chosen;
    long long visited = 0;
    auto rec = [&](auto&& self, std::size_t t, const YMonomial& acc) -> void {
        if (t == levels.size()) {
            chi.add(acc, 1);
            return;
        }
        for (const auto& cand : levels[t]) {
            if (++visited > opts.max_visits)
                fail(errc::too_large,
                     "enumeration exceeded " + std::to_string(opts.max_visits) + " visits");
            // every earlier path must be strictly above the candidate; the
            // previous one prunes most, so test back to front
            bool ok = true;
            for (std::size_t u = chosen.size(); u-- > 0;) {
                if (!profile_above(*chosen[u], cand)) { ok = false; break; }
            }
            if (!ok) continue;
            chosen.push_back(&cand);
            self(self, t + 1, acc * cand.mon);
            chosen.pop_back();
        }
    };
    rec(rec, 0, YMonomial::one());

    rep.character = std::move(chi);
    rep.dim = rep.character.dim();
    rep.thin = std::all_of(rep.character.terms().begin(), rep.character.terms().end(),
                           [](const auto& t) { return t.second == 1; });
    rep.dominant = dominant_terms(rep.character);
    rep.special = rep.dominant.size() == 1;
    rep.antispecial = antidominant_terms(rep.character).size() == 1;
    return rep;
}

Character qchar_tensor(const Algebra& alg, const std::vector<Snake>& factors,
                       const QCharOptions& opts) {
    Character c = Character::one();
    for (const auto& s : factors) c *= qchar_snake(alg, s, opts).character;
    return c;
}

std::vector<std::pair<YMonomial, long long>> dominant_terms(const Character& c) {
    std::vector<std::pair<YMonomial, long long>> out;
    for (const auto& [m, x] : c.terms())
        if (m.dominant()) out.push_back({m, x});
    return out;
}

std::vector<std::pair<YMonomial, long long>> antidominant_terms(const Character& c) {
    std::vector<std::pair<YMonomial, long long>> out;
    for (const auto& [m, x] : c.terms())
        if (m.antidominant()) out.push_back({m, x});
    return out;
}

std::map<Weight, long long> restrict_weights(const Character& c, const Algebra& alg) {
    std::map<Weight, long long> out;
    for (const auto& [m, x] : c.terms()) {
        auto [it, inserted] = out.emplace(weight(m, alg), 0);
        it->second = checked_add(it->second, x);
        if (it->second == 0) out.erase(it);
    }
    return out;
}

} // namespace qsnake
