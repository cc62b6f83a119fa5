#include "qsnake/json_io.hpp"

namespace qsnake {

json to_json(const Algebra& alg) {
    return json{{"kind", alg.is_type_a() ? "A" : "B"}, {"rank", alg.rank()}};
}

json to_json(Lp p) { return json::array({p.i, p.k}); }

json to_json(const YMonomial& m) {
    json factors = json::array();
    for (const auto& [p, e] : m.factors()) factors.push_back(json::array({p.i, p.k, e}));
    return json{{"factors", factors}};
}

json to_json(const Character& c) {
    json terms = json::array();
    for (const auto& [m, x] : c.terms()) terms.push_back(json{{"m", to_json(m)}, {"c", x}});
    return json{{"terms", terms}};
}

json to_json(const Path& p) {
    json pts = json::array();
    for (const auto& pt : p.points) pts.push_back(json::array({pt.x, pt.y.base, pt.y.eps}));
    return pts;
}

json to_json(const Snake& s) {
    json pts = json::array();
    for (const auto& p : s.points) pts.push_back(to_json(p));
    return pts;
}

json to_json(const QCharReport& r, const Algebra& alg, const Snake& s) {
    json dom = json::array();
    for (const auto& [m, c] : r.dominant) dom.push_back(json{{"m", to_json(m)}, {"c", c}});
    return json{{"algebra", to_json(alg)},
                {"snake", to_json(s)},
                {"character", to_json(r.character)},
                {"thin", r.thin},
                {"special", r.special},
                {"antispecial", r.antispecial},
                {"dim", r.dim},
                {"dominant", dom}};
}

json to_json(const VerificationReport& r, const RelationInstance& rel) {
    json lhs_dom = json::array(), tb_dom = json::array();
    for (const auto& [m, c] : r.lhs_dominant) lhs_dom.push_back(json{{"m", to_json(m)}, {"c", c}});
    for (const auto& [m, c] : r.tb_dominant) tb_dom.push_back(json{{"m", to_json(m)}, {"c", c}});
    return json{{"top", to_json(rel.top)},
                {"left", to_json(rel.left)},
                {"right", to_json(rel.right)},
                {"bottom", to_json(rel.bottom)},
                {"x", to_json(rel.nbrs.x)},
                {"y", to_json(rel.nbrs.y)},
                {"identity_holds", r.identity_holds},
                {"catalog_lr_ok", r.catalog_lr_ok},
                {"catalog_tb_ok", r.catalog_tb_ok},
                {"xy_special", r.xy_special},
                {"dims",
                 json{{"L", r.dims[0]},
                      {"R", r.dims[1]},
                      {"T", r.dims[2]},
                      {"B", r.dims[3]},
                      {"X", r.dims[4]},
                      {"Y", r.dims[5]}}},
                {"lhs_dominant", lhs_dom},
                {"tb_dominant", tb_dom},
                {"notes", r.notes}};
}

json to_json(const NonPrimeReport& r) {
    return json{{"identity_holds", r.identity_holds}, {"dominant_count", r.dominant_count}};
}

json to_json(const ThmACertificate& c) {
    json rows = json::array();
    for (const auto& row : c.iv_rows) {
        json wits = json::array();
        for (const auto& w : row.witnesses) wits.push_back(to_json(w));
        rows.push_back(json{{"m", to_json(row.m)},
                            {"node", row.node},
                            {"witnesses", wits},
                            {"lhs", to_json(row.lhs)},
                            {"rhs", to_json(row.rhs)},
                            {"ok", row.ok}});
    }
    return json{{"cond_i", c.cond_i},
                {"cond_ii", c.cond_ii},
                {"cond_iii", c.cond_iii},
                {"cond_iv", c.cond_iv},
                {"iv_rows", rows},
                {"notes", c.notes},
                {"verdict", c.verdict}};
}

json to_json(const ExclusionCertificate& c) {
    json region = json::array();
    for (const auto& p : c.region) region.push_back(to_json(p));
    json cands = json::array();
    for (const auto& m : c.candidate_set) cands.push_back(to_json(m));
    return json{{"dominant", to_json(c.dominant)},
                {"region", region},
                {"candidates", cands},
                {"certificate", to_json(c.cert)},
                {"witness", to_json(c.witness)},
                {"witness_absent", c.witness_absent},
                {"ok", c.ok()}};
}

json to_json(const QSystemReport& r) {
    json items = json::array();
    for (const auto& it : r.items) items.push_back(json{{"name", it.name}, {"holds", it.holds}});
    return json{{"items", items}, {"all_hold", r.all_hold()}};
}

json gweight_map_to_json(const std::map<GWeight, long long>& m) {
    json arr = json::array();
    for (const auto& [w, c] : m)
        arr.push_back(json{{"weight", json::array({w.a, w.b})}, {"multiplicity", c}});
    return arr;
}

Algebra algebra_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const int rank = j.at("rank").get<int>();
    if (kind == "A") return Algebra(AlgebraKind::TypeA, rank);
    if (kind == "B") return Algebra(AlgebraKind::TypeB, rank);
    fail(errc::parse_error, "algebra kind must be A or B");
}

YMonomial monomial_from_json(const json& j) {
    YMonomial m;
    for (const auto& f : j.at("factors"))
        m.mul_y({f.at(0).get<int>(), f.at(1).get<int>()}, f.at(2).get<int>());
    return m;
}

Character character_from_json(const json& j) {
    Character c;
    for (const auto& t : j.at("terms"))
        c.add(monomial_from_json(t.at("m")), t.at("c").get<long long>());
    return c;
}

std::vector<Lp> points_from_json(const json& j) {
    std::vector<Lp> pts;
    for (const auto& p : j) pts.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    return pts;
}

Path path_from_json(const json& j, Lp origin) {
    Path p{origin, {}};
    for (const auto& pt : j)
        p.points.push_back({pt.at(0).get<int>(), {pt.at(1).get<int>(), pt.at(2).get<int>()}});
    return p;
}

} // namespace qsnake
