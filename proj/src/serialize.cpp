#include "seaweed/serialize.hpp"

#include "seaweed/error.hpp"

namespace seaweed {

namespace {

Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (auto e : edges) out.push_back({e.i, e.j});
    return out;
}

Json range_json(Range r) { return Json::array({r.first, r.second}); }

Family parse_family(const std::string& s) {
    if (s == "gl" || s == "GL") return Family::GL;
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    throw Error(ErrorCode::Parse, "unknown family '" + s + "'");
}

}  // namespace

Json to_json(const SeaweedSpec& spec) {
    return {{"family", family_name(spec.family)}, {"top", spec.top}, {"bottom", spec.bottom}, {"n", spec.n}};
}

SeaweedSpec spec_from_json(const Json& j) {
    try {
        return make_spec(parse_family(j.at("family").get<std::string>()), j.at("top").get<Composition>(),
                         j.at("bottom").get<Composition>(), j.at("n").get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("bad spec JSON: ") + e.what());
    }
}

Json to_json(const Meander& m) {
    Json comps = Json::array();
    for (const auto& c : m.components) {
        comps.push_back({{"kind", component_kind_name(c.kind)},
                         {"vertices", c.vertices},
                         {"endpoints", c.endpoints},
                         {"tail_endpoints", c.tail_endpoints}});
    }
    return {{"v", m.v},
            {"top", edges_json(m.top)},
            {"bottom", edges_json(m.bottom)},
            {"components", comps},
            {"cycles", m.cycles()},
            {"paths", m.paths()}};
}

Json to_json(const TailData& t) {
    return {{"ta", t.ta}, {"tb", t.tb}, {"tail", t.tail}, {"aftertail", t.aftertail}};
}

Json meander_json(const SeaweedSpec& spec) {
    if (spec.family == Family::GL || spec.family == Family::A) return to_json(build_meander(spec));
    auto [shortened, tail] = build_shortened_meander(spec);
    Json out = to_json(shortened);
    out["tail_data"] = to_json(tail);
    out["full"] = to_json(build_full_meander(spec));
    return out;
}

Json to_json(const HomotopyType& h, Family family) {
    Json out = {{"sizes", h.sizes}, {"text", format_homotopy(h, family)}};
    if (!h.colors.empty()) {
        Json colors = Json::array();
        for (auto c : h.colors) colors.push_back(color_name(c));
        out["colors"] = colors;
    }
    return out;
}

Json signature_json(const SeaweedSpec& spec) {
    const Signature sig = signature(spec);
    const HomotopyType h = homotopy_type(spec);
    Json out = {{"spec", to_json(spec)}, {"signature", format_signature(sig)}, {"homotopy", to_json(h, spec.family)}};
    if (spec.family == Family::B || spec.family == Family::C) {
        auto [top, bottom] = reduced_type(spec);
        out["reduced_type"] = {{"top", top}, {"bottom", bottom}};
    }
    out["index"] = index(spec);
    return out;
}

Json to_json(const ComponentMeander& cm) {
    Json runs = Json::array();
    for (int x = 1; x <= cm.v; ++x) runs.push_back(range_json(cm.runs[x]));
    std::vector<int> comp(cm.component_of.begin() + 1, cm.component_of.end());
    return {{"type", {{"top", cm.type.first}, {"bottom", cm.type.second}}},
            {"v", cm.v},
            {"top", edges_json(cm.top_edges)},
            {"bottom", edges_json(cm.bottom_edges)},
            {"runs", runs},
            {"component_of", comp}};
}

Json to_json(const CoreData& core) {
    Json comps = Json::array();
    for (const auto& c : core.components) {
        Json blocks = Json::array(), peaks = Json::array();
        for (auto r : c.blocks) blocks.push_back(range_json(r));
        for (const auto& p : c.peaks) {
            peaks.push_back({{"from", p.from},
                             {"to", p.to},
                             {"rows", range_json(p.rows)},
                             {"cols", range_json(p.cols)},
                             {"arc", p.top_arc ? "top" : "bottom"}});
        }
        comps.push_back({{"id", c.id},
                         {"size", c.size},
                         {"color", color_name(c.color)},
                         {"path", c.path},
                         {"anchor", c.anchor},
                         {"core_blocks", blocks},
                         {"part_a", c.part_a},
                         {"part_b", c.part_b},
                         {"peaks", peaks}});
    }
    return {{"component_meander", to_json(core.cm)}, {"components", comps}};
}

Json to_json(const Functional& f) {
    Json entries = Json::array();
    for (const auto& [p, c] : f.entries) entries.push_back({{"i", p.i}, {"j", p.j}, {"c", to_string(c)}});
    return {{"domain", to_json(f.domain)}, {"entries", entries}};
}

Functional functional_from_json(const Json& j) {
    try {
        Functional f;
        f.domain = spec_from_json(j.at("domain"));
        for (const auto& e : j.at("entries")) {
            Position p{e.at("i").get<int>(), e.at("j").get<int>()};
            Rational c = 1;
            if (e.contains("c")) {
                c = e["c"].is_string() ? parse_rational(e["c"].get<std::string>()) : Rational(e["c"].get<long>());
            }
            if (c != 0) f.entries[p] = c;
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("bad functional JSON: ") + e.what());
    }
}

Json to_json(const LinearForm& f) {
    Json out = Json::array();
    for (const auto& [v, c] : f.terms) out.push_back({{"var", v}, {"coef", to_string(c)}});
    return out;
}

Json to_json(const RelationsMatrix& rel) {
    Json cells = Json::array();
    for (const auto& row : rel.cells) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(to_json(c));
        cells.push_back(r);
    }
    Json free = Json::array();
    for (auto p : rel.free_vars) free.push_back({p.i, p.j});
    return {{"n", rel.n}, {"dim", rel.dim}, {"free_vars", free}, {"cells", cells}};
}

}  // namespace seaweed
