#include "seaweed/meander.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "seaweed/error.hpp"

namespace seaweed {

namespace {

std::vector<MeanderComponent> classify(int v, const std::vector<Edge>& top, const std::vector<Edge>& bottom) {
    std::vector<int> top_mate(v + 1, 0), bottom_mate(v + 1, 0);
    for (auto e : top) top_mate[e.i] = e.j, top_mate[e.j] = e.i;
    for (auto e : bottom) bottom_mate[e.i] = e.j, bottom_mate[e.j] = e.i;
    std::vector<char> seen(v + 1, 0);
    std::vector<MeanderComponent> out;
    auto walk = [&](int start, MeanderComponent& comp) {
        // Alternate between top and bottom mates starting with whichever exists.
        int cur = start;
        bool use_top = top_mate[start] != 0;
        while (true) {
            seen[cur] = 1;
            comp.vertices.push_back(cur);
            int next = use_top ? top_mate[cur] : bottom_mate[cur];
            if (next == 0 || seen[next]) break;
            cur = next;
            use_top = !use_top;
        }
    };
    for (int s = 1; s <= v; ++s) {
        if (seen[s]) continue;
        int deg = (top_mate[s] != 0) + (bottom_mate[s] != 0);
        if (deg == 0) {
            seen[s] = 1;
            out.push_back({ComponentKind::Isolated, {s}, {s}, 0});
        } else if (deg == 1) {
            MeanderComponent comp;
            comp.kind = ComponentKind::Path;
            walk(s, comp);
            comp.endpoints = {comp.vertices.front(), comp.vertices.back()};
            out.push_back(std::move(comp));
        }
    }
    for (int s = 1; s <= v; ++s) {
        if (seen[s]) continue;
        MeanderComponent comp;
        comp.kind = ComponentKind::Cycle;
        walk(s, comp);
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(), [](const MeanderComponent& a, const MeanderComponent& b) {
        return *std::min_element(a.vertices.begin(), a.vertices.end()) <
               *std::min_element(b.vertices.begin(), b.vertices.end());
    });
    return out;
}

std::vector<int> range_set(int from, int to) {
    std::vector<int> out;
    for (int k = from; k <= to; ++k) out.push_back(k);
    return out;
}

}  // namespace

std::string component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::Cycle: return "cycle";
        case ComponentKind::Path: return "path";
        case ComponentKind::Isolated: return "isolated";
    }
    return "path";
}

int Meander::cycles() const {
    return static_cast<int>(std::count_if(components.begin(), components.end(),
                                          [](const auto& c) { return c.kind == ComponentKind::Cycle; }));
}

int Meander::paths() const { return static_cast<int>(components.size()) - cycles(); }

std::vector<Edge> arcs(const Composition& c) {
    std::vector<Edge> out;
    for (auto [s, e] : blocks(c)) {
        for (int i = s, j = e; i < j; ++i, --j) out.push_back({i, j});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Meander build_meander(const Composition& top, const Composition& bottom, int v) {
    Meander m;
    m.v = v > 0 ? v : std::max(total(top), total(bottom));
    if (total(top) > m.v || total(bottom) > m.v) throw Error(ErrorCode::Validation, "composition exceeds vertex count");
    m.top = arcs(top);
    m.bottom = arcs(bottom);
    m.components = classify(m.v, m.top, m.bottom);
    return m;
}

Meander build_full_meander(const SeaweedSpec& spec) {
    auto [top, bottom] = full_compositions(spec);
    return build_meander(top, bottom, spec.size());
}

Meander build_meander(const SeaweedSpec& spec) { return build_full_meander(spec); }

std::pair<Meander, TailData> build_shortened_meander(const SeaweedSpec& spec) {
    if (spec.family != Family::B && spec.family != Family::C) {
        throw Error(ErrorCode::Unsupported, "shortened meanders exist only for B and C");
    }
    TailData tail;
    const int sa = total(spec.top), sb = total(spec.bottom);
    tail.ta = range_set(sa + 1, spec.n);
    tail.tb = range_set(sb + 1, spec.n);
    std::set_symmetric_difference(tail.ta.begin(), tail.ta.end(), tail.tb.begin(), tail.tb.end(),
                                  std::back_inserter(tail.tail));
    std::set_intersection(tail.ta.begin(), tail.ta.end(), tail.tb.begin(), tail.tb.end(),
                          std::back_inserter(tail.aftertail));
    Meander m = build_meander(spec.top, spec.bottom, spec.n);
    std::vector<char> in_tail(spec.n + 1, 0);
    for (int t : tail.tail) in_tail[t] = 1;
    for (auto& comp : m.components) {
        comp.tail_endpoints = 0;
        if (comp.kind == ComponentKind::Isolated) {
            comp.tail_endpoints = in_tail[comp.vertices[0]];
        } else {
            for (int e : comp.endpoints) comp.tail_endpoints += in_tail[e];
        }
    }
    return {std::move(m), std::move(tail)};
}

int index(const SeaweedSpec& spec) {
    validate(spec);
    switch (spec.family) {
        case Family::GL:
        case Family::A: {
            Meander m = build_meander(spec.top, spec.bottom);
            int ind = 2 * m.cycles() + m.paths();
            return spec.family == Family::A ? ind - 1 : ind;
        }
        case Family::B:
        case Family::C: {
            auto [m, tail] = build_shortened_meander(spec);
            int ind = 0;
            for (const auto& comp : m.components) {
                if (comp.kind == ComponentKind::Cycle) {
                    ind += 2;
                } else if (comp.tail_endpoints != 1) {
                    ind += 1;
                }
            }
            return ind;
        }
    }
    return 0;
}

std::string meander_to_dot(const Meander& m) {
    std::ostringstream os;
    os << "graph meander {\n  rankdir=LR;\n  { rank=same;";
    for (int k = 1; k <= m.v; ++k) os << " v" << k << ";";
    os << " }\n";
    for (int k = 1; k < m.v; ++k) os << "  v" << k << " -- v" << k + 1 << " [style=invis];\n";
    for (auto e : m.top) os << "  v" << e.i << " -- v" << e.j << " [side=top];\n";
    for (auto e : m.bottom) os << "  v" << e.i << " -- v" << e.j << " [side=bottom];\n";
    os << "}\n";
    return os.str();
}

std::string meander_to_ascii(const Meander& m) {
    std::ostringstream os;
    auto line = [&](const char* label, const std::vector<Edge>& edges) {
        os << label;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            os << (k ? " " : "") << "(" << edges[k].i << "," << edges[k].j << ")";
        }
        os << "\n";
    };
    line("top:    ", m.top);
    line("bottom: ", m.bottom);
    os << "vertices: " << m.v << "\n";
    for (const auto& comp : m.components) {
        os << component_kind_name(comp.kind) << ":";
        for (int x : comp.vertices) os << " " << x;
        os << "\n";
    }
    return os.str();
}

}  // namespace seaweed
