#include "seaweed/configuration.hpp"

#include <algorithm>
#include <set>

#include "seaweed/error.hpp"

namespace seaweed {

namespace {

// Homotopy component owning each vertex of the full meander.
std::vector<int> vertex_components(const ComponentMeander& cm, int N) {
    std::vector<int> out(N + 1, -1);
    for (int x = 1; x <= cm.v; ++x) {
        for (int y = cm.runs[x].first; y <= cm.runs[x].second; ++y) out[y] = cm.component_of[x];
    }
    return out;
}

}  // namespace

std::vector<Configuration> configurations(const SeaweedSpec& spec) {
    auto [top, bottom] = full_compositions(spec);
    ComponentMeander cm = component_meander(top, bottom);
    const int N = spec.size();
    std::vector<int> owner = vertex_components(cm, N);
    const int count = static_cast<int>(homotopy_type(cm.sig).sizes.size());
    std::vector<std::set<Position>> sets(count);
    for (int x = 1; x <= N; ++x) sets[owner[x]].insert({x, x});
    for (auto e : arcs(top)) {
        auto& s = sets[owner[e.i]];
        for (int k = e.i; k <= e.j; ++k) s.insert({k, e.i}), s.insert({e.j, k});
    }
    for (auto e : arcs(bottom)) {
        auto& s = sets[owner[e.i]];
        for (int k = e.i; k <= e.j; ++k) s.insert({e.i, k}), s.insert({k, e.j});
    }
    std::vector<Configuration> out;
    for (int k = 0; k < count; ++k) out.push_back({k, std::vector<Position>(sets[k].begin(), sets[k].end())});
    if (spec.family == Family::B) {
        // Antidiagonal positions are forced zeros in type B.
        for (auto& c : out) {
            std::erase_if(c.positions, [&](Position p) { return p.i + p.j == N + 1; });
        }
    }
    return out;
}

CoreData core_and_peaks(const SeaweedSpec& spec) {
    CoreData data;
    auto [top, bottom] = full_compositions(spec);
    data.cm = component_meander(top, bottom);
    const auto& cm = data.cm;
    const int N = spec.size();
    const int count = static_cast<int>(homotopy_type(cm.sig).sizes.size());

    std::vector<int> top_mate(cm.v + 1, 0), bottom_mate(cm.v + 1, 0);
    for (auto e : cm.top_edges) top_mate[e.i] = e.j, top_mate[e.j] = e.i;
    for (auto e : cm.bottom_edges) bottom_mate[e.i] = e.j, bottom_mate[e.j] = e.i;

    // Colors for B/C follow the runs covered by each component.
    std::vector<Color> colors(count, Color::Plain);
    if (spec.family == Family::B || spec.family == Family::C) {
        const int n = spec.n;
        const int t = n - std::max(total(spec.top), total(spec.bottom));
        const int centre = spec.family == Family::C ? n : n + 1;
        std::vector<char> tail_full(N + 1, 0);
        for (int i = 1; i <= n; ++i) {
            if ((i > total(spec.top)) != (i > total(spec.bottom))) tail_full[i] = tail_full[N + 1 - i] = 1;
        }
        std::vector<char> after(count, 0), tail(count, 0);
        for (int x = 1; x <= cm.v; ++x) {
            auto [s, e] = cm.runs[x];
            const int k = cm.component_of[x];
            if (t > 0 && s <= centre && centre <= e) after[k] = 1;
            for (int y = s; y <= e; ++y) tail[k] |= tail_full[y];
        }
        for (int k = 0; k < count; ++k) {
            colors[k] = after[k] ? Color::Aftertail : tail[k] ? Color::Tail : Color::Plain;
        }
    }

    data.components.resize(count);
    for (int k = 0; k < count; ++k) {
        auto& comp = data.components[k];
        comp.id = k;
        comp.color = colors[k];
        std::vector<int> members;
        for (int x = 1; x <= cm.v; ++x) {
            if (cm.component_of[x] == k) members.push_back(x);
        }
        comp.size = cm.sizes[members.front()];
        comp.anchor = members.front();
        int start = members.front();
        for (int x : members) {
            if ((top_mate[x] != 0) + (bottom_mate[x] != 0) <= 1) {
                start = x;
                break;
            }
        }
        std::vector<char> seen(cm.v + 1, 0);
        for (int cur = start; cur != 0;) {
            seen[cur] = 1;
            comp.path.push_back(cur);
            int next = 0;
            for (int y : {top_mate[cur], bottom_mate[cur]}) {
                if (y != 0 && !seen[y]) next = y;
            }
            cur = next;
        }
        if (comp.path.size() != members.size()) throw Error(ErrorCode::Internal, "component path walk incomplete");
        for (int x : comp.path) comp.blocks.push_back(cm.runs[x]);
        auto anchor_pos = std::find(comp.path.begin(), comp.path.end(), comp.anchor) - comp.path.begin();
        for (std::size_t p = 0; p < comp.path.size(); ++p) {
            auto dist = static_cast<long>(p) - anchor_pos;
            (dist % 2 == 0 ? comp.part_b : comp.part_a).push_back(comp.path[p]);
        }
        std::sort(comp.part_a.begin(), comp.part_a.end());
        std::sort(comp.part_b.begin(), comp.part_b.end());
    }
    // Counter-clockwise orientation: top arcs run right to left, bottom arcs
    // left to right.
    auto add_peak = [&](int from, int to, bool top_arc) {
        auto& comp = data.components[cm.component_of[from]];
        comp.peaks.push_back({from, to, cm.runs[from], cm.runs[to], top_arc});
    };
    for (auto e : cm.top_edges) add_peak(e.j, e.i, true);
    for (auto e : cm.bottom_edges) add_peak(e.i, e.j, false);
    for (auto& comp : data.components) {
        std::sort(comp.peaks.begin(), comp.peaks.end(),
                  [](const PeakBlock& a, const PeakBlock& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });
    }
    return data;
}

bool crossing_peak(const SeaweedSpec& spec, const PeakBlock& peak) {
    if (spec.family != Family::B && spec.family != Family::C) return false;
    const int n = spec.n, N = spec.size();
    return (peak.rows.second <= n && peak.cols.first >= N + 1 - n) ||
           (peak.cols.second <= n && peak.rows.first >= N + 1 - n);
}

std::string render_core_ascii(const SeaweedSpec& spec, const CoreData& core) {
    const int N = spec.size();
    std::vector<std::string> grid(N, std::string(N, '.'));
    const AdmissibleSet adm = admissible_positions(spec);
    for (auto p : adm.positions()) grid[p.i - 1][p.j - 1] = '*';
    for (const auto& comp : core.components) {
        for (auto [s, e] : comp.blocks) {
            for (int i = s; i <= e; ++i)
                for (int j = s; j <= e; ++j) grid[i - 1][j - 1] = 'C';
        }
        for (const auto& peak : comp.peaks) {
            for (int i = peak.rows.first; i <= peak.rows.second; ++i)
                for (int j = peak.cols.first; j <= peak.cols.second; ++j) grid[i - 1][j - 1] = 'P';
        }
    }
    std::string out;
    for (const auto& row : grid) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += row[j];
        }
        out += '\n';
    }
    return out;
}

}  // namespace seaweed
