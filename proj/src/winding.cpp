#include "seaweed/winding.hpp"

#include <algorithm>
#include <numeric>

#include "seaweed/error.hpp"

namespace seaweed {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Composition tail_of(const Composition& c, std::size_t k) { return Composition(c.begin() + k, c.end()); }

Composition prepend(std::initializer_list<int> head, const Composition& rest) {
    Composition out(head);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

// Winds a type down while tracking which vertex labels survive each move.
// Returns, per component deletion, the labels it removed.
std::vector<std::vector<int>> labeled_wind(MeanderType type, std::vector<int> labels) {
    std::vector<std::vector<int>> removed;
    while (!type.first.empty() || !type.second.empty()) {
        const int a1 = type.first.front();
        const int b1 = type.second.front();
        auto [move, next] = wind_down_step(type);
        switch (move.kind) {
            case Move::Kind::Bl:
            case Move::Kind::P:
                labels.erase(labels.begin(), labels.begin() + b1);
                break;
            case Move::Kind::R: {
                const int d = a1 - b1;
                std::vector<int> out(labels.begin() + d, labels.begin() + b1);
                std::reverse(out.begin(), out.end());
                out.insert(out.end(), labels.begin() + b1, labels.end());
                labels = std::move(out);
                break;
            }
            case Move::Kind::F:
                break;
            case Move::Kind::C:
                removed.emplace_back(labels.begin(), labels.begin() + a1);
                labels.erase(labels.begin(), labels.begin() + a1);
                break;
        }
        type = std::move(next);
    }
    return removed;
}

}  // namespace

std::string format_signature(const Signature& sig) {
    std::string out;
    for (const auto& m : sig.moves) {
        switch (m.kind) {
            case Move::Kind::Bl: out += "B"; break;
            case Move::Kind::R: out += "R"; break;
            case Move::Kind::P: out += "P"; break;
            case Move::Kind::F: out += "F"; break;
            case Move::Kind::C: out += "C(" + std::to_string(m.size) + ")"; break;
        }
    }
    return out;
}

Signature parse_signature(const std::string& text) {
    Signature sig;
    std::size_t k = 0;
    while (k < text.size()) {
        char ch = text[k];
        if (ch == ' ') {
            ++k;
        } else if (ch == 'B') {
            sig.moves.push_back({Move::Kind::Bl, 0});
            k += (k + 1 < text.size() && text[k + 1] == 'l') ? 2 : 1;
        } else if (ch == 'R' || ch == 'P' || ch == 'F') {
            sig.moves.push_back({ch == 'R' ? Move::Kind::R : ch == 'P' ? Move::Kind::P : Move::Kind::F, 0});
            ++k;
        } else if (ch == 'C') {
            auto close = text.find(')', k);
            if (k + 1 >= text.size() || text[k + 1] != '(' || close == std::string::npos) {
                throw Error(ErrorCode::Parse, "expected C(<size>) in signature '" + text + "'");
            }
            int size = 0;
            try {
                size = std::stoi(text.substr(k + 2, close - k - 2));
            } catch (const std::exception&) {
                throw Error(ErrorCode::Parse, "invalid component size in '" + text + "'");
            }
            if (size <= 0) throw Error(ErrorCode::Parse, "component size must be positive");
            sig.moves.push_back({Move::Kind::C, size});
            k = close + 1;
        } else {
            throw Error(ErrorCode::Parse, std::string("unknown move '") + ch + "' in signature");
        }
    }
    return sig;
}

std::pair<Move, MeanderType> wind_down_step(const MeanderType& type) {
    const auto& [a, b] = type;
    if (a.empty() || b.empty()) throw Error(ErrorCode::Validation, "cannot wind down an empty type");
    const int a1 = a.front(), b1 = b.front();
    if (a1 == 2 * b1) return {{Move::Kind::Bl, 0}, {prepend({b1}, tail_of(a, 1)), tail_of(b, 1)}};
    if (b1 < a1 && a1 < 2 * b1) {
        return {{Move::Kind::R, 0}, {prepend({b1}, tail_of(a, 1)), prepend({2 * b1 - a1}, tail_of(b, 1))}};
    }
    if (a1 > 2 * b1) return {{Move::Kind::P, 0}, {prepend({a1 - 2 * b1, b1}, tail_of(a, 1)), tail_of(b, 1)}};
    if (a1 < b1) return {{Move::Kind::F, 0}, {b, a}};
    return {{Move::Kind::C, a1}, {tail_of(a, 1), tail_of(b, 1)}};
}

MeanderType wind_up_step(const Move& move, const MeanderType& type) {
    const auto& [a, b] = type;
    auto need = [&](bool ok) {
        if (!ok) throw Error(ErrorCode::Validation, "move cannot be inverted on this type");
    };
    switch (move.kind) {
        case Move::Kind::C: return {prepend({move.size}, a), prepend({move.size}, b)};
        case Move::Kind::F: return {b, a};
        case Move::Kind::Bl: need(!a.empty()); return {prepend({2 * a[0]}, tail_of(a, 1)), prepend({a[0]}, b)};
        case Move::Kind::P:
            need(a.size() >= 2);
            return {prepend({a[0] + 2 * a[1]}, tail_of(a, 2)), prepend({a[1]}, b)};
        case Move::Kind::R:
            need(!a.empty() && !b.empty());
            return {prepend({2 * a[0] - b[0]}, tail_of(a, 1)), prepend({a[0]}, tail_of(b, 1))};
    }
    return type;
}

Signature signature(const Composition& top, const Composition& bottom) {
    if (total(top) != total(bottom)) throw Error(ErrorCode::Validation, "type totals differ");
    Signature sig;
    MeanderType type{top, bottom};
    while (!type.first.empty()) {
        auto [move, next] = wind_down_step(type);
        sig.moves.push_back(move);
        type = std::move(next);
    }
    return sig;
}

Signature signature(const SeaweedSpec& spec) {
    if (spec.family == Family::GL || spec.family == Family::A) return signature(spec.top, spec.bottom);
    auto [top, bottom] = reduced_type(spec);
    return signature(top, bottom);
}

std::string color_name(Color c) {
    switch (c) {
        case Color::Plain: return "plain";
        case Color::Tail: return "tail";
        case Color::Aftertail: return "aftertail";
    }
    return "plain";
}

HomotopyType homotopy_type(const Signature& sig) {
    HomotopyType h;
    for (const auto& m : sig.moves) {
        if (m.kind == Move::Kind::C) h.sizes.push_back(m.size);
    }
    return h;
}

HomotopyType homotopy_type(const SeaweedSpec& spec) {
    if (spec.family == Family::GL || spec.family == Family::A) return homotopy_type(signature(spec));
    return reduced_homotopy_type(spec);
}

std::string format_homotopy(const HomotopyType& h, Family family) {
    std::string out = "H";
    if (family == Family::B || family == Family::C) out += "_" + family_name(family);
    out += "(";
    for (std::size_t k = 0; k < h.sizes.size(); ++k) {
        if (k) out += ",";
        if (!h.colors.empty() && h.colors[k] != Color::Plain) out += color_name(h.colors[k]) + " ";
        out += std::to_string(h.sizes[k]);
    }
    return out + ")";
}

int homotopy_index(const HomotopyType& h, Family family) {
    int sum = 0;
    for (std::size_t k = 0; k < h.sizes.size(); ++k) {
        const int c = h.sizes[k];
        const Color color = h.colors.empty() ? Color::Plain : h.colors[k];
        if (family == Family::GL || family == Family::A || color == Color::Plain) {
            sum += c;
        } else if (color == Color::Tail) {
            sum += c / 2;
        } else if (family == Family::C) {
            if (c % 2 != 0) throw Error(ErrorCode::Validation, "type C aftertail size must be even");
            sum += c / 2;
        } else {
            if (c % 2 != 1) throw Error(ErrorCode::Validation, "type B aftertail size must be odd");
            sum += (c - 1) / 2;
        }
    }
    return family == Family::A ? sum - 1 : sum;
}

MeanderType wind_up(const Signature& sig) {
    MeanderType type;
    for (auto it = sig.moves.rbegin(); it != sig.moves.rend(); ++it) type = wind_up_step(*it, type);
    return type;
}

ComponentMeander component_meander(const Composition& top, const Composition& bottom) {
    ComponentMeander cm;
    cm.sig = signature(top, bottom);
    Signature unit = cm.sig;
    std::vector<int> cs;
    for (auto& m : unit.moves) {
        if (m.kind == Move::Kind::C) {
            cs.push_back(m.size);
            m.size = 1;
        }
    }
    cm.type = wind_up(unit);
    cm.v = total(cm.type.first);
    cm.top_edges = arcs(cm.type.first);
    cm.bottom_edges = arcs(cm.type.second);

    UnionFind uf(cm.v);
    for (auto e : cm.top_edges) uf.unite(e.i, e.j);
    for (auto e : cm.bottom_edges) uf.unite(e.i, e.j);
    std::vector<int> labels(cm.v);
    std::iota(labels.begin(), labels.end(), 1);
    auto removed = labeled_wind(cm.type, labels);
    if (removed.size() != cs.size()) throw Error(ErrorCode::Internal, "component meander lost a deletion");

    cm.sizes.assign(cm.v + 1, 0);
    cm.component_of.assign(cm.v + 1, -1);
    for (std::size_t k = 0; k < removed.size(); ++k) {
        const int root = uf.find(removed[k].at(0));
        for (int x = 1; x <= cm.v; ++x) {
            if (uf.find(x) != root) continue;
            if (cm.component_of[x] != -1) throw Error(ErrorCode::Internal, "component meander path deleted twice");
            cm.component_of[x] = static_cast<int>(k);
            cm.sizes[x] = cs[k];
        }
    }
    cm.runs.assign(cm.v + 1, {0, 0});
    int s = 1;
    for (int x = 1; x <= cm.v; ++x) {
        if (cm.sizes[x] == 0) throw Error(ErrorCode::Internal, "component meander vertex without size");
        cm.runs[x] = {s, s + cm.sizes[x] - 1};
        s += cm.sizes[x];
    }
    // Inflating the CM type by the sizes must give back the original type.
    auto inflate = [&](const Composition& c) {
        Composition out;
        int x = 1;
        for (int part : c) {
            int sum = 0;
            for (int k = 0; k < part; ++k) sum += cm.sizes[x++];
            out.push_back(sum);
        }
        return out;
    };
    if (inflate(cm.type.first) != top || inflate(cm.type.second) != bottom) {
        throw Error(ErrorCode::Internal, "component meander does not inflate to the original type");
    }
    return cm;
}

ComponentMeander component_meander(const SeaweedSpec& spec) {
    auto [top, bottom] = full_compositions(spec);
    return component_meander(top, bottom);
}

namespace {

// Per-vertex color of the full B/C meander and the pruned vertex mask.
struct FullColoring {
    std::vector<Color> color;
    std::vector<char> keep;
};

FullColoring full_coloring(const SeaweedSpec& spec) {
    if (spec.family != Family::B && spec.family != Family::C) {
        throw Error(ErrorCode::Unsupported, "reduced homotopy types exist only for B and C");
    }
    const int N = spec.size();
    const int n = spec.n;
    const int t = n - std::max(total(spec.top), total(spec.bottom));
    const int centre = spec.family == Family::C ? n : n + 1;
    std::vector<char> tail_full(N + 1, 0);
    for (int i = 1; i <= n; ++i) {
        if ((i > total(spec.top)) != (i > total(spec.bottom))) tail_full[i] = tail_full[N + 1 - i] = 1;
    }
    Meander full = build_full_meander(spec);
    FullColoring fc{std::vector<Color>(N + 1, Color::Plain), std::vector<char>(N + 1, 1)};
    for (const auto& comp : full.components) {
        Color c = Color::Plain;
        bool has_centre = std::find(comp.vertices.begin(), comp.vertices.end(), centre) != comp.vertices.end();
        bool touches_tail = std::any_of(comp.vertices.begin(), comp.vertices.end(), [&](int x) { return tail_full[x]; });
        if (t > 0 && has_centre) {
            c = Color::Aftertail;
        } else if (touches_tail) {
            c = Color::Tail;
        }
        bool right = std::all_of(comp.vertices.begin(), comp.vertices.end(), [&](int x) { return x > n; });
        for (int x : comp.vertices) {
            fc.color[x] = c;
            if (c == Color::Plain && right) fc.keep[x] = 0;
        }
    }
    return fc;
}

Composition pruned(const Composition& c, const std::vector<char>& keep) {
    Composition out;
    for (auto [s, e] : blocks(c)) {
        int count = 0;
        for (int x = s; x <= e; ++x) count += keep[x];
        if (count) out.push_back(count);
    }
    return out;
}

}  // namespace

MeanderType reduced_type(const SeaweedSpec& spec) {
    FullColoring fc = full_coloring(spec);
    auto [top, bottom] = full_compositions(spec);
    return {pruned(top, fc.keep), pruned(bottom, fc.keep)};
}

HomotopyType reduced_homotopy_type(const SeaweedSpec& spec) {
    FullColoring fc = full_coloring(spec);
    auto [top, bottom] = full_compositions(spec);
    MeanderType type{pruned(top, fc.keep), pruned(bottom, fc.keep)};
    std::vector<int> labels;
    for (int x = 1; x <= spec.size(); ++x) {
        if (fc.keep[x]) labels.push_back(x);
    }
    HomotopyType h;
    for (const auto& removed : labeled_wind(type, labels)) {
        Color c = Color::Plain;
        for (int x : removed) {
            if (fc.color[x] == Color::Aftertail) {
                c = Color::Aftertail;
            } else if (fc.color[x] == Color::Tail && c == Color::Plain) {
                c = Color::Tail;
            }
        }
        h.sizes.push_back(static_cast<int>(removed.size()));
        h.colors.push_back(c);
    }
    return h;
}

}  // namespace seaweed
