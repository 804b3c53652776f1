#include "seaweed/functionals.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "seaweed/error.hpp"

namespace seaweed {

namespace {

std::vector<Position> staircase(int c, int offset = 0) {
    std::vector<Position> out;
    for (int i = 1; i <= c; ++i)
        for (int j = 1; j <= c + 1 - i; ++j) out.push_back({i + offset, j + offset});
    return out;
}

SeaweedSpec full_gl(int c) { return make_spec(Family::GL, {c}, {c}, c); }

void check_support(const SeaweedSpec& spec, const std::set<Position>& support) {
    const AdmissibleSet adm = admissible_positions(spec);
    for (auto p : support) {
        if (!adm.contains(p)) {
            throw Error(ErrorCode::Internal, "constructed entry (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                                 ") is not admissible for " + format_spec(spec));
        }
    }
}

Functional from_set(const SeaweedSpec& spec, const std::set<Position>& support) {
    check_support(spec, support);
    Functional f;
    f.domain = spec;
    for (auto p : support) f.entries[p] = 1;
    return f;
}

// Rotation flags per CM vertex: the anchor is unrotated and every
// antidiagonal peak flips the flag across its edge.
std::vector<char> rotations(const CoreData& core, const std::function<PeakMode(const PeakBlock&)>& mode) {
    std::vector<char> rot(core.cm.v + 1, 0), seen(core.cm.v + 1, 0);
    for (const auto& comp : core.components) {
        seen[comp.anchor] = 1;
        std::vector<int> stack{comp.anchor};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& peak : comp.peaks) {
                if (peak.from != x && peak.to != x) continue;
                int y = peak.from == x ? peak.to : peak.from;
                if (seen[y]) continue;
                seen[y] = 1;
                rot[y] = rot[x] ^ (mode(peak) == PeakMode::Anti);
                stack.push_back(y);
            }
        }
    }
    return rot;
}

void add_block(std::set<Position>& out, const std::vector<Position>& local, Range block, bool rotated) {
    const int c = block.second - block.first + 1;
    for (auto p : local) {
        int i = p.i, j = p.j;
        if (rotated) i = c + 1 - i, j = c + 1 - j;
        out.insert({block.first - 1 + i, block.first - 1 + j});
    }
}

std::vector<Position> peak_entries(const PeakBlock& peak, PeakMode mode) {
    std::vector<Position> out;
    const int c = peak.rows.second - peak.rows.first + 1;
    for (int u = 0; u < c; ++u) {
        if (mode == PeakMode::Anti) {
            out.push_back({peak.rows.second - u, peak.cols.first + u});
        } else {
            out.push_back({peak.rows.first + u, peak.cols.first + u});
        }
    }
    return out;
}

Functional construct_glA(const SeaweedSpec& spec, const BaseChoice& base, const PeakPolicy& policy) {
    const CoreData core = core_and_peaks(spec);
    auto mode = [&](const PeakBlock& p) { return policy.at(p.from, p.to); };
    const auto rot = rotations(core, mode);
    std::set<Position> support;
    for (const auto& comp : core.components) {
        std::vector<Position> local =
            spec.family == Family::A ? staircase(comp.size - 1)
                                     : base_positions(base.for_component(comp.id, comp.size), comp.size);
        for (int x : comp.path) add_block(support, local, core.cm.runs[x], rot[x]);
        for (const auto& peak : comp.peaks) {
            for (auto p : peak_entries(peak, mode(peak))) support.insert(p);
        }
    }
    return from_set(spec, support);
}

Functional construct_BC(const SeaweedSpec& spec, const PeakPolicy& policy) {
    const CoreData core = core_and_peaks(spec);
    const int n = spec.n, N = spec.size();
    const int t = n - std::max(total(spec.top), total(spec.bottom));
    const bool type_b = spec.family == Family::B;
    // Peaks across the antidiagonal must use the main diagonal.
    auto mode = [&](const PeakBlock& p) { return crossing_peak(spec, p) ? PeakMode::Diag : policy.at(p.from, p.to); };
    const auto rot = rotations(core, mode);

    std::set<Position> support;
    std::vector<Position> extra;
    for (const auto& comp : core.components) {
        if (comp.color == Color::Aftertail) continue;
        const int c = comp.size;
        for (int x : comp.path) {
            const Range block = core.cm.runs[x];
            if (comp.color == Color::Plain) {
                if (c > 1) add_block(support, staircase(c), block, rot[x]);
            } else if (c == 2) {
                if (!rot[x]) support.insert({block.first, block.first + 1});
            } else {
                add_block(support, staircase(c / 2), block, rot[x]);
            }
        }
        for (const auto& peak : comp.peaks) {
            for (auto p : peak_entries(peak, mode(peak))) {
                support.insert(p);
                if (type_b && c % 2 == 0 && crossing_peak(spec, peak) && p.i + p.j == N + 2) extra.push_back(p);
            }
        }
    }
    for (auto p : staircase(t, n - t)) support.insert(p);
    std::erase_if(support, [&](Position p) { return p.i + p.j > N + 1; });

    if (type_b) {
        // Replace antidiagonal entries by centre-column (or centre-row) hooks
        // plus the correction terms from later entries on the same side.
        std::vector<Position> above, below;
        for (auto p : support) {
            if (p.i + p.j != N + 1) continue;
            (p.i < p.j ? above : below).push_back(p);
        }
        std::erase_if(support, [&](Position p) { return p.i + p.j == N + 1; });
        std::vector<Position> above_all = above, below_all = below;
        for (auto p : extra) (p.i < p.j ? above_all : below_all).push_back(p);
        for (auto p : above) {
            support.insert({p.i, n + 1});
            for (auto q : above_all) {
                if (q.i > p.i) support.insert({p.i, q.j});
            }
        }
        for (auto p : below) {
            support.insert({n + 1, p.j});
            for (auto q : below_all) {
                if (q.j > p.j) support.insert({q.i, p.j});
            }
        }
    }
    return from_set(spec, support);
}

}  // namespace

std::string base_kind_name(BaseKind k) {
    switch (k) {
        case BaseKind::F: return "F";
        case BaseKind::G: return "G";
        case BaseKind::H: return "H";
        case BaseKind::K: return "K";
        case BaseKind::Gp: return "Gp";
        case BaseKind::Hp: return "Hp";
        case BaseKind::Kp: return "Kp";
        case BaseKind::Fp: return "Fp";
    }
    return "F";
}

const std::vector<BaseKind>& all_base_kinds() {
    static const std::vector<BaseKind> kinds{BaseKind::F,  BaseKind::G,  BaseKind::H,  BaseKind::K,
                                             BaseKind::Gp, BaseKind::Hp, BaseKind::Kp, BaseKind::Fp};
    return kinds;
}

BaseKind parse_base_kind(const std::string& text) {
    for (auto k : all_base_kinds()) {
        const std::string name = base_kind_name(k);
        std::string prime = name;
        if (prime.size() == 2) prime = prime.substr(0, 1) + "'";
        if (text == name || text == prime) return k;
    }
    throw Error(ErrorCode::Parse, "unknown base functional '" + text + "'");
}

int base_min_size(BaseKind k) {
    switch (k) {
        case BaseKind::G:
        case BaseKind::Gp: return 4;
        case BaseKind::K:
        case BaseKind::Kp: return 3;
        case BaseKind::Fp: return 2;
        default: return 1;
    }
}

std::vector<Position> Functional::support() const {
    std::vector<Position> out;
    for (const auto& [p, c] : entries) out.push_back(p);
    return out;
}

Rational Functional::at(Position p) const {
    auto it = entries.find(p);
    return it == entries.end() ? Rational(0) : it->second;
}

std::vector<Position> base_positions(BaseKind kind, int c) {
    if (c < 1) throw Error(ErrorCode::Validation, "base functional size must be positive");
    auto need = [&](int min) {
        if (c < min) {
            throw Error(ErrorCode::Validation, base_kind_name(kind) + " needs size at least " + std::to_string(min));
        }
    };
    std::vector<Position> out;
    switch (kind) {
        case BaseKind::F: out = staircase(c); break;
        case BaseKind::G:
            need(2);
            out = staircase(c - 2, 1);
            out.push_back({1, 1});
            break;
        case BaseKind::H: out = staircase(c - 1); break;
        case BaseKind::K:
            need(2);
            out = staircase(c - 1, 1);
            out.push_back({1, 1});
            break;
        case BaseKind::Gp:
            need(2);
            out = staircase(c - 2, 1);
            out.push_back({c, c});
            break;
        case BaseKind::Hp: out = staircase(c - 1, 1); break;
        case BaseKind::Kp:
            need(2);
            out = staircase(c - 1);
            out.push_back({c, c});
            break;
        case BaseKind::Fp:
            need(2);
            out = staircase(c - 2, 1);
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Functional make_functional(const SeaweedSpec& domain, const std::vector<Position>& support) {
    return from_set(domain, std::set<Position>(support.begin(), support.end()));
}

Functional base_functional(BaseKind kind, int c) { return make_functional(full_gl(c), base_positions(kind, c)); }

Functional shift(const Functional& f, int a, const SeaweedSpec& target) {
    Functional out;
    out.domain = target;
    const AdmissibleSet adm = admissible_positions(target);
    for (const auto& [p, c] : f.entries) {
        Position q{p.i + a, p.j + a};
        if (!adm.contains(q)) {
            throw Error(ErrorCode::Validation, "shifted entry (" + std::to_string(q.i) + "," + std::to_string(q.j) +
                                                   ") is not admissible");
        }
        out.entries[q] = c;
    }
    return out;
}

namespace {

template <typename Map>
Functional remap(const Functional& f, Map map) {
    const int c = f.domain.size();
    if (f.domain.family != Family::GL) throw Error(ErrorCode::Unsupported, "index maps act on gl(n) functionals");
    Functional out;
    out.domain = f.domain;
    const AdmissibleSet adm = admissible_positions(f.domain);
    for (const auto& [p, coef] : f.entries) {
        Position q = map(p, c);
        if (!adm.contains(q)) throw Error(ErrorCode::Validation, "mapped entry leaves the seaweed");
        out.entries[q] = coef;
    }
    return out;
}

}  // namespace

Functional rotate(const Functional& f) {
    return remap(f, [](Position p, int c) { return Position{c + 1 - p.i, c + 1 - p.j}; });
}

Functional transpose(const Functional& f) {
    return remap(f, [](Position p, int) { return Position{p.j, p.i}; });
}

Functional anti_transpose(const Functional& f) {
    return remap(f, [](Position p, int c) { return Position{c + 1 - p.j, c + 1 - p.i}; });
}

PeakMode PeakPolicy::at(int from, int to) const {
    auto it = overrides.find({from, to});
    return it == overrides.end() ? mode : it->second;
}

PeakPolicy parse_peak_policy(const std::string& text) {
    PeakPolicy policy;
    if (text == "diag") return policy;
    if (text == "anti") {
        policy.mode = PeakMode::Anti;
        return policy;
    }
    const std::string prefix = "mixed:";
    if (text.rfind(prefix, 0) != 0) throw Error(ErrorCode::Parse, "peak policy must be diag, anti or mixed:...");
    std::stringstream ss(text.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto dash = item.find('-');
        auto eq = item.find('=');
        if (dash == std::string::npos || eq == std::string::npos || eq < dash) {
            throw Error(ErrorCode::Parse, "peak entry must look like I-J=diag or I-J=anti, got '" + item + "'");
        }
        int from = 0, to = 0;
        try {
            from = std::stoi(item.substr(0, dash));
            to = std::stoi(item.substr(dash + 1, eq - dash - 1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::Parse, "invalid peak vertices in '" + item + "'");
        }
        const std::string value = item.substr(eq + 1);
        if (value != "diag" && value != "anti") throw Error(ErrorCode::Parse, "peak mode must be diag or anti");
        policy.overrides[{from, to}] = value == "anti" ? PeakMode::Anti : PeakMode::Diag;
    }
    return policy;
}

std::string format_peak_policy(const PeakPolicy& policy) {
    if (policy.overrides.empty()) return policy.mode == PeakMode::Anti ? "anti" : "diag";
    std::string out = "mixed:";
    bool first = true;
    for (const auto& [edge, mode] : policy.overrides) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(edge.first) + "-" + std::to_string(edge.second) + "=" +
               (mode == PeakMode::Anti ? "anti" : "diag");
    }
    return out;
}

BaseKind BaseChoice::for_component(int id, int size) const {
    auto it = per_component.find(id);
    BaseKind k = it == per_component.end() ? kind : it->second;
    return size < base_min_size(k) ? BaseKind::F : k;
}

Functional construct_gl(const SeaweedSpec& spec, const BaseChoice& base, const PeakPolicy& policy) {
    if (spec.family != Family::GL) throw Error(ErrorCode::Validation, "construct_gl needs a gl spec");
    return construct_glA(spec, base, policy);
}

Functional construct_A(const SeaweedSpec& spec, const PeakPolicy& policy) {
    if (spec.family != Family::A) throw Error(ErrorCode::Validation, "construct_A needs a type A spec");
    return construct_glA(spec, {}, policy);
}

Functional construct_C(const SeaweedSpec& spec, const PeakPolicy& policy) {
    if (spec.family != Family::C) throw Error(ErrorCode::Validation, "construct_C needs a type C spec");
    return construct_BC(spec, policy);
}

Functional construct_B(const SeaweedSpec& spec, const PeakPolicy& policy) {
    if (spec.family != Family::B) throw Error(ErrorCode::Validation, "construct_B needs a type B spec");
    return construct_BC(spec, policy);
}

Functional construct(const SeaweedSpec& spec, const BaseChoice& base, const PeakPolicy& policy) {
    if (spec.family != Family::GL && (base.kind != BaseKind::F || !base.per_component.empty())) {
        throw Error(ErrorCode::Unsupported, "alternative base functionals are only available for gl");
    }
    switch (spec.family) {
        case Family::GL: return construct_gl(spec, base, policy);
        case Family::A: return construct_A(spec, policy);
        case Family::B: return construct_B(spec, policy);
        case Family::C: return construct_C(spec, policy);
    }
    return {};
}

std::string render_functional_ascii(const Functional& f) {
    const int N = f.domain.size();
    std::vector<std::vector<std::string>> grid(N, std::vector<std::string>(N, "."));
    const AdmissibleSet adm = admissible_positions(f.domain);
    for (auto p : adm.positions()) grid[p.i - 1][p.j - 1] = "*";
    for (const auto& [p, c] : f.entries) grid[p.i - 1][p.j - 1] = "\xE2\x80\xA2";
    std::string out;
    for (const auto& row : grid) {
        for (int j = 0; j < N; ++j) {
            if (j) out += ' ';
            out += row[j];
        }
        out += '\n';
    }
    return out;
}

}  // namespace seaweed
