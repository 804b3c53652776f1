#include "seaweed/spec.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "seaweed/error.hpp"

namespace seaweed {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Composition parse_composition(const std::string& raw) {
    std::string s = trim(raw);
    Composition out;
    if (s.empty() || s == "0" || s == "-" || s == "\xE2\x88\x85") return out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '|')) {
        part = trim(part);
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](unsigned char ch) {
                return std::isdigit(ch) || ch == '-' || ch == '+';
            })) {
            throw Error(ErrorCode::Parse, "invalid composition part '" + part + "' in '" + s + "'");
        }
        int v = 0;
        try {
            v = std::stoi(part);
        } catch (const std::exception&) {
            throw Error(ErrorCode::Parse, "invalid composition part '" + part + "'");
        }
        if (v <= 0) throw Error(ErrorCode::Validation, "composition parts must be positive, got " + part);
        out.push_back(v);
    }
    return out;
}

std::string format_composition(const Composition& c) {
    if (c.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) out += '|';
        out += std::to_string(c[k]);
    }
    return out;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::GL: return "gl";
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
    }
    return "gl";
}

int total(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

int SeaweedSpec::size() const {
    switch (family) {
        case Family::GL: return n;
        case Family::A: return n + 1;
        case Family::B: return 2 * n + 1;
        case Family::C: return 2 * n;
    }
    return n;
}

void validate(const SeaweedSpec& spec) {
    for (const auto* c : {&spec.top, &spec.bottom}) {
        for (int part : *c) {
            if (part <= 0) throw Error(ErrorCode::Validation, "composition parts must be positive");
        }
    }
    const int ta = total(spec.top);
    const int tb = total(spec.bottom);
    switch (spec.family) {
        case Family::GL:
        case Family::A: {
            if (spec.top.empty() || spec.bottom.empty()) {
                throw Error(ErrorCode::Validation, "gl and A specs need nonempty compositions");
            }
            if (ta != tb) {
                throw Error(ErrorCode::Validation, "composition totals differ: " + std::to_string(ta) +
                                                       " vs " + std::to_string(tb));
            }
            const int expect = spec.family == Family::GL ? spec.n : spec.n + 1;
            if (ta != expect || spec.n < (spec.family == Family::GL ? 1 : 1)) {
                throw Error(ErrorCode::Validation, "composition total " + std::to_string(ta) +
                                                       " does not match rank " + std::to_string(spec.n));
            }
            break;
        }
        case Family::B:
        case Family::C:
            if (spec.n < 1) throw Error(ErrorCode::Validation, "rank n must be positive");
            if (ta > spec.n || tb > spec.n) {
                throw Error(ErrorCode::Validation, "partial composition total exceeds n = " +
                                                       std::to_string(spec.n));
            }
            break;
    }
}

SeaweedSpec make_spec(Family f, Composition top, Composition bottom, int n) {
    SeaweedSpec s;
    s.family = f;
    s.top = std::move(top);
    s.bottom = std::move(bottom);
    const int ta = total(s.top);
    const int tb = total(s.bottom);
    if (n > 0) {
        s.n = n;
    } else if (f == Family::GL) {
        s.n = ta;
    } else if (f == Family::A) {
        s.n = ta - 1;
    } else {
        s.n = std::max(ta, tb);
    }
    validate(s);
    return s;
}

SeaweedSpec parse_spec(const std::string& text, int rank) {
    std::string s = trim(text);
    Family family = Family::GL;
    auto space = s.find_first_of(" \t");
    std::string head = space == std::string::npos ? s : s.substr(0, space);
    std::string lower = head;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    bool tagged = true;
    if (lower == "gl") {
        family = Family::GL;
    } else if (head == "A") {
        family = Family::A;
    } else if (head == "B") {
        family = Family::B;
    } else if (head == "C") {
        family = Family::C;
    } else {
        tagged = false;
    }
    if (tagged) s = space == std::string::npos ? "" : trim(s.substr(space));
    auto slash = s.find('/');
    if (slash == std::string::npos || s.find('/', slash + 1) != std::string::npos) {
        throw Error(ErrorCode::Parse, "expected exactly one '/' in spec '" + text + "'");
    }
    Composition top = parse_composition(s.substr(0, slash));
    Composition bottom = parse_composition(s.substr(slash + 1));
    if (family == Family::GL || family == Family::A) {
        if (total(top) != total(bottom)) {
            throw Error(ErrorCode::Validation, "totals differ in '" + text + "'");
        }
        rank = 0;
    }
    return make_spec(family, std::move(top), std::move(bottom), rank);
}

std::string format_spec(const SeaweedSpec& spec) {
    return family_name(spec.family) + " " + format_composition(spec.top) + " / " +
           format_composition(spec.bottom);
}

std::pair<Composition, Composition> full_compositions(const SeaweedSpec& spec) {
    if (spec.family == Family::GL || spec.family == Family::A) return {spec.top, spec.bottom};
    auto mirrored = [&](const Composition& c) {
        Composition out = c;
        int centre = 2 * (spec.n - total(c)) + (spec.family == Family::B ? 1 : 0);
        if (centre > 0) out.push_back(centre);
        out.insert(out.end(), c.rbegin(), c.rend());
        return out;
    };
    return {mirrored(spec.top), mirrored(spec.bottom)};
}

std::vector<std::pair<int, int>> blocks(const Composition& c) {
    std::vector<std::pair<int, int>> out;
    int s = 1;
    for (int part : c) {
        out.emplace_back(s, s + part - 1);
        s += part;
    }
    return out;
}

AdmissibleSet::AdmissibleSet(int size, std::vector<Position> positions)
    : size_(size), positions_(std::move(positions)), mask_(static_cast<std::size_t>(size) * size, 0) {
    std::sort(positions_.begin(), positions_.end());
    positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
    for (auto p : positions_) mask_[(p.i - 1) * size_ + (p.j - 1)] = 1;
}

bool AdmissibleSet::contains(int i, int j) const {
    if (i < 1 || j < 1 || i > size_ || j > size_) return false;
    return mask_[(i - 1) * size_ + (j - 1)] != 0;
}

AdmissibleSet admissible_positions(const SeaweedSpec& spec) {
    const int N = spec.size();
    auto [top, bottom] = full_compositions(spec);
    std::vector<char> grid(static_cast<std::size_t>(N) * N, 0);
    // Top blocks fill the lower triangle of their diagonal block, bottom
    // blocks the upper triangle.
    for (auto [s, e] : blocks(top)) {
        for (int r = s; r <= e; ++r)
            for (int c = s; c <= r; ++c) grid[(r - 1) * N + (c - 1)] = 1;
    }
    for (auto [s, e] : blocks(bottom)) {
        for (int r = s; r <= e; ++r)
            for (int c = r; c <= e; ++c) grid[(r - 1) * N + (c - 1)] = 1;
    }
    std::vector<Position> out;
    for (int r = 1; r <= N; ++r) {
        for (int c = 1; c <= N; ++c) {
            if (!grid[(r - 1) * N + (c - 1)]) continue;
            if (spec.family == Family::B && r + c == N + 1) continue;
            out.push_back({r, c});
        }
    }
    return AdmissibleSet(N, std::move(out));
}

std::vector<BasisElement> basis(const SeaweedSpec& spec) {
    const int N = spec.size();
    const AdmissibleSet adm = admissible_positions(spec);
    std::vector<BasisElement> out;
    using Kind = BasisElement::Kind;
    switch (spec.family) {
        case Family::GL:
            for (auto p : adm.positions()) out.push_back({Kind::Single, p, 1, {{p, 1}}});
            break;
        case Family::A:
            // Ordered by representative position so that elimination sees the
            // same column order as for gl.
            for (auto p : adm.positions()) {
                if (p.i != p.j) {
                    out.push_back({Kind::Single, p, 1, {{p, 1}}});
                } else if (p.i < N) {
                    out.push_back({Kind::DiagDiff, p, 1, {{p, 1}, {{p.i + 1, p.i + 1}, -1}}});
                }
            }
            break;
        case Family::C:
        case Family::B: {
            const int half = spec.n;
            for (auto p : adm.positions()) {
                Position m = mirror(p, N);
                if (m < p) continue;
                if (m == p) {
                    // Only type C keeps antidiagonal positions.
                    out.push_back({Kind::AntiPair, p, 1, {{p, 1}}});
                    continue;
                }
                int sign = -1;
                if (spec.family == Family::C) {
                    const bool same_half = (p.i <= half) == (p.j <= half);
                    sign = same_half ? -1 : 1;
                }
                out.push_back({Kind::AntiPair, p, sign, {{p, 1}, {m, sign}}});
            }
            break;
        }
    }
    return out;
}

}  // namespace seaweed
