#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seaweed/configuration.hpp"
#include "seaweed/rational.hpp"
#include "seaweed/spec.hpp"

namespace seaweed {

enum class BaseKind { F, G, H, K, Gp, Hp, Kp, Fp };

std::string base_kind_name(BaseKind k);
BaseKind parse_base_kind(const std::string& text);
const std::vector<BaseKind>& all_base_kinds();
// Smallest block size the kind is used for inside constructions.
int base_min_size(BaseKind k);

struct Functional {
    SeaweedSpec domain;
    std::map<Position, Rational> entries;

    std::size_t size() const { return entries.size(); }
    std::vector<Position> support() const;
    Rational at(Position p) const;
    bool operator==(const Functional&) const = default;
};

// Support positions of a base functional inside a c x c block.
std::vector<Position> base_positions(BaseKind kind, int c);
// Base functional on gl(c), all coefficients 1.
Functional base_functional(BaseKind kind, int c);

Functional make_functional(const SeaweedSpec& domain, const std::vector<Position>& support);

// Index arithmetic on gl(n) functionals; `shift` checks admissibility in `target`.
Functional shift(const Functional& f, int a, const SeaweedSpec& target);
Functional rotate(const Functional& f);
Functional transpose(const Functional& f);
Functional anti_transpose(const Functional& f);

enum class PeakMode { Diag, Anti };

struct PeakPolicy {
    PeakMode mode = PeakMode::Diag;
    // Keyed by directed CM edge (from, to).
    std::map<std::pair<int, int>, PeakMode> overrides;

    PeakMode at(int from, int to) const;
};

// "diag", "anti", or "mixed:I-J=diag|anti,..." (unlisted peaks use diag).
PeakPolicy parse_peak_policy(const std::string& text);
std::string format_peak_policy(const PeakPolicy& policy);

struct BaseChoice {
    BaseKind kind = BaseKind::F;
    std::map<int, BaseKind> per_component;

    // Components smaller than the kind's minimum size fall back to F.
    BaseKind for_component(int id, int size) const;
};

Functional construct_gl(const SeaweedSpec& spec, const BaseChoice& base, const PeakPolicy& policy);
Functional construct_A(const SeaweedSpec& spec, const PeakPolicy& policy);
Functional construct_C(const SeaweedSpec& spec, const PeakPolicy& policy);
Functional construct_B(const SeaweedSpec& spec, const PeakPolicy& policy);
Functional construct(const SeaweedSpec& spec, const BaseChoice& base = {}, const PeakPolicy& policy = {});

// Dot-matrix rendering: '•' on the support, '*' elsewhere admissible.
std::string render_functional_ascii(const Functional& f);

}  // namespace seaweed
