#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seaweed/meander.hpp"
#include "seaweed/spec.hpp"

namespace seaweed {

struct Move {
    enum class Kind { Bl, R, P, F, C };
    Kind kind = Kind::C;
    int size = 0;  // C only
    bool operator==(const Move&) const = default;
};

using MeanderType = std::pair<Composition, Composition>;

struct Signature {
    std::vector<Move> moves;
    bool operator==(const Signature&) const = default;
};

std::string format_signature(const Signature& sig);
Signature parse_signature(const std::string& text);

std::pair<Move, MeanderType> wind_down_step(const MeanderType& type);
// Inverse of a step; C moves reinsert a component of the stored size.
MeanderType wind_up_step(const Move& move, const MeanderType& type);

Signature signature(const Composition& top, const Composition& bottom);
// GL and A: the spec's own type. B and C: the reduced type.
Signature signature(const SeaweedSpec& spec);

enum class Color { Plain, Tail, Aftertail };
std::string color_name(Color c);

struct HomotopyType {
    std::vector<int> sizes;
    std::vector<Color> colors;  // empty unless B/C
    bool operator==(const HomotopyType&) const = default;
};

HomotopyType homotopy_type(const Signature& sig);
HomotopyType homotopy_type(const SeaweedSpec& spec);
std::string format_homotopy(const HomotopyType& h, Family family = Family::GL);
// Index read off a homotopy type.
int homotopy_index(const HomotopyType& h, Family family);

// Replays the signature backwards from the empty type.
MeanderType wind_up(const Signature& sig);

struct ComponentMeander {
    MeanderType type;  // CM type: every component deletion has size one
    int v = 0;
    std::vector<Edge> top_edges;
    std::vector<Edge> bottom_edges;
    // Indexed by CM vertex 1..v (slot 0 unused).
    std::vector<std::pair<int, int>> runs;  // A_j as inclusive ranges
    std::vector<int> component_of;          // 0-based homotopy component
    std::vector<int> sizes;                 // homotopy component sizes c
    Signature sig;                          // signature of the original type
};

ComponentMeander component_meander(const Composition& top, const Composition& bottom);
ComponentMeander component_meander(const SeaweedSpec& spec);  // full compositions

// B/C: wind the pruned full meander and color each component deletion.
HomotopyType reduced_homotopy_type(const SeaweedSpec& spec);
MeanderType reduced_type(const SeaweedSpec& spec);

}  // namespace seaweed
