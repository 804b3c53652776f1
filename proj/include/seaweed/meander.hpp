#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seaweed/spec.hpp"

namespace seaweed {

// Arc between vertices i < j.
struct Edge {
    int i = 0;
    int j = 0;
    auto operator<=>(const Edge&) const = default;
};

enum class ComponentKind { Cycle, Path, Isolated };

std::string component_kind_name(ComponentKind k);

struct MeanderComponent {
    ComponentKind kind = ComponentKind::Isolated;
    // Walk order: paths start at their smaller endpoint, cycles at their
    // smallest vertex.
    std::vector<int> vertices;
    std::vector<int> endpoints;
    int tail_endpoints = 0;  // shortened B/C meanders only
};

struct Meander {
    int v = 0;
    std::vector<Edge> top;
    std::vector<Edge> bottom;
    std::vector<MeanderComponent> components;  // sorted by smallest vertex

    int cycles() const;
    int paths() const;  // isolated vertices included
};

struct TailData {
    std::vector<int> ta;
    std::vector<int> tb;
    std::vector<int> tail;
    std::vector<int> aftertail;
};

// Nested first-to-last arcs of each block.
std::vector<Edge> arcs(const Composition& c);

// Meander on `v` vertices; compositions may be partial (total < v).
Meander build_meander(const Composition& top, const Composition& bottom, int v = 0);

// GL and A use the compositions as given; B and C use the mirrored ones.
Meander build_meander(const SeaweedSpec& spec);
Meander build_full_meander(const SeaweedSpec& spec);
std::pair<Meander, TailData> build_shortened_meander(const SeaweedSpec& spec);

int index(const SeaweedSpec& spec);

std::string meander_to_dot(const Meander& m);
std::string meander_to_ascii(const Meander& m);

}  // namespace seaweed
