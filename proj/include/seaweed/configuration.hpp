#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seaweed/spec.hpp"
#include "seaweed/winding.hpp"

namespace seaweed {

struct Configuration {
    int component_id = 0;
    std::vector<Position> positions;  // sorted
};

// One configuration per homotopy component, computed on the full meander.
std::vector<Configuration> configurations(const SeaweedSpec& spec);

using Range = std::pair<int, int>;  // inclusive

struct PeakBlock {
    int from = 0;  // CM vertex whose run gives the rows
    int to = 0;    // CM vertex whose run gives the columns
    Range rows;
    Range cols;
    bool top_arc = false;
};

struct ComponentCore {
    int id = 0;
    int size = 0;
    Color color = Color::Plain;
    std::vector<int> path;  // CM vertices in walk order
    int anchor = 0;         // CM vertex with minimal min(A)
    std::vector<Range> blocks;
    std::vector<int> part_a;  // odd distance from the anchor
    std::vector<int> part_b;  // even distance from the anchor
    std::vector<PeakBlock> peaks;
};

struct CoreData {
    ComponentMeander cm;
    std::vector<ComponentCore> components;
};

CoreData core_and_peaks(const SeaweedSpec& spec);

// True when a B/C peak block sits across the matrix antidiagonal.
bool crossing_peak(const SeaweedSpec& spec, const PeakBlock& peak);

std::string render_core_ascii(const SeaweedSpec& spec, const CoreData& core);

}  // namespace seaweed
