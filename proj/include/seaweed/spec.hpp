#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace seaweed {

enum class Family { GL, A, B, C };

std::string family_name(Family f);

struct Position {
    int i = 0;
    int j = 0;
    auto operator<=>(const Position&) const = default;
};

using Composition = std::vector<int>;

int total(const Composition& c);

// Two compositions plus the family tag. For B and C the compositions are
// partial (they may sum to less than n) and n is the rank parameter.
struct SeaweedSpec {
    Family family = Family::GL;
    Composition top;
    Composition bottom;
    int n = 0;

    // Matrix size: n for gl, n+1 for A, 2n for C, 2n+1 for B.
    int size() const;
    bool operator==(const SeaweedSpec&) const = default;
};

// Grammar: [gl|A|B|C] a|b|... / c|d|...  The family tag defaults to gl.
// For B and C the rank comes from `rank`; a value of 0 means "use the
// larger partial total".
SeaweedSpec parse_spec(const std::string& text, int rank = 0);
std::string format_spec(const SeaweedSpec& spec);
void validate(const SeaweedSpec& spec);

SeaweedSpec make_spec(Family f, Composition top, Composition bottom, int n = 0);

// Compositions of the ambient gl seaweed. For B and C the partial data is
// mirrored around a central block of size 2(n - total) (+1 for B).
std::pair<Composition, Composition> full_compositions(const SeaweedSpec& spec);

// Inclusive vertex ranges [first, last] of each block.
std::vector<std::pair<int, int>> blocks(const Composition& c);

class AdmissibleSet {
public:
    AdmissibleSet() = default;
    AdmissibleSet(int size, std::vector<Position> positions);

    int size() const { return size_; }
    const std::vector<Position>& positions() const { return positions_; }
    bool contains(int i, int j) const;
    bool contains(Position p) const { return contains(p.i, p.j); }
    std::size_t count() const { return positions_.size(); }

private:
    int size_ = 0;
    std::vector<Position> positions_;
    std::vector<char> mask_;
};

AdmissibleSet admissible_positions(const SeaweedSpec& spec);

// Position (i,j) reflected across the antidiagonal of an N x N matrix.
inline Position mirror(Position p, int N) { return {N + 1 - p.j, N + 1 - p.i}; }

struct Term {
    Position pos;
    int coef = 1;
};

struct BasisElement {
    enum class Kind { Single, DiagDiff, AntiPair };
    Kind kind = Kind::Single;
    Position pos;   // representative position
    int sign = 1;   // AntiPair only: coefficient of the mirror term
    std::vector<Term> terms;
};

std::vector<BasisElement> basis(const SeaweedSpec& spec);

}  // namespace seaweed
