#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "seaweed/configuration.hpp"
#include "seaweed/functionals.hpp"
#include "seaweed/rational.hpp"
#include "seaweed/spec.hpp"

namespace seaweed {

struct LinearForm {
    std::map<int, Rational> terms;  // free-variable id (1-based) -> coefficient

    bool is_zero() const { return terms.empty(); }
    void add(int var, const Rational& coef);
    LinearForm operator+(const LinearForm& o) const;
    LinearForm operator-(const LinearForm& o) const;
    LinearForm operator-() const;
    bool operator==(const LinearForm&) const = default;
    std::string str() const;
};

// Rows are indexed by basis elements x, columns by the coefficients of B in
// the same basis; entry = coefficient of that variable in F([B, x]).
struct KernelSystem {
    std::vector<BasisElement> basis;
    std::vector<std::vector<Rational>> rows;
};

KernelSystem assemble_system(const SeaweedSpec& spec, const Functional& f);

struct RelationsMatrix {
    int n = 0;
    std::vector<std::vector<LinearForm>> cells;  // n x n, 0-based
    std::vector<Position> free_vars;             // representative position of each variable
    int dim = 0;

    const LinearForm& cell(int i, int j) const { return cells[i - 1][j - 1]; }
};

int kernel_dim(const SeaweedSpec& spec, const Functional& f);
RelationsMatrix relations_matrix(const SeaweedSpec& spec, const Functional& f);

// Substitutes the relations matrix back into every bracket equation.
bool verify_relations(const SeaweedSpec& spec, const Functional& f, const RelationsMatrix& rel);

struct RegularityReport {
    bool regular = false;
    int kernel_dim = 0;
    int index = 0;
};

RegularityReport is_regular(const SeaweedSpec& spec, const Functional& f);

// Functional with independent random integer coefficients on every position
// touched by the basis.
Functional random_functional(const SeaweedSpec& spec, std::uint64_t seed);
int generic_index_oracle(const SeaweedSpec& spec, int samples, std::uint64_t seed);

struct BlockReport {
    bool ok = false;
    std::string blocks;                // e.g. "B_4⊕B_2⊕B_4⊕B_2^R⊕B_4^R"
    std::vector<std::string> problems;
};

BlockReport block_structure_check(const SeaweedSpec& spec, const RelationsMatrix& rel, const CoreData& core);

struct ClosedFormReport {
    bool ok = false;
    std::vector<std::string> failures;
};

ClosedFormReport fn_closed_form_check(int n);

// Row-reduced basis of the kernel subspace, flattened over matrix positions.
// Two relations matrices describe the same kernel iff these agree.
std::vector<std::vector<Rational>> kernel_subspace(const RelationsMatrix& rel);
bool same_kernel(const RelationsMatrix& a, const RelationsMatrix& b);

std::string format_relations(const RelationsMatrix& rel);

}  // namespace seaweed
