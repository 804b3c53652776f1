#include <doctest.h>

#include <random>

#include "golden.hpp"
#include "seaweed/configuration.hpp"
#include "seaweed/enumerate.hpp"
#include "seaweed/functionals.hpp"
#include "seaweed/kernel.hpp"
#include "seaweed/meander.hpp"

using namespace seaweed;

namespace {

Functional with_support(const SeaweedSpec& spec, const std::vector<Position>& support) {
    return make_functional(spec, support);
}

int column_of(const KernelSystem& sys, Position p) {
    for (std::size_t k = 0; k < sys.basis.size(); ++k)
        if (sys.basis[k].pos == p) return static_cast<int>(k);
    return -1;
}

Functional random_with_support(const SeaweedSpec& spec, std::mt19937_64& rng, double density) {
    std::vector<Position> support;
    std::bernoulli_distribution keep(density);
    const auto adm = admissible_positions(spec);
    for (auto p : adm.positions())
        if (keep(rng)) support.push_back(p);
    return make_functional(spec, support);
}

}  // namespace

TEST_CASE("assemble_system on gl(2) by hand") {
    const auto spec = make_spec(Family::GL, {2}, {2});
    const auto sys = assemble_system(spec, with_support(spec, {{1, 1}, {1, 2}, {2, 1}}));
    REQUIRE(sys.rows.size() == 4);
    REQUIRE(sys.basis.size() == 4);
    const int c11 = column_of(sys, {1, 1}), c12 = column_of(sys, {1, 2});
    const int c21 = column_of(sys, {2, 1}), c22 = column_of(sys, {2, 2});
    auto row = [&](Position x) { return sys.rows[column_of(sys, x)]; };
    // F([B, e11]) = b21 - b12, F([B, e12]) = b11 - b21 - b22,
    // F([B, e21]) = b12 + b22 - b11, F([B, e22]) = b12 - b21.
    std::vector<Rational> e11(4), e12(4), e21(4), e22(4);
    e11[c21] = 1, e11[c12] = -1;
    e12[c11] = 1, e12[c21] = -1, e12[c22] = -1;
    e21[c12] = 1, e21[c22] = 1, e21[c11] = -1;
    e22[c12] = 1, e22[c21] = -1;
    CHECK(row({1, 1}) == e11);
    CHECK(row({1, 2}) == e12);
    CHECK(row({2, 1}) == e21);
    CHECK(row({2, 2}) == e22);
    CHECK(kernel_dim(spec, with_support(spec, {{1, 1}, {1, 2}, {2, 1}})) == 2);
}

TEST_CASE("gl(1) has a zero system") {
    const auto spec = make_spec(Family::GL, {1}, {1});
    const auto sys = assemble_system(spec, with_support(spec, {{1, 1}}));
    for (const auto& r : sys.rows)
        for (const auto& c : r) CHECK(c == 0);
    CHECK(kernel_dim(spec, with_support(spec, {{1, 1}})) == 1);
}

TEST_CASE("type A relations satisfy the trace relation") {
    for (int n = 1; n <= 6; ++n) {
        const auto spec = make_spec(Family::A, {n + 1}, {n + 1});
        const auto rel = relations_matrix(spec, construct(spec));
        LinearForm trace;
        for (int i = 1; i <= n; ++i) trace = trace + rel.cell(i, i);
        CHECK(rel.cell(n + 1, n + 1) == -trace);
    }
}

TEST_CASE("full algebras have index n") {
    for (int n = 1; n <= 8; ++n) {
        const auto gl = make_spec(Family::GL, {n}, {n});
        CHECK(kernel_dim(gl, base_functional(BaseKind::F, n)) == n);
    }
    for (int n = 1; n <= 5; ++n) {
        for (Family fam : {Family::A, Family::B, Family::C}) {
            const auto spec = fam == Family::A ? make_spec(fam, {n + 1}, {n + 1}) : make_spec(fam, {}, {}, n);
            CHECK(kernel_dim(spec, construct(spec)) == n);
        }
    }
}

TEST_CASE("golden relations matrices") {
    const auto gl4 = make_spec(Family::GL, {4}, {4});
    const auto gl2 = make_spec(Family::GL, {2}, {2});
    const auto r4 = relations_matrix(gl4, base_functional(BaseKind::F, 4));
    const auto r2 = relations_matrix(gl2, base_functional(BaseKind::F, 2));
    CHECK(r4.dim == 4);
    CHECK(r2.dim == 2);
    CHECK(same_kernel(r4, golden::relations(golden::f4_block())));
    CHECK(same_kernel(r2, golden::relations(golden::f2_block())));
    // The golden kernel is not the kernel of an unrelated matrix.
    CHECK_FALSE(same_kernel(r4, golden::relations(golden::rotated(golden::f4_block()))));

    const auto c4 = make_spec(Family::C, {}, {}, 4);
    const auto b4 = make_spec(Family::B, {}, {}, 4);
    CHECK(same_kernel(relations_matrix(c4, construct(c4)), golden::relations(golden::type_c_full(golden::f4_block()))));
    CHECK(same_kernel(relations_matrix(b4, construct(b4)), golden::relations(golden::type_b_full(golden::f4_block()))));
}

TEST_CASE("worked relations matrices") {
    const auto gl = parse_spec("gl 10|2|4 / 16");
    const auto mixed = construct(gl, {}, parse_peak_policy("mixed:3-1=diag,1-5=anti,2-4=anti"));
    CHECK(same_kernel(relations_matrix(gl, mixed), golden::relations(golden::mixed_10_2_4())));

    const auto a = parse_spec("A 4|4 / 8");
    const auto ra = relations_matrix(a, construct(a, {}, parse_peak_policy("anti")));
    const auto rd = relations_matrix(a, construct(a, {}, parse_peak_policy("diag")));
    CHECK(ra.dim == 3);
    CHECK(rd.dim == 3);
    CHECK(same_kernel(ra, golden::relations(golden::type_a_anti())));
    CHECK(same_kernel(rd, golden::relations(golden::type_a_diag())));

    const auto c = parse_spec("C 5|10 / 2|4|3|1|1", 18);
    const auto rc = relations_matrix(c, construct(c, {}, parse_peak_policy("anti")));
    CHECK(rc.dim == 7);
    CHECK(same_kernel(rc, golden::relations(golden::c18())));

    const auto b = parse_spec("B 1|5|3|1 / 4", 12);
    const auto fb = construct(b, {}, parse_peak_policy("anti"));
    const auto rb = relations_matrix(b, fb);
    CHECK(rb.dim == 5);
    CHECK(same_kernel(rb, golden::relations(golden::b12_derived())));
    // The printed diagonal tail blocks do not annihilate this functional.
    CHECK_FALSE(same_kernel(rb, golden::relations(golden::b12())));
    CHECK(is_regular(b, fb).regular);
}

TEST_CASE("regularity verdicts") {
    const auto gl4 = make_spec(Family::GL, {4}, {4});
    const auto bad = is_regular(gl4, with_support(gl4, {{1, 1}}));
    CHECK_FALSE(bad.regular);
    CHECK(bad.kernel_dim > 4);
    for (int n = 1; n <= 8; ++n) {
        const auto r = is_regular(make_spec(Family::GL, {n}, {n}), base_functional(BaseKind::F, n));
        CHECK(r.regular);
        CHECK(r.kernel_dim == n);
    }
}

TEST_CASE("generic index oracle") {
    CHECK(generic_index_oracle(parse_spec("gl 4|1 / 2|1|2"), 5, 11) == 1);
    for (int n = 1; n <= 6; ++n) CHECK(generic_index_oracle(make_spec(Family::GL, {n}, {n}), 4, 3) == n);
    CHECK(generic_index_oracle(parse_spec("A 4|4 / 8"), 4, 5) == 3);
    CHECK(generic_index_oracle(parse_spec("B 1|5|3|1 / 4", 12), 4, 5) == 5);
    CHECK(random_functional(parse_spec("gl 3 / 3"), 9) == random_functional(parse_spec("gl 3 / 3"), 9));
}

TEST_CASE("block structure") {
    const auto gl = parse_spec("gl 10|2|4 / 16");
    const auto core = core_and_peaks(gl);
    const auto mixed = construct(gl, {}, parse_peak_policy("mixed:3-1=diag,1-5=anti,2-4=anti"));
    const auto rep = block_structure_check(gl, relations_matrix(gl, mixed), core);
    CHECK(rep.ok);
    CHECK(rep.blocks == "B_4\xE2\x8A\x95" "B_2\xE2\x8A\x95" "B_4\xE2\x8A\x95" "B_2^R\xE2\x8A\x95" "B_4^R");
    const auto diag = block_structure_check(gl, relations_matrix(gl, construct(gl)), core);
    CHECK(diag.ok);
    CHECK(diag.blocks == "B_4\xE2\x8A\x95" "B_2\xE2\x8A\x95" "B_4\xE2\x8A\x95" "B_2\xE2\x8A\x95" "B_4");

    const auto full = make_spec(Family::GL, {5}, {5});
    const auto one = block_structure_check(full, relations_matrix(full, construct(full)), core_and_peaks(full));
    CHECK(one.ok);
    CHECK(one.blocks == "B_5");

    const auto c = parse_spec("C 5|10 / 2|4|3|1|1", 18);
    const auto rc = relations_matrix(c, construct(c, {}, parse_peak_policy("anti")));
    const auto cb = block_structure_check(c, rc, core_and_peaks(c));
    CHECK(cb.ok);
    CHECK(cb.blocks.find("(0)") != std::string::npos);
}

TEST_CASE("closed form of the F_n kernel") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        const auto r = fn_closed_form_check(n);
        CHECK(r.ok);
        CHECK(r.failures.empty());
    }
}

TEST_CASE("property: relations matrices solve the system") {
    for (Family fam : {Family::GL, Family::A, Family::B, Family::C}) {
        const int max_n = fam == Family::GL ? 5 : fam == Family::A ? 4 : 3;
        for (const auto& spec : all_specs(fam, max_n)) {
            CAPTURE(format_spec(spec));
            const auto f = construct(spec, {}, parse_peak_policy("anti"));
            const auto rel = relations_matrix(spec, f);
            CHECK(verify_relations(spec, f, rel));
            CHECK(rel.dim == kernel_dim(spec, f));
            CHECK(rel.dim == static_cast<int>(rel.free_vars.size()));
        }
    }
}

TEST_CASE("property: kernel laws on random functionals") {
    std::mt19937_64 rng(20240601);
    const auto specs = all_specs(Family::GL, 6);
    std::uniform_int_distribution<std::size_t> pick(0, specs.size() - 1);
    for (int trial = 0; trial < 150; ++trial) {
        const auto& spec = specs[pick(rng)];
        CAPTURE(format_spec(spec));
        const auto f = random_with_support(spec, rng, 0.4);
        const int k = kernel_dim(spec, f);
        CHECK(k >= index(spec));
        if (spec.top == spec.bottom) CHECK(kernel_dim(spec, transpose(f)) == k);
        if (spec.top == spec.bottom && f == transpose(f)) {
            const auto rel = relations_matrix(spec, f);
            for (int i = 1; i <= rel.n; ++i)
                for (int j = 1; j <= rel.n; ++j) CHECK(rel.cell(i, j).is_zero() == rel.cell(j, i).is_zero());
        }
    }
}

TEST_CASE("property: direct sums add kernel dimensions") {
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            const auto spec = make_spec(Family::GL, {a, b}, {a, b});
            Functional f = shift(base_functional(BaseKind::F, b), a, spec);
            for (auto p : base_positions(BaseKind::F, a)) f.entries[p] = 1;
            CHECK(kernel_dim(spec, f) == a + b);
            Functional g = shift(base_functional(BaseKind::H, b), a, spec);
            for (auto p : base_positions(BaseKind::H, a)) g.entries[p] = 1;
            CHECK(kernel_dim(spec, g) == kernel_dim(make_spec(Family::GL, {a}, {a}), base_functional(BaseKind::H, a)) +
                                             kernel_dim(make_spec(Family::GL, {b}, {b}), base_functional(BaseKind::H, b)));
        }
    }
}

TEST_CASE("property: constructions are regular on random gl specs up to size 10") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 5);
        const auto comps = compositions(n);
        const auto& a = comps[rng() % comps.size()];
        const auto& b = comps[rng() % comps.size()];
        const auto spec = make_spec(Family::GL, a, b);
        CAPTURE(format_spec(spec));
        for (const char* pol : {"diag", "anti"}) CHECK(is_regular(spec, construct(spec, {}, parse_peak_policy(pol))).regular);
    }
}
