#include <doctest.h>

#include <set>

#include "seaweed/configuration.hpp"
#include "seaweed/enumerate.hpp"

using namespace seaweed;

namespace {

bool inside(Position p, Range rows, Range cols) {
    return p.i >= rows.first && p.i <= rows.second && p.j >= cols.first && p.j <= cols.second;
}

}  // namespace

TEST_CASE("configurations of 10|2|4 / 16") {
    const auto spec = parse_spec("gl 10|2|4 / 16");
    const auto confs = configurations(spec);
    REQUIRE(confs.size() == 2);
    std::set<Position> big(confs[1].positions.begin(), confs[1].positions.end());
    // The size-4 component covers its three diagonal blocks and the arcs between them.
    for (int i = 1; i <= 4; ++i) {
        CHECK(big.count({i, i}));
        CHECK(big.count({i + 6, i + 6}));
        CHECK(big.count({i + 12, i + 12}));
    }
    CHECK_FALSE(big.count({5, 5}));
    CHECK(confs[0].positions.front() == Position{5, 5});
}

TEST_CASE("trivial configurations") {
    const auto one = configurations(parse_spec("gl 1 / 1"));
    REQUIRE(one.size() == 1);
    CHECK(one[0].positions == std::vector<Position>{{1, 1}});

    // n / n: nested arcs cover the diagonal and both antidiagonal hooks.
    const auto four = configurations(parse_spec("gl 4 / 4"));
    REQUIRE(four.size() == 1);
    std::set<Position> expect;
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}}) {
        for (int k = i; k <= j; ++k) {
            expect.insert({k, i});
            expect.insert({j, k});
            expect.insert({i, k});
            expect.insert({k, j});
        }
    }
    CHECK(std::set<Position>(four[0].positions.begin(), four[0].positions.end()) == expect);
}

TEST_CASE("core and peaks of 10|2|4 / 16") {
    const auto core = core_and_peaks(parse_spec("gl 10|2|4 / 16"));
    REQUIRE(core.components.size() == 2);
    const auto& c2 = core.components[0];
    CHECK(c2.size == 2);
    CHECK(c2.blocks == std::vector<Range>{{5, 6}, {11, 12}});
    REQUIRE(c2.peaks.size() == 1);
    CHECK(c2.peaks[0].rows == Range{5, 6});
    CHECK(c2.peaks[0].cols == Range{11, 12});

    const auto& c4 = core.components[1];
    CHECK(c4.size == 4);
    std::vector<Range> a, b;
    for (int v : c4.part_a) a.push_back(core.cm.runs[v]);
    for (int v : c4.part_b) b.push_back(core.cm.runs[v]);
    CHECK(a == std::vector<Range>{{7, 10}, {13, 16}});
    CHECK(b == std::vector<Range>{{1, 4}});
    REQUIRE(c4.peaks.size() == 2);
    std::set<std::pair<Range, Range>> peaks;
    for (const auto& p : c4.peaks) peaks.insert({p.rows, p.cols});
    CHECK(peaks == std::set<std::pair<Range, Range>>{{{1, 4}, {13, 16}}, {{7, 10}, {1, 4}}});
}

TEST_CASE("single block core") {
    const auto core = core_and_peaks(parse_spec("gl 5 / 5"));
    REQUIRE(core.components.size() == 1);
    CHECK(core.components[0].blocks == std::vector<Range>{{1, 5}});
    CHECK(core.components[0].peaks.empty());
    const auto art = render_core_ascii(parse_spec("gl 2|1 / 3"), core_and_peaks(parse_spec("gl 2|1 / 3")));
    CHECK(art.find('C') != std::string::npos);
}

TEST_CASE("property: cores, peaks and configurations") {
    for (Family fam : {Family::GL, Family::A}) {
        for (const auto& spec : all_specs(fam, fam == Family::GL ? 7 : 6)) {
            CAPTURE(format_spec(spec));
            const auto adm = admissible_positions(spec);
            const auto confs = configurations(spec);
            std::set<Position> all;
            for (const auto& c : confs) all.insert(c.positions.begin(), c.positions.end());
            CHECK(all == std::set<Position>(adm.positions().begin(), adm.positions().end()));

            const auto core = core_and_peaks(spec);
            std::vector<int> diag(spec.size() + 1, 0);
            for (const auto& comp : core.components) {
                CHECK(comp.peaks.size() + 1 == comp.path.size());
                CHECK(comp.part_a.size() + comp.part_b.size() == comp.path.size());
                const std::set<Position> conf(confs[comp.id].positions.begin(), confs[comp.id].positions.end());
                for (auto r : comp.blocks) {
                    CHECK(r.second - r.first + 1 == comp.size);
                    for (int x = r.first; x <= r.second; ++x) ++diag[x];
                }
                for (const auto& p : comp.peaks) {
                    CHECK(p.rows.second - p.rows.first + 1 == comp.size);
                    CHECK(p.cols.second - p.cols.first + 1 == comp.size);
                    CHECK((p.rows.second < p.cols.first || p.cols.second < p.rows.first));
                    for (int i = p.rows.first; i <= p.rows.second; ++i)
                        for (int j = p.cols.first; j <= p.cols.second; ++j) CHECK(adm.contains(i, j));
                    // Arc corners run along the block antidiagonal.
                    for (int u = 0; u < comp.size; ++u) CHECK(conf.count({p.rows.second - u, p.cols.first + u}));
                }
                for (const auto& p : comp.peaks) CHECK_FALSE(inside({p.rows.first, p.rows.first}, p.rows, p.cols));
            }
            for (int x = 1; x <= spec.size(); ++x) CHECK(diag[x] == 1);
        }
    }
}
