#include <doctest.h>

#include <algorithm>
#include <map>

#include "seaweed/enumerate.hpp"
#include "seaweed/meander.hpp"

using namespace seaweed;

namespace {

std::vector<int> kinds(const Meander& m) {
    std::vector<int> out;
    for (const auto& c : m.components) out.push_back(static_cast<int>(c.kind));
    std::sort(out.begin(), out.end());
    return out;
}

Composition reversed(Composition c) {
    std::reverse(c.begin(), c.end());
    return c;
}

}  // namespace

TEST_CASE("build_meander examples") {
    const auto m = build_meander(parse_spec("gl 4|1 / 2|1|2"));
    CHECK(m.v == 5);
    CHECK(m.top == std::vector<Edge>{{1, 4}, {2, 3}});
    CHECK(m.bottom == std::vector<Edge>{{1, 2}, {4, 5}});
    CHECK(m.cycles() == 0);
    CHECK(m.paths() == 1);

    const auto w = build_meander(parse_spec("gl 17|3 / 10|4|6"));
    CHECK(w.v == 20);
    CHECK(w.top.size() == 9);
    CHECK(w.bottom.size() == 10);

    const auto one = build_meander(parse_spec("gl 1 / 1"));
    REQUIRE(one.components.size() == 1);
    CHECK(one.components[0].kind == ComponentKind::Isolated);
    CHECK(one.top.empty());
    CHECK(one.bottom.empty());
}

TEST_CASE("shortened meanders and tails") {
    {
        auto [m, t] = build_shortened_meander(make_spec(Family::C, {1, 1, 3}, {3, 3}, 7));
        CHECK(m.v == 7);
        CHECK(t.ta == std::vector<int>{6, 7});
        CHECK(t.tb == std::vector<int>{7});
        CHECK(t.tail == std::vector<int>{6});
        CHECK(t.aftertail == std::vector<int>{7});
    }
    {
        auto [m, t] = build_shortened_meander(parse_spec("C 3 / 2", 3));
        CHECK(t.ta.empty());
        CHECK(t.tb == std::vector<int>{3});
        CHECK(t.tail == std::vector<int>{3});
        CHECK(t.aftertail.empty());
    }
    {
        auto [m, t] = build_shortened_meander(parse_spec("B 1|5|3|1 / 4", 12));
        CHECK(t.tail == std::vector<int>{5, 6, 7, 8, 9, 10});
        CHECK(t.aftertail == std::vector<int>{11, 12});
    }
    CHECK_THROWS(build_shortened_meander(parse_spec("gl 2 / 2")));
}

TEST_CASE("full meanders") {
    const auto c = build_full_meander(parse_spec("C 3 / 2", 3));
    CHECK(c.v == 6);
    CHECK(c.top == arcs({3, 3}));
    CHECK(c.bottom == arcs({2, 2, 2}));
    CHECK(build_full_meander(parse_spec("B 1|5|3|1 / 4", 12)).v == 25);
    CHECK(build_full_meander(parse_spec("C 5|10 / 2|4|3|1|1", 18)).v == 36);
}

TEST_CASE("index examples") {
    CHECK(index(parse_spec("gl 17|3 / 10|4|6")) == 7);
    CHECK(index(parse_spec("gl 10|2|4 / 16")) == 6);
    CHECK(index(parse_spec("A 4|4 / 8")) == 3);
    CHECK(index(parse_spec("C 5|10 / 2|4|3|1|1", 18)) == 7);
    CHECK(index(parse_spec("B 1|5|3|1 / 4", 12)) == 5);
    CHECK(index(parse_spec("gl 4|1 / 2|1|2")) == 1);
    for (int n = 1; n <= 8; ++n) {
        CHECK(index(make_spec(Family::GL, {n}, {n})) == n);
        CHECK(index(make_spec(Family::A, {n + 1}, {n + 1})) == n);
        CHECK(index(make_spec(Family::C, {}, {}, n)) == n);
        CHECK(index(make_spec(Family::B, {}, {}, n)) == n);
    }
}

TEST_CASE("property: components partition vertices; reversal keeps kinds") {
    for (const auto& spec : all_specs(Family::GL, 7)) {
        CAPTURE(format_spec(spec));
        const auto m = build_meander(spec);
        std::vector<int> seen(m.v + 1, 0);
        for (const auto& c : m.components) {
            for (int x : c.vertices) ++seen[x];
            if (c.kind == ComponentKind::Cycle) CHECK(c.endpoints.empty());
            if (c.kind == ComponentKind::Path) CHECK(c.endpoints.size() == 2);
            if (c.kind == ComponentKind::Isolated) CHECK(c.vertices.size() == 1);
        }
        for (int x = 1; x <= m.v; ++x) CHECK(seen[x] == 1);
        for (std::size_t k = 1; k < m.components.size(); ++k) {
            CHECK(*std::min_element(m.components[k - 1].vertices.begin(), m.components[k - 1].vertices.end()) <
                  *std::min_element(m.components[k].vertices.begin(), m.components[k].vertices.end()));
        }
        const auto r = build_meander(reversed(spec.top), reversed(spec.bottom));
        CHECK(kinds(r) == kinds(m));
    }
}

TEST_CASE("dot and ascii output") {
    const auto m = build_meander(parse_spec("gl 4|1 / 2|1|2"));
    const auto dot = meander_to_dot(m);
    CHECK(dot.find("graph meander") != std::string::npos);
    CHECK(dot.find("v1 -- v4 [side=top") != std::string::npos);
    CHECK(dot.find("v4 -- v5 [side=bottom") != std::string::npos);
    CHECK_FALSE(meander_to_ascii(m).empty());
}
