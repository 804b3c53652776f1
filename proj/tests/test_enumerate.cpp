#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "seaweed/enumerate.hpp"
#include "seaweed/error.hpp"
#include "seaweed/serialize.hpp"

using namespace seaweed;

TEST_CASE("compositions") {
    CHECK(compositions(3) == std::vector<Composition>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
    CHECK(compositions(2, true) == std::vector<Composition>{{}, {1}, {1, 1}, {2}});
    for (int n = 1; n <= 8; ++n) CHECK(compositions(n).size() == (1u << (n - 1)));
    CHECK(all_specs(Family::GL, 3).size() == 1 + 4 + 16);
    CHECK(all_specs(Family::GL, 3, true).size() == 1 + 3 + 10);
}

TEST_CASE("sweeps report zero failures") {
    for (auto [fam, n] : std::vector<std::pair<Family, int>>{{Family::GL, 6}, {Family::A, 5}, {Family::C, 4}}) {
        SweepOptions opt;
        opt.family = fam;
        opt.max_n = n;
        opt.oracle_samples = 4;
        const auto rep = enumerate_sweep(opt);
        CHECK(rep.failures.empty());
        CHECK(rep.total == static_cast<long>(all_specs(fam, n).size()));
        CHECK(rep.regular == rep.total);
    }
}

TEST_CASE("sweep options") {
    SweepOptions opt;
    opt.max_n = 40;
    CHECK_THROWS_AS(enumerate_sweep(opt), Error);

    opt.max_n = 4;
    opt.budget = 10;
    opt.oracle_samples = 0;
    const auto rep = enumerate_sweep(opt);
    CHECK(rep.total == 10);
    CHECK(rep.truncated);
    CHECK(rep.oracle_checked == 0);
}

TEST_CASE("sweep run log") {
    const std::string path = "sweep_log_test.jsonl";
    SweepOptions opt;
    opt.max_n = 3;
    opt.log_path = path;
    opt.canonical = true;
    const auto rep = enumerate_sweep(opt);
    std::ifstream in(path);
    std::string line;
    long lines = 0;
    while (std::getline(in, line)) {
        const Json j = Json::parse(line);
        for (const char* key : {"spec", "signature", "homotopy", "index", "kernel_dim", "verdict"}) CHECK(j.contains(key));
        CHECK(j["verdict"] == "ok");
        ++lines;
    }
    CHECK(lines == rep.total);
    std::remove(path.c_str());
}
