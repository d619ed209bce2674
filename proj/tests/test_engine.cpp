#include "cyclecount/applications.hpp"
#include "cyclecount/engine.hpp"
#include "cyclecount/generators.hpp"
#include "cyclecount/oracle.hpp"

#include <doctest.h>

using namespace cyclecount;

namespace {

EngineOptions with_tau(int tau) {
    EngineOptions o;
    o.tau = tau;
    return o;
}

}  // namespace

TEST_CASE("engine totals on named graphs") {
    // Frozen from the oracle.
    const std::pair<CubicPlanarGraph, int> cases[] = {
        {theta_graph(), 3},   {k4_graph(), 7},           {prism_graph(3), 14},  {prism_graph(4), 28},
        {prism_graph(5), 52}, {dodecahedron_graph(), 1168}, {dumbbell_graph(), 14},
    };
    for (const auto& [h, expected] : cases)
        for (int tau : {0, 3, 12}) {
            CHECK(count_cycles(h, false, with_tau(tau)).total() == expected);
            CHECK(count_cycles(h, true, with_tau(tau)).total() == expected + 1);
        }
}

TEST_CASE("engine by length matches the oracle on random graphs") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 12; ++i) {
        auto h = random_cubic_planar(8 + 2 * (i % 7), rng);
        auto oracle = oracle_count_by_length(h);
        auto got = count_by_length(h, false, with_tau(i % 3 == 0 ? 0 : 4)).counts;
        for (const auto& [l, c] : oracle) CHECK(got.coeff(static_cast<std::size_t>(l)) == c);
        BigInt sum = 0;
        for (const auto& [l, c] : oracle) sum += c;
        CHECK(got.total() == sum);
    }
}

TEST_CASE("engine with must and forbid edges matches the oracle") {
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 10; ++i) {
        auto h = random_cubic_planar(10 + 2 * (i % 6), rng);
        for (int trial = 0; trial < 6; ++trial) {
            CycleFilter f;
            std::vector<int> edges(h.num_edges());
            std::iota(edges.begin(), edges.end(), 0);
            std::shuffle(edges.begin(), edges.end(), rng);
            const int nm = static_cast<int>(rng() % 3), nf = static_cast<int>(rng() % 3);
            f.must.assign(edges.begin(), edges.begin() + nm);
            f.forbid.assign(edges.begin() + nm, edges.begin() + nm + nf);
            auto got = count_constrained(h, f.must, f.forbid, false, with_tau(3)).total();
            CHECK(got == oracle_count(h, f));
        }
    }
}

TEST_CASE("engine honours S") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        auto h = random_cubic_planar(10 + 2 * (i % 5), rng);
        auto cycles = enumerate_cycles(h);
        const auto& c = cycles[rng() % cycles.size()];
        std::vector<Dart> walk;
        cycle_traversal(h, c, &walk);
        CycleFilter f;
        for (Dart d : walk)
            if (rng() % 3 == 0) f.s.push_back({d.edge, h.tail(d), h.head(d)});
        Engine engine(with_tau(2));
        Subproblem p{h, EdgeAttrs::plain(h.num_edges(), 0), f.s};
        BigInt got = engine.count(p).total();
        if (f.s.empty()) got -= 1;
        CHECK(got == oracle_count(h, f));
    }
}

TEST_CASE("threads, cache and repeated runs agree") {
    std::mt19937_64 rng(8);
    auto h = random_cubic_planar(40, rng);
    EngineOptions serial;
    auto base = count_by_length(h, false, serial).counts;
    std::vector<LevelStat> first, second;
    EngineOptions traced = serial;
    traced.stats_sink = &first;
    count_cycles(h, false, traced);
    traced.stats_sink = &second;
    count_cycles(h, false, traced);
    CHECK(first.size() == second.size());
    CHECK(Engine::stats_csv(first) == Engine::stats_csv(second));

    EngineOptions threaded;
    threaded.threads = 4;
    CHECK(count_by_length(h, false, threaded).counts == base);
    EngineOptions cached;
    cached.memo_limit = 1 << 12;
    CHECK(count_by_length(h, false, cached).counts == base);
}

TEST_CASE("stats rows describe the recursion") {
    std::vector<LevelStat> rows;
    EngineOptions o;
    o.tau = 4;
    o.stats_sink = &rows;
    count_cycles(dodecahedron_graph(), false, o);
    REQUIRE_FALSE(rows.empty());
    const LevelStat& root = rows.back();
    CHECK(root.depth == 0);
    CHECK(root.g_vertices == 12);
    CHECK_FALSE(root.base_case);
    CHECK(root.separator_length > 0);
    CHECK(root.compatible_pairs > 0);
    CHECK(root.valid_interleavings > 0);
    auto csv = Engine::stats_csv(rows);
    CHECK(csv.rfind("depth,h_vertices,g_vertices,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(rows.size()) + 1);
}

TEST_CASE("brute force base case") {
    auto h = prism_graph(4);
    Subproblem p{h, EdgeAttrs::plain(h.num_edges(), 1), {}};
    auto all = brute_force_base(p);
    CHECK(all.coeff(0) == 1);
    CHECK(all.coeff(4) == 6);
    CHECK(all.coeff(6) == 16);
    CHECK(all.coeff(8) == 6);
    p.attrs.must[0] = 1;
    p.attrs.forbid[1] = 1;
    CycleFilter f;
    f.must = {0};
    f.forbid = {1};
    CHECK(brute_force_base(p).total() == oracle_count(h, f));
}
