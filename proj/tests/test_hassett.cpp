#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"
#include "nestofan/fan.hpp"
#include "nestofan/hassett.hpp"

using namespace nestofan;

namespace {
VSet mask(std::initializer_list<int> verts)
{
    VSet m = 0;
    for (int v : verts) m |= VSet(1) << (v - 1);
    return m;
}

WeightData wd(std::initializer_list<const char*> vals)
{
    std::vector<Rat> v;
    for (const char* s : vals) v.push_back(parse_rational(s));
    return WeightData(std::move(v), Flavor::M0n);
}

Hypergraph power_set_hypergraph(int m)
{
    std::vector<VSet> edges;
    for (VSet s = 1; s <= full_vset(m); ++s) edges.push_back(s);
    return Hypergraph::on_range(m, std::move(edges));
}
}  // namespace

TEST_CASE("canonical representatives are interior and sit in their chambers")
{
    for (int n = 4; n <= 7; ++n) {
        WeightData p = weights_p(n), lm = weights_lm(n);
        CHECK_NOTHROW(signature(p, Granularity::Fine));
        CHECK_NOTHROW(signature(lm, Granularity::Fine));
        // projective chamber: positive exactly on walls containing n
        for (VSet I : wall_family(n, Flavor::M0n, Granularity::Coarse)) {
            bool pos = signature(p, Granularity::Coarse).positive.count(I) > 0;
            CHECK(pos == ((I & (VSet(1) << (n - 1))) != 0));
        }
        // heavy-tail chamber: positive exactly on walls meeting {n-1, n}
        for (VSet I : wall_family(n, Flavor::M0n, Granularity::Coarse)) {
            bool pos = signature(lm, Granularity::Coarse).positive.count(I) > 0;
            CHECK(pos == ((I & (mask({n - 1}) | mask({n}))) != 0));
        }
    }
}

TEST_CASE("hypothesis validation")
{
    CHECK_NOTHROW(HassettInput(weights_p(5)));
    CHECK_NOTHROW(HassettInput(weights_lm(6)));
    CHECK_NOTHROW(HassettInput(weights_p(4)));
    // on a fine wall
    CHECK_THROWS_AS(HassettInput(wd({"1/2", "1/2", "3/4", "3/4", "3/4"})), OnWallError);
    // interior but not between the extreme chambers: {1,2,3} positive
    CHECK_THROWS_AS(HassettInput(wd({"51/100", "52/100", "53/100", "3/4", "1/5"})),
                    HypothesisError);
}

TEST_CASE("H_A of the heavy-tail representative is the full power set")
{
    HassettInput inp(weights_lm(5));
    CHECK(hassett_hypergraph(inp) == power_set_hypergraph(3));
}

TEST_CASE("H_A of the projective representative is the bare full set")
{
    HassettInput inp(weights_p(5));
    Hypergraph h = hassett_hypergraph(inp);
    CHECK(h.edges() == std::vector<VSet>{mask({1, 2, 3})});
}

TEST_CASE("admissible walls at n = 5")
{
    auto walls = admissible_walls(5);
    CHECK(walls.size() == 9);
    CHECK(walls.count(mask({1, 4})) == 1);
    CHECK(walls.count(mask({1, 2, 4})) == 1);
    CHECK(walls.count(mask({1, 5})) == 1);
    CHECK(walls.count(mask({4, 5})) == 0);
    CHECK(walls.count(mask({1, 2, 3, 4})) == 0);  // I = [n-2] is not proper
}

TEST_CASE("n = 4 collapses to the projective line fan")
{
    Fan f = blowup_sequence_fan(HassettInput(weights_p(4)));
    CHECK(fans_equal(f, simplex_fan(2)));
}

TEST_CASE("heavy-tail chamber reproduces the hexagon fan")
{
    HassettInput inp(weights_lm(5));
    BlowupTrace trace = blowup_sequence_fan_trace(inp);
    Fan rhs = fan_of_hypergraph(power_set_hypergraph(3));
    CHECK(fans_equal(trace.fan, rhs));
    // subdivision-inducing crossings carry vertex n-1 and at least two others
    for (VSet w : trace.crossed_walls) {
        CHECK((w & mask({4})) != 0);
        CHECK(vcount(w) >= 3);
    }
    for (VSet w : trace.skipped_walls) CHECK(((w & mask({5})) != 0 || vcount(w) == 2));
}

TEST_CASE("projective chamber needs no subdivision")
{
    Fan f = blowup_sequence_fan(HassettInput(weights_p(6)));
    CHECK(fans_equal(f, simplex_fan(4)));
}

TEST_CASE("theorem holds on a generic interior instance at n = 6")
{
    MonReport rep = verify_theorem_mon(
        HassettInput(wd({"1/20", "1/20", "2/5", "2/5", "89/100", "1"})), 3);
    CHECK(rep.pass);
    CHECK(rep.fans_match);
    CHECK(rep.smooth);
    CHECK(rep.complete);
    CHECK(rep.order_independent);
}

TEST_CASE("crossing traces only touch admissible walls with union-closed prefixes")
{
    for (int n : {5, 6}) {
        auto walls = admissible_walls(n);
        for (const auto& [sig, w] : enumerate_mon_chambers(n)) {
            BlowupTrace trace = blowup_sequence_fan_trace(HassettInput(w));
            std::vector<VSet> prefix;
            for (VSet x : trace.crossed_walls) {
                CHECK(walls.count(x) == 1);
                prefix.push_back(x & ~mask({n - 1}));
            }
            for (VSet x : trace.skipped_walls) CHECK(walls.count(x) == 1);
            CHECK(is_valid_blowup_order(prefix, n - 2));
            if (n == 6) break;  // one spot check at n = 6, the sweep runs in acceptance
        }
    }
}

TEST_CASE("chamber enumeration at n = 5 finds the eight between-chambers")
{
    auto chambers = enumerate_mon_chambers(5);
    CHECK(chambers.size() == 8);
    for (const auto& [sig, w] : chambers) {
        CHECK(signature(w, Granularity::Coarse).positive == sig.positive);
        CHECK_NOTHROW(signature(w, Granularity::Fine));
        CHECK(geq_c(weights_lm(5), w));
        CHECK(geq_c(w, weights_p(5)));
    }
}

TEST_CASE("between-chambers agree with a grid scan filtered by betweenness")
{
    int n = 5;
    std::set<std::set<VSet>> enumerated;
    for (const auto& [sig, w] : enumerate_mon_chambers(n)) enumerated.insert(sig.positive);

    std::set<std::set<VSet>> grid;
    WeightData lm = weights_lm(n), p = weights_p(n);
    for (const auto& pos : testutil::grid_signatures(n, Flavor::M0n, Granularity::Coarse, 16)) {
        auto w = feasible_signature(n, Flavor::M0n, pos, Granularity::Coarse);
        REQUIRE(w.has_value());
        if (geq_c(lm, *w) && geq_c(*w, p)) grid.insert(pos);
    }
    CHECK(grid == enumerated);
}
