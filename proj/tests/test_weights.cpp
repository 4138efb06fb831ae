#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"
#include "nestofan/enumerate.hpp"
#include "nestofan/hassett.hpp"
#include "nestofan/weights.hpp"

using namespace nestofan;

namespace {
VSet mask(std::initializer_list<int> verts)
{
    VSet m = 0;
    for (int v : verts) m |= VSet(1) << (v - 1);
    return m;
}

WeightData wd(std::initializer_list<const char*> vals, Flavor f = Flavor::M0n)
{
    std::vector<Rat> v;
    for (const char* s : vals) v.push_back(parse_rational(s));
    return WeightData(std::move(v), f);
}
}  // namespace

TEST_CASE("domain membership")
{
    CHECK(in_domain({Rat(1), Rat(1), Rat(1, 2)}, Flavor::Tdn));
    CHECK_FALSE(in_domain({Rat(1), Rat(1, 2), Rat(1, 2)}, Flavor::M0n));  // total exactly 2
    CHECK(in_domain({Rat(1), Rat(1), Rat(1, 2), Rat(1, 2), Rat(1, 2)}, Flavor::M0n));
    CHECK_FALSE(in_domain({Rat(0), Rat(1), Rat(1)}, Flavor::Tdn));
    CHECK_FALSE(in_domain({Rat(3, 2), Rat(1), Rat(1)}, Flavor::Tdn));
    CHECK_FALSE(in_domain({}, Flavor::M0n));
    CHECK_THROWS_AS(wd({"1/4", "1/4", "1/4", "1/4", "1/4"}), std::invalid_argument);
}

TEST_CASE("wall family sizes")
{
    CHECK(wall_family(5, Flavor::M0n, Granularity::Fine).size() == 20);    // |I| in {2,3}
    CHECK(wall_family(5, Flavor::M0n, Granularity::Coarse).size() == 10);  // |I| = 3
    CHECK(wall_family(4, Flavor::M0n, Granularity::Coarse).empty());
    CHECK(wall_family(3, Flavor::Tdn, Granularity::Fine).size() == 3);
    CHECK(wall_family(3, Flavor::Tdn, Granularity::Coarse).size() == 3);  // same family
    auto fam = wall_family(4, Flavor::M0n, Granularity::Fine);
    CHECK(std::is_sorted(fam.begin(), fam.end(), edge_less));
}

TEST_CASE("signature of the all-ones weights is all-positive")
{
    WeightData a = wd({"1", "1", "1", "1", "1"});
    auto sig = signature(a, Granularity::Fine);
    CHECK(sig.positive.size() == 20);
}

TEST_CASE("on-wall weights are rejected with the offending wall")
{
    WeightData a = wd({"1/2", "1/2", "3/4", "3/4", "3/4"});
    try {
        signature(a, Granularity::Fine);
        FAIL("expected OnWallError");
    } catch (const OnWallError& ex) {
        CHECK(ex.wall() == mask({1, 2}));
    }
    // coarse family does not see the pair wall
    CHECK_NOTHROW(signature(a, Granularity::Coarse));
}

TEST_CASE("signatures are up-sets under inclusion")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        std::vector<Rat> v;
        for (int i = 0; i < 5; ++i) v.push_back(Rat(1 + static_cast<int>(rng() % 97), 100));
        if (!in_domain(v, Flavor::M0n)) continue;
        std::set<VSet> pos;
        try {
            pos = signature(WeightData(v, Flavor::M0n), Granularity::Fine).positive;
        } catch (const OnWallError&) {
            continue;
        }
        auto fam = wall_family(5, Flavor::M0n, Granularity::Fine);
        for (VSet I : pos)
            for (VSet J : fam)
                if ((I & ~J) == 0) CHECK(pos.count(J) == 1);
    }
}

TEST_CASE("feasibility oracle accepts realizable patterns and rejects the rest")
{
    // heavy-tail pattern: positive exactly on walls containing 5
    std::set<VSet> lmish;
    for (VSet I : wall_family(5, Flavor::M0n, Granularity::Coarse))
        if (I & mask({5})) lmish.insert(I);
    auto w = feasible_signature(5, Flavor::M0n, lmish, Granularity::Coarse);
    REQUIRE(w.has_value());
    CHECK(signature(*w, Granularity::Coarse).positive == lmish);

    // not an up-set: {1,2,3} positive but its coarse superset {1,2,3,4}... the
    // family at n=5 has only |I| = 3, so break monotonicity across overlap:
    // a_{123} > 1 and a_{124} < 1 and a_{125} < 1 and a_{134} < 1 forces
    // contradictions with a_{145} > 1? use a direct infeasible pattern instead:
    // positive on {1,2,3} only, negative on all walls containing 4 or 5 - then
    // a_4, a_5 small, but a_{123} > 1 and a_{123} <= a_{1234}... not coarse.
    // Simplest guaranteed-infeasible pattern: all negative. The domain forces
    // a_[5] > 2, so some triple exceeds 1.
    CHECK_FALSE(
        feasible_signature(5, Flavor::M0n, {}, Granularity::Coarse).has_value());

    CHECK_THROWS_AS(feasible_signature(5, Flavor::M0n, {mask({1, 2})}, Granularity::Coarse),
                    std::invalid_argument);
}

TEST_CASE("fine refinement keeps the coarse chamber and avoids all fine walls")
{
    std::set<VSet> lmish;
    for (VSet I : wall_family(5, Flavor::M0n, Granularity::Coarse))
        if (I & mask({5})) lmish.insert(I);
    WeightData w = fine_witness_in_coarse_chamber(5, Flavor::M0n, lmish);
    CHECK(signature(w, Granularity::Coarse).positive == lmish);
    CHECK_NOTHROW(signature(w, Granularity::Fine));
}

TEST_CASE("geq_c on the canonical representatives")
{
    CHECK(geq_c(weights_lm(5), weights_p(5)));
    CHECK_FALSE(geq_c(weights_p(5), weights_lm(5)));
    CHECK(geq_c(weights_p(5), weights_p(5)));
    CHECK(geq_c(weights_lm(6), weights_p(6)));
    CHECK_THROWS_AS(geq_c(weights_lm(5), weights_p(6)), std::invalid_argument);
}

TEST_CASE("crossing path brackets the crossed walls and nothing else")
{
    WeightData a = wd({"33/100", "33/100", "33/100", "99/100", "1"});
    WeightData b = wd({"26/100", "27/100", "28/100", "29/100", "99/100"});
    auto path = crossing_path(a, b);
    std::set<VSet> crossed;
    Rat prev(0);
    for (const auto& c : path) {
        CHECK(c.t > prev);
        CHECK(c.t <= 1);
        prev = c.t;
        crossed.insert(c.wall);
        // the crossing parameter solves the wall equation exactly
        Rat av = a.subset_sum(c.wall), bv = b.subset_sum(c.wall);
        CHECK(bv + c.t * (av - bv) == 1);
    }
    for (VSet I : wall_family(5, Flavor::M0n, Granularity::Fine)) {
        bool should = b.subset_sum(I) < 1 && a.subset_sum(I) > 1;
        CHECK(crossed.count(I) == (should ? 1u : 0u));
    }
}

TEST_CASE("crossing path rejects incomparable or on-wall endpoints")
{
    CHECK_THROWS_AS(
        crossing_path(wd({"1/2", "1/2", "1/2", "1/2", "1/2"}), wd({"2/5", "3/5", "2/5", "2/5",
                                                                   "3/5"})),
        std::invalid_argument);
    CHECK_THROWS_AS(crossing_path(wd({"1/2", "1/2", "3/4", "3/4", "3/4"}),
                                  wd({"2/5", "2/5", "2/5", "2/5", "3/4"})),
                    OnWallError);
}

TEST_CASE("ties in crossing parameters are flagged")
{
    // endpoints symmetric in 1 and 2 make {1,4} and {2,4} cross simultaneously
    WeightData a = wd({"3/5", "3/5", "9/10", "9/10", "9/10"});
    WeightData b = wd({"2/5", "2/5", "9/10", "11/20", "1/2"});
    CHECK_THROWS_AS(crossing_path(a, b), NonGenericError);
}

TEST_CASE("chamber census matches a rational grid scan at n = 4 and 5")
{
    auto census4 = enumerate_signatures(4, Flavor::M0n, Granularity::Fine);
    std::set<std::set<VSet>> sigs4;
    for (const auto& [pos, w] : census4) {
        CHECK(signature(w, Granularity::Fine).positive == pos);
        sigs4.insert(pos);
    }
    CHECK(sigs4.size() == census4.size());
    CHECK(sigs4 == testutil::grid_signatures(4, Flavor::M0n, Granularity::Fine, 16));

    auto census5 = enumerate_signatures(5, Flavor::M0n, Granularity::Coarse);
    std::set<std::set<VSet>> sigs5;
    for (const auto& [pos, w] : census5) sigs5.insert(pos);
    CHECK(sigs5 == testutil::grid_signatures(5, Flavor::M0n, Granularity::Coarse, 16));

    auto census3t = enumerate_signatures(3, Flavor::Tdn, Granularity::Fine);
    std::set<std::set<VSet>> sigs3t;
    for (const auto& [pos, w] : census3t) sigs3t.insert(pos);
    CHECK(sigs3t == testutil::grid_signatures(3, Flavor::Tdn, Granularity::Fine, 16));
}

TEST_CASE("coarse census at n = 4 is the single unconstrained chamber")
{
    auto census = enumerate_signatures(4, Flavor::M0n, Granularity::Coarse);
    REQUIRE(census.size() == 1);
    CHECK(census[0].first.empty());
}

TEST_CASE("plus embedding appends a unit weight")
{
    WeightData a = wd({"1/2", "1/2", "1/2"}, Flavor::Tdn);
    WeightData ap = plus_weight(a);
    CHECK(ap.flavor == Flavor::M0n);
    CHECK(ap.values == std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1)});
    CHECK_THROWS_AS(plus_weight(ap), std::invalid_argument);
}
