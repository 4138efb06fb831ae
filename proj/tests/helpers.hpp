#ifndef NESTOFAN_TEST_HELPERS_HPP
#define NESTOFAN_TEST_HELPERS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "nestofan/fan.hpp"
#include "nestofan/hypergraph.hpp"
#include "nestofan/nestohedron.hpp"
#include "nestofan/weights.hpp"

namespace testutil {

using namespace nestofan;

/** Every ASC hypergraph on [m], by exhaustive filtering over the subsets of
 *  non-singleton hyperedges. Feasible for m <= 4 (2^11 candidates). */
inline std::vector<Hypergraph> all_asc_hypergraphs(int m)
{
    std::vector<VSet> cand;
    for (VSet s = 1; s <= full_vset(m); ++s)
        if (vcount(s) >= 2) cand.push_back(s);
    std::vector<Hypergraph> out;
    int k = static_cast<int>(cand.size());
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<VSet> edges;
        for (int i = 0; i < m; ++i) edges.push_back(VSet(1) << i);
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) edges.push_back(cand[i]);
        Hypergraph h = Hypergraph::on_range(m, std::move(edges));
        if (is_saturated(h) && is_connected(h)) out.push_back(std::move(h));
    }
    return out;
}

/** Random ASC hypergraph: random non-singleton seeds plus the full set,
 *  saturated by closing under overlapping unions, all singletons added. */
inline Hypergraph random_asc_hypergraph(int m, std::mt19937_64& rng)
{
    std::set<VSet> edges;
    edges.insert(full_vset(m));
    int seeds = 1 + static_cast<int>(rng() % (2 * m));
    for (int s = 0; s < seeds; ++s) {
        VSet e = static_cast<VSet>(rng()) & full_vset(m);
        if (vcount(e) >= 2) edges.insert(e);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<VSet> cur(edges.begin(), edges.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j)
                if ((cur[i] & cur[j]) != 0 && edges.insert(cur[i] | cur[j]).second) grew = true;
    }
    for (int i = 0; i < m; ++i) edges.insert(VSet(1) << i);
    return Hypergraph::on_range(m, std::vector<VSet>(edges.begin(), edges.end()));
}

/** Definition-level nested-set enumeration over all subsets of the ground
 *  set. Exponential; intended as an oracle for small m. */
inline std::set<std::vector<VSet>> brute_force_nested_sets(const Hypergraph& h, int size)
{
    Hypergraph hat = atomic_closure(h);
    int m = h.num_vertices();
    std::vector<VSet> ground;
    for (VSet e : hat.edges())
        if (e != full_vset(m)) ground.push_back(e);
    int k = static_cast<int>(ground.size());

    std::set<std::vector<VSet>> out;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<VSet> members;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) members.push_back(ground[i]);
        if (static_cast<int>(members.size()) != size) continue;

        bool ok = true;
        for (size_t i = 0; i < members.size() && ok; ++i)
            for (size_t j = i + 1; j < members.size() && ok; ++j) {
                VSet inter = members[i] & members[j];
                if (inter != 0 && inter != members[i] && inter != members[j]) ok = false;
            }
        // unions of >= 2 pairwise-disjoint members must avoid the hyperedges
        int c = static_cast<int>(members.size());
        for (std::uint32_t sub = 0; sub < (1u << c) && ok; ++sub) {
            if (std::popcount(sub) < 2) continue;
            VSet u = 0;
            bool disjoint = true;
            for (int i = 0; i < c && disjoint; ++i)
                if (sub & (1u << i)) {
                    if (u & members[i]) disjoint = false;
                    u |= members[i];
                }
            if (disjoint && hat.has_edge(u)) ok = false;
        }
        if (ok) out.insert(members);
    }
    return out;
}

/** Lattice points of the Minkowski sum of the simplices Delta_J over H^at,
 *  built incrementally. Vertex sets of generalized permutohedra are tiny at
 *  desk scale, so plain set dedup suffices. */
inline std::set<std::vector<std::int64_t>> minkowski_cloud(const Hypergraph& h)
{
    Hypergraph hat = atomic_closure(h);
    int m = h.num_vertices();
    std::set<std::vector<std::int64_t>> cloud{std::vector<std::int64_t>(m, 0)};
    for (VSet J : hat.edges()) {
        std::set<std::vector<std::int64_t>> next;
        for (const auto& p : cloud)
            for (int i : vset_indices(J)) {
                auto q = p;
                q[i] += 1;
                next.insert(std::move(q));
            }
        cloud = std::move(next);
    }
    return cloud;
}

/** Signatures visited by a deterministic rational grid scan of the weight
 *  domain (odd numerators over `denom`); on-wall points are skipped. */
inline std::set<std::set<VSet>> grid_signatures(int n, Flavor flavor, Granularity gran, int denom)
{
    std::vector<Rat> values;
    for (int k = 1; k < denom; k += 2) values.push_back(Rat(k, denom));
    int v = static_cast<int>(values.size());

    std::set<std::set<VSet>> out;
    std::vector<int> idx(n, 0);
    for (;;) {
        std::vector<Rat> w;
        for (int i = 0; i < n; ++i) w.push_back(values[idx[i]]);
        if (in_domain(w, flavor)) {
            try {
                out.insert(signature(WeightData(std::move(w), flavor), gran).positive);
            } catch (const OnWallError&) {
            }
        }
        int i = 0;
        while (i < n && ++idx[i] == v) idx[i++] = 0;
        if (i == n) break;
    }
    return out;
}

/** Coarse signatures met by an integer grid scan of the slice a_n = 1 (odd
 *  numerators over `denom` elsewhere), with one grid witness each. Any
 *  chamber whose walls through n are all positive keeps its coarse signature
 *  when a_n is raised to 1 (those wall sums only grow, the rest are fixed),
 *  so for such chambers the slice scan loses nothing. */
inline std::map<std::set<VSet>, std::vector<Rat>> slice_grid_witnesses(int n, int denom)
{
    auto fam = wall_family(n, Flavor::M0n, Granularity::Coarse);
    std::map<std::set<VSet>, std::vector<Rat>> out;
    std::vector<long> v(n, denom);  // scaled by denom; v[n-1] stays at a_n = 1

    std::function<void(int)> rec = [&](int i) {
        if (i == n - 1) {
            long total = 0;
            for (long x : v) total += x;
            if (total <= 2L * denom) return;
            std::set<VSet> pos;
            for (VSet I : fam) {
                long s = 0;
                for (int b = 0; b < n; ++b)
                    if (I >> b & 1) s += v[b];
                if (s == denom) return;  // on a wall
                if (s > denom) pos.insert(I);
            }
            if (out.count(pos)) return;
            std::vector<Rat> w;
            for (long x : v) w.emplace_back(x, denom);
            out.emplace(std::move(pos), std::move(w));
            return;
        }
        for (long k = 1; k < denom; k += 2) {
            v[i] = k;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace testutil

#endif  // NESTOFAN_TEST_HELPERS_HPP
