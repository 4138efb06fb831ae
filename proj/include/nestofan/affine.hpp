#ifndef NESTOFAN_AFFINE_HPP
#define NESTOFAN_AFFINE_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "fan.hpp"
#include "hassett.hpp"
#include "hypergraph.hpp"
#include "weights.hpp"

namespace nestofan {

/** Interior representative of the affine-space chamber (all walls on the
 *  negative side). */
inline WeightData weights_p_t(int n)
{
    if (n < 3) throw std::invalid_argument("weights_p_t requires n >= 3");
    Rat eps = detail::rep_margin(n);
    std::vector<Rat> v;
    for (int i = 1; i <= n; ++i) v.push_back(Rat(1, n - 1) - Rat(i) * eps);
    return WeightData(std::move(v), Flavor::Tdn);
}

/** Interior representative of the chamber whose model is the iterated
 *  blow-up at all torus-invariant centers: one heavy entry, light rest. */
inline WeightData weights_lm_t(int n)
{
    if (n < 3) throw std::invalid_argument("weights_lm_t requires n >= 3");
    Rat eps = detail::rep_margin(n);
    std::vector<Rat> v;
    for (int i = 1; i <= n - 1; ++i) v.push_back(Rat(1, n - 1) - Rat(i) * eps);
    v.push_back(Rat(1));
    return WeightData(std::move(v), Flavor::Tdn);
}

/** Validated instance of the second theorem's hypotheses: interior weights
 *  admitting reductions (after appending the extra marked point of weight
 *  one) from the heavy-tail chamber and to the affine-space chamber; for
 *  n = 3 additionally a_1 + a_2 <= 1. */
struct AffineInput {
    WeightData a;
    int d;
    int n;

    AffineInput(int depth, WeightData weights) : a(std::move(weights)), d(depth), n(a.n())
    {
        if (a.flavor != Flavor::Tdn)
            throw std::invalid_argument("AffineInput requires Tdn weights");
        if (d < 1) throw std::invalid_argument("AffineInput requires d >= 1");
        if (n < 3) throw std::invalid_argument("AffineInput requires n >= 3");
        signature(a, Granularity::Fine);  // throws OnWallError when on a wall
        if (n == 3 && a.values[0] + a.values[1] > 1)
            throw HypothesisError("a_1 + a_2 > 1 with n = 3");
        WeightData ap = plus_weight(a);
        if (!geq_c(plus_weight(weights_lm_t(n)), ap))
            throw HypothesisError("weights do not reduce from the heavy-tail chamber");
        if (!geq_c(ap, plus_weight(weights_p_t(n))))
            throw HypothesisError("weights do not reduce to the affine-space chamber");
    }
};

/** G_A: proper subsets I of [n] with |I| >= 2 and a_I > 1, the index sets of
 *  the blow-up centers. Throws when a_I = 1 for some candidate. */
inline std::vector<VSet> building_set_indices(const WeightData& a)
{
    if (a.flavor != Flavor::Tdn)
        throw std::invalid_argument("building_set_indices requires Tdn weights");
    int n = a.n();
    std::vector<VSet> out;
    for (VSet I = 1; I < full_vset(n); ++I) {
        if (vcount(I) < 2) continue;
        Rat s = a.subset_sum(I);
        if (s == 1) throw OnWallError(I, "building set undefined on a wall");
        if (s > 1) out.push_back(I);
    }
    std::sort(out.begin(), out.end(), edge_less);
    return out;
}

inline bool torus_invariant(const std::vector<VSet>& building_set, int n)
{
    VSet last = VSet(1) << (n - 1);
    return std::all_of(building_set.begin(), building_set.end(),
                       [&](VSet I) { return (I & last) != 0; });
}

namespace detail {
/** Copy block of I in [n-1] inside the inflated vertex set: vertex (i,k)
 *  occupies position (i-1)d + (k-1). */
inline VSet copy_block(VSet I, int d)
{
    VSet block = 0;
    for (int i : vset_indices(I)) block |= (full_vset(d)) << (i * d);
    return block;
}
}  // namespace detail

/** Blow-up fan of the weighted compactification of affine d(n-1)-space:
 *  start from simplex_fan(d(n-1)) and subdivide at the copy blocks of the
 *  sets I with I union {n} in G_A, larger blocks first. Every center must
 *  be torus-invariant. */
inline Fan tdn_blowup_fan(const AffineInput& inp)
{
    int d = inp.d, n = inp.n;
    auto g = building_set_indices(inp.a);
    if (!torus_invariant(g, n))
        throw HypothesisError("building set contains a non-torus-invariant center");

    VSet last = VSet(1) << (n - 1);
    std::vector<VSet> centers;  // subsets of [n-1]
    for (VSet J : g) centers.push_back(J & ~last);
    std::sort(centers.begin(), centers.end(), edge_less);

    int m = d * (n - 1);
    std::vector<VSet> blocks;
    for (VSet I : centers) blocks.push_back(detail::copy_block(I, d));
    if (!is_valid_blowup_order(blocks, m))
        throw std::logic_error("block order violates prefix union-closure");
    return subdivide_sequence(m, blocks);
}

/** The hypergraph side of the second theorem: Sigma(Inf_d(H_{A^+})). */
inline Fan inflated_fan(const AffineInput& inp)
{
    HassettInput plus(plus_weight(inp.a));
    Hypergraph h = hassett_hypergraph(plus);
    return fan_of_hypergraph(inflate(h, inp.d));
}

struct TdnReport {
    int d = 0;
    int n = 0;
    std::vector<VSet> building_set;
    bool centers_torus_invariant = false;
    Hypergraph h_plus;
    Hypergraph inflated;
    Fan blowup_fan;
    Fan hypergraph_fan;
    bool fans_match = false;
    bool smooth = false;
    bool complete = false;
    bool order_independent = false;
    bool pass = false;
};

/** Executable check of the second main theorem: the torus-invariant blow-up
 *  fan must coincide with the fan of the inflated hypergraph. */
inline TdnReport verify_theorem_tdn(const AffineInput& inp, int random_orders = 5,
                                    std::uint64_t seed = 0)
{
    HassettInput plus(plus_weight(inp.a));
    Hypergraph h = hassett_hypergraph(plus);
    Hypergraph inf = inflate(h, inp.d);
    Fan lhs = tdn_blowup_fan(inp);
    Fan rhs = fan_of_hypergraph(inf);

    TdnReport rep{inp.d, inp.n, building_set_indices(inp.a),
                  torus_invariant(building_set_indices(inp.a), inp.n),
                  h, inf, lhs, rhs};
    rep.fans_match = fans_equal(lhs, rhs);
    rep.smooth = is_smooth(lhs) && is_smooth(rhs);
    rep.complete = is_complete(lhs) && is_complete(rhs);

    rep.order_independent = true;
    std::mt19937_64 rng(0x7D17D1ULL + seed);
    for (int k = 0; k < random_orders; ++k) {
        auto order = random_valid_order(inf, rng);
        if (!fans_equal(fan_of_hypergraph(inf, order), rhs)) rep.order_independent = false;
    }
    rep.pass = rep.fans_match && rep.centers_torus_invariant && rep.smooth && rep.complete &&
               rep.order_independent;
    return rep;
}

/** All chambers of the Tdn domain between the heavy-tail and affine-space
 *  chambers, each with an interior witness. Walls avoiding n are forced
 *  negative; walls through n are enumerated over up-sets. */
inline std::vector<std::pair<ChamberSignature, WeightData>> enumerate_tdn_chambers(int n)
{
    if (n < 3) throw std::invalid_argument("enumerate_tdn_chambers requires n >= 3");
    VSet last = VSet(1) << (n - 1);
    std::vector<VSet> free_sets;  // proper nonempty subsets of [n-1]
    for (VSet I = 1; I < full_vset(n - 1); ++I) free_sets.push_back(I);

    WeightData lmp = plus_weight(weights_lm_t(n));
    WeightData pp = plus_weight(weights_p_t(n));

    // size-descending processing lets the DFS prune non-up-sets immediately
    std::sort(free_sets.begin(), free_sets.end(), edge_less);
    int k = static_cast<int>(free_sets.size());

    std::vector<std::pair<ChamberSignature, WeightData>> out;
    std::vector<char> chosen(k, 0);
    std::function<void(int)> dfs = [&](int i) {
        if (i == k) {
            std::set<VSet> positive;
            for (int j = 0; j < k; ++j)
                if (chosen[j]) positive.insert(free_sets[j] | last);
            auto witness = feasible_signature(n, Flavor::Tdn, positive, Granularity::Fine);
            if (!witness) return;
            WeightData wp = plus_weight(*witness);
            if (!geq_c(lmp, wp) || !geq_c(wp, pp)) return;
            ChamberSignature sig{n, Flavor::Tdn, Granularity::Fine, positive};
            out.emplace_back(std::move(sig), std::move(*witness));
            return;
        }
        dfs(i + 1);
        bool supersets_in = true;
        for (int j = 0; j < i && supersets_in; ++j)
            if (!chosen[j] && (free_sets[i] & ~free_sets[j]) == 0) supersets_in = false;
        if (supersets_in) {
            chosen[i] = 1;
            dfs(i + 1);
            chosen[i] = 0;
        }
    };
    dfs(0);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::lexicographical_compare(x.first.positive.begin(), x.first.positive.end(),
                                            y.first.positive.begin(), y.first.positive.end(),
                                            edge_less);
    });
    return out;
}

}  // namespace nestofan

#endif  // NESTOFAN_AFFINE_HPP
