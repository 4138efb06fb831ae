#ifndef NESTOFAN_HASSETT_HPP
#define NESTOFAN_HASSETT_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "fan.hpp"
#include "hypergraph.hpp"
#include "weights.hpp"

namespace nestofan {

namespace detail {
/** Deterministic wiggle used by the canonical representatives: small enough
 *  that every defining inequality below stays strict and off every fine
 *  wall (verified once per n at construction). */
inline Rat rep_margin(int n) { return Rat(1, 10LL * n * n * n); }
}  // namespace detail

/** Interior representative of the projective-space chamber: the named
 *  weights (1/(n-2),...,1/(n-2),1) sit on its boundary, so the light
 *  entries are staggered slightly downwards. */
inline WeightData weights_p(int n)
{
    if (n < 4) throw std::invalid_argument("weights_p requires n >= 4");
    Rat eps = detail::rep_margin(n);
    std::vector<Rat> v;
    for (int i = 1; i <= n - 1; ++i) v.push_back(Rat(1, n - 2) - Rat(i) * eps);
    v.push_back(Rat(1));
    return WeightData(std::move(v), Flavor::M0n);
}

/** Interior representative of the Losev-Manin chamber: two heavy entries,
 *  light remainder, staggered off the walls. */
inline WeightData weights_lm(int n)
{
    if (n < 4) throw std::invalid_argument("weights_lm requires n >= 4");
    Rat eps = detail::rep_margin(n);
    std::vector<Rat> v;
    for (int i = 1; i <= n - 2; ++i) v.push_back(Rat(1, n - 2) - Rat(i) * eps);
    v.push_back(Rat(1) - eps);
    v.push_back(Rat(1));
    return WeightData(std::move(v), Flavor::M0n);
}

/** Validated instance of the theorem hypotheses: interior fine-chamber
 *  weights admitting reductions from the Losev-Manin chamber and to the
 *  projective-space chamber. */
struct HassettInput {
    WeightData a;
    int n;

    explicit HassettInput(WeightData weights) : a(std::move(weights)), n(a.n())
    {
        if (a.flavor != Flavor::M0n)
            throw std::invalid_argument("HassettInput requires M0n weights");
        if (n < 4) throw std::invalid_argument("HassettInput requires n >= 4");
        signature(a, Granularity::Fine);  // throws OnWallError when on a wall
        if (!geq_c(weights_lm(n), a))
            throw HypothesisError("weights do not reduce from the Losev-Manin chamber");
        if (!geq_c(a, weights_p(n)))
            throw HypothesisError("weights do not reduce to the projective-space chamber");
        if (n >= 5) {
            if (a.subset_sum(full_vset(n - 1)) <= 1)
                throw HypothesisError("a_{[n-1]} <= 1");
            for (VSet I = 1; I < full_vset(n - 1); ++I) {
                if (vcount(I) < 2) continue;
                if (a.subset_sum(I) + a.values[n - 1] <= 1)
                    throw HypothesisError("a_I + a_n <= 1 for some I in [n-1]");
            }
            for (VSet I = 1; I <= full_vset(n - 2); ++I)
                if (a.subset_sum(I) > 1)
                    throw HypothesisError("a_I > 1 for some I in [n-2]");
        }
    }
};

/** H_A on [n-2]: hyperedges are the nonempty I with a_I + a_{n-1} > 1.
 *  Saturated by monotonicity of subset sums; connected because the full
 *  set always qualifies. */
inline Hypergraph hassett_hypergraph(const HassettInput& inp)
{
    int n = inp.n;
    std::vector<VSet> edges;
    for (VSet I = 1; I <= full_vset(n - 2); ++I)
        if (inp.a.subset_sum(I) + inp.a.values[n - 2] > 1) edges.push_back(I);
    return Hypergraph::on_range(n - 2, std::move(edges));
}

/** Fine walls a path from the projective-space chamber towards A may
 *  cross: I union {n-1} for proper nonempty I in [n-2], or {i,n}. */
inline std::set<VSet> admissible_walls(int n)
{
    if (n < 5) throw std::invalid_argument("admissible_walls requires n >= 5");
    std::set<VSet> out;
    VSet heavy1 = VSet(1) << (n - 2);  // vertex n-1
    VSet heavy2 = VSet(1) << (n - 1);  // vertex n
    for (VSet I = 1; I < full_vset(n - 2); ++I)
        out.insert(I | heavy1);
    for (int i = 0; i < n - 2; ++i)
        out.insert((VSet(1) << i) | heavy2);
    return out;
}

namespace detail {

/** Joint chamber-representative search: A' with signature sa, B' with
 *  signature sb, A' >= B' componentwise, all inequalities strict. */
inline std::optional<std::pair<WeightData, WeightData>> comparable_representatives(
    int n, Flavor flavor, const std::set<VSet>& sa, const std::set<VSet>& sb)
{
    auto family = wall_family(n, flavor, Granularity::Coarse);
    LpBuilder lp;
    lp.nvars = 2 * n + 1;
    int tvar = 2 * n;
    lp.add_chamber(0, n, flavor, family, sa, tvar);
    lp.add_chamber(n, n, flavor, family, sb, tvar);
    for (int i = 0; i < n; ++i)
        lp.row({{n + i, Rat(1)}, {i, Rat(-1)}}, Rat(0));
    lp.row({{tvar, Rat(1)}}, Rat(1, 2));

    std::vector<Rat> obj(lp.nvars, Rat(0));
    obj[tvar] = 1;
    LpResult res = solve_lp(lp.a, lp.b, obj);
    if (res.status != LpStatus::Optimal || res.value <= 0) return std::nullopt;
    std::vector<Rat> av(res.x.begin(), res.x.begin() + n);
    std::vector<Rat> bv(res.x.begin() + n, res.x.begin() + 2 * n);
    return std::make_pair(WeightData(std::move(av), flavor), WeightData(std::move(bv), flavor));
}

/** Smallest distance of either point to a domain-box face or a coarse wall.
 *  Perturbations below margin/n cannot change coarse signatures. */
inline Rat chamber_margin(const WeightData& a, const WeightData& b)
{
    auto one_margin = [](const WeightData& w) {
        Rat m = w.subset_sum(full_vset(w.n())) - (w.flavor == Flavor::M0n ? Rat(2) : Rat(1));
        for (const Rat& v : w.values) {
            m = std::min(m, v);
            m = std::min(m, Rat(1) - v);
        }
        for (VSet I : wall_family(w.n(), w.flavor, Granularity::Coarse)) {
            Rat d = w.subset_sum(I) - 1;
            m = std::min(m, d < 0 ? -d : d);
        }
        return m;
    };
    return std::min(one_margin(a), one_margin(b));
}

inline bool generic_pair(const WeightData& a, const WeightData& b)
{
    try {
        crossing_path(a, b);
        return true;
    } catch (const NonGenericError&) {
        return false;
    } catch (const OnWallError&) {
        return false;
    }
}

}  // namespace detail

struct BlowupTrace {
    Fan fan;
    std::vector<VSet> crossed_walls;   // subdivision-inducing walls, path order
    std::vector<VSet> skipped_walls;   // isomorphism-only crossings, path order
};

/** Simulate the reduction from A's chamber down to projective space as a
 *  sequence of stellar subdivisions of simplex_fan(n-2): pick comparable
 *  generic representatives, walk the crossing path, subdivide at sigma_I
 *  for each wall w_{I union {n-1}} with |I| >= 2. */
inline BlowupTrace blowup_sequence_fan_trace(const HassettInput& inp, std::uint64_t seed = 0)
{
    int n = inp.n;
    if (n == 4) return {simplex_fan(2), {}, {}};

    auto sa = signature(inp.a, Granularity::Coarse).positive;
    auto sb = signature(weights_p(n), Granularity::Coarse).positive;
    auto pair = detail::comparable_representatives(n, Flavor::M0n, sa, sb);
    if (!pair)
        throw HypothesisError("no comparable representatives towards the projective chamber");
    WeightData aprime = pair->first, bprime = pair->second;

    // Perturb towards genericity: raise a', lower b', preserving order,
    // domains and coarse signatures. Bounded deterministic retries.
    std::mt19937_64 rng(0x5EEDBA5EULL + seed);
    Rat slack = detail::chamber_margin(aprime, bprime);
    if (slack <= 0) throw std::logic_error("representative pair on a chamber boundary");
    bool ok = false;
    for (int attempt = 0; attempt < 32 && !ok; ++attempt) {
        WeightData ca = aprime, cb = bprime;
        if (attempt > 0) {
            std::vector<Rat> av = aprime.values, bv = bprime.values;
            Rat r = slack / Rat(8 * n);
            for (int i = 0; i < n; ++i) {
                av[i] += r * Rat(1 + static_cast<long long>(rng() % 1021)) / Rat(1024);
                bv[i] -= r * Rat(1 + static_cast<long long>(rng() % 1021)) / Rat(1024);
            }
            try {
                ca = WeightData(std::move(av), Flavor::M0n);
                cb = WeightData(std::move(bv), Flavor::M0n);
            } catch (const std::invalid_argument&) {
                continue;
            }
            try {
                if (signature(ca, Granularity::Coarse).positive != sa) continue;
                if (signature(cb, Granularity::Coarse).positive != sb) continue;
            } catch (const OnWallError&) {
                continue;
            }
        }
        if (detail::generic_pair(ca, cb)) {
            aprime = ca;
            bprime = cb;
            ok = true;
        }
    }
    if (!ok) throw NonGenericError("no generic representative pair found");

    auto path = crossing_path(aprime, bprime);
    auto admissible = admissible_walls(n);
    VSet heavy1 = VSet(1) << (n - 2);
    VSet heavy2 = VSet(1) << (n - 1);

    BlowupTrace trace{simplex_fan(n - 2), {}, {}};
    std::vector<VSet> subdivisions;
    for (const auto& wc : path) {
        if (!admissible.count(wc.wall))
            throw HypothesisError("inadmissible wall crossed");
        if ((wc.wall & heavy2) != 0 || vcount(wc.wall) == 2) {
            trace.skipped_walls.push_back(wc.wall);
            continue;
        }
        VSet I = wc.wall & ~heavy1;  // drop vertex n-1
        trace.crossed_walls.push_back(wc.wall);
        subdivisions.push_back(I);
    }
    if (!is_valid_blowup_order(subdivisions, n - 2))
        throw std::logic_error("crossing order violates prefix union-closure");
    trace.fan = subdivide_sequence(n - 2, subdivisions);
    return trace;
}

inline Fan blowup_sequence_fan(const HassettInput& inp)
{
    return blowup_sequence_fan_trace(inp).fan;
}

struct MonReport {
    int n = 0;
    Hypergraph h_a;
    Fan blowup_fan;
    Fan hypergraph_fan;
    std::vector<VSet> crossed_walls;
    std::vector<VSet> skipped_walls;
    bool fans_match = false;
    bool smooth = false;
    bool complete = false;
    bool order_independent = false;
    bool pass = false;
};

/** Executable check of the first main theorem: the wall-crossing blow-up
 *  fan must coincide with Sigma(H_A). */
inline MonReport verify_theorem_mon(const HassettInput& inp, int random_orders = 5,
                                    std::uint64_t seed = 0)
{
    Hypergraph ha = hassett_hypergraph(inp);
    BlowupTrace trace = blowup_sequence_fan_trace(inp, seed);
    Fan rhs = fan_of_hypergraph(ha);

    MonReport rep{inp.n, ha, trace.fan, rhs, trace.crossed_walls, trace.skipped_walls};
    rep.fans_match = fans_equal(trace.fan, rhs);
    rep.smooth = is_smooth(trace.fan) && is_smooth(rhs);
    rep.complete = is_complete(trace.fan) && is_complete(rhs);

    rep.order_independent = true;
    std::mt19937_64 rng(0xFA9F0D5ULL + seed);
    for (int k = 0; k < random_orders; ++k) {
        auto order = random_valid_order(ha, rng);
        if (!fans_equal(fan_of_hypergraph(ha, order), rhs)) rep.order_independent = false;
    }
    rep.pass = rep.fans_match && rep.smooth && rep.complete && rep.order_independent;
    return rep;
}

/** All coarse chambers admitting reductions from the Losev-Manin chamber
 *  and to the projective-space chamber, each with an interior witness.
 *  Walls containing n are forced positive and subsets of [n-2] forced
 *  negative; the free walls are I union {n-1}, enumerated over up-sets. */
inline std::vector<std::pair<ChamberSignature, WeightData>> enumerate_mon_chambers(int n)
{
    if (n < 5) throw std::invalid_argument("enumerate_mon_chambers requires n >= 5");
    VSet heavy1 = VSet(1) << (n - 2);
    std::set<VSet> forced;
    for (VSet I : wall_family(n, Flavor::M0n, Granularity::Coarse))
        if (I & (VSet(1) << (n - 1))) forced.insert(I);

    std::vector<VSet> free_sets;  // I in [n-2], 2 <= |I| <= n-3
    for (VSet I = 1; I < full_vset(n - 2); ++I)
        if (vcount(I) >= 2 && vcount(I) <= n - 3) free_sets.push_back(I);

    WeightData lm = weights_lm(n), p = weights_p(n);
    std::vector<std::pair<ChamberSignature, WeightData>> out;
    int k = static_cast<int>(free_sets.size());
    for (std::uint32_t sub = 0; sub < (1u << k); ++sub) {
        // up-set filter before the LP
        bool upset = true;
        for (int i = 0; i < k && upset; ++i) {
            if (!(sub & (1u << i))) continue;
            for (int j = 0; j < k && upset; ++j)
                if ((free_sets[i] & ~free_sets[j]) == 0 && !(sub & (1u << j))) upset = false;
        }
        if (!upset) continue;

        std::set<VSet> positive = forced;
        for (int i = 0; i < k; ++i)
            if (sub & (1u << i)) positive.insert(free_sets[i] | heavy1);
        auto witness = feasible_signature(n, Flavor::M0n, positive, Granularity::Coarse);
        if (!witness) continue;
        if (!geq_c(lm, *witness) || !geq_c(*witness, p)) continue;
        // verification needs a representative off every fine wall as well
        WeightData refined = fine_witness_in_coarse_chamber(n, Flavor::M0n, positive);
        ChamberSignature sig{n, Flavor::M0n, Granularity::Coarse, positive};
        out.emplace_back(std::move(sig), std::move(refined));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::lexicographical_compare(x.first.positive.begin(), x.first.positive.end(),
                                            y.first.positive.begin(), y.first.positive.end(),
                                            edge_less);
    });
    return out;
}

}  // namespace nestofan

#endif  // NESTOFAN_HASSETT_HPP
