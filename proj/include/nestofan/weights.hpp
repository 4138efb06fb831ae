#ifndef NESTOFAN_WEIGHTS_HPP
#define NESTOFAN_WEIGHTS_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypergraph.hpp"
#include "lp.hpp"
#include "rational.hpp"

namespace nestofan {

enum class Flavor { M0n, Tdn };
enum class Granularity { Fine, Coarse };

/** Input sits on a wall a_I = 1 where an off-wall point was required. */
class OnWallError : public std::runtime_error {
public:
    OnWallError(VSet wall, const std::string& what) : std::runtime_error(what), wall_(wall) {}
    VSet wall() const { return wall_; }

private:
    VSet wall_;
};

/** A theorem hypothesis (betweenness, domain bound, ...) is violated. */
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool in_domain(const std::vector<Rat>& values, Flavor flavor)
{
    if (values.empty()) return false;
    Rat sum(0);
    for (const Rat& a : values) {
        if (a <= 0 || a > 1) return false;
        sum += a;
    }
    return sum > (flavor == Flavor::M0n ? 2 : 1);
}

/** Weight data A = (a_1,...,a_n): exact rationals in (0,1], total > 2 for
 *  the M0n domain and > 1 for the Tdn domain. Validated on construction. */
struct WeightData {
    std::vector<Rat> values;
    Flavor flavor;

    WeightData(std::vector<Rat> v, Flavor f) : values(std::move(v)), flavor(f)
    {
        if (!in_domain(values, flavor))
            throw std::invalid_argument("weight data outside its domain");
    }

    int n() const { return static_cast<int>(values.size()); }

    Rat subset_sum(VSet I) const
    {
        Rat s(0);
        for (int i : vset_indices(I)) s += values[i];
        return s;
    }
};

inline bool in_domain(const WeightData& a) { return in_domain(a.values, a.flavor); }

/** A^+ = (a_1,...,a_n,1): the embedding of the Tdn domain into D_{0,n+1}. */
inline WeightData plus_weight(const WeightData& a)
{
    if (a.flavor != Flavor::Tdn) throw std::invalid_argument("plus expects Tdn weights");
    std::vector<Rat> v = a.values;
    v.push_back(Rat(1));
    return WeightData(std::move(v), Flavor::M0n);
}

/** Wall index families. For M0n: fine walls 2 <= |I| <= n-2 and coarse
 *  walls 2 < |I| <= n-2. For Tdn both granularities coincide with the fine
 *  walls of D_{0,n+1} that meet the slice, i.e. all I within [n] with
 *  2 <= |I| <= n-1. */
inline std::vector<VSet> wall_family(int n, Flavor flavor, Granularity gran)
{
    int lo, hi;
    if (flavor == Flavor::M0n) {
        lo = (gran == Granularity::Fine) ? 2 : 3;
        hi = n - 2;
    } else {
        lo = 2;
        hi = n - 1;
    }
    std::vector<VSet> out;
    for (VSet s = 1; s < full_vset(n); ++s)
        if (vcount(s) >= lo && vcount(s) <= hi) out.push_back(s);
    std::sort(out.begin(), out.end(), edge_less);
    return out;
}

struct ChamberSignature {
    int n = 0;
    Flavor flavor = Flavor::M0n;
    Granularity granularity = Granularity::Fine;
    std::set<VSet> positive;

    friend bool operator==(const ChamberSignature&, const ChamberSignature&) = default;
};

inline ChamberSignature signature(const WeightData& a, Granularity gran)
{
    ChamberSignature sig;
    sig.n = a.n();
    sig.flavor = a.flavor;
    sig.granularity = gran;
    for (VSet I : wall_family(a.n(), a.flavor, gran)) {
        Rat s = a.subset_sum(I);
        if (s == 1) throw OnWallError(I, "weight data lies on a wall");
        if (s > 1) sig.positive.insert(I);
    }
    return sig;
}

namespace detail {

/** Rows of an LP over (block of weight variables, shared slack t): pin the
 *  signature strictly with margin t and keep the weights strictly interior
 *  to the domain box. */
struct LpBuilder {
    int nvars = 0;
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;

    void row(const std::vector<std::pair<int, Rat>>& coeffs, const Rat& rhs)
    {
        std::vector<Rat> r(nvars, Rat(0));
        for (auto& [j, c] : coeffs) r[j] = c;
        a.push_back(std::move(r));
        b.push_back(rhs);
    }

    void add_chamber(int offset, int n, Flavor flavor, const std::vector<VSet>& family,
                     const std::set<VSet>& positive, int tvar)
    {
        for (VSet I : family) {
            std::vector<std::pair<int, Rat>> c;
            bool pos = positive.count(I) > 0;
            for (int i : vset_indices(I)) c.emplace_back(offset + i, pos ? Rat(-1) : Rat(1));
            c.emplace_back(tvar, Rat(1));
            row(c, pos ? Rat(-1) : Rat(1));
        }
        for (int i = 0; i < n; ++i) {
            row({{offset + i, Rat(-1)}, {tvar, Rat(1)}}, Rat(0));  // a_i >= t
            row({{offset + i, Rat(1)}, {tvar, Rat(1)}}, Rat(1));   // a_i <= 1 - t
        }
        std::vector<std::pair<int, Rat>> sum;
        for (int i = 0; i < n; ++i) sum.emplace_back(offset + i, Rat(-1));
        sum.emplace_back(tvar, Rat(1));
        row(sum, flavor == Flavor::M0n ? Rat(-2) : Rat(-1));  // total >= domain bound + t
    }
};

}  // namespace detail

/** Exact realizability oracle: an interior rational witness whose signature
 *  equals `positive`, or nullopt when the pattern cuts out no chamber. */
inline std::optional<WeightData> feasible_signature(int n, Flavor flavor,
                                                    const std::set<VSet>& positive,
                                                    Granularity gran)
{
    auto family = wall_family(n, flavor, gran);
    for (VSet I : positive)
        if (std::find(family.begin(), family.end(), I) == family.end())
            throw std::invalid_argument("positive set outside the wall family");

    detail::LpBuilder lp;
    lp.nvars = n + 1;
    int tvar = n;
    lp.add_chamber(0, n, flavor, family, positive, tvar);
    lp.row({{tvar, Rat(1)}}, Rat(1, 2));  // keep the objective bounded

    std::vector<Rat> obj(lp.nvars, Rat(0));
    obj[tvar] = 1;
    LpResult res = solve_lp(lp.a, lp.b, obj);
    if (res.status != LpStatus::Optimal || res.value <= 0) return std::nullopt;

    std::vector<Rat> vals(res.x.begin(), res.x.begin() + n);
    WeightData w(std::move(vals), flavor);
    if (!(signature(w, gran).positive == positive))
        throw std::logic_error("feasibility witness fails its own signature");
    return w;
}

/** Witness interior to every fine chamber wall while realizing the given
 *  coarse signature: the fine-only walls get a feasible side greedily (the
 *  partial region stays full-dimensional, so a side always exists). */
inline WeightData fine_witness_in_coarse_chamber(int n, Flavor flavor,
                                                 const std::set<VSet>& coarse_positive)
{
    std::vector<VSet> decided = wall_family(n, flavor, Granularity::Coarse);
    std::set<VSet> coarse_set(decided.begin(), decided.end());
    std::set<VSet> pos = coarse_positive;

    auto partial_witness = [&]() -> std::optional<WeightData> {
        detail::LpBuilder lp;
        lp.nvars = n + 1;
        int tvar = n;
        lp.add_chamber(0, n, flavor, decided, pos, tvar);
        lp.row({{tvar, Rat(1)}}, Rat(1, 2));
        std::vector<Rat> obj(lp.nvars, Rat(0));
        obj[tvar] = 1;
        LpResult res = solve_lp(lp.a, lp.b, obj);
        if (res.status != LpStatus::Optimal || res.value <= 0) return std::nullopt;
        std::vector<Rat> vals(res.x.begin(), res.x.begin() + n);
        return WeightData(std::move(vals), flavor);
    };

    if (!partial_witness())
        throw std::invalid_argument("coarse signature cuts out no chamber");
    for (VSet I : wall_family(n, flavor, Granularity::Fine)) {
        if (coarse_set.count(I)) continue;
        decided.push_back(I);
        pos.insert(I);
        if (partial_witness()) continue;
        pos.erase(I);
        if (!partial_witness()) throw std::logic_error("no feasible side of a fine wall");
    }
    WeightData w = *partial_witness();
    if (!(signature(w, Granularity::Coarse).positive == coarse_positive))
        throw std::logic_error("refined witness left its coarse chamber");
    signature(w, Granularity::Fine);  // asserts off-wall
    return w;
}

/** Exact decision of the coarse-comparability relation: do representatives
 *  A' >= B' exist in the respective chambers? Decided by one joint rational
 *  feasibility problem after the subset necessary filter. */
inline bool geq_c(const WeightData& a, const WeightData& b)
{
    if (a.n() != b.n() || a.flavor != b.flavor)
        throw std::invalid_argument("geq_c: mismatched weight data");
    Granularity gran = Granularity::Coarse;
    ChamberSignature sa = signature(a, gran), sb = signature(b, gran);
    if (!std::includes(sa.positive.begin(), sa.positive.end(), sb.positive.begin(),
                       sb.positive.end()))
        return false;

    int n = a.n();
    auto family = wall_family(n, a.flavor, gran);
    detail::LpBuilder lp;
    lp.nvars = 2 * n + 1;
    int tvar = 2 * n;
    lp.add_chamber(0, n, a.flavor, family, sa.positive, tvar);
    lp.add_chamber(n, n, a.flavor, family, sb.positive, tvar);
    for (int i = 0; i < n; ++i)
        lp.row({{n + i, Rat(1)}, {i, Rat(-1)}}, Rat(0));  // b_i <= a_i
    lp.row({{tvar, Rat(1)}}, Rat(1, 2));

    std::vector<Rat> obj(lp.nvars, Rat(0));
    obj[tvar] = 1;
    LpResult res = solve_lp(lp.a, lp.b, obj);
    return res.status == LpStatus::Optimal && res.value > 0;
}

/** One simple wall crossing of the straight segment from B' to A'. */
struct WallCrossing {
    VSet wall;
    Rat t;  // crossing parameter in (0,1], measured from B' towards A'
};

class NonGenericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** Fine walls crossed by the straight segment from B' up to A', in crossing
 *  order. Requires A' >= B' componentwise, both interior to fine chambers,
 *  and pairwise-distinct crossing parameters. */
inline std::vector<WallCrossing> crossing_path(const WeightData& aprime, const WeightData& bprime)
{
    if (aprime.n() != bprime.n() || aprime.flavor != bprime.flavor)
        throw std::invalid_argument("crossing_path: mismatched weight data");
    for (int i = 0; i < aprime.n(); ++i)
        if (aprime.values[i] < bprime.values[i])
            throw std::invalid_argument("crossing_path: weights are not comparable");

    std::vector<WallCrossing> out;
    for (VSet I : wall_family(aprime.n(), aprime.flavor, Granularity::Fine)) {
        Rat av = aprime.subset_sum(I), bv = bprime.subset_sum(I);
        if (av == 1) throw OnWallError(I, "crossing_path: endpoint on a fine wall");
        if (bv == 1) throw OnWallError(I, "crossing_path: endpoint on a fine wall");
        if (bv < 1 && av > 1)
            out.push_back({I, (Rat(1) - bv) / (av - bv)});
    }
    std::sort(out.begin(), out.end(), [](const WallCrossing& x, const WallCrossing& y) {
        if (x.t != y.t) return x.t < y.t;
        return edge_less(x.wall, y.wall);
    });
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i].t == out[i - 1].t)
            throw NonGenericError("crossing_path: tie in crossing parameters");
    return out;
}

}  // namespace nestofan

#endif  // NESTOFAN_WEIGHTS_HPP
