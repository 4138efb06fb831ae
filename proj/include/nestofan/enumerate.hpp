#ifndef NESTOFAN_ENUMERATE_HPP
#define NESTOFAN_ENUMERATE_HPP

#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "weights.hpp"

namespace nestofan {

/** Full chamber census of a weight domain: every realizable signature with
 *  an interior witness, found by a sign-assignment DFS over the wall family
 *  with exact-LP pruning of infeasible partial assignments. Output is in
 *  DFS order, which is canonical (family in canonical edge order, negative
 *  branch first). */
inline std::vector<std::pair<std::set<VSet>, WeightData>> enumerate_signatures(int n, Flavor flavor,
                                                                               Granularity gran)
{
    auto family = wall_family(n, flavor, gran);
    std::vector<std::pair<std::set<VSet>, WeightData>> out;
    std::set<VSet> pos;
    std::vector<VSet> decided;

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

    std::function<void(size_t)> dfs = [&](size_t i) {
        auto w = partial_witness();
        if (!w) return;
        if (i == family.size()) {
            if (!(signature(*w, gran).positive == pos))
                throw std::logic_error("census witness fails its own signature");
            out.emplace_back(pos, std::move(*w));
            return;
        }
        decided.push_back(family[i]);
        dfs(i + 1);
        pos.insert(family[i]);
        dfs(i + 1);
        pos.erase(family[i]);
        decided.pop_back();
    };
    dfs(0);
    return out;
}

}  // namespace nestofan

#endif  // NESTOFAN_ENUMERATE_HPP
