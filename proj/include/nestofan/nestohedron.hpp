#ifndef NESTOFAN_NESTOHEDRON_HPP
#define NESTOFAN_NESTOHEDRON_HPP

#include <stdexcept>
#include <vector>

#include "fan.hpp"
#include "hypergraph.hpp"
#include "rational.hpp"

namespace nestofan {

/** Half-space description of the hypergraph associahedron realized as the
 *  Minkowski sum of the simplices Delta_J over J in H^at: the polytope
 *  lives on the level slice x_[m] = |H^at| and satisfies x_I >= bound(I)
 *  with bound(I) = number of hyperedges contained in I. */
struct HRep {
    int ambient = 0;
    std::int64_t level = 0;
    std::vector<std::pair<VSet, std::int64_t>> inequalities;

    std::int64_t bound(VSet I) const
    {
        for (const auto& [s, b] : inequalities)
            if (s == I) return b;
        throw std::invalid_argument("no inequality for the given subset");
    }
};

inline HRep h_rep(const Hypergraph& h)
{
    Hypergraph hat = atomic_closure(h);
    if (!is_saturated(hat) || !is_connected(hat))
        throw std::invalid_argument("h_rep requires an SC hypergraph");
    int m = h.num_vertices();
    HRep rep;
    rep.ambient = m;
    rep.level = static_cast<std::int64_t>(hat.edges().size());
    for (VSet I : hat.edges()) {
        if (I == full_vset(m)) continue;
        std::int64_t b = 0;
        for (VSet J : hat.edges())
            if ((J & ~I) == 0) ++b;
        rep.inequalities.emplace_back(I, b);
    }
    return rep;
}

/** Exact rational solve of a square system; throws on singular input. */
inline std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b)
{
    int n = static_cast<int>(a.size());
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int r = k; r < n; ++r)
            if (a[r][k] != 0) { p = r; break; }
        if (p < 0) throw std::invalid_argument("singular linear system");
        std::swap(a[k], a[p]);
        std::swap(b[k], b[p]);
        for (int r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            Rat f = a[r][k] / a[k][k];
            for (int c = k; c < n; ++c) a[r][c] -= f * a[k][c];
            b[r] -= f * b[k];
        }
    }
    std::vector<Rat> x(n);
    for (int k = n - 1; k >= 0; --k) {
        Rat s = b[k];
        for (int c = k + 1; c < n; ++c) s -= a[k][c] * x[c];
        x[k] = s / a[k][k];
    }
    return x;
}

/** Vertex of the polytope indexed by a maximal nested set: the unique
 *  solution of x_J = bound(J) over J in N together with x_[m] = level.
 *  The result is checked against every facet inequality. */
inline std::vector<Rat> vertex_of_nested_set(const Hypergraph& h, const NestedSet& n)
{
    int m = h.num_vertices();
    if (static_cast<int>(n.members.size()) != m - 1)
        throw std::invalid_argument("nested set is not maximal");
    HRep rep = h_rep(h);

    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (VSet J : n.members) {
        std::vector<Rat> row(m, Rat(0));
        for (int i : vset_indices(J)) row[i] = 1;
        a.push_back(std::move(row));
        b.push_back(Rat(rep.bound(J)));
    }
    a.push_back(std::vector<Rat>(m, Rat(1)));
    b.push_back(Rat(rep.level));

    std::vector<Rat> x = solve_rational(std::move(a), std::move(b));
    for (const auto& [I, bound] : rep.inequalities) {
        Rat s(0);
        for (int i : vset_indices(I)) s += x[i];
        if (s < bound)
            throw std::logic_error("nested-set vertex violates a facet inequality");
    }
    return x;
}

}  // namespace nestofan

#endif  // NESTOFAN_NESTOHEDRON_HPP
