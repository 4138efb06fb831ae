#ifndef NESTOFAN_FAN_HPP
#define NESTOFAN_FAN_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "hypergraph.hpp"

namespace nestofan {

/** Integer vector in the quotient lattice Z^m / Z(1,...,1), represented by
 *  dropping the last coordinate. The image of e_i is the i-th unit vector
 *  for i < m and -(1,...,1) for i = m. */
using LatticeVector = std::vector<std::int64_t>;

/** r_I = sum of the images of e_i over i in I. Primitive by construction:
 *  entries are all 0/1 (m not in I) or all 0/-1 (m in I). */
inline LatticeVector ray_of_subset(VSet I, int m)
{
    if (I == 0) throw std::invalid_argument("ray_of_subset: empty subset");
    if (I == full_vset(m)) throw std::invalid_argument("ray_of_subset: full set maps to zero");
    LatticeVector v(m - 1, 0);
    for (int i : vset_indices(I)) {
        if (i == m - 1)
            for (auto& x : v) x -= 1;
        else
            v[i] += 1;
    }
    return v;
}

/** Bareiss fraction-free determinant of a square int64 matrix. Row-major. */
inline std::int64_t det_bareiss(std::vector<std::vector<std::int64_t>> a)
{
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    std::int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { p = r; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

class Fan {
public:
    Fan(int dim, std::vector<LatticeVector> rays, std::vector<std::vector<int>> max_cones,
        std::vector<VSet> ray_tags = {})
        : dim_(dim), rays_(std::move(rays)), cones_(std::move(max_cones)),
          tags_(std::move(ray_tags))
    {
        if (tags_.empty()) tags_.assign(rays_.size(), 0);
        if (tags_.size() != rays_.size())
            throw std::invalid_argument("ray tag count mismatch");
        for (auto& c : cones_) {
            std::sort(c.begin(), c.end());
            if (static_cast<int>(c.size()) != dim_)
                throw std::invalid_argument("maximal cone is not full-dimensional");
            for (int r : c)
                if (r < 0 || r >= static_cast<int>(rays_.size()))
                    throw std::invalid_argument("cone references unknown ray");
        }
        for (const auto& r : rays_)
            if (static_cast<int>(r.size()) != dim_)
                throw std::invalid_argument("ray dimension mismatch");
        canonicalize();
    }

    int dim() const { return dim_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const std::vector<std::vector<int>>& max_cones() const { return cones_; }
    const std::vector<VSet>& ray_tags() const { return tags_; }

    /** Ray matrix of a cone, rays as columns, as rows-major dim x |cone|. */
    std::vector<std::vector<std::int64_t>> cone_matrix(const std::vector<int>& cone) const
    {
        std::vector<std::vector<std::int64_t>> m(dim_, std::vector<std::int64_t>(cone.size()));
        for (size_t j = 0; j < cone.size(); ++j)
            for (int i = 0; i < dim_; ++i)
                m[i][j] = rays_[cone[j]][i];
        return m;
    }

    /** Barycentric test: does the maximal cone with the given index contain v?
     *  Uses Cramer signs only, so no divisibility assumptions. */
    bool cone_contains(int cone_idx, const LatticeVector& v) const
    {
        auto m = cone_matrix(cones_[cone_idx]);
        std::int64_t d = det_bareiss(m);
        if (d == 0) throw std::logic_error("degenerate maximal cone");
        for (int j = 0; j < dim_; ++j) {
            auto mj = m;
            for (int i = 0; i < dim_; ++i) mj[i][j] = v[i];
            std::int64_t dj = det_bareiss(mj);
            if (dj != 0 && ((dj > 0) != (d > 0))) return false;
        }
        return true;
    }

    /** Smallest cone of the fan containing v, as a set of ray indices.
     *  Requires v to lie in the support. */
    std::vector<int> minimal_cone_containing(const LatticeVector& v) const
    {
        for (size_t ci = 0; ci < cones_.size(); ++ci) {
            auto m = cone_matrix(cones_[ci]);
            std::int64_t d = det_bareiss(m);
            if (d == 0) throw std::logic_error("degenerate maximal cone");
            std::vector<int> face;
            bool inside = true;
            for (int j = 0; j < dim_ && inside; ++j) {
                auto mj = m;
                for (int i = 0; i < dim_; ++i) mj[i][j] = v[i];
                std::int64_t dj = det_bareiss(mj);
                if (dj == 0) continue;
                if ((dj > 0) != (d > 0)) inside = false;
                else face.push_back(cones_[ci][j]);
            }
            if (inside) return face;
        }
        throw std::invalid_argument("vector lies outside the fan support");
    }

    int ray_index(const LatticeVector& v) const
    {
        for (size_t i = 0; i < rays_.size(); ++i)
            if (rays_[i] == v) return static_cast<int>(i);
        return -1;
    }

private:
    void canonicalize()
    {
        std::vector<int> order(rays_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return rays_[a] < rays_[b]; });
        std::vector<int> pos(rays_.size());
        for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

        std::vector<LatticeVector> nr(rays_.size());
        std::vector<VSet> nt(rays_.size());
        for (size_t i = 0; i < order.size(); ++i) {
            nr[i] = rays_[order[i]];
            nt[i] = tags_[order[i]];
        }
        for (size_t i = 1; i < nr.size(); ++i)
            if (nr[i] == nr[i - 1]) throw std::invalid_argument("duplicate ray");
        rays_ = std::move(nr);
        tags_ = std::move(nt);
        for (auto& c : cones_) {
            for (int& r : c) r = pos[r];
            std::sort(c.begin(), c.end());
        }
        std::sort(cones_.begin(), cones_.end());
        cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
    }

    int dim_;
    std::vector<LatticeVector> rays_;
    std::vector<std::vector<int>> cones_;
    std::vector<VSet> tags_;
};

/** Fan of the (m-1)-simplex: rays e_1,...,e_{m-1},-(1,...,1), maximal cones
 *  all (m-1)-subsets. Rays carry singleton tags. */
inline Fan simplex_fan(int m)
{
    if (m < 2) throw std::invalid_argument("simplex_fan requires m >= 2");
    std::vector<LatticeVector> rays;
    std::vector<VSet> tags;
    for (int i = 0; i < m; ++i) {
        rays.push_back(ray_of_subset(VSet(1) << i, m));
        tags.push_back(VSet(1) << i);
    }
    std::vector<std::vector<int>> cones;
    for (VSet s = 0; s < (VSet(1) << m); ++s) {
        if (vcount(s) != m - 1) continue;
        cones.push_back(vset_indices(s));
    }
    return Fan(m - 1, std::move(rays), std::move(cones), std::move(tags));
}

namespace detail {

/** Stellar subdivision at the cone spanned by `sigma` (ray indices),
 *  inserting `new_ray`: every maximal cone containing sigma is replaced by
 *  |sigma| cones swapping one generator for the new ray. */
inline Fan star_subdivide_at(const Fan& f, std::vector<int> sigma,
                             const LatticeVector& new_ray, VSet tag)
{
    std::sort(sigma.begin(), sigma.end());
    if (sigma.size() < 2) throw std::invalid_argument("star_subdivide: |sigma| < 2");
    if (f.ray_index(new_ray) >= 0)
        throw std::invalid_argument("star_subdivide: ray already present");

    auto rays = f.rays();
    auto tags = f.ray_tags();
    int new_idx = static_cast<int>(rays.size());
    rays.push_back(new_ray);
    tags.push_back(tag);

    std::vector<std::vector<int>> cones;
    bool touched = false;
    for (const auto& c : f.max_cones()) {
        if (std::includes(c.begin(), c.end(), sigma.begin(), sigma.end())) {
            touched = true;
            for (int drop : sigma) {
                std::vector<int> nc;
                for (int r : c)
                    if (r != drop) nc.push_back(r);
                nc.push_back(new_idx);
                cones.push_back(std::move(nc));
            }
        } else {
            cones.push_back(c);
        }
    }
    if (!touched)
        throw std::invalid_argument("star_subdivide: sigma is not a cone of the fan");
    return Fan(f.dim(), std::move(rays), std::move(cones), std::move(tags));
}

}  // namespace detail

/** Stellar subdivision at an existing cone; the new ray is the primitive
 *  sum of sigma's ray vectors. */
inline Fan star_subdivide(const Fan& f, const std::vector<int>& sigma)
{
    LatticeVector sum(f.dim(), 0);
    for (int r : sigma)
        for (int i = 0; i < f.dim(); ++i) sum[i] += f.rays()[r][i];
    std::int64_t g = 0;
    for (auto x : sum) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto& x : sum) x /= g;
    return detail::star_subdivide_at(f, sigma, sum, 0);
}

inline bool is_smooth(const Fan& f)
{
    for (const auto& c : f.max_cones()) {
        std::int64_t d = det_bareiss(f.cone_matrix(c));
        if (d != 1 && d != -1) return false;
    }
    return true;
}

/** Completeness: every codimension-1 face bounds exactly two maximal cones,
 *  the adjacency graph is connected, and 100 seeded integer sample points
 *  all lie in some maximal cone. */
inline bool is_complete(const Fan& f)
{
    const auto& cones = f.max_cones();
    if (cones.empty()) return false;

    std::map<std::vector<int>, std::vector<int>> facet_owners;
    for (size_t ci = 0; ci < cones.size(); ++ci)
        for (int drop = 0; drop < f.dim(); ++drop) {
            std::vector<int> facet;
            for (int j = 0; j < f.dim(); ++j)
                if (j != drop) facet.push_back(cones[ci][j]);
            facet_owners[facet].push_back(static_cast<int>(ci));
        }
    for (const auto& [facet, owners] : facet_owners)
        if (owners.size() != 2) return false;

    std::vector<int> parent(cones.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [facet, owners] : facet_owners)
        parent[find(owners[0])] = find(owners[1]);
    for (size_t i = 0; i < cones.size(); ++i)
        if (find(static_cast<int>(i)) != find(0)) return false;

    // membership sampling guards against bookkeeping bugs
    std::mt19937_64 rng(0xC0FFEEULL);
    for (int trial = 0; trial < 100; ++trial) {
        LatticeVector v(f.dim());
        bool zero = true;
        for (auto& x : v) {
            x = static_cast<std::int64_t>(rng() % 75) - 37;
            if (x != 0) zero = false;
        }
        if (zero) v[0] = 1;
        bool found = false;
        for (size_t ci = 0; ci < cones.size() && !found; ++ci)
            found = f.cone_contains(static_cast<int>(ci), v);
        if (!found) return false;
    }
    return true;
}

inline bool fans_equal(const Fan& a, const Fan& b)
{
    if (a.dim() != b.dim()) throw std::invalid_argument("fans_equal: rank mismatch");
    return a.rays() == b.rays() && a.max_cones() == b.max_cones();
}

/** All cones as ray-index bitmasks (requires <= 64 rays). Includes the zero
 *  cone as the empty mask. */
inline std::set<std::uint64_t> all_cone_masks(const Fan& f)
{
    if (f.rays().size() > 64) throw std::invalid_argument("too many rays for mask enumeration");
    std::set<std::uint64_t> out;
    for (const auto& c : f.max_cones()) {
        int k = static_cast<int>(c.size());
        for (std::uint32_t sub = 0; sub < (1u << k); ++sub) {
            std::uint64_t mask = 0;
            for (int j = 0; j < k; ++j)
                if (sub & (1u << j)) mask |= std::uint64_t(1) << c[j];
            out.insert(mask);
        }
    }
    return out;
}

/** (c_0,...,c_dim): number of cones in each dimension; c_0 = 1. */
inline std::vector<std::int64_t> f_vector(const Fan& f)
{
    std::vector<std::int64_t> counts(f.dim() + 1, 0);
    for (std::uint64_t mask : all_cone_masks(f))
        counts[std::popcount(mask)] += 1;
    return counts;
}

/** Prefix validity for blow-up orders: for every prefix and every pair I,J
 *  in it whose union is proper and appears in the full list, the union must
 *  already be in the prefix. Singletons induce no blow-up and are skipped. */
inline bool is_valid_blowup_order(const std::vector<VSet>& sets, int m)
{
    std::vector<VSet> eligible;
    for (VSet s : sets) {
        if (vcount(s) <= 1) continue;
        if (s == full_vset(m))
            throw std::invalid_argument("blow-up order may not contain the full set");
        eligible.push_back(s);
    }
    std::set<VSet> seen(eligible.begin(), eligible.end());
    if (seen.size() != eligible.size())
        throw std::invalid_argument("blow-up order contains duplicates");

    std::set<VSet> prefix;
    for (VSet next : eligible) {
        prefix.insert(next);
        // only pairs involving `next` are new to this prefix
        for (VSet i : prefix) {
            VSet u = i | next;
            if (u != full_vset(m) && seen.count(u) && !prefix.count(u))
                return false;
        }
    }
    return true;
}

/** Iterated stellar subdivision of simplex_fan(m) at the subsets in `order`
 *  (singletons and the full set skipped). Each step subdivides the minimal
 *  cone of the current fan containing r_I and inserts r_I tagged with I. */
inline Fan subdivide_sequence(int m, const std::vector<VSet>& order)
{
    Fan f = simplex_fan(m);
    for (VSet I : order) {
        if (vcount(I) <= 1 || I == full_vset(m)) continue;
        LatticeVector v = ray_of_subset(I, m);
        std::vector<int> tau = f.minimal_cone_containing(v);
        f = detail::star_subdivide_at(f, tau, v, I);
        if (!is_smooth(f))
            throw std::logic_error("subdivision produced a non-smooth fan");
    }
    return f;
}

/** Sigma(H): iterated stellar subdivision of the simplex fan at the cones
 *  sigma_I over non-singleton proper hyperedges, larger sets first by
 *  default. A custom order must cover the same hyperedges and pass
 *  is_valid_blowup_order. */
inline Fan fan_of_hypergraph(const Hypergraph& h,
                             const std::optional<std::vector<VSet>>& order = std::nullopt)
{
    Hypergraph hat = atomic_closure(h);
    if (!is_saturated(hat) || !is_connected(hat))
        throw std::invalid_argument("fan_of_hypergraph requires an SC hypergraph");
    int m = h.num_vertices();

    std::vector<VSet> eligible;  // canonical order is already size-descending
    for (VSet e : hat.edges())
        if (vcount(e) >= 2 && vcount(e) <= m - 1) eligible.push_back(e);

    std::vector<VSet> seq;
    if (order) {
        for (VSet s : *order)
            if (vcount(s) >= 2 && s != full_vset(m)) seq.push_back(s);
        std::set<VSet> a(seq.begin(), seq.end()), b(eligible.begin(), eligible.end());
        if (a != b)
            throw std::invalid_argument("order does not match the hyperedge set");
        if (!is_valid_blowup_order(seq, m))
            throw std::invalid_argument("order violates prefix union-closure");
    } else {
        seq = eligible;
    }
    return subdivide_sequence(m, seq);
}

/** Uniformly sampled valid blow-up order for the eligible hyperedges of
 *  H^at: repeatedly pick a random hyperedge whose insertion keeps every
 *  prefix union-closed. A maximal-size remaining edge always qualifies, so
 *  the sampler never deadlocks. */
inline std::vector<VSet> random_valid_order(const Hypergraph& h, std::mt19937_64& rng)
{
    Hypergraph hat = atomic_closure(h);
    int m = h.num_vertices();
    std::vector<VSet> remaining;
    for (VSet e : hat.edges())
        if (vcount(e) >= 2 && vcount(e) <= m - 1) remaining.push_back(e);
    std::set<VSet> all(remaining.begin(), remaining.end());

    std::vector<VSet> out;
    std::set<VSet> prefix;
    while (!remaining.empty()) {
        std::vector<size_t> valid;
        for (size_t i = 0; i < remaining.size(); ++i) {
            VSet e = remaining[i];
            bool ok = true;
            for (VSet f : prefix) {
                VSet u = e | f;
                if (u != e && u != full_vset(m) && all.count(u) && !prefix.count(u)) {
                    ok = false;
                    break;
                }
            }
            if (ok) valid.push_back(i);
        }
        if (valid.empty()) throw std::logic_error("order sampler deadlocked");
        size_t pick = valid[rng() % valid.size()];
        VSet e = remaining[pick];
        out.push_back(e);
        prefix.insert(e);
        remaining.erase(remaining.begin() + pick);
    }
    return out;
}

/** Nested sets of H^at \ {[m]}: members pairwise nested or disjoint, and no
 *  union of >= 2 pairwise-disjoint members is a hyperedge. */
struct NestedSet {
    std::vector<VSet> members;  // canonical hyperedge order
};

inline std::vector<NestedSet> nested_sets(const Hypergraph& h,
                                          std::optional<int> size = std::nullopt)
{
    Hypergraph hat = atomic_closure(h);
    if (!is_saturated(hat) || !is_connected(hat))
        throw std::invalid_argument("nested_sets requires an SC hypergraph");
    int m = h.num_vertices();
    std::vector<VSet> ground;
    for (VSet e : hat.edges())
        if (e != full_vset(m)) ground.push_back(e);

    std::vector<NestedSet> out;
    std::vector<VSet> chosen;

    auto compatible = [&](VSet e) {
        for (VSet c : chosen) {
            VSet inter = c & e;
            if (inter != 0 && inter != c && inter != e) return false;  // overlap, not nested
        }
        // disjoint antichain unions must avoid the hyperedge set
        std::vector<VSet> disj;
        for (VSet c : chosen)
            if ((c & e) == 0) disj.push_back(c);
        int k = static_cast<int>(disj.size());
        for (std::uint32_t sub = 1; sub < (1u << k); ++sub) {
            VSet u = e;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j)
                if (sub & (1u << j)) {
                    if (disj[j] & u) ok = false;  // not pairwise disjoint
                    u |= disj[j];
                }
            if (ok && hat.has_edge(u)) return false;
        }
        return true;
    };

    auto emit = [&]() {
        if (!size || static_cast<int>(chosen.size()) == *size)
            out.push_back(NestedSet{chosen});
    };

    std::function<void(size_t)> dfs = [&](size_t start) {
        emit();
        for (size_t i = start; i < ground.size(); ++i) {
            if (compatible(ground[i])) {
                chosen.push_back(ground[i]);
                dfs(i + 1);
                chosen.pop_back();
            }
        }
    };
    dfs(0);
    return out;
}

/** Independent description of the maximal cones: each maximal nested set
 *  (m-1 members) spans one, via the rays r_I of its members. */
inline bool nested_sets_match_fan(const Hypergraph& h, const Fan& f)
{
    int m = h.num_vertices();
    std::set<std::vector<int>> expected;
    for (const NestedSet& ns : nested_sets(h, m - 1)) {
        std::vector<int> cone;
        for (VSet I : ns.members) {
            int idx = f.ray_index(ray_of_subset(I, m));
            if (idx < 0) return false;
            cone.push_back(idx);
        }
        std::sort(cone.begin(), cone.end());
        expected.insert(std::move(cone));
    }
    std::set<std::vector<int>> actual(f.max_cones().begin(), f.max_cones().end());
    return expected == actual;
}

}  // namespace nestofan

#endif  // NESTOFAN_FAN_HPP
