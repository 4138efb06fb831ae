#ifndef NESTOFAN_HYPERGRAPH_HPP
#define NESTOFAN_HYPERGRAPH_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nestofan {

/** Vertex label: either a plain integer or a pair (i,k). Pairs arise from
 *  inflation, where vertex i splits into copies (i,1),...,(i,d). */
struct Label {
    int first = 0;
    int second = 0;
    bool compound = false;

    static Label plain(int v) { return Label{v, 0, false}; }
    static Label pair(int i, int k) { return Label{i, k, true}; }

    friend auto operator<=>(const Label& a, const Label& b)
    {
        // plain labels sort before compound ones
        if (a.compound != b.compound) return a.compound <=> b.compound;
        if (a.first != b.first) return a.first <=> b.first;
        return a.second <=> b.second;
    }
    friend bool operator==(const Label&, const Label&) = default;

    std::string str() const
    {
        if (!compound) return std::to_string(first);
        return "(" + std::to_string(first) + "," + std::to_string(second) + ")";
    }
};

/** Vertex subsets are bitmasks over positions in the hypergraph's vertex
 *  list. Everything in this artifact is desk scale, so 32 bits suffice. */
using VSet = std::uint32_t;

inline int vcount(VSet s) { return std::popcount(s); }
inline VSet full_vset(int m) { return (m == 32) ? ~VSet(0) : ((VSet(1) << m) - 1); }

inline std::vector<int> vset_indices(VSet s)
{
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1) out.push_back(i);
    return out;
}

/** Canonical hyperedge order: size descending, then lexicographic on the
 *  sorted vertex-index lists. */
inline bool edge_less(VSet a, VSet b)
{
    int ca = vcount(a), cb = vcount(b);
    if (ca != cb) return ca > cb;
    VSet diff = a ^ b;
    if (diff == 0) return false;
    VSet low = diff & (~diff + 1);  // lowest differing position
    return (a & low) != 0;          // whoever holds it has the smaller list
}

class Hypergraph {
public:
    Hypergraph(std::vector<Label> vertices, std::vector<VSet> hyperedges)
        : vertices_(std::move(vertices)), edges_(std::move(hyperedges))
    {
        validate_and_canonicalize();
    }

    /** Convenience constructor on canonical vertex set [m]. */
    static Hypergraph on_range(int m, std::vector<VSet> hyperedges)
    {
        std::vector<Label> vs;
        for (int i = 1; i <= m; ++i) vs.push_back(Label::plain(i));
        return Hypergraph(std::move(vs), std::move(hyperedges));
    }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Label>& vertices() const { return vertices_; }
    const std::vector<VSet>& edges() const { return edges_; }
    VSet full_set() const { return full_vset(num_vertices()); }

    bool has_edge(VSet e) const
    {
        return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b)
    {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    void validate_and_canonicalize()
    {
        int m = num_vertices();
        if (m <= 0 || m > 31)
            throw std::invalid_argument("hypergraph vertex count out of range");
        for (int i = 1; i < m; ++i)
            for (int j = 0; j < i; ++j)
                if (vertices_[i] == vertices_[j])
                    throw std::invalid_argument("duplicate vertex label");
        VSet covered = 0;
        for (VSet e : edges_) {
            if (e == 0) throw std::invalid_argument("empty hyperedge");
            if (e & ~full_set()) throw std::invalid_argument("hyperedge outside vertex set");
            covered |= e;
        }
        if (covered != full_set())
            throw std::invalid_argument("hyperedges do not cover the vertex set");
        std::sort(edges_.begin(), edges_.end(), edge_less);
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    std::vector<Label> vertices_;
    std::vector<VSet> edges_;
};

inline bool is_atomic(const Hypergraph& h)
{
    for (int i = 0; i < h.num_vertices(); ++i)
        if (!h.has_edge(VSet(1) << i)) return false;
    return true;
}

inline bool is_saturated(const Hypergraph& h)
{
    const auto& es = h.edges();
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j)
            if ((es[i] & es[j]) != 0 && !h.has_edge(es[i] | es[j]))
                return false;
    return true;
}

/** Finest hypergraph partition: blocks are the transitive-overlap classes
 *  of hyperedges. Block order follows the smallest vertex index. */
struct HypergraphPartition {
    std::vector<Hypergraph> blocks;
};

inline HypergraphPartition connected_components(const Hypergraph& h)
{
    int m = h.num_vertices();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (VSet e : h.edges()) {
        auto idx = vset_indices(e);
        for (size_t i = 1; i < idx.size(); ++i)
            parent[find(idx[i])] = find(idx[0]);
    }
    std::vector<VSet> support(m, 0);
    for (int i = 0; i < m; ++i) support[find(i)] |= VSet(1) << i;

    HypergraphPartition part;
    for (int r = 0; r < m; ++r) {
        if (support[r] == 0) continue;
        VSet sup = support[r];
        auto idx = vset_indices(sup);
        std::vector<Label> vs;
        for (int i : idx) vs.push_back(h.vertices()[i]);
        std::vector<VSet> es;
        for (VSet e : h.edges()) {
            if ((e & sup) == 0) continue;
            // compress to block-local positions
            VSet local = 0;
            for (size_t p = 0; p < idx.size(); ++p)
                if (e & (VSet(1) << idx[p])) local |= VSet(1) << p;
            es.push_back(local);
        }
        part.blocks.emplace_back(std::move(vs), std::move(es));
    }
    return part;
}

inline bool is_connected(const Hypergraph& h)
{
    return connected_components(h).blocks.size() == 1;
}

/** H^at: add every singleton as a hyperedge. Idempotent. */
inline Hypergraph atomic_closure(const Hypergraph& h)
{
    std::vector<VSet> es = h.edges();
    for (int i = 0; i < h.num_vertices(); ++i)
        es.push_back(VSet(1) << i);
    return Hypergraph(h.vertices(), std::move(es));
}

/** Tube hypergraph of a connected simple graph on [n]: all nonempty vertex
 *  subsets inducing a connected subgraph, including [n] itself. */
inline Hypergraph graph_hypergraph(int n, const std::vector<std::pair<int, int>>& graph_edges)
{
    if (n < 1 || n > 20) throw std::invalid_argument("graph order out of range");
    std::vector<VSet> adj(n, 0);
    for (auto [a, b] : graph_edges) {
        if (a < 1 || a > n || b < 1 || b > n || a == b)
            throw std::invalid_argument("bad graph edge");
        adj[a - 1] |= VSet(1) << (b - 1);
        adj[b - 1] |= VSet(1) << (a - 1);
    }
    auto induced_connected = [&](VSet s) {
        int start = std::countr_zero(s);
        VSet seen = VSet(1) << start, frontier = seen;
        while (frontier) {
            VSet next = 0;
            for (int i : vset_indices(frontier)) next |= adj[i] & s;
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == s;
    };
    if (!induced_connected(full_vset(n)))
        throw std::invalid_argument("graph is not connected");
    std::vector<VSet> tubes;
    for (VSet s = 1; s < (VSet(1) << n); ++s)
        if (induced_connected(s)) tubes.push_back(s);
    return Hypergraph::on_range(n, std::move(tubes));
}

/** d-inflation: vertex i becomes copies (i,1..d_i); each hyperedge becomes
 *  the union of its vertices' copy blocks; all singletons are added. Input
 *  must be SC with plain integer labels. */
inline Hypergraph inflate(const Hypergraph& h, const std::vector<int>& d)
{
    int n = h.num_vertices();
    if (static_cast<int>(d.size()) != n)
        throw std::invalid_argument("inflation vector length mismatch");
    for (int di : d)
        if (di <= 0) throw std::invalid_argument("inflation multiplicities must be positive");
    if (!is_saturated(h)) throw std::invalid_argument("inflate requires a saturated hypergraph");
    if (!is_connected(h)) throw std::invalid_argument("inflate requires a connected hypergraph");

    std::vector<Label> vs;
    std::vector<VSet> block(n, 0);  // copy block of original vertex i
    for (int i = 0; i < n; ++i) {
        const Label& l = h.vertices()[i];
        if (l.compound)
            throw std::invalid_argument("inflate expects plain integer vertex labels");
        for (int k = 1; k <= d[i]; ++k) {
            block[i] |= VSet(1) << vs.size();
            vs.push_back(Label::pair(l.first, k));
        }
    }
    int m = static_cast<int>(vs.size());
    if (m > 31) throw std::invalid_argument("inflated vertex count out of range");

    std::vector<VSet> es;
    for (int j = 0; j < m; ++j) es.push_back(VSet(1) << j);
    for (VSet e : h.edges()) {
        VSet big = 0;
        for (int i : vset_indices(e)) big |= block[i];
        es.push_back(big);
    }
    return Hypergraph(std::move(vs), std::move(es));
}

inline Hypergraph inflate(const Hypergraph& h, int d)
{
    return inflate(h, std::vector<int>(h.num_vertices(), d));
}

}  // namespace nestofan

#endif  // NESTOFAN_HYPERGRAPH_HPP
