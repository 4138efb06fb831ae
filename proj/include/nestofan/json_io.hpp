#ifndef NESTOFAN_JSON_IO_HPP
#define NESTOFAN_JSON_IO_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "affine.hpp"
#include "fan.hpp"
#include "hassett.hpp"
#include "hypergraph.hpp"
#include "nestohedron.hpp"
#include "rational.hpp"
#include "weights.hpp"

namespace nestofan {

using Json = nlohmann::json;

/** Malformed input document. Distinct from domain-level invalid_argument so
 *  the CLI can map it to its own exit code. */
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Json label_to_json(const Label& l)
{
    if (!l.compound) return l.first;
    return Json::array({l.first, l.second});
}

inline Label label_from_json(const Json& j)
{
    if (j.is_number_integer()) return Label::plain(j.get<int>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
        return Label::pair(j[0].get<int>(), j[1].get<int>());
    throw ParseError("vertex label must be an integer or a two-integer array");
}

inline Json hypergraph_to_json(const Hypergraph& h)
{
    Json vs = Json::array();
    for (const Label& l : h.vertices()) vs.push_back(label_to_json(l));
    Json es = Json::array();
    for (VSet e : h.edges()) {
        Json edge = Json::array();
        for (int i : vset_indices(e)) edge.push_back(label_to_json(h.vertices()[i]));
        es.push_back(std::move(edge));
    }
    return Json{{"vertices", std::move(vs)}, {"hyperedges", std::move(es)}};
}

inline Hypergraph hypergraph_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("vertices") || !j.contains("hyperedges"))
        throw ParseError("hypergraph document needs \"vertices\" and \"hyperedges\"");
    if (!j["vertices"].is_array() || !j["hyperedges"].is_array())
        throw ParseError("hypergraph fields must be arrays");

    std::vector<Label> vs;
    for (const Json& v : j["vertices"]) vs.push_back(label_from_json(v));
    std::sort(vs.begin(), vs.end());
    std::map<Label, int> index;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (!index.emplace(vs[i], static_cast<int>(i)).second)
            throw ParseError("duplicate vertex label");
    }

    std::vector<VSet> es;
    for (const Json& e : j["hyperedges"]) {
        if (!e.is_array()) throw ParseError("hyperedge must be an array of labels");
        VSet mask = 0;
        for (const Json& v : e) {
            auto it = index.find(label_from_json(v));
            if (it == index.end()) throw ParseError("hyperedge references unknown vertex");
            mask |= VSet(1) << it->second;
        }
        es.push_back(mask);
    }
    try {
        return Hypergraph(std::move(vs), std::move(es));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

/** Default vertex universe for fans built directly on [m]: plain 1..m. */
inline std::vector<Label> plain_labels(int m)
{
    std::vector<Label> out;
    for (int i = 1; i <= m; ++i) out.push_back(Label::plain(i));
    return out;
}

inline Json fan_to_json(const Fan& f, const std::vector<Label>& vertices)
{
    Json rays = Json::array();
    for (const auto& r : f.rays()) rays.push_back(r);
    Json cones = Json::array();
    for (const auto& c : f.max_cones()) cones.push_back(c);
    Json tags = Json::object();
    for (size_t i = 0; i < f.rays().size(); ++i) {
        VSet t = f.ray_tags()[i];
        if (t == 0) continue;
        Json labels = Json::array();
        for (int v : vset_indices(t)) {
            if (v >= static_cast<int>(vertices.size()))
                throw std::invalid_argument("ray tag outside the vertex universe");
            labels.push_back(label_to_json(vertices[v]));
        }
        tags[std::to_string(i)] = std::move(labels);
    }
    return Json{{"rank", f.dim()},
                {"rays", std::move(rays)},
                {"max_cones", std::move(cones)},
                {"tags", std::move(tags)}};
}

inline Json fan_to_json(const Fan& f) { return fan_to_json(f, plain_labels(f.dim() + 1)); }

struct FanDoc {
    Fan fan;
    std::vector<Label> vertices;
};

/** The vertex universe is recovered from the tag labels (singleton tags on
 *  the simplex rays always cover it). */
inline FanDoc fan_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("rank") || !j.contains("rays") || !j.contains("max_cones") ||
        !j.contains("tags"))
        throw ParseError("fan document needs rank, rays, max_cones, tags");
    int rank = j["rank"].get<int>();
    std::vector<LatticeVector> rays;
    for (const Json& r : j["rays"]) rays.push_back(r.get<LatticeVector>());
    std::vector<std::vector<int>> cones;
    for (const Json& c : j["max_cones"]) cones.push_back(c.get<std::vector<int>>());

    std::set<Label> universe;
    std::map<int, std::vector<Label>> tag_labels;
    for (auto it = j["tags"].begin(); it != j["tags"].end(); ++it) {
        int ray;
        try {
            ray = std::stoi(it.key());
        } catch (const std::exception&) {
            throw ParseError("tag key must be a ray index");
        }
        std::vector<Label> ls;
        for (const Json& v : it.value()) ls.push_back(label_from_json(v));
        for (const Label& l : ls) universe.insert(l);
        tag_labels[ray] = std::move(ls);
    }
    std::vector<Label> vertices(universe.begin(), universe.end());
    std::map<Label, int> index;
    for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);

    std::vector<VSet> tags(rays.size(), 0);
    for (auto& [ray, ls] : tag_labels) {
        if (ray < 0 || ray >= static_cast<int>(rays.size()))
            throw ParseError("tag references unknown ray");
        for (const Label& l : ls) tags[ray] |= VSet(1) << index.at(l);
    }
    try {
        return FanDoc{Fan(rank, std::move(rays), std::move(cones), std::move(tags)),
                      std::move(vertices)};
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

inline Json hrep_to_json(const HRep& rep, const std::vector<Label>& vertices)
{
    Json ineqs = Json::array();
    for (const auto& [I, bound] : rep.inequalities) {
        Json labels = Json::array();
        for (int v : vset_indices(I)) labels.push_back(label_to_json(vertices[v]));
        ineqs.push_back(Json{{"I", std::move(labels)}, {"bound", bound}});
    }
    return Json{{"level", rep.level}, {"inequalities", std::move(ineqs)}};
}

inline Json rational_vector_to_json(const std::vector<Rat>& v)
{
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(format_rational(x));
    return out;
}

inline std::vector<Rat> rational_vector_from_json(const Json& j)
{
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    std::vector<Rat> out;
    for (const Json& x : j) {
        if (x.is_number_integer()) {
            out.push_back(Rat(x.get<long long>()));
        } else if (x.is_string()) {
            try {
                out.push_back(parse_rational(x.get<std::string>()));
            } catch (const std::invalid_argument& ex) {
                throw ParseError(ex.what());
            }
        } else {
            throw ParseError("rational must be \"p/q\" or an integer");
        }
    }
    return out;
}

/** Wall sets as sorted 1-based index arrays, list in canonical edge order. */
inline Json wall_list_to_json(const std::vector<VSet>& walls)
{
    Json out = Json::array();
    for (VSet w : walls) {
        Json idx = Json::array();
        for (int i : vset_indices(w)) idx.push_back(i + 1);
        out.push_back(std::move(idx));
    }
    return out;
}

inline Json signature_to_json(const ChamberSignature& sig)
{
    std::vector<VSet> walls(sig.positive.begin(), sig.positive.end());
    std::sort(walls.begin(), walls.end(), edge_less);
    return Json{{"n", sig.n},
                {"flavor", sig.flavor == Flavor::M0n ? "mon" : "tdn"},
                {"granularity", sig.granularity == Granularity::Fine ? "fine" : "coarse"},
                {"positive", wall_list_to_json(walls)}};
}

inline Json mon_report_to_json(const MonReport& rep)
{
    return Json{{"n", rep.n},
                {"H_A", hypergraph_to_json(rep.h_a)},
                {"fan", fan_to_json(rep.blowup_fan)},
                {"crossed_walls", wall_list_to_json(rep.crossed_walls)},
                {"skipped_isomorphism_walls", wall_list_to_json(rep.skipped_walls)},
                {"checks", Json{{"fans_match", rep.fans_match},
                                {"smooth", rep.smooth},
                                {"complete", rep.complete},
                                {"order_independent", rep.order_independent}}},
                {"pass", rep.pass}};
}

inline Json tdn_report_to_json(const TdnReport& rep)
{
    return Json{{"d", rep.d},
                {"n", rep.n},
                {"H_A", hypergraph_to_json(rep.h_plus)},
                {"building_set", wall_list_to_json(rep.building_set)},
                {"inflated", hypergraph_to_json(rep.inflated)},
                {"fan", fan_to_json(rep.blowup_fan, rep.inflated.vertices())},
                {"checks", Json{{"fans_match", rep.fans_match},
                                {"centers_torus_invariant", rep.centers_torus_invariant},
                                {"smooth", rep.smooth},
                                {"complete", rep.complete},
                                {"order_independent", rep.order_independent}}},
                {"pass", rep.pass}};
}

}  // namespace nestofan

#endif  // NESTOFAN_JSON_IO_HPP
