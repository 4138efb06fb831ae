// Command-line surface over the nestofan library: hypergraph utilities,
// fan construction and verification, weight-chamber analysis, and the two
// theorem checkers. All output is deterministic for fixed argv and seed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nestofan/affine.hpp"
#include "nestofan/enumerate.hpp"
#include "nestofan/fan.hpp"
#include "nestofan/hassett.hpp"
#include "nestofan/hypergraph.hpp"
#include "nestofan/json_io.hpp"
#include "nestofan/nestohedron.hpp"
#include "nestofan/weights.hpp"

namespace {

using namespace nestofan;

constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitOnWall = 3;
constexpr int kExitHypothesis = 4;

struct Output {
    std::string path;  // empty: stdout

    void write(const std::string& text) const
    {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << text;
    }

    void emit_json(const Json& j) const { write(j.dump(2) + "\n"); }
};

Json read_json_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open input file: " + path);
    try {
        return Json::parse(f);
    } catch (const Json::parse_error& ex) {
        throw ParseError(ex.what());
    }
}

std::vector<Rat> parse_weight_list(const std::string& csv)
{
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what());
        }
    }
    if (out.empty()) throw ParseError("empty weight list");
    return out;
}

WeightData make_weights(const std::string& csv, Flavor flavor)
{
    try {
        return WeightData(parse_weight_list(csv), flavor);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

std::vector<VSet> order_from_json(const Json& j, const Hypergraph& h)
{
    if (!j.is_array()) throw ParseError("order file must be an array of hyperedges");
    std::map<Label, int> index;
    for (size_t i = 0; i < h.vertices().size(); ++i)
        index[h.vertices()[i]] = static_cast<int>(i);
    std::vector<VSet> out;
    for (const Json& e : j) {
        if (!e.is_array()) throw ParseError("order entry must be an array of labels");
        VSet mask = 0;
        for (const Json& v : e) {
            auto it = index.find(label_from_json(v));
            if (it == index.end()) throw ParseError("order references unknown vertex");
            mask |= VSet(1) << it->second;
        }
        out.push_back(mask);
    }
    return out;
}

// --- hg ---------------------------------------------------------------

int run_hg(const std::string& sub, const std::string& input, int d, bool strict,
           const Output& out)
{
    if (sub == "graph") {
        Json j = read_json_file(input);
        if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
            throw ParseError("graph document needs \"n\" and \"edges\"");
        std::vector<std::pair<int, int>> edges;
        for (const Json& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw ParseError("graph edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        try {
            out.emit_json(hypergraph_to_json(graph_hypergraph(j["n"].get<int>(), edges)));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what());
        }
        return 0;
    }

    Hypergraph h = hypergraph_from_json(read_json_file(input));
    if (sub == "check") {
        bool atomic = is_atomic(h), saturated = is_saturated(h), connected = is_connected(h);
        out.emit_json(Json{{"atomic", atomic}, {"saturated", saturated}, {"connected", connected}});
        if (strict && !(atomic && saturated && connected)) return kExitCheckFailed;
        return 0;
    }
    if (sub == "closure") {
        out.emit_json(hypergraph_to_json(atomic_closure(h)));
        return 0;
    }
    if (sub == "inflate") {
        try {
            out.emit_json(hypergraph_to_json(inflate(h, d)));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what());
        }
        return 0;
    }
    throw ParseError("unknown hg subcommand: " + sub);
}

// --- fan --------------------------------------------------------------

int run_fan(const std::string& sub, const std::string& input, const std::string& order_file,
            int random_orders, std::uint64_t seed, const Output& out)
{
    Hypergraph h = hypergraph_from_json(read_json_file(input));
    std::optional<std::vector<VSet>> order;
    if (!order_file.empty()) order = order_from_json(read_json_file(order_file), h);

    if (sub == "build") {
        try {
            out.emit_json(fan_to_json(fan_of_hypergraph(h, order), h.vertices()));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what());
        }
        return 0;
    }
    if (sub == "fvector") {
        out.emit_json(Json{{"f_vector", f_vector(fan_of_hypergraph(h, order))}});
        return 0;
    }
    if (sub == "verify") {
        Fan f = fan_of_hypergraph(h, order);
        bool smooth = is_smooth(f);
        bool complete = is_complete(f);
        bool oracle = nested_sets_match_fan(h, f);
        bool order_ok = true;
        std::mt19937_64 rng(seed);
        for (int k = 0; k < random_orders; ++k)
            if (!fans_equal(fan_of_hypergraph(h, random_valid_order(h, rng)), f))
                order_ok = false;
        out.emit_json(Json{{"smooth", smooth},
                           {"complete", complete},
                           {"nested_oracle_match", oracle},
                           {"order_independent", order_ok}});
        return (smooth && complete && oracle && order_ok) ? 0 : kExitCheckFailed;
    }
    throw ParseError("unknown fan subcommand: " + sub);
}

// --- weights ----------------------------------------------------------

int run_weights(const std::string& sub, const std::string& wa, const std::string& wb, int n,
                bool tdn, bool coarse, const std::string& format, const Output& out)
{
    Flavor flavor = tdn ? Flavor::Tdn : Flavor::M0n;
    Granularity gran = coarse ? Granularity::Coarse : Granularity::Fine;

    if (sub == "classify") {
        WeightData a = make_weights(wa, flavor);
        out.emit_json(signature_to_json(signature(a, gran)));
        return 0;
    }
    if (sub == "geqc") {
        WeightData a = make_weights(wa, flavor), b = make_weights(wb, flavor);
        bool verdict = geq_c(a, b);
        Json j{{"geq_c", verdict}};
        if (verdict) {
            auto sa = signature(a, Granularity::Coarse).positive;
            auto sb = signature(b, Granularity::Coarse).positive;
            auto pair = detail::comparable_representatives(a.n(), flavor, sa, sb);
            if (!pair) throw std::logic_error("geq_c verdict without a representative pair");
            j["witness_a"] = rational_vector_to_json(pair->first.values);
            j["witness_b"] = rational_vector_to_json(pair->second.values);
        }
        out.emit_json(j);
        return 0;
    }
    if (sub == "path") {
        WeightData a = make_weights(wa, flavor), b = make_weights(wb, flavor);
        Json crossings = Json::array();
        for (const WallCrossing& c : crossing_path(a, b)) {
            Json wall = Json::array();
            for (int i : vset_indices(c.wall)) wall.push_back(i + 1);
            crossings.push_back(Json{{"wall", std::move(wall)}, {"t", format_rational(c.t)}});
        }
        out.emit_json(Json{{"crossings", std::move(crossings)}});
        return 0;
    }
    if (sub == "enumerate") {
        if (n < 3 || n > 8) throw ParseError("enumerate requires 3 <= n <= 8");
        auto census = enumerate_signatures(n, flavor, gran);
        if (format == "tsv") {
            std::string text = "signature\twitness\n";
            for (const auto& [pos, w] : census) {
                std::vector<VSet> walls(pos.begin(), pos.end());
                std::sort(walls.begin(), walls.end(), edge_less);
                std::string sig;
                for (size_t i = 0; i < walls.size(); ++i) {
                    if (i) sig += ";";
                    auto idx = vset_indices(walls[i]);
                    for (size_t k = 0; k < idx.size(); ++k)
                        sig += (k ? "," : "") + std::to_string(idx[k] + 1);
                }
                if (sig.empty()) sig = "-";
                std::string wit;
                for (size_t i = 0; i < w.values.size(); ++i)
                    wit += (i ? "," : "") + format_rational(w.values[i]);
                text += sig + "\t" + wit + "\n";
            }
            out.write(text);
        } else {
            Json rows = Json::array();
            for (const auto& [pos, w] : census) {
                std::vector<VSet> walls(pos.begin(), pos.end());
                std::sort(walls.begin(), walls.end(), edge_less);
                rows.push_back(Json{{"positive", wall_list_to_json(walls)},
                                    {"witness", rational_vector_to_json(w.values)}});
            }
            out.emit_json(Json{{"n", n},
                               {"flavor", tdn ? "tdn" : "mon"},
                               {"granularity", coarse ? "coarse" : "fine"},
                               {"chambers", census.size()},
                               {"census", std::move(rows)}});
        }
        return 0;
    }
    throw ParseError("unknown weights subcommand: " + sub);
}

// --- verify -----------------------------------------------------------

WeightData pick_weights(const std::string& csv, bool lm, bool p, bool any, int n, Flavor flavor)
{
    int named = (lm ? 1 : 0) + (p ? 1 : 0) + (any ? 1 : 0) + (csv.empty() ? 0 : 1);
    if (named != 1) throw ParseError("give exactly one of --weights, --lm, --p, --any");
    if (!csv.empty()) return make_weights(csv, flavor);
    if (flavor == Flavor::M0n) return lm ? weights_lm(n) : weights_p(n);
    return lm ? weights_lm_t(n) : weights_p_t(n);
}

int run_verify_mon(const std::string& csv, bool lm, bool p, bool any, int n, bool sweep,
                   int random_orders, std::uint64_t seed, const Output& out)
{
    if (sweep) {
        auto chambers = enumerate_mon_chambers(n);
        Json rows = Json::array();
        size_t passes = 0;
        for (const auto& [sig, w] : chambers) {
            MonReport rep = verify_theorem_mon(HassettInput(w), random_orders, seed);
            if (rep.pass) ++passes;
            std::vector<VSet> walls(sig.positive.begin(), sig.positive.end());
            std::sort(walls.begin(), walls.end(), edge_less);
            rows.push_back(Json{{"positive", wall_list_to_json(walls)},
                                {"witness", rational_vector_to_json(w.values)},
                                {"pass", rep.pass}});
        }
        bool all = passes == chambers.size();
        out.emit_json(Json{{"n", n},
                           {"chambers", chambers.size()},
                           {"passes", passes},
                           {"results", std::move(rows)},
                           {"pass", all}});
        return all ? 0 : kExitCheckFailed;
    }
    WeightData a = pick_weights(csv, lm, p, any, n, Flavor::M0n);
    MonReport rep = verify_theorem_mon(HassettInput(a), random_orders, seed);
    out.emit_json(mon_report_to_json(rep));
    return rep.pass ? 0 : kExitCheckFailed;
}

int run_verify_tdn(const std::string& csv, bool lm, bool p, bool any, int d, int n, bool sweep,
                   int random_orders, std::uint64_t seed, const Output& out)
{
    if (sweep) {
        auto chambers = enumerate_tdn_chambers(n);
        Json rows = Json::array();
        size_t passes = 0;
        for (const auto& [sig, w] : chambers) {
            TdnReport rep = verify_theorem_tdn(AffineInput(d, w), random_orders, seed);
            if (rep.pass) ++passes;
            std::vector<VSet> walls(sig.positive.begin(), sig.positive.end());
            std::sort(walls.begin(), walls.end(), edge_less);
            rows.push_back(Json{{"positive", wall_list_to_json(walls)},
                                {"witness", rational_vector_to_json(w.values)},
                                {"pass", rep.pass}});
        }
        bool all = passes == chambers.size();
        out.emit_json(Json{{"d", d},
                           {"n", n},
                           {"chambers", chambers.size()},
                           {"passes", passes},
                           {"results", std::move(rows)},
                           {"pass", all}});
        return all ? 0 : kExitCheckFailed;
    }
    WeightData a = pick_weights(csv, lm, p, any, n, Flavor::Tdn);
    TdnReport rep = verify_theorem_tdn(AffineInput(d, a), random_orders, seed);
    out.emit_json(tdn_report_to_json(rep));
    return rep.pass ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace nestofan;
    CLI::App app{"exact toric fans of hypergraph associahedra and weight-chamber analysis"};
    app.require_subcommand(1);

    std::string input, order_file, output_path, wa, wb, weights_csv, format = "json";
    std::string hg_sub, fan_sub, weights_sub, verify_sub;
    int d = 2, n = 5, random_orders = 0;
    std::uint64_t seed = 0;
    bool strict = false, tdn = false, coarse = false, lm = false, p = false, any = false,
         sweep = false;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--output", output_path, "output path (default stdout)");
        c->add_option("--seed", seed, "PRNG seed");
    };

    CLI::App* hg = app.add_subcommand("hg", "hypergraph utilities");
    hg->add_option("subcommand", hg_sub, "check|closure|inflate|graph")->required();
    hg->add_option("input", input, "input JSON file")->required();
    hg->add_option("--d", d, "inflation multiplicity");
    hg->add_flag("--strict", strict, "exit 1 unless atomic, saturated and connected");
    add_common(hg);

    CLI::App* fan = app.add_subcommand("fan", "fan construction and checks");
    fan->add_option("subcommand", fan_sub, "build|verify|fvector")->required();
    fan->add_option("input", input, "hypergraph JSON file")->required();
    fan->add_option("--order", order_file, "blow-up order JSON file");
    fan->add_option("--random-orders", random_orders, "extra random valid orders to compare");
    add_common(fan);

    CLI::App* weights = app.add_subcommand("weights", "weight-domain analysis");
    weights->add_option("subcommand", weights_sub, "classify|geqc|path|enumerate")->required();
    weights->add_option("--weights,--a", wa, "comma-separated rationals");
    weights->add_option("--b", wb, "comma-separated rationals (second argument)");
    weights->add_option("--n", n, "number of weights (enumerate)");
    weights->add_flag("--tdn", tdn, "affine-domain weights");
    weights->add_flag("--coarse", coarse, "coarse wall family");
    weights->add_option("--format", format, "json|tsv")->check(CLI::IsMember({"json", "tsv"}));
    add_common(weights);

    CLI::App* verify = app.add_subcommand("verify", "theorem checkers");
    verify->add_option("subcommand", verify_sub, "mon|tdn")->required();
    verify->add_option("--weights", weights_csv, "comma-separated rationals");
    verify->add_flag("--lm", lm, "canonical heavy-tail chamber weights");
    verify->add_flag("--p", p, "canonical projective/affine chamber weights");
    verify->add_flag("--any", any, "any valid weights (n = 4 collapse)");
    verify->add_option("--n", n, "number of weights")->required();
    verify->add_option("--d", d, "inflation multiplicity (tdn)");
    verify->add_flag("--sweep", sweep, "verify every chamber between the extremes");
    verify->add_option("--random-orders", random_orders, "random orders per instance");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    Output out{output_path};
    try {
        if (*hg) return run_hg(hg_sub, input, d, strict, out);
        if (*fan) return run_fan(fan_sub, input, order_file, random_orders, seed, out);
        if (*weights) return run_weights(weights_sub, wa, wb, n, tdn, coarse, format, out);
        if (*verify) {
            if (verify_sub == "mon")
                return run_verify_mon(weights_csv, lm, p, any, n, sweep, random_orders, seed, out);
            if (verify_sub == "tdn")
                return run_verify_tdn(weights_csv, lm, p, any, d, n, sweep, random_orders, seed,
                                      out);
            throw ParseError("unknown verify subcommand: " + verify_sub);
        }
    } catch (const OnWallError& ex) {
        Json wall = Json::array();
        for (int i : vset_indices(ex.wall())) wall.push_back(i + 1);
        out.emit_json(Json{{"error", "on-wall"}, {"wall", std::move(wall)}, {"what", ex.what()}});
        return kExitOnWall;
    } catch (const HypothesisError& ex) {
        out.emit_json(Json{{"error", "hypothesis"}, {"what", ex.what()}});
        return kExitHypothesis;
    } catch (const ParseError& ex) {
        out.emit_json(Json{{"error", "parse"}, {"what", ex.what()}});
        return kExitParse;
    } catch (const std::exception& ex) {
        out.emit_json(Json{{"error", "internal"}, {"what", ex.what()}});
        return kExitCheckFailed;
    }
    return kExitParse;
}
