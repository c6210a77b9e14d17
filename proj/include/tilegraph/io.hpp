#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tilegraph/dual_graph.hpp"
#include "tilegraph/growth.hpp"
#include "tilegraph/linearized.hpp"
#include "tilegraph/resistance.hpp"
#include "tilegraph/tiling.hpp"
#include "tilegraph/walk.hpp"

namespace tilegraph {

using nlohmann::json;

// Tiling JSON: rationals serialized as "num/den" strings.
inline json tiling_to_json(const Tiling& t) {
    json j;
    j["kind"] = t.unit_square() ? "unit-square" : "general-rectangle";
    j["region"] = {{"p", {rat_to_string(t.region.x), rat_to_string(t.region.y)}},
                   {"l", {rat_to_string(t.region.w), rat_to_string(t.region.h)}}};
    json tiles = json::array();
    for (const Tile& a : t.tiles)
        tiles.push_back({{"id", a.id},
                         {"p", {rat_to_string(a.x), rat_to_string(a.y)}},
                         {"l", {rat_to_string(a.w), rat_to_string(a.h)}}});
    j["tiles"] = std::move(tiles);
    return j;
}

inline Tiling tiling_from_json(const json& j) {
    Tiling t;
    const auto& reg = j.at("region");
    t.region = Tile{parse_rational(reg.at("p")[0].get<std::string>()), parse_rational(reg.at("p")[1].get<std::string>()),
                    parse_rational(reg.at("l")[0].get<std::string>()), parse_rational(reg.at("l")[1].get<std::string>()), -1};
    for (const auto& a : j.at("tiles"))
        t.tiles.push_back(Tile{parse_rational(a.at("p")[0].get<std::string>()),
                               parse_rational(a.at("p")[1].get<std::string>()),
                               parse_rational(a.at("l")[0].get<std::string>()),
                               parse_rational(a.at("l")[1].get<std::string>()), a.at("id").get<std::int64_t>()});
    std::sort(t.tiles.begin(), t.tiles.end(), [](const Tile& a, const Tile& b) { return a.id < b.id; });
    t.kind = classify_region(t.region);
    return t;
}

// Graph JSON: deterministic edge list (u < v, lexicographic), optional column
// partition and weights.
inline json graph_to_json(const DualGraph& g) {
    json j;
    j["n"] = g.n;
    json edges = json::array();
    for (std::int64_t v = 0; v < g.n; ++v)
        for (std::int64_t i = g.offsets[v]; i < g.offsets[v + 1]; ++i)
            if (g.nbrs[i] > v) edges.push_back({v, g.nbrs[i]});
    j["edges"] = std::move(edges);
    if (!g.columns.empty()) j["columns"] = g.columns;
    return j;
}

inline json graph_to_json(const WeightedGraph& g) {
    json j;
    j["n"] = g.n;
    json edges = json::array();
    for (std::int64_t v = 0; v < g.n; ++v)
        for (std::int64_t i = g.offsets[v]; i < g.offsets[v + 1]; ++i)
            if (g.nbrs[i] > v) edges.push_back({v, g.nbrs[i], g.cond[i]});
    j["edges"] = std::move(edges);
    j["weights"] = {{"self", g.self_loop}};
    return j;
}

inline DualGraph dual_graph_from_json(const json& j) {
    const std::int64_t n = j.at("n").get<std::int64_t>();
    std::vector<std::tuple<std::int64_t, std::int64_t, std::uint8_t>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>(), 0);
    DualGraph g = detail::csr_from_edges(n, edges);
    if (j.contains("columns")) attach_columns(g, j.at("columns").get<std::vector<std::vector<std::int64_t>>>());
    return g;
}

inline json result_to_json(const std::string& query, const ResistanceResult& r) {
    json j;
    j["query"] = query;
    j["value"] = r.value;
    j["residual"] = r.residual;
    j["method"] = r.method;
    j["iterations"] = r.iterations;
    if (r.flow_energy_ub || r.cut_lb) {
        json c;
        if (r.flow_energy_ub) c["flow_energy"] = *r.flow_energy_ub;
        if (r.cut_lb) c["cut_bound"] = *r.cut_lb;
        j["certificates"] = std::move(c);
    }
    return j;
}

inline json walk_stats_to_json(const WalkStats& s) {
    json j;
    j["time_grid"] = s.time_grid;
    j["mean"] = s.mean;
    j["stderr"] = s.se;
    if (!s.proj_mean.empty()) {
        j["proj_mean"] = s.proj_mean;
        j["projection_ok"] = s.projection_ok;
    }
    if (!std::isnan(s.exponent)) {
        j["exponent"] = s.exponent;
        j["exponent_stderr"] = s.exponent_stderr;
    }
    j["replicas"] = s.replicas;
    return j;
}

inline std::string walk_stats_to_csv(const WalkStats& s) {
    std::ostringstream os;
    os << "T,mean,stderr,replicas\n";
    for (std::size_t i = 0; i < s.time_grid.size(); ++i)
        os << s.time_grid[i] << "," << s.mean[i] << "," << s.se[i] << "," << s.replicas << "\n";
    return os.str();
}

inline json growth_profile_to_json(const GrowthProfile& p) {
    json j;
    j["radii"] = p.radii;
    j["min"] = p.min_ball;
    j["median"] = p.median_ball;
    j["mean"] = p.mean_ball;
    j["max"] = p.max_ball;
    j["exponent"] = p.exponent;
    j["fit_residual"] = p.fit_residual;
    j["c"] = p.c_realized;
    j["C"] = p.C_realized;
    j["sources"] = p.num_sources;
    return j;
}

inline std::string growth_profile_to_csv(const GrowthProfile& p) {
    std::ostringstream os;
    os << "r,min,median,mean,max\n";
    for (std::size_t i = 0; i < p.radii.size(); ++i)
        os << p.radii[i] << "," << p.min_ball[i] << "," << p.median_ball[i] << "," << p.mean_ball[i] << ","
           << p.max_ball[i] << "\n";
    return os.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace tilegraph
