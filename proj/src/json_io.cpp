#include "unipart/json_io.hpp"

#include "unipart/errors.hpp"

namespace unipart {

using nlohmann::json;

json partition_json(const Partition& p) {
    json doc;
    doc["heuristic"] = p.heuristic_tag;
    if (p.seed) {
        doc["seed"] = *p.seed;
    } else {
        doc["seed"] = nullptr;
    }
    doc["n_groups"] = p.groups.size();
    doc["groups"] = p.groups;
    std::vector<std::size_t> sizes;
    sizes.reserve(p.groups.size());
    for (const auto& g : p.groups) sizes.push_back(g.size());
    doc["group_sizes"] = sizes;
    doc["max_size"] = max_group_size(p);
    doc["size_std"] = group_size_std(p);
    return doc;
}

json partition_json(const Partition& p, const std::vector<UnitaryGroup>& groups) {
    json doc = partition_json(p);
    std::vector<double> d;
    std::vector<std::vector<double>> coefficients;
    std::vector<std::vector<double>> thetas;
    for (const auto& g : groups) {
        d.push_back(g.d);
        std::vector<double> c;
        for (const auto& t : g.terms) c.push_back(t.coefficient);
        coefficients.push_back(std::move(c));
        thetas.push_back(g.thetas);
    }
    doc["d"] = d;
    doc["coefficients"] = coefficients;
    doc["thetas"] = thetas;
    return doc;
}

json stats_json(const std::vector<StatsRecord>& records) {
    json doc;
    doc["reports"] = json::array();
    for (const auto& rec : records) {
        json r;
        r["source"] = rec.source;
        r["n_qubits"] = rec.n_qubits;
        r["total_terms"] = rec.total_terms;
        r["total_terms_with_identity"] = rec.total_terms_with_identity;
        r["m_qwc"] = rec.m_qwc;
        r["qwc_wall_ms"] = rec.qwc_wall_ms;
        r["qwc_density"] = rec.qwc_density;
        r["anticommute_density"] = rec.anticommute_density;
        r["commute_density"] = rec.commute_density;
        json hs = json::object();
        for (const auto& hr : rec.heuristics) {
            json h;
            if (hr.ok) {
                h["n_groups"] = hr.n_groups;
                h["max_size"] = hr.max_size;
                h["size_std"] = hr.size_std;
            } else {
                h["error"] = hr.error;
            }
            h["wall_ms"] = hr.wall_ms;
            hs[hr.heuristic] = h;
        }
        r["heuristics"] = hs;
        doc["reports"].push_back(r);
    }
    return doc;
}

std::vector<ScalingPoint> scaling_points(const json& stats, const std::string& heuristic,
                                         bool include_identity) {
    if (!stats.contains("reports")) throw ParseError(0, "stats document has no 'reports' array");
    std::vector<ScalingPoint> points;
    for (const auto& r : stats["reports"]) {
        ScalingPoint p;
        p.label = r.value("source", "?");
        p.n_qubits = r.at("n_qubits").get<double>();
        p.total_terms =
            include_identity ? r.at("total_terms_with_identity").get<double>() : r.at("total_terms").get<double>();
        const auto& hs = r.at("heuristics");
        if (!hs.contains(heuristic))
            throw ParseError(0, "stats for '" + p.label + "' lack heuristic '" + heuristic + "'");
        if (!hs[heuristic].contains("n_groups"))
            throw ParseError(0, "heuristic '" + heuristic + "' failed for '" + p.label + "'");
        p.n_groups = hs[heuristic]["n_groups"].get<double>();
        points.push_back(std::move(p));
    }
    return points;
}

}  // namespace unipart
