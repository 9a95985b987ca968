#include "gridpatrol/jsonio.hpp"

#include <json.hpp>

namespace gridpatrol {

using nlohmann::json;

namespace {

json coords_json(const Position& p) { return json(p); }

}  // namespace

std::string trace_json(const Trace& trace) {
    json arr = json::array();
    for (const TraceRec& rec : trace.states) {
        json o;
        o["t"] = rec.t;
        o["coords"] = coords_json(rec.pos);
        o["mem"] = rec.mem;
        if (rec.stay) o["stay"] = true;
        arr.push_back(std::move(o));
    }
    return arr.dump(2);
}

std::string report_json(const VerifyReport& report) {
    json o;
    o["verdict"] = verdict_name(report.verdict);
    o["worst_cover_time"] = report.worst_cover_time;
    o["budget"] = report.budget;
    json fails = json::array();
    for (const VerifyFailure& f : report.failures) {
        json fo;
        fo["start"] = coords_json(f.start.pos);
        fo["mem"] = f.start.mem;
        fo["reason"] = f.reason;
        fails.push_back(std::move(fo));
    }
    o["failures"] = std::move(fails);
    return o.dump(2);
}

std::string feasibility_json(const GridDims& dims, int V, const FeasibilityVerdict& v) {
    json o;
    o["dims"] = json(dims);
    o["V"] = V;
    o["patrollable"] = v.patrollable_0bit;
    o["at_most_one_long_axis"] = v.at_most_one_long_axis;
    o["region_product_even_or_one"] = v.region_product_even_or_one;
    o["witness"] = v.witness;
    return o.dump(2);
}

std::string regions_json(const RegionGraph& rg) {
    json o;
    o["dims"] = json(rg.dims);
    o["V"] = rg.V;
    o["iso_dims"] = json(rg.iso_dims);
    json regions = json::array();
    for (size_t i = 0; i < rg.regions.size(); ++i) {
        json ro;
        ro["key"] = sense_key({rg.regions[i].key, rg.V});
        json members = json::array();
        for (const Position& p : rg.regions[i].members) members.push_back(coords_json(p));
        ro["members"] = std::move(members);
        ro["witness"] = coords_json(rg.witness[i]);
        regions.push_back(std::move(ro));
    }
    o["regions"] = std::move(regions);
    json edges = json::array();
    for (auto [a, b] : rg.edges) edges.push_back(json::array({a, b}));
    o["edges"] = std::move(edges);
    return o.dump(2);
}

std::string hamiltonian_json(const std::optional<std::vector<Position>>& cycle) {
    json o;
    o["found"] = cycle.has_value();
    if (cycle) {
        json c = json::array();
        for (const Position& p : *cycle) c.push_back(coords_json(p));
        o["cycle"] = std::move(c);
        o["length"] = cycle->size();
    }
    return o.dump(2);
}

std::string env_check_json(const Environment& env, int diameter) {
    json o;
    o["connected"] = true;
    o["dimension"] = env.d;
    o["vertices"] = env.verts.size();
    o["diameter"] = diameter;
    return o.dump(2);
}

std::string search_json(bool found, const std::string& output_path) {
    json o;
    o["found"] = found;
    if (!output_path.empty()) o["output"] = output_path;
    return o.dump(2);
}

std::string error_json(const std::string& kind, const std::string& message) {
    json o;
    o["error"] = kind;
    o["message"] = message;
    return o.dump(2);
}

}  // namespace gridpatrol
