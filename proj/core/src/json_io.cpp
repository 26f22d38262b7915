#include "packing/json_io.hpp"

namespace packing {

using nlohmann::json;

json to_json(const Partition& p) {
    return json(p.parts());
}

json to_json(const NPartition& l) {
    json arr = json::array();
    for (const auto& c : l.components()) arr.push_back(to_json(c));
    return arr;
}

json to_json(const Decomposition& dec) {
    json arr = json::array();
    for (const auto& [lambda, mult] : dec.entries)
        arr.push_back(json{{"lambda", to_json(lambda)}, {"mult", mult}});
    return arr;
}

Decomposition decomposition_from_json(const json& j, const Tuple& ambient) {
    Decomposition dec;
    dec.ambient = ambient;
    for (const auto& entry : j) {
        std::vector<Partition> comps;
        for (const auto& c : entry.at("lambda"))
            comps.emplace_back(c.get<std::vector<int>>());
        dec.entries.emplace_back(NPartition(std::move(comps)), entry.at("mult").get<long>());
    }
    dec.sort_entries();
    return dec;
}

json betti_entry_json(const SyzygyQuery& query, const Decomposition& dec) {
    return json{{"p", query.p},
                {"q", query.q},
                {"d", query.d},
                {"b", query.b},
                {"entries", to_json(dec)}};
}

json to_json(const BettiTable& table) {
    json cells = json::array();
    for (int q = 0; q <= table.qmax; ++q)
        for (int p = 0; p <= table.pmax; ++p)
            cells.push_back(json{{"p", p}, {"q", q}, {"entries", to_json(table.entry(p, q))}});
    return json{{"pmax", table.pmax},
                {"qmax", table.qmax},
                {"d", table.d},
                {"b", table.b},
                {"table", cells}};
}

json homology_json(const Tuple& N, const Tuple& d, int k, const Decomposition& dec) {
    return json{{"N", N}, {"d", d}, {"k", k}, {"entries", to_json(dec)}};
}

namespace {

json scan_points_json(const std::vector<ScanPoint>& points) {
    json arr = json::array();
    for (const auto& pt : points)
        arr.push_back(json{{"point", pt.N},
                           {"entries", to_json(pt.decomposition)},
                           {"constituents", to_json(pt.constituents)}});
    return arr;
}

json optionals_json(const std::vector<std::optional<int>>& v) {
    json arr = json::array();
    for (const auto& o : v) {
        if (o) arr.push_back(*o);
        else arr.push_back(nullptr);
    }
    return arr;
}

}  // namespace

json to_json(const StabilityReport& report) {
    return json{{"d", report.d},
                {"k", report.degree},
                {"fixed", optionals_json(report.fixed)},
                {"scan_from", report.scan_from},
                {"scan_to", report.scan_to},
                {"m", report.m},
                {"bound", report.paper_bound},
                {"points", scan_points_json(report.points)},
                {"stabilization_point", report.stabilization_point},
                {"stabilized", report.stabilized},
                {"meets_bound", report.meets_bound},
                {"window_adequate", report.window_adequate},
                {"pass", report.stabilized && report.meets_bound}};
}

json to_json(const SyzygyStabilityReport& report) {
    json j{{"p", report.p},
           {"q", report.q},
           {"d", report.d},
           {"fixed_b", optionals_json(report.fixed_b)},
           {"scan_from", report.scan_from},
           {"scan_to", report.scan_to},
           {"bound", report.theorem_bound},
           {"points", scan_points_json(report.points)},
           {"stabilization_b", report.stabilization_b},
           {"stabilized", report.stabilized},
           {"meets_bound", report.meets_bound},
           {"pass", report.stabilized && report.meets_bound}};
    if (report.sharp) j["sharp"] = *report.sharp;
    return j;
}

json to_json(const LesReport& report) {
    json dims = json::array();
    for (const auto& row : report.dims)
        dims.push_back(json{{"k", row.degree},
                            {"induced", row.induced},
                            {"smaller", row.smaller},
                            {"restricted", row.restricted}});
    json j{{"pass", report.ok}, {"dims", dims}};
    if (report.offending) {
        json cls = json::array();
        for (const auto& part : *report.offending) cls.push_back(to_json(part));
        j["offending_class"] = cls;
    }
    return j;
}

}  // namespace packing
