#include "ferrers/json_io.hpp"

#include "ferrers/version.hpp"

namespace ferrers {

using nlohmann::json;

json poly_to_json(const IntPoly& p) {
    json j;
    j["coeffs"] = p.coeff_strings();
    return j;
}

IntPoly poly_from_json(const json& j) {
    std::vector<Int> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(int_from_string(s.get<std::string>()));
    return IntPoly(std::move(coeffs));
}

json diagnostics_to_json(const SeqDiagnostics& d) {
    json j;
    j["unimodal"] = d.unimodal;
    j["peak_count"] = d.peak_count;
    j["peak_degrees"] = d.peak_degrees;
    j["symmetric"] = d.symmetric;
    j["flawless"] = d.flawless;
    j["log_concave"] = d.log_concave;
    if (d.first_dip)
        j["first_dip"] = *d.first_dip;
    else
        j["first_dip"] = nullptr;
    return j;
}

SeqDiagnostics diagnostics_from_json(const json& j) {
    SeqDiagnostics d;
    d.unimodal = j.at("unimodal").get<bool>();
    d.peak_count = j.at("peak_count").get<int>();
    d.peak_degrees = j.at("peak_degrees").get<std::vector<int>>();
    d.symmetric = j.at("symmetric").get<bool>();
    d.flawless = j.at("flawless").get<bool>();
    d.log_concave = j.at("log_concave").get<bool>();
    if (!j.at("first_dip").is_null()) d.first_dip = j.at("first_dip").get<int>();
    return d;
}

json verdict_to_json(const ClaimVerdict& v) {
    json j;
    j["claim"] = v.claim_id;
    j["range"] = v.parameter_range;
    j["holds"] = v.holds;
    json ws = json::array();
    for (const auto& [where, detail] : v.witnesses) ws.push_back({{"where", where}, {"detail", detail}});
    j["witnesses"] = ws;
    return j;
}

namespace {

json counterexample_to_json(const CounterexampleEntry& c) {
    json j;
    j["shape"] = c.shape;
    j["kind"] = c.kind;
    j["coeffs"] = c.coeffs;
    j["diagnostics"] = diagnostics_to_json(c.diagnostics);
    j["oracle_checked"] = c.oracle_checked;
    j["note"] = c.note;
    return j;
}

CounterexampleEntry counterexample_from_json(const json& j) {
    CounterexampleEntry c;
    c.shape = j.at("shape").get<std::string>();
    c.kind = j.at("kind").get<std::string>();
    c.coeffs = j.at("coeffs").get<std::vector<std::string>>();
    c.diagnostics = diagnostics_from_json(j.at("diagnostics"));
    c.oracle_checked = j.at("oracle_checked").get<bool>();
    c.note = j.at("note").get<std::string>();
    return c;
}

}  // namespace

json report_to_json(const ScanReport& r) {
    json j;
    j["spec"] = {{"conjecture", r.conjecture}, {"bounds", r.bounds}};
    j["shapes_tested"] = r.shapes_tested;
    j["completed_ranges"] = {{"cells_done", r.cells_done}, {"cells_total", r.cells_total}};
    json cxs = json::array();
    for (const auto& c : r.counterexamples) cxs.push_back(counterexample_to_json(c));
    j["counterexamples"] = cxs;
    json ns = json::array();
    for (const auto& n : r.notable) ns.push_back({{"label", n.label}, {"detail", n.detail}});
    j["notable"] = ns;
    j["stats"] = r.stats;
    j["version"] = kVersion;
    return j;
}

ScanReport report_from_json(const json& j) {
    ScanReport r;
    r.conjecture = j.at("spec").at("conjecture").get<std::string>();
    r.bounds = j.at("spec").at("bounds").get<std::map<std::string, long>>();
    r.shapes_tested = j.at("shapes_tested").get<long>();
    r.cells_done = j.at("completed_ranges").at("cells_done").get<long>();
    r.cells_total = j.at("completed_ranges").at("cells_total").get<long>();
    for (const auto& c : j.at("counterexamples")) r.counterexamples.push_back(counterexample_from_json(c));
    for (const auto& n : j.at("notable"))
        r.notable.push_back({n.at("label").get<std::string>(), n.at("detail").get<std::string>()});
    r.stats = j.at("stats").get<std::map<std::string, long>>();
    return r;
}

std::string report_to_json_string(const ScanReport& r) { return report_to_json(r).dump(2) + "\n"; }

ScanReport report_from_json_string(const std::string& text) {
    return report_from_json(json::parse(text));
}

}  // namespace ferrers
