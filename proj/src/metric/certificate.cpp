#include "mahler/metric/solve.hpp"

#include <json.hpp>

namespace mahler {

namespace {

using Json = nlohmann::ordered_json;

Json bound(const MeasureValue& v) {
    Json j;
    j["value"] = v.to_string();
    j["lo"] = to_decimal(v.enclosure().lo, 15);
    j["hi"] = to_decimal(v.enclosure().hi, 15, true);
    return j;
}

} // namespace

std::string result_json(const SolveResult& r, bool with_witness) {
    Json j;
    j["value"] = r.value.to_string();
    j["exact"] = r.exact;
    j["lower"] = bound(r.lower);
    j["upper"] = bound(r.upper);
    if (with_witness) {
        Json w;
        std::string text = r.witness.torsion_slack ? r.witness.unity.to_string() : "";
        Json factors = Json::array();
        for (const auto& f : r.factors) {
            factors.push_back({{"factor", f.text}, {"measure", f.measure.to_string()}});
            text += (text.empty() ? "" : "*") + f.text;
        }
        w["text"] = text;
        w["length"] = r.factors.size();
        w["unity"] = r.witness.unity.to_string();
        w["factors"] = factors;
        j["witness"] = w;
    }
    const Certificate& c = r.certificate;
    Json cert;
    cert["measure"] = c.measure;
    cert["closure_degree"] = c.closure_degree ? Json(*c.closure_degree) : Json(nullptr);
    cert["q"] = c.q ? Json(c.q->to_string()) : Json(nullptr);
    cert["length_bound"] = c.length_bound ? Json(*c.length_bound) : Json(nullptr);
    cert["kmax"] = c.kmax;
    cert["closure_cap"] = c.closure_cap;
    cert["caps_exceeded"] = c.caps_exceeded;
    cert["argument"] = c.argument;
    cert["location"] = c.location ? Json(*c.location) : Json(nullptr);
    cert["witness_in_field"] = c.witness_in_field;
    cert["witness_shortest"] = c.witness_shortest;
    cert["candidates"] = c.candidates;
    j["certificate"] = cert;
    return j.dump();
}

} // namespace mahler
