#pragma once

#include <json.hpp>

#include "qdissect/check_report.hpp"
#include "qdissect/phi_rep.hpp"
#include "qdissect/qseries.hpp"

// JSON wire formats.  Integers wider than a machine word travel as decimal
// strings so nothing is ever rounded.

namespace qdissect {

inline nlohmann::json to_json(const QSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.window())
        coeffs.push_back({to_string(numerator(c)), to_string(denominator(c))});
    return {{"valuation", s.valuation()}, {"precision", s.precision()}, {"coeffs", coeffs}};
}

inline QSeries qseries_from_json(const nlohmann::json& j) {
    long val = j.at("valuation").get<long>();
    long prec = j.at("precision").get<long>();
    std::vector<Rational> w;
    for (const auto& pair : j.at("coeffs"))
        w.push_back(rational_from_strings(pair.at(0).get<std::string>(),
                                          pair.at(1).get<std::string>()));
    return QSeries(val, std::move(w), prec);
}

inline nlohmann::json to_json(const DisplayRep& d) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : d.rows) rows.push_back({row.s, row.t, to_string(row.c)});
    nlohmann::json j = {{"alpha", d.alpha},
                        {"two_exponent", d.two_exponent},
                        {"beta", d.beta},
                        {"rows", rows}};
    if (d.modulus != 0) j["modulus"] = to_string(d.modulus);
    return j;
}

inline nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json j;
    j["claim"] = r.claim;
    j["modulus"] = to_string(r.modulus);
    if (r.progressions.empty()) {
        j["progression"] = "identity";
    } else if (r.progressions.size() == 1) {
        j["progression"] = {r.progressions[0].first, r.progressions[0].second};
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : r.progressions) arr.push_back({p.first, p.second});
        j["progression"] = arr;
    }
    j["checked"] = r.checked;
    j["status"] = r.passed() ? "pass" : "fail";
    nlohmann::json viols = nlohmann::json::array();
    for (const auto& v : r.violations) viols.push_back({to_string(v.n), v.value});
    j["violations"] = viols;
    return j;
}

} // namespace qdissect
