#include "quintic/report.hpp"

#include "json.hpp"

namespace quintic {

std::string IdentityReport::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["name"] = name;
    j["anchor"] = anchor;
    j["order"] = rat_str(order);
    j["pass"] = pass;
    if (first_fail) j["first_fail"] = rat_str(*first_fail);
    if (!notes.empty()) j["notes"] = notes;
    return j.dump();
}

std::string IdentityReport::str() const {
    std::string s = name + ": " + (pass ? "PASS" : "FAIL") + " (order " + rat_str(order) + ")";
    if (first_fail) s += " first difference at q^" + rat_str(*first_fail);
    if (!notes.empty()) s += " -- " + notes;
    return s;
}

IdentityReport compare_series(const std::string& name, const std::string& anchor,
                              const QSeries& lhs, const QSeries& rhs, const Rational& order) {
    IdentityReport r;
    r.name = name;
    r.anchor = anchor;
    r.order = order;
    r.first_fail = QSeries::first_difference(lhs, rhs, order);
    r.pass = !r.first_fail.has_value();
    return r;
}

}  // namespace quintic
