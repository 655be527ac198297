#include "e7forge/report.hpp"

#include <json.hpp>

namespace e7f {

const CheckRecord* VerificationReport::worst() const {
    const CheckRecord* w = nullptr;
    double score = -1;
    for (const auto& c : checks) {
        double s = (c.tolerance > 0) ? c.residual / c.tolerance : c.residual;
        if (!c.pass) s += 1e6;
        if (s > score) {
            score = s;
            w = &c;
        }
    }
    return w;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["construction"] = construction;
    j["scalar_mode"] = scalar_mode;
    j["seed"] = seed;
    j["pass"] = pass();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["anchor"] = c.anchor;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        arr.push_back(jc);
    }
    j["checks"] = arr;
    if (const CheckRecord* w = worst()) j["worst_check"] = w->name;
    return j.dump(2) + "\n";
}

} // namespace e7f
