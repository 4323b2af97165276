#ifndef SIGMA_REPORT_JSON_HPP
#define SIGMA_REPORT_JSON_HPP

#include <json.hpp>

#include "sigma/closure.hpp"

namespace sigma {

/// Wire form of an enclosure: decimal endpoint strings rounded outward to
/// 25 significant digits.
inline nlohmann::ordered_json to_json(const Enclosure& e) {
    return {{"lo", e.lo_str()}, {"hi", e.hi_str()}};
}

inline nlohmann::ordered_json to_json(const ClosureReport& rep) {
    nlohmann::ordered_json j;
    j["r"] = to_json(rep.r);
    j["precision_bits"] = static_cast<long>(rep.precision.bits);
    j["mighty_primes"] = rep.summary.mighty_primes;
    j["largest_mighty"] = rep.summary.largest;
    j["count_mighty"] = rep.summary.count;
    j["enumeration_complete"] = rep.summary.enumeration_complete;
    nlohmann::ordered_json intervals = nlohmann::ordered_json::array();
    for (const ClosureInterval& iv : rep.intervals.intervals)
        intervals.push_back({{"a", to_json(iv.a)}, {"b", to_json(iv.b)}});
    j["intervals"] = std::move(intervals);
    j["components_min"] = rep.components_min;
    j["components_max"] = rep.components_max;
    j["lower_bound"] = rep.lower_bound;
    j["product_bound"] = rep.product_bound;
    nlohmann::ordered_json gaps = nlohmann::ordered_json::array();
    for (const auto& [lo, hi] : rep.gaps) gaps.push_back({to_json(lo), to_json(hi)});
    j["gaps"] = std::move(gaps);
    return j;
}

} // namespace sigma

#endif
