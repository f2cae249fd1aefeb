#pragma once

#include "json.hpp"

#include "refsev/ring.hpp"

namespace refsev {

/// {"halfpowers": true, "terms": [[e2, "coeff"], ...]} with e2 ascending and
/// coefficients as decimal strings; e2 doubles the exponent of y.
inline nlohmann::json laurent_to_json(const LaurentY& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e2, c] : p.terms())
        terms.push_back({e2, c.get_str()});
    return nlohmann::json{{"halfpowers", true}, {"terms", terms}};
}

inline LaurentY laurent_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("halfpowers") || !j.contains("terms") ||
        !j["halfpowers"].is_boolean() || !j["halfpowers"].get<bool>())
        throw DomainError("malformed polynomial JSON");
    LaurentY p;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() ||
            !t[1].is_string())
            throw DomainError("malformed polynomial JSON term");
        p += LaurentY::term(t[0].get<int>(), BigInt(t[1].get<std::string>()));
    }
    return p;
}

} // namespace refsev
