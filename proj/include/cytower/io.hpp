#ifndef CYTOWER_IO_HPP
#define CYTOWER_IO_HPP

#include <json.hpp>
#include <string>

#include "cytower/fibers.hpp"
#include "cytower/moduli.hpp"
#include "cytower/newton.hpp"
#include "cytower/rational.hpp"

namespace cytower {

using json = nlohmann::ordered_json;

/// {"n": k, "coords": {"i_0,...,i_n": "num/den"}}; omitted entries are zero.
inline json point_to_json(const ModuliPoint& p) {
    json j;
    j["n"] = p.n;
    j["coords"] = json::object();
    for (const auto& [e, a] : p.coords) {
        if (a == 0) continue;
        j["coords"][join_tuple(e)] = rat_to_string(a);
    }
    return j;
}

inline ModuliPoint point_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("coords"))
        throw std::invalid_argument("point JSON needs \"n\" and \"coords\"");
    ModuliPoint p;
    p.n = j.at("n").get<long>();
    for (const auto& [key, val] : j.at("coords").items()) {
        Expo e = parse_tuple(key);
        if (static_cast<long>(e.size()) == p.n) e.push_back(0);  // short tuples pad i_n = 0
        if (static_cast<long>(e.size()) != p.n + 1)
            throw std::invalid_argument("point JSON: tuple \"" + key + "\" has wrong arity");
        Rat a = rat_from_string(val.get<std::string>());
        if (a != 0) p.coords[e] = a;
    }
    return p;
}

/// {"n": k, "coeffs": {"i_0,...,i_{n-1}": ["c0", "c1", ...]}} low-to-high.
inline json family_to_json(const CurveFamily& fam) {
    json j;
    j["n"] = fam.n;
    j["coeffs"] = json::object();
    for (const auto& [i, t] : fam.coeffs) {
        if (t.is_zero()) continue;
        json arr = json::array();
        for (const Rat& c : t.coeffs()) arr.push_back(rat_to_string(c));
        j["coeffs"][join_tuple(i)] = arr;
    }
    return j;
}

inline CurveFamily family_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("coeffs"))
        throw std::invalid_argument("family JSON needs \"n\" and \"coeffs\"");
    CurveFamily fam;
    fam.n = j.at("n").get<long>();
    for (const auto& [key, val] : j.at("coeffs").items()) {
        Expo i = parse_tuple(key);
        if (static_cast<long>(i.size()) != fam.n)
            throw std::invalid_argument("family JSON: tuple \"" + key + "\" has wrong arity");
        std::vector<Rat> cs;
        for (const auto& c : val) cs.push_back(rat_from_string(c.get<std::string>()));
        fam.coeffs[i] = UniPoly(cs);
    }
    return fam;
}

/// {"c": ..., "lambda": [...], "omega": [...]} certificate of a diagonal exit.
inline json exit_to_json(const DiagonalExit& d) {
    json j;
    j["c"] = rat_to_string(d.c);
    json lam = json::array(), om = json::array();
    for (const Rat& x : d.lambda) lam.push_back(rat_to_string(x));
    for (const Rat& x : d.omega) om.push_back(rat_to_string(x));
    j["lambda"] = lam;
    j["omega"] = om;
    return j;
}

}  // namespace cytower

#endif
