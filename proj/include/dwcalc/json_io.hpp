#pragma once

#include <string>

#include <json.hpp>

#include "dwcalc/cocycle.hpp"
#include "dwcalc/cyclotomic.hpp"
#include "dwcalc/group.hpp"
#include "dwcalc/seifert.hpp"

namespace dwcalc {

inline std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1)
        os << "/" << denominator(r);
    return os.str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("rational_from_string: cannot parse \"" + s + "\"");
    }
}

/// {"order": N, "coeffs": ["p/q", ...]} — the exact wire form; round-trips
/// to the identical value.
inline nlohmann::json cyclotomic_to_json(const Cyclotomic& x) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : x.coeffs())
        coeffs.push_back(rational_to_string(c));
    return nlohmann::json{{"order", x.order()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
    long order = j.at("order").get<long>();
    const auto& coeffs = j.at("coeffs");
    auto basis = cyclotomic_basis(order);
    if (static_cast<long>(coeffs.size()) != basis->deg)
        throw std::invalid_argument("cyclotomic_from_json: coefficient count mismatch");
    // start from the zero of the declared order so the order round-trips
    Cyclotomic out = Cyclotomic::from_root(order, 0) * Rational(0);
    for (long i = 0; i < basis->deg; ++i) {
        Rational c = rational_from_string(coeffs[i].get<std::string>());
        if (c != 0)
            out += Cyclotomic::from_root(order, i) * c;
    }
    return out;
}

inline nlohmann::json complex_to_json(const std::complex<double>& z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

/// Group file format:
///   {"type":"cyclic","m":9} | {"type":"abelian","factors":[2,4]}
///   | {"type":"table","order":6,"table":[[...],...]}  (identity = index 0)
inline FiniteGroup group_from_json(const nlohmann::json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "cyclic")
        return FiniteGroup::cyclic(j.at("m").get<int>());
    if (type == "abelian")
        return FiniteGroup::abelian_product(j.at("factors").get<std::vector<int>>());
    if (type == "table") {
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
            throw std::invalid_argument("group_from_json: order does not match table size");
        return FiniteGroup::cayley_table(table);
    }
    throw std::invalid_argument("group_from_json: unknown type \"" + type + "\"");
}

/// Cocycle file format: {"root_order": N, "values": [[[k,...],...],...]}
/// with values[x][y][z] = k meaning omega(x,y,z) = zeta_N^k.
inline ThreeCocycle cocycle_from_json(const FiniteGroup& g, const nlohmann::json& j) {
    long root_order = j.at("root_order").get<long>();
    if (root_order < 1)
        throw std::invalid_argument("cocycle_from_json: root_order must be positive");
    const auto& vals = j.at("values");
    const int k = g.order();
    if (static_cast<int>(vals.size()) != k)
        throw std::invalid_argument("cocycle_from_json: table size mismatch");
    std::vector<RootOfUnity> table;
    table.reserve(static_cast<std::size_t>(k) * k * k);
    for (int x = 0; x < k; ++x) {
        if (static_cast<int>(vals[x].size()) != k)
            throw std::invalid_argument("cocycle_from_json: table size mismatch");
        for (int y = 0; y < k; ++y) {
            if (static_cast<int>(vals[x][y].size()) != k)
                throw std::invalid_argument("cocycle_from_json: table size mismatch");
            for (int z = 0; z < k; ++z)
                table.emplace_back(root_order, vals[x][y][z].get<long>());
        }
    }
    return ThreeCocycle::from_table(g, std::move(table), true);
}

inline nlohmann::json dw_result_to_json(const DWResult& r) {
    return nlohmann::json{{"value", cyclotomic_to_json(r.value)},
                          {"approx", complex_to_json(r.approx)},
                          {"method", method_name(r.method)}};
}

}  // namespace dwcalc
