#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "monomial_ideal.hpp"

namespace vnum {

using Json = nlohmann::ordered_json;

/// {"n": 3, "gens": [[1,1,0],[0,3,0]]}, generators in canonical order.
inline Json to_json(const MonomialIdeal& I) {
    Json gens = Json::array();
    for (const auto& g : I.generators()) {
        Json row = Json::array();
        for (Exponent e : g) row.push_back(e);
        gens.push_back(std::move(row));
    }
    return Json{{"n", I.ambient()}, {"gens", std::move(gens)}};
}

inline MonomialIdeal ideal_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("gens"))
        throw ParseError("ideal JSON needs \"n\" and \"gens\"", 0);
    const auto n = j.at("n").get<std::size_t>();
    std::vector<ExponentVector> gens;
    for (const auto& row : j.at("gens")) {
        if (!row.is_array() || row.size() != n) throw DimensionMismatch(n, row.is_array() ? row.size() : 0);
        std::vector<Exponent> e;
        for (const auto& x : row) {
            if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0))
                throw ParseError("exponents must be non-negative integers", 0);
            e.push_back(x.get<Exponent>());
        }
        gens.emplace_back(std::move(e));
    }
    return minimalize(n, std::move(gens));
}

/// Primes serialize as sorted lists of 1-based variable indices.
inline Json to_json(const MonomialPrime& p) {
    Json out = Json::array();
    for (std::size_t i : p.support()) out.push_back(i + 1);
    return out;
}

inline Json to_json(const PrimeSet& primes) {
    Json out = Json::array();
    for (const auto& p : normalize(primes)) out.push_back(to_json(p));
    return out;
}

inline MonomialPrime prime_from_json(const Json& j, std::size_t n) {
    std::vector<std::size_t> support;
    for (const auto& x : j) {
        const auto v = x.get<std::size_t>();
        if (v == 0 || v > n) throw ParseError("unknown variable index " + std::to_string(v), 0);
        support.push_back(v - 1);
    }
    return MonomialPrime(n, std::move(support));
}

inline Json to_json(const ExponentVector& v) {
    Json out = Json::array();
    for (Exponent e : v) out.push_back(e);
    return out;
}

} // namespace vnum
