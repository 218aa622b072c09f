#pragma once

#include <string>

#include <json.hpp>

#include "simwaring/collection.hpp"
#include "simwaring/decomposition.hpp"

namespace simwaring {

inline nlohmann::json symbolic_root_json(const SymbolicRoot& root) {
    if (root.is_zero()) return {{"kind", "zero"}};
    return {{"kind", "root_of_unity"},
            {"radius_exp", root.radius_exp()},
            {"order", root.order()},
            {"index", root.index()}};
}

/// Export format for decompositions: points with numeric and symbolic
/// coordinates, the per-form coefficient matrix, residuals, and the rule tag.
/// Large integers are serialized as decimal strings.
inline nlohmann::json decomposition_json(const Decomposition& dec, const Collection& coll,
                                         const std::string& justification) {
    nlohmann::json out;
    out["vars"] = coll.nvars();
    nlohmann::json names = nlohmann::json::array();
    for (const auto& m : coll.monomials()) names.push_back(m.str());
    out["monomials"] = names;
    out["degrees"] = dec.degrees;
    out["base_variable"] = dec.scheme.base_variable;
    out["claimed_rank"] = to_decimal(dec.claimed_rank);
    out["justification"] = justification;

    nlohmann::json points = nlohmann::json::array();
    for (const auto& point : dec.scheme.points) {
        nlohmann::json coords = nlohmann::json::array();
        for (const auto& root : point) {
            const auto value = root.value();
            coords.push_back({{"re", value.real()},
                              {"im", value.imag()},
                              {"symbolic", symbolic_root_json(root)}});
        }
        points.push_back(coords);
    }
    out["points"] = points;
    out["membership"] = dec.scheme.membership;

    nlohmann::json coefficients = nlohmann::json::array();
    for (const auto& row : dec.coefficients) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& value : row)
            entries.push_back({{"re", value.real()}, {"im", value.imag()}});
        coefficients.push_back(entries);
    }
    out["coefficients"] = coefficients;
    out["residuals"] = dec.residuals;
    out["tolerance"] = dec.tol;
    out["verified"] = dec.verified();
    return out;
}

} // namespace simwaring
