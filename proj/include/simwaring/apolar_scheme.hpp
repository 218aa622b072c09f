#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "simwaring/collection.hpp"
#include "simwaring/errors.hpp"
#include "simwaring/root_chain.hpp"
#include "simwaring/simrank.hpp"
#include "simwaring/symbolic_root.hpp"

namespace simwaring {

inline constexpr std::uint64_t kDefaultMaxPoints = 100'000;

/// A set of affine points (base coordinate fixed to 1) apolar to every
/// monomial of a collection, plus for each monomial the subset of points whose
/// ideal sits inside that monomial's apolar ideal. Points are pairwise
/// distinct by exact symbolic comparison and sorted by symbolic key.
struct ApolarScheme {
    int nvars = 0;
    int base_variable = -1;
    int base_exponent = 0;
    std::vector<std::vector<SymbolicRoot>> points;
    std::vector<std::vector<std::size_t>> membership; // per monomial, sorted point indices

    std::size_t size() const { return points.size(); }
};

/// Build the nested-chain scheme of the free-collection construction: for each
/// monomial, the Cartesian product over non-base variables of the chain set at
/// that monomial's exponent, prefixed with base coordinate 1. Requires the
/// free gate (base variable, same support, free differences).
inline ApolarScheme construct_apolar_scheme(const Collection& coll,
                                            std::uint64_t max_points = kDefaultMaxPoints) {
    const auto base = detail::free_gate(coll);
    if (!base) {
        if (!find_base_variable(coll))
            throw hypothesis_error("no base variable: the collection has no common minimal "
                                   "exponent position");
        if (!detail::same_support(coll))
            throw hypothesis_error("monomials have different supports; the free construction "
                                   "does not apply");
        throw hypothesis_error("collection is not free");
    }

    const BigInt expected = alternating_sum(coll);
    if (expected > max_points)
        throw cap_exceeded("scheme would have " + to_decimal(expected) +
                           " points, above the cap of " + std::to_string(max_points));

    ApolarScheme scheme;
    scheme.nvars = coll.nvars();
    scheme.base_variable = base->index;
    scheme.base_exponent = base->c;

    std::map<int, RootChain> chains; // non-base variables only
    for (int i = 0; i < coll.nvars(); ++i) {
        if (i == base->index) continue;
        chains.emplace(i, build_root_chain(coll.variable_exponents(i), base->c, i));
    }

    // First pass: collect the union in symbolic order.
    std::map<std::vector<SymbolicRoot>, std::size_t> index_of;
    const auto for_each_point = [&](const Monomial& m, auto&& visit) {
        std::vector<const std::vector<SymbolicRoot>*> axes;
        axes.reserve(static_cast<std::size_t>(coll.nvars()));
        for (int i = 0; i < coll.nvars(); ++i)
            axes.push_back(i == base->index ? nullptr
                                            : &chains.at(i).set_for(m.exponent(i)));
        std::vector<std::size_t> odometer(static_cast<std::size_t>(coll.nvars()), 0);
        std::vector<SymbolicRoot> point(static_cast<std::size_t>(coll.nvars()),
                                        SymbolicRoot::one());
        while (true) {
            for (int i = 0; i < coll.nvars(); ++i)
                point[static_cast<std::size_t>(i)] =
                    axes[static_cast<std::size_t>(i)] == nullptr
                        ? SymbolicRoot::one()
                        : (*axes[static_cast<std::size_t>(i)])[odometer[static_cast<std::size_t>(i)]];
            visit(point);
            int pos = coll.nvars() - 1;
            while (pos >= 0) {
                auto& digit = odometer[static_cast<std::size_t>(pos)];
                const std::size_t limit =
                    axes[static_cast<std::size_t>(pos)] == nullptr
                        ? 1
                        : axes[static_cast<std::size_t>(pos)]->size();
                if (++digit < limit) break;
                digit = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    };

    for (const auto& m : coll.monomials())
        for_each_point(m, [&](const std::vector<SymbolicRoot>& p) { index_of.emplace(p, 0); });

    scheme.points.reserve(index_of.size());
    for (auto& [point, index] : index_of) {
        index = scheme.points.size();
        scheme.points.push_back(point);
    }

    for (const auto& m : coll.monomials()) {
        std::vector<std::size_t> members;
        for_each_point(m, [&](const std::vector<SymbolicRoot>& p) {
            members.push_back(index_of.at(p));
        });
        std::sort(members.begin(), members.end());
        scheme.membership.push_back(std::move(members));
    }

    if (BigInt(scheme.points.size()) != expected)
        throw std::logic_error("scheme union size disagrees with the alternating sum");
    return scheme;
}

/// Evaluate every point to complex coordinates. Deterministic.
inline std::vector<std::vector<std::complex<double>>> materialize(const ApolarScheme& scheme) {
    std::vector<std::vector<std::complex<double>>> out;
    out.reserve(scheme.points.size());
    for (const auto& point : scheme.points) {
        std::vector<std::complex<double>> coords;
        coords.reserve(point.size());
        for (const auto& root : point) coords.push_back(root.value());
        out.push_back(std::move(coords));
    }
    return out;
}

} // namespace simwaring
