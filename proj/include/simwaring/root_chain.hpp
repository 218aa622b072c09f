#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "simwaring/bigint.hpp"
#include "simwaring/errors.hpp"
#include "simwaring/symbolic_root.hpp"

namespace simwaring {

/// Nested coordinate sets for one variable: for each exponent e in the chain,
/// a set of e+1 exactly-distinct roots, with set(e) contained in set(e') for
/// e <= e'. Realizes the binary forms of the pair/free constructions:
/// the set at exponent e is the root set of a square-free binary form lying in
/// (X0^(c+1), Xi^(e+1)).
class RootChain {
public:
    int variable() const { return variable_; }
    int base_exponent() const { return base_exponent_; }
    const std::vector<int>& exponents() const { return exponents_; }

    const std::vector<SymbolicRoot>& set_for(int exponent) const {
        const auto it = sets_.find(exponent);
        if (it == sets_.end())
            throw std::invalid_argument("exponent " + std::to_string(exponent) +
                                        " is not a chain value");
        return it->second;
    }

    /// Coefficients of the chain's binary form at the given exponent e,
    /// indexed by X0-degree 0..e+1 (the Xi-degree is e+1 minus the index).
    /// Exact integers: the form is a product of factors Xi^g - beta*X0^g.
    std::vector<BigInt> binary_form_x0_coefficients(int exponent) const {
        std::size_t upto = 0;
        while (upto < exponents_.size() && exponents_[upto] != exponent) ++upto;
        if (upto == exponents_.size())
            throw std::invalid_argument("exponent " + std::to_string(exponent) +
                                        " is not a chain value");
        std::vector<BigInt> coeffs{1}; // the empty product
        for (std::size_t t = 0; t <= upto; ++t) {
            const auto& [xi_degree, x0_coefficient] = factors_[t];
            // Multiply by Xi^g - beta*X0^g: shift by g in X0-degree for the
            // -beta part, keep in place for the Xi part.
            std::vector<BigInt> next(coeffs.size() + static_cast<std::size_t>(xi_degree), 0);
            for (std::size_t a = 0; a < coeffs.size(); ++a) {
                next[a] += coeffs[a];
                next[a + static_cast<std::size_t>(xi_degree)] -= x0_coefficient * coeffs[a];
            }
            coeffs = std::move(next);
        }
        return coeffs;
    }

    friend RootChain build_root_chain(std::vector<int> exponent_chain, int c, int variable);

private:
    int variable_ = -1;
    int base_exponent_ = 1;
    std::vector<int> exponents_;
    std::map<int, std::vector<SymbolicRoot>> sets_;
    std::vector<std::pair<int, BigInt>> factors_; // (Xi-degree g, X0^g coefficient beta)
};

/// Build the nested root sets along a chain of distinct exponents with shared
/// base exponent c. The smallest exponent e1 >= 1 starts from the (e1+1)-th
/// roots of unity (roots of Xi^(e1+1) - X0^(e1+1)); a chain starting at 0
/// pins the coordinate to zero (root of Xi), the case of a variable absent
/// from every monomial. Each unit step adds the zero root (factor Xi); each
/// step of size delta >= c+1 adds the delta-th roots of unity scaled by 2^s,
/// s counting the scaled steps, so all radii stay distinct.
inline RootChain build_root_chain(std::vector<int> exponent_chain, int c, int variable = -1) {
    if (c < 1) throw std::invalid_argument("base exponent c must be >= 1");
    if (exponent_chain.empty()) throw std::invalid_argument("exponent chain must not be empty");
    std::sort(exponent_chain.begin(), exponent_chain.end());
    exponent_chain.erase(std::unique(exponent_chain.begin(), exponent_chain.end()),
                         exponent_chain.end());
    if (exponent_chain.front() < 0) throw std::invalid_argument("exponents must be >= 0");

    RootChain chain;
    chain.variable_ = variable;
    chain.base_exponent_ = c;
    chain.exponents_ = exponent_chain;

    std::vector<SymbolicRoot> current;
    bool zero_used = false;
    const int first = exponent_chain.front();
    if (first == 0) {
        if (exponent_chain.size() > 1)
            throw hypothesis_error("a variable absent from some monomials breaks the free "
                                   "construction (mixed support)");
        current.push_back(SymbolicRoot::zero());
        zero_used = true;
        chain.factors_.emplace_back(1, BigInt(0)); // Xi
    } else {
        for (int k = 0; k <= first; ++k)
            current.push_back(SymbolicRoot::root_of_unity(0, first + 1, k));
        chain.factors_.emplace_back(first + 1, BigInt(1)); // Xi^(e1+1) - X0^(e1+1)
    }
    std::sort(current.begin(), current.end());
    chain.sets_[first] = current;

    int unit_steps = 0;
    int scale = 0;
    for (std::size_t t = 1; t < exponent_chain.size(); ++t) {
        const int delta = exponent_chain[t] - exponent_chain[t - 1];
        if (delta == 1) {
            if (++unit_steps > 1)
                throw hypothesis_error("two unit steps in one exponent chain: not (1,1)-free");
            if (zero_used)
                throw hypothesis_error("unit step would duplicate the zero root");
            current.push_back(SymbolicRoot::zero());
            zero_used = true;
            chain.factors_.emplace_back(1, BigInt(0)); // Xi
        } else if (delta >= c + 1) {
            ++scale;
            for (int k = 0; k < delta; ++k)
                current.push_back(SymbolicRoot::root_of_unity(scale, delta, k));
            // Xi^delta - 2^(s*delta) X0^delta
            BigInt beta = BigInt(1) << (scale * delta);
            chain.factors_.emplace_back(delta, std::move(beta));
        } else {
            throw hypothesis_error("exponent gap " + std::to_string(delta) +
                                   " violates the free condition (must be 1 or >= " +
                                   std::to_string(c + 1) + ")");
        }
        std::sort(current.begin(), current.end());
        chain.sets_[exponent_chain[t]] = current;
    }
    return chain;
}

} // namespace simwaring
