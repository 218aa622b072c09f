// Test-side oracles, kept independent of the library paths they check.
#pragma once

#include <vector>

#include "simwaring/bigint.hpp"
#include "simwaring/monomial.hpp"
#include "simwaring/monomial_ideal.hpp"

namespace oracles {

/// Number of monomial divisors of m, counted one by one.
inline simwaring::BigInt divisor_count(const simwaring::Monomial& m) {
    simwaring::BigInt count = 0;
    std::vector<int> exps(static_cast<std::size_t>(m.nvars()), 0);
    while (true) {
        ++count;
        int pos = m.nvars() - 1;
        while (pos >= 0) {
            if (++exps[static_cast<std::size_t>(pos)] <= m.exponent(pos)) break;
            exps[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return count;
}

/// Waring rank by direct divisor counting: the number of divisors of
/// m / x_i^{a_i} for i a minimal-exponent position.
inline simwaring::BigInt waring_rank_by_divisors(const simwaring::Monomial& m) {
    const int i = *simwaring::min_positions(m).begin();
    std::vector<int> exps = m.exponents();
    exps[static_cast<std::size_t>(i)] = 0;
    return divisor_count(simwaring::Monomial(m.nvars(), std::move(exps)));
}

/// Visit every monomial in the box prod [0, bounds_i].
template <typename Visitor>
void for_each_in_box(int nvars, const std::vector<int>& bounds, Visitor&& visit) {
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    while (true) {
        visit(simwaring::Monomial(nvars, exps));
        int pos = nvars - 1;
        while (pos >= 0) {
            if (++exps[static_cast<std::size_t>(pos)] <= bounds[static_cast<std::size_t>(pos)])
                break;
            exps[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

} // namespace oracles
