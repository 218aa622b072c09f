#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simwaring/bigint.hpp"
#include "simwaring/collection.hpp"
#include "simwaring/errors.hpp"
#include "simwaring/monomial.hpp"
#include "simwaring/monomial_ideal.hpp"
#include "simwaring/verdict.hpp"

namespace simwaring {

/// One term of the inclusion-exclusion sum: a nonempty subset of the
/// collection, the gcd of its members, and the gcd's signed rank. The rank is
/// absent when the gcd is constant.
struct SubsetTerm {
    std::vector<std::size_t> indices;
    Monomial gcd;
    std::optional<BigInt> rank;
    int sign; // (-1)^(|subset|+1)
};

inline std::vector<SubsetTerm> alternating_sum_terms(const Collection& coll) {
    const std::size_t n = coll.size();
    if (n > 24) throw std::invalid_argument("collection too large for subset enumeration");
    std::vector<SubsetTerm> terms;
    terms.reserve((std::size_t{1} << n) - 1);
    // gcds[mask] built incrementally from the lowest set bit.
    std::vector<Monomial> gcds;
    gcds.reserve(std::size_t{1} << n);
    gcds.emplace_back(coll.nvars()); // mask 0, unused placeholder
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        const std::size_t low = mask & (~mask + 1);
        const std::size_t low_index = static_cast<std::size_t>(__builtin_ctzll(mask));
        const std::size_t rest = mask & ~low;
        gcds.push_back(rest == 0 ? coll[low_index] : gcd(coll[low_index], gcds[rest]));

        SubsetTerm term{.indices = {}, .gcd = gcds.back(), .rank = std::nullopt, .sign = 0};
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (std::size_t{1} << j)) term.indices.push_back(j);
        term.sign = term.indices.size() % 2 == 1 ? 1 : -1;
        if (!term.gcd.is_constant()) term.rank = waring_rank(term.gcd);
        terms.push_back(std::move(term));
    }
    return terms;
}

/// Inclusion-exclusion over all nonempty subsets: the signed sum of the Waring
/// ranks of the subsets' gcds.
inline BigInt alternating_sum(const Collection& coll) {
    if (!coll.all_nonconstant())
        throw hypothesis_error("alternating sum requires nonconstant monomials");
    BigInt total = 0;
    for (const auto& term : alternating_sum_terms(coll)) {
        if (!term.rank) {
            std::string subset;
            for (std::size_t j : term.indices) {
                if (!subset.empty()) subset += ",";
                subset += std::to_string(j);
            }
            throw hypothesis_error("gcd of subset {" + subset +
                                   "} is constant; its rank is undefined");
        }
        total += term.sign * *term.rank;
    }
    return total;
}

/// Variables appearing in every monomial (admissible for the quotient-algebra
/// lower bound).
inline std::vector<int> common_variables(const Collection& coll) {
    std::vector<int> vars;
    for (int i = 0; i < coll.nvars(); ++i) {
        bool everywhere = true;
        for (const auto& m : coll.monomials())
            if (m.exponent(i) == 0) {
                everywhere = false;
                break;
            }
        if (everywhere) vars.push_back(i);
    }
    return vars;
}

/// Dimension of the quotient by (X_i) + intersection of the apolar ideals,
/// maximized over all variables i present in every monomial. A valid lower
/// bound for the simultaneous rank for each admissible i, so the max is too.
inline BigInt lower_bound(const Collection& coll, std::uint64_t cap = kDefaultEnumerationCap) {
    if (!coll.all_nonconstant())
        throw hypothesis_error("lower bound requires nonconstant monomials");
    const std::vector<int> admissible = common_variables(coll);
    if (admissible.empty())
        throw hypothesis_error("no variable appears in every monomial");
    MonomialIdeal apolar_intersection = apolar_ideal(coll[0]);
    for (std::size_t j = 1; j < coll.size(); ++j)
        apolar_intersection = intersect(apolar_intersection, apolar_ideal(coll[j]));
    BigInt best = -1;
    for (int i : admissible) {
        std::vector<int> exps(static_cast<std::size_t>(coll.nvars()), 0);
        exps[static_cast<std::size_t>(i)] = 1;
        const MonomialIdeal with_variable =
            sum(MonomialIdeal(coll.nvars(), {Monomial(coll.nvars(), exps)}), apolar_intersection);
        const BigInt count = standard_monomial_count(with_variable, cap);
        if (count > best) best = count;
    }
    return best;
}

/// Rank of the lcm of the collection, an upper bound for the simultaneous rank.
inline BigInt upper_bound_lcm(const Collection& coll) {
    Monomial total = coll[0];
    for (std::size_t j = 1; j < coll.size(); ++j) total = lcm(total, coll[j]);
    if (total.is_constant()) throw hypothesis_error("lcm of the collection is constant");
    return waring_rank(total);
}

namespace detail {

/// Largest single-monomial rank: valid for any collection, since a
/// simultaneous decomposition decomposes each member.
inline BigInt max_member_rank(const Collection& coll) {
    BigInt best = 0;
    for (const auto& m : coll.monomials()) {
        BigInt r = waring_rank(m);
        if (r > best) best = r;
    }
    return best;
}

inline RankVerdict degrade_to_bounds(const Collection& coll, std::uint64_t cap) {
    const BigInt upper = upper_bound_lcm(coll);
    const BigInt lower = common_variables(coll).empty() ? max_member_rank(coll)
                                                        : lower_bound(coll, cap);
    return RankVerdict::bounds(lower, upper);
}

/// All monomials share the same support (variables absent everywhere are fine).
inline bool same_support(const Collection& coll) {
    for (int i = 0; i < coll.nvars(); ++i) {
        bool any = false, all = true;
        for (const auto& m : coll.monomials()) {
            if (m.exponent(i) > 0)
                any = true;
            else
                all = false;
        }
        if (any && !all) return false;
    }
    return true;
}

/// Gate shared by the exact free-collection results and the scheme
/// construction: base variable, same support, free differences.
inline std::optional<BaseVariable> free_gate(const Collection& coll) {
    const auto base = find_base_variable(coll);
    if (!base) return std::nullopt;
    if (!same_support(coll)) return std::nullopt;
    if (!check_free(coll)) return std::nullopt;
    return base;
}

} // namespace detail

/// Exact pair rank rk M1 + rk M2 - rk gcd for same-support pairs with a shared
/// base exponent c and per-variable exponent gaps of 0, 1, or >= c+1; degrades
/// to bounds when the hypotheses fail.
inline RankVerdict pair_rank_same_support(const Monomial& m1, const Monomial& m2,
                                          std::uint64_t cap = kDefaultEnumerationCap) {
    Monomial::require_same_nvars(m1, m2);
    if (m1.is_constant() || m2.is_constant())
        throw hypothesis_error("pair rank requires nonconstant monomials");
    if (m1 == m2) return RankVerdict::exact(waring_rank(m1), Rule::PairSameSupport);
    const Collection coll(m1.nvars(), {m1, m2});
    const auto base = find_base_variable(coll);
    bool applies = base.has_value() && detail::same_support(coll);
    if (applies) {
        for (int i = 0; i < m1.nvars() && applies; ++i) {
            const int gap = std::abs(m1.exponent(i) - m2.exponent(i));
            applies = gap <= 1 || gap >= base->c + 1;
        }
    }
    if (!applies) return detail::degrade_to_bounds(coll, cap);
    return RankVerdict::exact(waring_rank(m1) + waring_rank(m2) - waring_rank(gcd(m1, m2)),
                              Rule::PairSameSupport);
}

/// Exact pair rank for pairs sharing a variable of exponent 1, where every
/// variable in exactly one support has exponent >= 2 (shared variables are
/// unrestricted); degrades to bounds otherwise.
inline RankVerdict pair_rank_different_support(const Monomial& m1, const Monomial& m2,
                                               std::uint64_t cap = kDefaultEnumerationCap) {
    Monomial::require_same_nvars(m1, m2);
    if (m1.is_constant() || m2.is_constant())
        throw hypothesis_error("pair rank requires nonconstant monomials");
    if (m1 == m2) return RankVerdict::exact(waring_rank(m1), Rule::PairDifferentSupport);
    int shared_unit = -1;
    for (int i = 0; i < m1.nvars(); ++i)
        if (m1.exponent(i) == 1 && m2.exponent(i) == 1) {
            shared_unit = i;
            break;
        }
    bool applies = shared_unit >= 0;
    for (int i = 0; i < m1.nvars() && applies; ++i) {
        if (i == shared_unit) continue;
        const int a = m1.exponent(i), b = m2.exponent(i);
        if ((a > 0) != (b > 0)) applies = std::max(a, b) >= 2;
    }
    if (!applies) return detail::degrade_to_bounds(Collection(m1.nvars(), {m1, m2}), cap);
    return RankVerdict::exact(waring_rank(m1) + waring_rank(m2) - waring_rank(gcd(m1, m2)),
                              Rule::PairDifferentSupport);
}

/// Exact rank of a free collection via the inclusion-exclusion alternating
/// sum; bounds otherwise.
inline RankVerdict free_collection_rank(const Collection& coll,
                                        std::uint64_t cap = kDefaultEnumerationCap) {
    if (!coll.all_nonconstant())
        throw hypothesis_error("collection rank requires nonconstant monomials");
    if (!detail::free_gate(coll)) return detail::degrade_to_bounds(coll, cap);
    return RankVerdict::exact(alternating_sum(coll), Rule::FreeCollection);
}

struct DerivativeRank {
    RankVerdict verdict;
    Collection derivatives;
};

/// Collection of the nonzero first derivatives of m, with scalar factors
/// dropped.
inline Collection derivative_collection(const Monomial& m) {
    std::vector<Monomial> derivatives;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exponent(i) == 0) continue;
        std::vector<int> exps = m.exponents();
        --exps[static_cast<std::size_t>(i)];
        derivatives.emplace_back(m.nvars(), std::move(exps));
    }
    if (derivatives.empty() || derivatives[0].is_constant())
        throw hypothesis_error("derivative collection of '" + m.str() + "' is degenerate");
    return Collection(m.nvars(), std::move(derivatives));
}

/// The simultaneous rank of the first-derivative collection of m equals
/// rk m when every exponent exceeds 1; otherwise bounds on the derivative
/// collection.
inline DerivativeRank derivative_collection_rank(const Monomial& m,
                                                 std::uint64_t cap = kDefaultEnumerationCap) {
    Collection derivatives = derivative_collection(m);
    const bool applies = std::all_of(m.exponents().begin(), m.exponents().end(),
                                     [](int e) { return e > 1; });
    if (!applies)
        return DerivativeRank{detail::degrade_to_bounds(derivatives, cap), std::move(derivatives)};
    return DerivativeRank{RankVerdict::exact(waring_rank(m), Rule::DerivativeCollection),
                          std::move(derivatives)};
}

/// Upper bound for the rank of the binomial M1 + M2: the exact simultaneous
/// pair rank. Not always sharp. Errors when the pair hypotheses fail.
inline BigInt binomial_upper_bound(const Monomial& m1, const Monomial& m2) {
    const RankVerdict verdict = pair_rank_same_support(m1, m2);
    if (!verdict.is_exact())
        throw hypothesis_error("binomial bound needs the same-support pair hypotheses");
    return verdict.exact_value;
}

/// The pair {x0 x1^t x2^(t+f), x0 x1^(t+f) x2^t} in three variables, f = 1, 2.
inline std::pair<Monomial, Monomial> high_rank_pair(long t, int family) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (t > 1000000) throw std::invalid_argument("t too large for explicit exponents");
    if (family != 1 && family != 2) throw std::invalid_argument("family must be 1 or 2");
    const int ti = static_cast<int>(t);
    return {Monomial(3, {1, ti, ti + family}), Monomial(3, {1, ti + family, ti})};
}

/// Closed forms t^2+4t+3 (family 1) and t^2+6t+5 (family 2) for the pairs
/// above.
inline BigInt high_rank_pair_formula(long t, int family) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    const BigInt tt = t;
    if (family == 1) return tt * tt + 4 * tt + 3;
    if (family == 2) return tt * tt + 6 * tt + 5;
    throw std::invalid_argument("family must be 1 or 2");
}

/// Simultaneous rank of a generic pair of ternary degree-d forms:
/// ceil(binom(d+2,2)/2), except 6 at d=3 where the relevant secant variety has
/// codimension one.
inline BigInt generic_ternary_pair_rank(long d) {
    if (d < 2) throw std::invalid_argument("degree must be >= 2");
    if (d == 3) return 6;
    const BigInt space_dim = binomial(d + 2, 2);
    return (space_dim + 1) / 2;
}

/// Dispatch over the exact-rank results: pair rules for pairs, the free
/// criterion, derivative-collection recognition, then bounds (upgraded to
/// exact when the bounds meet).
inline RankVerdict simultaneous_rank(const Collection& coll,
                                     std::uint64_t cap = kDefaultEnumerationCap) {
    if (!coll.all_nonconstant())
        throw hypothesis_error("simultaneous rank requires nonconstant monomials");

    if (coll.size() == 2) {
        RankVerdict pair = pair_rank_same_support(coll[0], coll[1], cap);
        if (pair.is_exact()) return pair;
        pair = pair_rank_different_support(coll[0], coll[1], cap);
        if (pair.is_exact()) return pair;
    } else {
        const RankVerdict free_verdict = free_collection_rank(coll, cap);
        if (free_verdict.is_exact()) return free_verdict;
    }

    // Recognize the first-derivative collection of a full-support monomial
    // with all exponents > 1; the monomial is recovered as the lcm.
    if (coll.size() == static_cast<std::size_t>(coll.nvars())) {
        Monomial candidate = coll[0];
        for (std::size_t j = 1; j < coll.size(); ++j) candidate = lcm(candidate, coll[j]);
        const bool exponents_ok = std::all_of(candidate.exponents().begin(),
                                              candidate.exponents().end(),
                                              [](int e) { return e > 1; });
        if (exponents_ok) {
            std::vector<Monomial> expected;
            for (int i = 0; i < coll.nvars(); ++i) {
                std::vector<int> exps = candidate.exponents();
                --exps[static_cast<std::size_t>(i)];
                expected.emplace_back(coll.nvars(), std::move(exps));
            }
            const bool matches = std::is_permutation(expected.begin(), expected.end(),
                                                     coll.monomials().begin(),
                                                     coll.monomials().end());
            if (matches)
                return RankVerdict::exact(waring_rank(candidate), Rule::DerivativeCollection);
        }
    }

    RankVerdict verdict = detail::degrade_to_bounds(coll, cap);
    if (verdict.lower == verdict.upper)
        return RankVerdict::exact(verdict.lower, Rule::BoundsOnly);
    return verdict;
}

} // namespace simwaring
