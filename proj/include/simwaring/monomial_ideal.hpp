#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "simwaring/bigint.hpp"
#include "simwaring/errors.hpp"
#include "simwaring/monomial.hpp"

namespace simwaring {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// A monomial ideal given by its unique minimal generating set (no generator
/// divides another). Generators are kept sorted, so equal ideals compare equal.
class MonomialIdeal {
public:
    MonomialIdeal(int nvars, std::vector<Monomial> generators) : nvars_(nvars) {
        if (nvars <= 0) throw std::invalid_argument("nvars must be positive");
        for (const auto& g : generators)
            if (g.nvars() != nvars)
                throw std::invalid_argument("generator variable count does not match ideal");
        generators_ = minimalize(std::move(generators));
    }

    /// The zero ideal (no generators).
    static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars, {}); }

    /// The unit ideal (1).
    static MonomialIdeal unit(int nvars) { return MonomialIdeal(nvars, {Monomial(nvars)}); }

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return generators_; }

    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const { return generators_.size() == 1 && generators_[0].is_constant(); }

    /// Membership: some generator divides m.
    bool contains(const Monomial& m) const {
        if (m.nvars() != nvars_)
            throw std::invalid_argument("monomial variable count does not match ideal");
        for (const auto& g : generators_)
            if (g.divides(m)) return true;
        return false;
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.nvars_ == b.nvars_ && a.generators_ == b.generators_;
    }

private:
    static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
        std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return a < b;
        });
        std::vector<Monomial> kept;
        for (const auto& g : gens) {
            bool redundant = false;
            for (const auto& k : kept)
                if (k.divides(g)) {
                    redundant = true;
                    break;
                }
            if (!redundant) kept.push_back(g);
        }
        std::sort(kept.begin(), kept.end());
        return kept;
    }

    int nvars_;
    std::vector<Monomial> generators_;
};

/// Apolar ideal of a monomial: (X_i^{a_i+1} for every variable i). Variables
/// outside the support contribute the linear generator X_i.
inline MonomialIdeal apolar_ideal(const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(static_cast<std::size_t>(m.nvars()));
    for (int i = 0; i < m.nvars(); ++i) {
        std::vector<int> exps(static_cast<std::size_t>(m.nvars()), 0);
        exps[static_cast<std::size_t>(i)] = m.exponent(i) + 1;
        gens.emplace_back(m.nvars(), std::move(exps));
    }
    return MonomialIdeal(m.nvars(), std::move(gens));
}

/// Intersection via pairwise lcm of generators, then minimalization.
inline MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    if (lhs.nvars() != rhs.nvars())
        throw std::invalid_argument("ideals live in different variable counts");
    std::vector<Monomial> gens;
    gens.reserve(lhs.generators().size() * rhs.generators().size());
    for (const auto& a : lhs.generators())
        for (const auto& b : rhs.generators()) gens.push_back(lcm(a, b));
    return MonomialIdeal(lhs.nvars(), std::move(gens));
}

/// Colon ideal I : (m), generator-wise g / gcd(g, m).
inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
    if (ideal.nvars() != m.nvars())
        throw std::invalid_argument("monomial variable count does not match ideal");
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(colon_quotient(g, m));
    return MonomialIdeal(ideal.nvars(), std::move(gens));
}

/// Ideal sum: union of generator sets, minimalized.
inline MonomialIdeal sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    if (lhs.nvars() != rhs.nvars())
        throw std::invalid_argument("ideals live in different variable counts");
    std::vector<Monomial> gens = lhs.generators();
    gens.insert(gens.end(), rhs.generators().begin(), rhs.generators().end());
    return MonomialIdeal(lhs.nvars(), std::move(gens));
}

inline bool contains(const MonomialIdeal& ideal, const Monomial& m) { return ideal.contains(m); }

/// Finite quotient test: every variable has a pure-power generator.
inline bool is_artinian(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) return true; // zero algebra
    std::vector<bool> covered(static_cast<std::size_t>(ideal.nvars()), false);
    for (const auto& g : ideal.generators()) {
        int support_var = -1;
        bool pure = true;
        for (int i = 0; i < ideal.nvars(); ++i) {
            if (g.exponent(i) == 0) continue;
            if (support_var >= 0) {
                pure = false;
                break;
            }
            support_var = i;
        }
        if (pure && support_var >= 0) covered[static_cast<std::size_t>(support_var)] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

struct StandardMonomialSet {
    BigInt count;
    std::optional<std::vector<Monomial>> monomials;
};

namespace detail {

/// Per-variable box bound: the minimal pure-power exponent k_i, so standard
/// monomials satisfy e_i < k_i.
inline std::vector<int> pure_power_bounds(const MonomialIdeal& ideal) {
    std::vector<int> bounds(static_cast<std::size_t>(ideal.nvars()), -1);
    for (const auto& g : ideal.generators()) {
        int support_var = -1;
        bool pure = true;
        for (int i = 0; i < ideal.nvars(); ++i) {
            if (g.exponent(i) == 0) continue;
            if (support_var >= 0) {
                pure = false;
                break;
            }
            support_var = i;
        }
        if (pure && support_var >= 0) bounds[static_cast<std::size_t>(support_var)] = g.exponent(support_var);
    }
    return bounds;
}

template <typename Visitor>
void scan_box(const std::vector<int>& bounds, const std::vector<Monomial>& mixed_gens,
              Visitor&& visit) {
    const int nvars = static_cast<int>(bounds.size());
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    while (true) {
        bool member = false;
        for (const auto& g : mixed_gens) {
            bool divides = true;
            for (int i = 0; i < nvars; ++i)
                if (g.exponent(i) > exps[static_cast<std::size_t>(i)]) {
                    divides = false;
                    break;
                }
            if (divides) {
                member = true;
                break;
            }
        }
        if (!member) visit(exps);
        int pos = nvars - 1;
        while (pos >= 0) {
            if (++exps[static_cast<std::size_t>(pos)] < bounds[static_cast<std::size_t>(pos)]) break;
            exps[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

} // namespace detail

/// Standard monomials of an artinian monomial ideal: the monomials not in the
/// ideal. The count scans the box prod [0, k_i-1] and filters by membership;
/// when every generator is a pure power the count is just the box volume.
/// This scan is the enumeration oracle the rank formulas are checked against.
inline StandardMonomialSet standard_monomials(const MonomialIdeal& ideal, bool enumerate = false,
                                              std::uint64_t cap = kDefaultEnumerationCap) {
    if (!is_artinian(ideal))
        throw hypothesis_error("standard monomial count is infinite: ideal is not artinian");
    StandardMonomialSet result;
    if (enumerate) result.monomials.emplace();
    if (ideal.is_unit()) {
        result.count = 0;
        return result;
    }

    const std::vector<int> bounds = detail::pure_power_bounds(ideal);
    BigInt volume = 1;
    for (int k : bounds) volume *= k;

    std::vector<Monomial> mixed;
    for (const auto& g : ideal.generators()) {
        int support = 0;
        for (int i = 0; i < ideal.nvars(); ++i)
            if (g.exponent(i) > 0) ++support;
        if (support > 1) mixed.push_back(g);
    }

    if (mixed.empty() && !enumerate) {
        result.count = volume;
        return result;
    }
    if (volume > cap)
        throw cap_exceeded("standard monomial box has " + to_decimal(volume) +
                           " cells, above the cap of " + std::to_string(cap));

    BigInt count = 0;
    detail::scan_box(bounds, mixed, [&](const std::vector<int>& exps) {
        ++count;
        if (enumerate) result.monomials->emplace_back(ideal.nvars(), exps);
    });
    result.count = count;
    return result;
}

inline BigInt standard_monomial_count(const MonomialIdeal& ideal,
                                      std::uint64_t cap = kDefaultEnumerationCap) {
    return standard_monomials(ideal, false, cap).count;
}

/// Number of degree-d monomials not in the ideal. Finite for every fixed d.
inline BigInt hilbert_function(const MonomialIdeal& ideal, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    BigInt count = 0;
    const int nvars = ideal.nvars();
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    // Enumerate compositions of `degree` into nvars parts.
    auto recurse = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            exps[static_cast<std::size_t>(var)] = remaining;
            if (!ideal.contains(Monomial(nvars, exps))) ++count;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
    };
    recurse(recurse, 0, degree);
    return count;
}

} // namespace simwaring
