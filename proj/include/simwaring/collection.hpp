#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "simwaring/errors.hpp"
#include "simwaring/monomial.hpp"

namespace simwaring {

/// An ordered, duplicate-free list of monomials in a shared ring.
class Collection {
public:
    Collection(int nvars, std::vector<Monomial> monomials) : nvars_(nvars) {
        if (nvars <= 0) throw std::invalid_argument("nvars must be positive");
        for (const auto& m : monomials) {
            if (m.nvars() != nvars)
                throw std::invalid_argument("monomial variable count does not match collection");
            if (std::find(monomials_.begin(), monomials_.end(), m) != monomials_.end()) {
                had_duplicates_ = true; // duplicates do not change the rank
                continue;
            }
            monomials_.push_back(m);
        }
        if (monomials_.empty()) throw std::invalid_argument("collection must not be empty");
    }

    int nvars() const { return nvars_; }
    std::size_t size() const { return monomials_.size(); }
    const Monomial& operator[](std::size_t j) const { return monomials_[j]; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    bool had_duplicates() const { return had_duplicates_; }

    bool all_nonconstant() const {
        return std::none_of(monomials_.begin(), monomials_.end(),
                            [](const Monomial& m) { return m.is_constant(); });
    }

    /// Sorted exponents of variable i across the collection (with multiplicity).
    std::vector<int> variable_exponents(int var) const {
        std::vector<int> exps;
        exps.reserve(monomials_.size());
        for (const auto& m : monomials_) exps.push_back(m.exponent(var));
        std::sort(exps.begin(), exps.end());
        return exps;
    }

    /// Multiset of successive differences of variable_exponents(var).
    /// Recomputed on demand, never stored.
    std::vector<int> successive_differences(int var) const {
        std::vector<int> exps = variable_exponents(var);
        std::vector<int> diffs;
        diffs.reserve(exps.size() - 1);
        for (std::size_t s = 1; s < exps.size(); ++s) diffs.push_back(exps[s] - exps[s - 1]);
        return diffs;
    }

private:
    int nvars_;
    std::vector<Monomial> monomials_;
    bool had_duplicates_ = false;
};

/// A variable index at which every monomial has the same exponent c, with c
/// also a minimal nonzero exponent of every monomial.
struct BaseVariable {
    int index;
    int c;
};

/// Smallest index lying in min_positions of every monomial with equal exponent
/// across the collection; nullopt when no index qualifies (including the
/// degenerate case of a constant monomial in the collection).
inline std::optional<BaseVariable> find_base_variable(const Collection& coll) {
    if (!coll.all_nonconstant()) return std::nullopt;
    std::vector<std::set<int>> minima;
    minima.reserve(coll.size());
    for (const auto& m : coll.monomials()) minima.push_back(min_positions(m));
    for (int i = 0; i < coll.nvars(); ++i) {
        bool ok = true;
        for (const auto& positions : minima)
            if (!positions.count(i)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        const int c = coll[0].exponent(i);
        for (std::size_t j = 1; j < coll.size() && ok; ++j) ok = coll[j].exponent(i) == c;
        if (ok) return BaseVariable{i, c};
    }
    return std::nullopt;
}

/// (1,1)-freeness: per variable, the successive differences contain 1 at most
/// once.
inline bool check_11_free(const Collection& coll) {
    for (int i = 0; i < coll.nvars(); ++i) {
        int ones = 0;
        for (int diff : coll.successive_differences(i))
            if (diff == 1) ++ones;
        if (ones > 1) return false;
    }
    return true;
}

/// Freeness: a base variable exists with exponent c, the collection is
/// (1,1)-free, and every nonzero successive difference is 1 or >= c+1.
inline bool check_free(const Collection& coll) {
    const auto base = find_base_variable(coll);
    if (!base) return false;
    if (!check_11_free(coll)) return false;
    for (int i = 0; i < coll.nvars(); ++i)
        for (int diff : coll.successive_differences(i))
            if (diff != 0 && diff != 1 && diff < base->c + 1) return false;
    return true;
}

} // namespace simwaring
